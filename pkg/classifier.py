import logging
from dataclasses import dataclass, fields
from enum import Enum
from typing import Dict, List, Tuple

from constants import (
    KLEENE_CASES, POSITIVE_CASES, TABLE1_EXAMPLES, TABLE1_PRINTED_ROW4,
    TABLE2_PRINTED_SIZES
)
from errors import InvariantViolation, Unclassifiable
from language import (
    Lang, is_clopen, is_closed, is_open, plus_closure, positive_interior, same
)
from orbit import generate_A, generate_B, generate_D, generate_E
from regexp import Alphabet

logger = logging.getLogger('klang')


class PositiveCase(Enum):
    """The nine algebras generated under positive closure and complement"""
    C1 = '1'
    C2 = '2'
    C3 = '3'
    C4 = '4'
    C5 = '5'
    C6 = '6'
    C7 = '7'
    C8 = '8'
    C9 = '9'

    @property
    def label(self) -> str:
        return f"({self.value})"

    @property
    def sizes(self) -> Tuple[int, int]:
        """(|B|, |A|)"""
        base, whole, _ = POSITIVE_CASES[self.value]
        return base, whole


class KleeneCase(Enum):
    """
    The twelve algebras generated under Kleene closure and complement

    2a/2b are open with ε absent/present, 3a/3b closed with ε present/absent.
    """
    C1A = '1a'
    C1B = '1b'
    C2A = '2a'
    C2B = '2b'
    C3A = '3a'
    C3B = '3b'
    C4 = '4'
    C5 = '5'
    C6 = '6'
    C7 = '7'
    C8 = '8'
    C9 = '9'

    @property
    def label(self) -> str:
        return f"({self.value})"

    @property
    def sizes(self) -> Tuple[int, int]:
        """(|E|, |D|)"""
        base, whole, _ = KLEENE_CASES[self.value]
        return base, whole


@dataclass(frozen=True)
class PredicateBundle:
    """Every condition the case tables are written in"""
    open: bool
    closed: bool
    plus_clopen: bool
    interior_clopen: bool
    plus_open: bool
    interior_closed: bool
    eq_int_plus: bool  # L^{⊕+} = L^+
    eq_plus_int: bool  # L^{+⊕} = L^⊕
    eq_mixed: bool  # L^{+⊕} = L^{⊕+}
    contains_epsilon: bool

    def as_dict(self) -> Dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def predicates(L: Lang) -> PredicateBundle:
    """
    Compute the case-table conditions for L

    Raises:
        InvariantViolation: An open closure that is not clopen, or a closed
            interior that is not clopen
    """
    closure = plus_closure(L)
    interior = positive_interior(L)
    closure_interior = positive_interior(closure)
    interior_closure = plus_closure(interior)

    bundle = PredicateBundle(
        open=is_open(L),
        closed=is_closed(L),
        plus_clopen=is_clopen(closure),
        interior_clopen=is_clopen(interior),
        plus_open=is_open(closure),
        interior_closed=is_closed(interior),
        eq_int_plus=same(interior_closure, closure),
        eq_plus_int=same(closure_interior, interior),
        eq_mixed=same(closure_interior, interior_closure),
        contains_epsilon=L.contains_epsilon(),
    )
    if bundle.plus_open and not bundle.plus_clopen:
        raise InvariantViolation("L^+ is open but not clopen")
    if bundle.interior_closed and not bundle.interior_clopen:
        raise InvariantViolation("L^⊕ is closed but not clopen")
    return bundle


def case_from_predicates(p: PredicateBundle) -> PositiveCase:
    """
    Decision tree over the table conditions

    Raises:
        Unclassifiable: L^+ and L^⊕ both clopen with L neither open nor closed
    """
    if p.open and p.closed:
        return PositiveCase.C1
    if p.open:
        return PositiveCase.C2
    if p.closed:
        return PositiveCase.C3
    if p.plus_clopen and p.interior_clopen:
        raise Unclassifiable("L^+ and L^⊕ are both clopen but L is neither open nor closed")
    if p.plus_clopen:
        return PositiveCase.C4 if p.eq_int_plus else PositiveCase.C6
    if p.interior_clopen:
        return PositiveCase.C5 if p.eq_plus_int else PositiveCase.C7
    return PositiveCase.C8 if p.eq_mixed else PositiveCase.C9


def classify_positive(L: Lang, check_sizes: bool = True) -> PositiveCase:
    """
    Classify the algebra L generates under positive closure and complement

    Args:
        L: The language
        check_sizes: Cross-check the case against the generated orbit

    Returns:
        PositiveCase: The unique matching case

    Raises:
        Unclassifiable: No case holds, or the orbit sizes disagree with it
    """
    case = case_from_predicates(predicates(L))
    if check_sizes:
        graph = generate_A(L)
        actual = (len(generate_B(L)), graph.size)
        if actual != case.sizes or graph.base_size != actual[0]:
            raise Unclassifiable(
                f"Case {case.label} expects |B|,|A| = {case.sizes}, orbit has {actual}"
            )
    logger.debug(f"Positive case {case.label}")
    return case


def classify_kleene(L: Lang, check_sizes: bool = True) -> KleeneCase:
    """
    Classify the algebra L generates under Kleene closure and complement

    Cases 4-9 coincide with the positive classification; cases 1-3 split on
    whether ε ∈ L.

    Raises:
        Unclassifiable: No case holds, or the orbit sizes disagree with it
    """
    positive = case_from_predicates(predicates(L))
    has_epsilon = L.contains_epsilon()
    if positive is PositiveCase.C1:
        case = KleeneCase.C1A if has_epsilon else KleeneCase.C1B
    elif positive is PositiveCase.C2:
        case = KleeneCase.C2B if has_epsilon else KleeneCase.C2A
    elif positive is PositiveCase.C3:
        case = KleeneCase.C3A if has_epsilon else KleeneCase.C3B
    else:
        case = KleeneCase(positive.value)

    if check_sizes:
        graph = generate_D(L)
        actual = (len(generate_E(L)), graph.size)
        if actual != case.sizes or graph.base_size != actual[0]:
            raise Unclassifiable(
                f"Case {case.label} expects |E|,|D| = {case.sizes}, orbit has {actual}"
            )
    logger.debug(f"Kleene case {case.label}")
    return case


def dual_of(c: PositiveCase) -> PositiveCase:
    """The case of the complement: 2<->3, 4<->5, 6<->7; 1, 8 and 9 are self-dual"""
    return PositiveCase(POSITIVE_CASES[c.value][2])


def dual_of_kleene(c: KleeneCase) -> KleeneCase:
    """The Kleene case of the complement"""
    return KleeneCase(KLEENE_CASES[c.value][2])


def discrepancy_notes(L: Lang, case) -> List[str]:
    """
    Notes on table entries this language runs into

    Args:
        L: The classified language
        case: Its PositiveCase or KleeneCase

    Returns:
        List[str]: Zero or more human-readable notes
    """
    notes = []
    if isinstance(case, PositiveCase):
        text, letters = TABLE1_PRINTED_ROW4
        printed = Lang.from_regex(text, Alphabet.of(letters))
        if L.alphabet == printed.alphabet and same(L, printed):
            substitute = TABLE1_EXAMPLES['4'][0]
            notes.append(
                f"note: the positive case table gives {text} as the example for case (4), but it is open "
                f"(every split of aaa has a side in L), so it generates case (2); "
                f"{substitute} is used as the case (4) example"
            )
    elif case.value in TABLE2_PRINTED_SIZES:
        printed_base, printed_whole = TABLE2_PRINTED_SIZES[case.value]
        base, whole = case.sizes
        notes.append(
            f"note: the Kleene case table gives |E|={printed_base}, |D|={printed_whole} for this sub-case; "
            f"the sub-case text and direct computation give |E|={base}, |D|={whole}"
        )
    return notes
