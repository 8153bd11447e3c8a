import logging
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from automata import shortest_word
from classifier import (
    PositiveCase, KleeneCase, classify_kleene, classify_positive, discrepancy_notes,
    dual_of, dual_of_kleene, predicates
)
from constants import (
    DEFAULT_HORIZON, DEFAULT_LATTICE_HORIZON, DEFAULT_MAX_DEPTH, DEFAULT_SAMPLE_ALPHABETS,
    DEFAULT_SAMPLES, DEFAULT_SEED, MAX_KLEENE_ORBIT, MAX_OPERATOR_WORD, MAX_POSITIVE_ORBIT,
    MAX_UNARY_ORBIT, MODE_KLEENE, MODE_OPERATORS, MODE_POSITIVE, OP_PLUS, OP_STAR, ORACLE_SAMPLES,
    TABLE1_EXAMPLES, TABLE1_PRINTED_ROW4, TABLE2_EXAMPLES, VERIFY_SUITES
)
from errors import KlangError
from horizon import (
    PredicateLang, check_clopen_predicate, cross_validate_words, exhaustive_horizon, from_dfa,
    interior_h, lattice_closure_check, lattice_interior_check, lattice_pointwise_check,
    split_check_h, words_upto
)
from language import (
    Lang, add_epsilon, apply_word, complement, difference, interior_sandwich_check, intersection,
    is_clopen, is_closed, is_closed_semigroup_check, is_kleene_closed, is_kleene_open,
    is_open, is_open_split_check, is_proper_subset, is_subset, kleene_interior, left_ideal,
    plus_closure, positive_interior, prefix_closure, remove_epsilon, right_ideal, same,
    sandwich_check, shuffle_ideal, star_closure, suffix_closure, two_sided_ideal, union
)
from orbit import (
    generate_A, generate_B, generate_D, generate_E, orbit_is_closed, predicted_kleene_base,
    verify_eq3, verify_eq4, verify_phi
)
from regexp import Alphabet, random_regex, render_regex
from utils import create_timer, format_time, format_word

logger = logging.getLogger('klang')

# Example languages over {a, b} for the predicate checks
EXAMPLE1_HORIZON = 6
EXAMPLE1_K_VALUES = (0, 1, 2, 3)


@dataclass
class CheckResult:
    """Pass count and failure descriptions for one named check"""
    name: str
    passed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SuiteReport:
    suite: str
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks.values())

    def record(self, name: str, holds: bool, detail: str = "") -> None:
        check = self.checks.setdefault(name, CheckResult(name))
        if holds:
            check.passed += 1
        else:
            check.failures.append(detail)
            logger.error(f"[{self.suite}] {name} failed: {detail}")

    def lines(self) -> List[str]:
        """Report lines; checks in name order, failures with their replay details"""
        status = "ok" if self.ok else "FAILED"
        lines = [f"{self.suite}: {status} ({format_time(self.elapsed)})"]
        for name in sorted(self.checks):
            check = self.checks[name]
            lines.append(f"  {name}: {check.passed} passed, {len(check.failures)} failed")
            lines.extend(f"    {failure}" for failure in check.failures)
        lines.extend(f"  {note}" for note in self.notes)
        return lines


@dataclass(frozen=True)
class Sample:
    """A seeded random language; replay with random_regex(seed, max_depth, alphabet)"""
    seed: int
    alphabet: Alphabet
    regex: str
    lang: Lang

    def describe(self) -> str:
        return f"seed={self.seed} alphabet={self.alphabet} regex={self.regex}"


@dataclass(frozen=True)
class VerifyOptions:
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    horizon: int = DEFAULT_HORIZON
    lattice_horizon: int = DEFAULT_LATTICE_HORIZON
    max_depth: int = DEFAULT_MAX_DEPTH
    alphabets: Tuple[str, ...] = DEFAULT_SAMPLE_ALPHABETS
    oracle_samples: int = ORACLE_SAMPLES


def samples(options: VerifyOptions, alphabets: Optional[Sequence[str]] = None) -> Iterator[Sample]:
    """
    Seeded random languages: sample i of each alphabet uses seed + i

    Args:
        options: Sample count, base seed and depth
        alphabets: Override of options.alphabets
    """
    for letters in alphabets or options.alphabets:
        alphabet = Alphabet.of(letters)
        for i in range(options.samples):
            seed = options.seed + i
            ast = random_regex(seed, options.max_depth, alphabet)
            yield Sample(seed, alphabet, render_regex(ast), Lang.from_ast(ast, alphabet))


def _each_sample(report: SuiteReport, options: VerifyOptions, check: Callable[[Sample], None],
                 alphabets: Optional[Sequence[str]] = None) -> None:
    """Run check on every sample; an exception is recorded as a failure of that sample"""
    for sample in samples(options, alphabets):
        try:
            check(sample)
        except KlangError as e:
            report.record("errors", False, f"{sample.describe()}: {type(e).__name__}: {e}")


def _example(entry) -> Lang:
    regex, letters, complemented = entry
    L = Lang.from_regex(regex, Alphabet.of(letters))
    return complement(L) if complemented else L


def suite_axioms(options: VerifyOptions) -> SuiteReport:
    """Closure and interior axioms, both characterizations, openness of closures"""
    report = SuiteReport('axioms')

    def check(s: Sample) -> None:
        L, d = s.lang, s.describe()
        # A second language for isotony, from the next seed
        M = Lang.from_ast(random_regex(s.seed + options.samples, options.max_depth, s.alphabet), s.alphabet)
        closure, interior = plus_closure(L), positive_interior(L)
        report.record("closure extensive", is_subset(L, closure), d)
        report.record("closure idempotent", same(plus_closure(closure), closure), d)
        report.record("closure isotone", is_subset(closure, plus_closure(union(L, M))), d)
        report.record("interior contractive", is_subset(interior, L), d)
        report.record("interior idempotent", same(positive_interior(interior), interior), d)
        report.record("star is closure plus ε", same(star_closure(L), union(closure, Lang.epsilon(L.alphabet))), d)
        report.record("kleene interior is interior minus ε", same(kleene_interior(L), remove_epsilon(interior)), d)
        report.record("star is kleene closed", is_kleene_closed(star_closure(L)), d)
        report.record("kleene interior is kleene open", is_kleene_open(kleene_interior(L)), d)
        report.record("open agrees with split check", is_open(L) == is_open_split_check(L), d)
        report.record("closed agrees with semigroup check", is_closed(L) == is_closed_semigroup_check(L), d)
        report.record("open language has open closure", not is_open(L) or is_open(closure), d)
        report.record("closed language has closed interior", not is_closed(L) or is_closed(interior), d)
        report.record("L^{+⊕} clopen", is_clopen(positive_interior(closure)), d)
        report.record("L^{⊕+} clopen", is_clopen(plus_closure(interior)), d)
        report.record("complement of interior is closure of complement", same(complement(interior), plus_closure(complement(L))), d)
        report.record("(L ∪ M)^+ = (L^+ ∪ M^+)^+", same(plus_closure(union(L, M)), plus_closure(union(closure, plus_closure(M)))), d)
        report.record("(L ∩ M)^+ ⊆ L^+ ∩ M^+", is_subset(plus_closure(intersection(L, M)), intersection(closure, plus_closure(M))), d)
        report.record("closed sets meet to a closed set", is_closed(intersection(closure, plus_closure(M))), d)
        report.record("open sets join to an open set", is_open(union(interior, positive_interior(M))), d)
        report.record("closed plus ε is kleene closed", not is_closed(L) or is_kleene_closed(add_epsilon(L)), d)

    _each_sample(report, options, check)
    return report


def suite_duality(options: VerifyOptions) -> SuiteReport:
    """Dual cases, orbit parity and bounds, and the ε-adjusting map between E(L) and B(L)"""
    report = SuiteReport('duality')
    reached = {MODE_POSITIVE: 0, MODE_KLEENE: 0}

    def check(s: Sample) -> None:
        L, d = s.lang, s.describe()
        outside = complement(L)
        report.record("positive dual", classify_positive(outside) == dual_of(classify_positive(L)), d)
        report.record("kleene dual", classify_kleene(outside) == dual_of_kleene(classify_kleene(L)), d)
        positive, kleene = generate_A(L), generate_D(L)
        report.record("|A| = 2|B|", positive.size == 2 * len(generate_B(L)), d)
        report.record("|D| = 2|E|", kleene.size == 2 * len(generate_E(L)), d)
        report.record("|A| <= 10", positive.size <= MAX_POSITIVE_ORBIT, d)
        report.record("|D| <= 14", kleene.size <= MAX_KLEENE_ORBIT, d)
        report.record("orbit closed under its operators", orbit_is_closed(positive) and orbit_is_closed(kleene), d)
        report.record("phi", verify_phi(L), d)
        reached[MODE_POSITIVE] = max(reached[MODE_POSITIVE], positive.size)
        reached[MODE_KLEENE] = max(reached[MODE_KLEENE], kleene.size)

    _each_sample(report, options, check)

    witness = _example(TABLE1_EXAMPLES['9'])
    report.record("|A| = 10 attained", generate_A(witness).size == MAX_POSITIVE_ORBIT, TABLE1_EXAMPLES['9'][0])
    report.record("|D| = 14 attained", generate_D(witness).size == MAX_KLEENE_ORBIT, TABLE1_EXAMPLES['9'][0])
    report.notes.append(
        f"largest sampled orbits: |A|={reached[MODE_POSITIVE]}, |D|={reached[MODE_KLEENE]}"
    )
    return report


def suite_equations(options: VerifyOptions) -> SuiteReport:
    """The c-c-c-c = c-c identity for both closures, c-c-c = c-c- for positive closure"""
    report = SuiteReport('equations')

    def check(s: Sample) -> None:
        d = s.describe()
        report.record("c-c-c-c = c-c (positive)", verify_eq3(s.lang, OP_PLUS), d)
        report.record("c-c-c-c = c-c (kleene)", verify_eq3(s.lang, OP_STAR), d)
        report.record("c-c-c = c-c- (positive)", verify_eq4(s.lang, OP_PLUS), d)

    _each_sample(report, options, check)

    unary = Alphabet.of('a')
    L = Lang.from_regex('a', unary)
    report.record("kleene counterexample a^{*-*-*} = a*", same(apply_word('*-*-*', L), Lang.from_regex('a*', unary)), 'a')
    report.record("kleene counterexample a^{*-*-} = a+", same(apply_word('*-*-', L), Lang.from_regex('a+', unary)), 'a')
    report.record("kleene counterexample c-c-c != c-c-", not verify_eq4(L, OP_STAR), 'a')
    return report


def suite_example1(options: VerifyOptions) -> SuiteReport:
    """Counting languages |w|_1 < k|w|_2 over {a, b} are clopen"""
    report = SuiteReport('example1')
    alphabet = Alphabet.of('ab')
    subsets = [frozenset(c) for size in range(3) for c in combinations('ab', size)]
    for k in EXAMPLE1_K_VALUES:
        for sigma1 in subsets:
            for sigma2 in subsets:
                P = PredicateLang(alphabet, sigma1, sigma2, k)
                result = check_clopen_predicate(P, EXAMPLE1_HORIZON)
                detail = f"k={k} sigma1={''.join(sorted(sigma1))} sigma2={''.join(sorted(sigma2))} witness={result.witness}"
                report.record("counting language clopen", result.holds, detail)

    shifted = PredicateLang(alphabet, frozenset('a'), frozenset('b'), 1, offset=2)
    result = check_clopen_predicate(shifted, EXAMPLE1_HORIZON)
    report.record("shifted counting language not clopen", not result.holds, str(result))
    if not result.holds:
        u, v = result.witness
        report.notes.append(f"|w|_a < |w|_b + 2 fails on u={format_word(u)} v={format_word(v)} ({result.side})")
    return report


def suite_examples(options: VerifyOptions) -> SuiteReport:
    """Prefix and suffix closures are open, ideals are closed, and the non-topological witness"""
    report = SuiteReport('examples')

    def check(s: Sample) -> None:
        L, d = s.lang, s.describe()
        report.record("prefix closure open", is_open(prefix_closure(L)), d)
        report.record("suffix closure open", is_open(suffix_closure(L)), d)
        report.record("left ideal closed", is_closed(left_ideal(L)), d)
        report.record("right ideal closed", is_closed(right_ideal(L)), d)
        report.record("two-sided ideal closed", is_closed(two_sided_ideal(L)), d)
        report.record("shuffle ideal closed", is_closed(shuffle_ideal(L)), d)

    _each_sample(report, options, check)

    unary = Alphabet.of('a')
    union_of_closures = union(Lang.from_regex('(aa)+', unary), Lang.from_regex('(aaa)+', unary))
    closure_of_union = Lang.from_regex('(aa|aaa)+', unary)
    report.record("closures do not preserve union", is_proper_subset(union_of_closures, closure_of_union), '(aa)+|(aaa)+')
    witness = shortest_word(difference(closure_of_union, union_of_closures).canonical)
    report.record("a^5 shortest word only in the closure of the union", witness == 'aaaaa', f"witness={witness}")
    report.notes.append(f"shortest word in (aa|aaa)+ outside (aa)+|(aaa)+: {format_word(witness or '')}")

    L, M = Lang.from_regex('a|aaaa', unary), Lang.from_regex('a+', unary)
    report.record("open language between L and L^+", sandwich_check(L, M), 'L=a|aaaa M=a+')
    report.record("non-closed interior witness rejected", not interior_sandwich_check(L, Lang.from_regex('aaaa', unary)), 'L=a|aaaa M=aaaa')
    return report


def suite_lemma1(options: VerifyOptions) -> SuiteReport:
    """L^+ and L^⊕ both clopen forces L open or closed; E(L) from B(L) otherwise"""
    report = SuiteReport('lemma1')

    def check(s: Sample) -> None:
        p = predicates(s.lang)
        if p.plus_clopen and p.interior_clopen:
            report.record("both clopen implies open or closed", p.open or p.closed, s.describe())
        if not p.open and not p.closed:
            report.record("E(L) from B(L)", generate_E(s.lang) == predicted_kleene_base(s.lang), s.describe())

    _each_sample(report, options, check)
    return report


def _lattice_pass(report: SuiteReport, alphabet: Alphabet, n: int, samples: int, seed: int) -> None:
    detail = f"alphabet={alphabet} n={n}"
    closure = lattice_closure_check(alphabet, n, samples, seed)
    interior = lattice_interior_check(alphabet, n, samples, seed)
    pointwise = lattice_pointwise_check(alphabet, n, samples, seed)
    report.record("closure is meet of closed supersets", closure.holds, f"{detail} X={closure.counterexample}")
    report.record("interior is join of open subsets", interior.holds, f"{detail} X={interior.counterexample}")
    report.record("closure and interior word by word", pointwise.holds, f"{detail} X={pointwise.counterexample}")
    kind = "exhaustive" if closure.exhaustive else "sampled"
    report.notes.append(
        f"lattice over {alphabet} up to length {n}: {closure.checked} of {closure.total} subsets, {kind}"
    )


def suite_oracle(options: VerifyOptions) -> SuiteReport:
    """Automata against the horizon engine, and the lattice descriptions of closure and interior"""
    report = SuiteReport('oracle')

    def check(s: Sample) -> None:
        for mode in (MODE_POSITIVE, MODE_KLEENE):
            bad = cross_validate_words(s.lang, MODE_OPERATORS[mode], MAX_OPERATOR_WORD, options.horizon)
            report.record(f"engines agree ({mode})", bad is None, f"{s.describe()} word={bad}")
        X = from_dfa(s.lang, options.horizon)
        report.record("interior fixpoint iff no bad split", (interior_h(X) == X) == (split_check_h(X) is None), s.describe())

    _each_sample(report, replace(options, samples=min(options.samples, options.oracle_samples)), check)

    for letters in options.alphabets:
        alphabet = Alphabet.of(letters)
        n = exhaustive_horizon(alphabet)
        _lattice_pass(report, alphabet, n, 2 ** len(words_upto(alphabet, n)), options.seed)
        if options.lattice_horizon > n:
            _lattice_pass(report, alphabet, options.lattice_horizon, options.samples, options.seed)
    return report


def suite_table1(options: VerifyOptions) -> SuiteReport:
    """Every row of the positive table classifies to its case with its sizes"""
    report = SuiteReport('table1')
    for label, entry in sorted(TABLE1_EXAMPLES.items()):
        L = _example(entry)
        try:
            case = classify_positive(L)
        except KlangError as e:
            report.record("row", False, f"({label}) {entry[0]}: {e}")
            continue
        expected = PositiveCase(label)
        sizes = (len(generate_B(L)), generate_A(L).size)
        report.record("row", case is expected and sizes == expected.sizes,
                      f"({label}) {entry[0]}: got {case.label} sizes {sizes}")

    text, letters = TABLE1_PRINTED_ROW4
    printed = Lang.from_regex(text, Alphabet.of(letters))
    case = classify_positive(printed)
    report.record("printed row (4) example is case (2)", case is PositiveCase.C2, f"{text}: {case.label}")
    report.notes.extend(discrepancy_notes(printed, case))
    return report


def suite_table2(options: VerifyOptions) -> SuiteReport:
    """Every row of the Kleene table classifies to its case with its sizes"""
    report = SuiteReport('table2')
    for label, entry in sorted(TABLE2_EXAMPLES.items()):
        L = _example(entry)
        try:
            case = classify_kleene(L)
        except KlangError as e:
            report.record("row", False, f"({label}) {entry[0]}: {e}")
            continue
        expected = KleeneCase(label)
        sizes = (len(generate_E(L)), generate_D(L).size)
        report.record("row", case is expected and sizes == expected.sizes,
                      f"({label}) {entry[0]}: got {case.label} sizes {sizes}")
        report.notes.extend(f"({label}) {note}" for note in discrepancy_notes(L, case))
    return report


def suite_unary(options: VerifyOptions) -> SuiteReport:
    """Unary orbits have at most 6 languages and only cases (1)-(5)"""
    report = SuiteReport('unary')
    allowed = {PositiveCase.C1, PositiveCase.C2, PositiveCase.C3, PositiveCase.C4, PositiveCase.C5}

    def check(s: Sample) -> None:
        size = generate_A(s.lang).size
        report.record("|A| <= 6", size <= MAX_UNARY_ORBIT, f"{s.describe()} |A|={size}")
        report.record("case (1)-(5)", classify_positive(s.lang) in allowed, s.describe())

    _each_sample(report, options, check, alphabets=('a',))

    witness = _example(TABLE1_EXAMPLES['4'])
    report.record("|A| = 6 attained", generate_A(witness).size == MAX_UNARY_ORBIT, TABLE1_EXAMPLES['4'][0])
    return report


SUITES: Dict[str, Callable[[VerifyOptions], SuiteReport]] = {
    'axioms': suite_axioms,
    'duality': suite_duality,
    'equations': suite_equations,
    'example1': suite_example1,
    'examples': suite_examples,
    'lemma1': suite_lemma1,
    'oracle': suite_oracle,
    'table1': suite_table1,
    'table2': suite_table2,
    'unary': suite_unary,
}


def run_suite(name: str, options: VerifyOptions) -> SuiteReport:
    """
    Run one verification suite

    Args:
        name: Suite name
        options: Sampling parameters

    Returns:
        SuiteReport: Per-check pass counts and failures

    Raises:
        KeyError: Unknown suite
    """
    if name not in SUITES:
        raise KeyError(f"Unknown suite {name!r}; choose from {', '.join(VERIFY_SUITES)}")
    logger.info(f"Running suite {name} with {options}")
    timer = create_timer()
    report = SUITES[name](options)
    report.elapsed = timer()
    logger.info(f"Suite {name} {'passed' if report.ok else 'failed'} in {format_time(report.elapsed)}")
    return report


def run_all(options: VerifyOptions) -> List[SuiteReport]:
    """Every suite in name order"""
    return [run_suite(name, options) for name in VERIFY_SUITES]
