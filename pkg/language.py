import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict

from automata import (
    CanonicalDfa, Nfa, accepts, canonicalize, compile, complement_dfa,
    concat_nfa, contains_epsilon, empty_nfa, epsilon_nfa, equivalent, is_empty,
    plus_nfa, product, universe_nfa
)
from constants import (
    OP_ALIASES, OP_COMPLEMENT, OP_KLEENE_INTERIOR, OP_PLUS, OP_POSITIVE_INTERIOR,
    OP_STAR
)
from errors import AlphabetMismatch, InvariantViolation
from regexp import Alphabet, RegexAst, parse_regex

logger = logging.getLogger('klang')

_CACHE_SIZE = 16384


@dataclass(frozen=True)
class Lang:
    """A regular language, identified by its canonical automaton"""
    canonical: CanonicalDfa

    @classmethod
    def from_ast(cls, ast: RegexAst, alphabet: Alphabet) -> 'Lang':
        return cls(canonicalize(compile(ast, alphabet)))

    @classmethod
    def from_regex(cls, text: str, alphabet: Alphabet) -> 'Lang':
        """
        Build a language from regex text

        Args:
            text: Regular expression over the alphabet
            alphabet: The alphabet complement is taken relative to

        Returns:
            Lang: The denoted language
        """
        return cls.from_ast(parse_regex(text, alphabet), alphabet)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> 'Lang':
        return cls(canonicalize(empty_nfa(alphabet)))

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> 'Lang':
        return cls(canonicalize(epsilon_nfa(alphabet)))

    @classmethod
    def universe(cls, alphabet: Alphabet) -> 'Lang':
        return cls(canonicalize(universe_nfa(alphabet)))

    @property
    def alphabet(self) -> Alphabet:
        return self.canonical.alphabet

    @property
    def state_count(self) -> int:
        return self.canonical.state_count

    def accepts(self, word: str) -> bool:
        return accepts(self.canonical, word)

    def is_empty(self) -> bool:
        return is_empty(self.canonical)

    def contains_epsilon(self) -> bool:
        return contains_epsilon(self.canonical)

    def nfa(self) -> Nfa:
        return self.canonical.to_nfa()


def _same_alphabet(L: Lang, M: Lang) -> None:
    if L.alphabet != M.alphabet:
        raise AlphabetMismatch(f"Alphabets differ: {L.alphabet} vs {M.alphabet}")


def complement(L: Lang) -> Lang:
    """Σ^* minus L"""
    return Lang(complement_dfa(L.canonical))


@lru_cache(maxsize=_CACHE_SIZE)
def plus_closure(L: Lang) -> Lang:
    """
    Positive closure: all non-empty concatenations of words of L

    Contains ε exactly when L does.
    """
    return Lang(canonicalize(plus_nfa(L.nfa())))


@lru_cache(maxsize=_CACHE_SIZE)
def star_closure(L: Lang) -> Lang:
    """Kleene closure: the positive closure plus ε"""
    return add_epsilon(plus_closure(L))


def positive_interior(L: Lang) -> Lang:
    """
    Positive interior, the complement of the closure of the complement

    The largest positive-open language contained in L.
    """
    return complement(plus_closure(complement(L)))


def kleene_interior(L: Lang) -> Lang:
    """Kleene interior; equals the positive interior without ε"""
    return complement(star_closure(complement(L)))


def concatenate(L: Lang, M: Lang) -> Lang:
    _same_alphabet(L, M)
    return Lang(canonicalize(concat_nfa(L.nfa(), M.nfa())))


def union(L: Lang, M: Lang) -> Lang:
    return Lang(product(L.canonical, M.canonical, lambda x, y: x or y))


def intersection(L: Lang, M: Lang) -> Lang:
    return Lang(product(L.canonical, M.canonical, lambda x, y: x and y))


def difference(L: Lang, M: Lang) -> Lang:
    return Lang(product(L.canonical, M.canonical, lambda x, y: x and not y))


def add_epsilon(L: Lang) -> Lang:
    return union(L, Lang.epsilon(L.alphabet))


def remove_epsilon(L: Lang) -> Lang:
    return difference(L, Lang.epsilon(L.alphabet))


def is_subset(L: Lang, M: Lang) -> bool:
    return difference(L, M).is_empty()


def is_proper_subset(L: Lang, M: Lang) -> bool:
    return is_subset(L, M) and not equivalent(L.canonical, M.canonical)


def same(L: Lang, M: Lang) -> bool:
    """Language equality; raises AlphabetMismatch on differing alphabets"""
    return equivalent(L.canonical, M.canonical)


def is_closed(L: Lang) -> bool:
    """L = L^+"""
    return same(L, plus_closure(L))


def is_closed_semigroup_check(L: Lang) -> bool:
    """
    Closedness decided as closure under concatenation: LL ⊆ L

    Independent of plus_closure; must agree with is_closed.
    """
    return is_subset(concatenate(L, L), L)


def is_open(L: Lang) -> bool:
    """L = L^⊕"""
    return same(L, positive_interior(L))


def is_open_split_check(L: Lang) -> bool:
    """
    Openness decided by splits: whenever uv ∈ L, u ∈ L or v ∈ L

    Equivalently L ∩ L^-L^- is empty. Must agree with is_open.
    """
    outside = complement(L)
    return intersection(L, concatenate(outside, outside)).is_empty()


def is_clopen(L: Lang) -> bool:
    return is_open(L) and is_closed(L)


def is_kleene_closed(L: Lang) -> bool:
    """L = L^*; implies ε ∈ L"""
    return same(L, star_closure(L))


def is_kleene_open(L: Lang) -> bool:
    """L = L^⊛; implies ε ∉ L"""
    return same(L, kleene_interior(L))


def _co_reachable(d: CanonicalDfa) -> set:
    incoming = [[] for _ in range(d.state_count)]
    for q, row in enumerate(d.transition):
        for nxt in row:
            incoming[nxt].append(q)
    live = set(d.accepting)
    queue = deque(live)
    while queue:
        for prev in incoming[queue.popleft()]:
            if prev not in live:
                live.add(prev)
                queue.append(prev)
    return live


def prefix_closure(L: Lang) -> Lang:
    """
    L together with every non-empty prefix of its words

    A fresh start state copies the old start's moves and accepts only if
    ε ∈ L; every other state accepts iff some accepted word runs through it.
    """
    d = L.canonical
    live = _co_reachable(d)
    fresh = d.state_count
    transitions = set()
    for q, row in enumerate(d.transition):
        for i, nxt in enumerate(row):
            letter = d.alphabet.letters[i]
            transitions.add((q, letter, nxt))
            if q == d.start:
                transitions.add((fresh, letter, nxt))
    accepting = set(live)
    if L.contains_epsilon():
        accepting.add(fresh)
    nfa = Nfa(d.state_count + 1, d.alphabet, frozenset(transitions), fresh, frozenset(accepting))
    return Lang(canonicalize(nfa))


def suffix_closure(L: Lang) -> Lang:
    """
    L together with every non-empty suffix of its words

    A fresh start state may enter the automaton after its first letter from
    any state.
    """
    d = L.canonical
    fresh = d.state_count
    transitions = set()
    for q, row in enumerate(d.transition):
        for i, nxt in enumerate(row):
            letter = d.alphabet.letters[i]
            transitions.add((q, letter, nxt))
            transitions.add((fresh, letter, nxt))
    accepting = set(d.accepting)
    if L.contains_epsilon():
        accepting.add(fresh)
    nfa = Nfa(d.state_count + 1, d.alphabet, frozenset(transitions), fresh, frozenset(accepting))
    return Lang(canonicalize(nfa))


def left_ideal(L: Lang) -> Lang:
    """Σ^* L"""
    return Lang(canonicalize(concat_nfa(universe_nfa(L.alphabet), L.nfa())))


def right_ideal(L: Lang) -> Lang:
    """L Σ^*"""
    return Lang(canonicalize(concat_nfa(L.nfa(), universe_nfa(L.alphabet))))


def two_sided_ideal(L: Lang) -> Lang:
    """Σ^* L Σ^*"""
    everything = universe_nfa(L.alphabet)
    return Lang(canonicalize(concat_nfa(concat_nfa(everything, L.nfa()), everything)))


def shuffle_ideal(L: Lang) -> Lang:
    """Every word having some word of L as a scattered subword"""
    d = L.canonical
    loops = frozenset((q, letter, q) for q in range(d.state_count) for letter in d.alphabet)
    base = d.to_nfa()
    nfa = Nfa(base.state_count, base.alphabet, base.transitions | loops, base.start, base.accepting)
    return Lang(canonicalize(nfa))


def sandwich_check(L: Lang, M: Lang) -> bool:
    """
    Check a witness that L^+ is clopen: M open with L ⊆ M ⊆ L^+

    Args:
        L: The language
        M: Candidate open language

    Returns:
        bool: True iff M is such a witness

    Raises:
        InvariantViolation: A witness exists but L^+ is not clopen
    """
    _same_alphabet(L, M)
    closure = plus_closure(L)
    holds = is_open(M) and is_subset(L, M) and is_subset(M, closure)
    if holds and not is_clopen(closure):
        raise InvariantViolation("Open language between L and L^+ but L^+ is not clopen")
    return holds


def interior_sandwich_check(L: Lang, M: Lang) -> bool:
    """
    Check a witness that L^⊕ is clopen: M closed with L^⊕ ⊆ M ⊆ L

    Raises:
        InvariantViolation: A witness exists but L^⊕ is not clopen
    """
    _same_alphabet(L, M)
    interior = positive_interior(L)
    holds = is_closed(M) and is_subset(interior, M) and is_subset(M, L)
    if holds and not is_clopen(interior):
        raise InvariantViolation("Closed language between L^⊕ and L but L^⊕ is not clopen")
    return holds


OPERATORS: Dict[str, Callable[[Lang], Lang]] = {
    OP_COMPLEMENT: complement,
    OP_PLUS: plus_closure,
    OP_STAR: star_closure,
    OP_POSITIVE_INTERIOR: positive_interior,
    OP_KLEENE_INTERIOR: kleene_interior,
}


def normalize_word(word: str) -> str:
    """
    Replace operator aliases and validate an operator word

    Raises:
        ValueError: The word contains an unknown operator
    """
    normalized = "".join(OP_ALIASES.get(op, op) for op in word)
    for op in normalized:
        if op not in OPERATORS:
            raise ValueError(f"Unknown operator {op!r} in {word!r}")
    return normalized


def apply_word(word: str, L: Lang) -> Lang:
    """
    Apply an operator word left to right, so "+-" gives the complement of L^+

    Args:
        word: Operators over + * ⊕ ⊛ -
        L: Starting language

    Returns:
        Lang: The resulting language
    """
    for op in normalize_word(word):
        L = OPERATORS[op](L)
    return L
