import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from constants import (
    EXHAUSTIVE_LATTICE_WORDS, MAX_LATTICE_WORDS, OP_COMPLEMENT, OP_KLEENE_INTERIOR, OP_PLUS,
    OP_POSITIVE_INTERIOR, OP_STAR
)
from errors import AlphabetMismatch
from language import Lang, apply_word, normalize_word
from regexp import Alphabet

logger = logging.getLogger('klang')

_CACHE_SIZE = 4096


def words_upto(alphabet: Alphabet, n: int) -> List[str]:
    """All words of length at most n in shortlex order"""
    words = []
    for length in range(n + 1):
        words.extend("".join(letters) for letters in cartesian(alphabet.letters, repeat=length))
    return words


@dataclass(frozen=True)
class HorizonLang:
    """
    A language cut down to the words of length at most horizon

    Membership of a word in a closure, interior or complement depends only
    on words no longer than it, so every operator is exact here.
    """
    alphabet: Alphabet
    horizon: int
    members: FrozenSet[str]

    def __post_init__(self):
        if self.horizon < 0:
            raise ValueError(f"Horizon must be non-negative, got {self.horizon}")
        for word in self.members:
            if len(word) > self.horizon:
                raise ValueError(f"Word {word!r} is longer than horizon {self.horizon}")
            if any(letter not in self.alphabet for letter in word):
                raise ValueError(f"Word {word!r} is not over {self.alphabet}")

    @classmethod
    def of(cls, alphabet: Alphabet, horizon: int, words: Iterable[str]) -> 'HorizonLang':
        return cls(alphabet, horizon, frozenset(words))

    def __contains__(self, word: str) -> bool:
        return word in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> List[str]:
        """Members in shortlex order"""
        return sorted(self.members, key=lambda w: (len(w), w))


def _same_space(X: HorizonLang, Y: HorizonLang) -> None:
    if X.alphabet != Y.alphabet:
        raise AlphabetMismatch(f"Alphabets differ: {X.alphabet} vs {Y.alphabet}")
    if X.horizon != Y.horizon:
        raise ValueError(f"Horizons differ: {X.horizon} vs {Y.horizon}")


@lru_cache(maxsize=_CACHE_SIZE)
def from_dfa(L: Lang, n: int) -> HorizonLang:
    """
    The words of L of length at most n

    Args:
        L: The language
        n: Horizon, at least 0

    Returns:
        HorizonLang: L restricted to Σ^{≤n}
    """
    if n < 0:
        raise ValueError(f"Horizon must be non-negative, got {n}")
    d = L.canonical
    members = set()
    frontier = [("", d.start)]
    for length in range(n + 1):
        members.update(word for word, state in frontier if state in d.accepting)
        if length == n:
            break
        frontier = [
            (word + letter, d.transition[state][i])
            for word, state in frontier
            for i, letter in enumerate(d.alphabet.letters)
        ]
    return HorizonLang(d.alphabet, n, frozenset(members))


@lru_cache(maxsize=_CACHE_SIZE)
def universe_h(alphabet: Alphabet, n: int) -> HorizonLang:
    return HorizonLang(alphabet, n, frozenset(words_upto(alphabet, n)))


@lru_cache(maxsize=_CACHE_SIZE)
def complement_h(X: HorizonLang) -> HorizonLang:
    return HorizonLang(X.alphabet, X.horizon, universe_h(X.alphabet, X.horizon).members - X.members)


def union_h(X: HorizonLang, Y: HorizonLang) -> HorizonLang:
    _same_space(X, Y)
    return HorizonLang(X.alphabet, X.horizon, X.members | Y.members)


def intersection_h(X: HorizonLang, Y: HorizonLang) -> HorizonLang:
    _same_space(X, Y)
    return HorizonLang(X.alphabet, X.horizon, X.members & Y.members)


@lru_cache(maxsize=_CACHE_SIZE)
def plus_h(X: HorizonLang) -> HorizonLang:
    """
    Positive closure within the horizon

    Words are decided in order of length: w is in the closure if it is in X
    or splits into two non-empty parts already in the closure.
    """
    closure = set()
    if "" in X.members:
        closure.add("")
    for word in words_upto(X.alphabet, X.horizon):
        if not word:
            continue
        if word in X.members or any(
            word[:k] in closure and word[k:] in closure for k in range(1, len(word))
        ):
            closure.add(word)
    return HorizonLang(X.alphabet, X.horizon, frozenset(closure))


def star_h(X: HorizonLang) -> HorizonLang:
    return HorizonLang(X.alphabet, X.horizon, plus_h(X).members | {""})


def interior_h(X: HorizonLang) -> HorizonLang:
    return complement_h(plus_h(complement_h(X)))


def kleene_interior_h(X: HorizonLang) -> HorizonLang:
    return complement_h(star_h(complement_h(X)))


OPERATORS_H: Dict[str, Callable[[HorizonLang], HorizonLang]] = {
    OP_COMPLEMENT: complement_h,
    OP_PLUS: plus_h,
    OP_STAR: star_h,
    OP_POSITIVE_INTERIOR: interior_h,
    OP_KLEENE_INTERIOR: kleene_interior_h,
}


def apply_word_h(word: str, X: HorizonLang) -> HorizonLang:
    """Apply an operator word left to right within the horizon"""
    for op in normalize_word(word):
        X = OPERATORS_H[op](X)
    return X


def cross_validate(expr: str, L: Lang, n: int) -> bool:
    """
    Compare the automata engine against the horizon engine on one operator word

    Args:
        expr: Operator word over + * ⊕ ⊛ -
        L: Starting language
        n: Horizon

    Returns:
        bool: True iff both engines give the same words up to length n
    """
    automaton_side = from_dfa(apply_word(expr, L), n)
    horizon_side = apply_word_h(expr, from_dfa(L, n))
    if automaton_side != horizon_side:
        extra = sorted(automaton_side.members ^ horizon_side.members, key=lambda w: (len(w), w))
        logger.debug(f"Engines disagree on {expr!r} at horizon {n}; first differing word {extra[0]!r}")
        return False
    return True


def cross_validate_words(L: Lang, ops: Sequence[str], max_length: int, n: int) -> Optional[str]:
    """
    Cross-validate every operator word over ops up to max_length

    Words are grown one operator at a time so each prefix is computed once
    on both sides.

    Returns:
        Optional[str]: The shortlex-first word on which the engines disagree,
        or None
    """
    layer = [("", L, from_dfa(L, n))]
    for _ in range(max_length):
        grown = []
        for word, lang, X in layer:
            for op in ops:
                next_lang = apply_word(op, lang)
                next_X = OPERATORS_H[normalize_word(op)](X)
                if from_dfa(next_lang, n) != next_X:
                    logger.debug(f"Engines disagree on {word + op!r} at horizon {n}")
                    return word + op
                grown.append((word + op, next_lang, next_X))
        layer = grown
    return None


def split_check_h(X: HorizonLang) -> Optional[Tuple[str, str]]:
    """
    Find a bad split: non-empty u, v outside X with uv in X

    Returns:
        Optional[Tuple[str, str]]: The shortlex-first bad split, or None when
        X is open within the horizon
    """
    for word in X.sorted():
        for k in range(1, len(word)):
            u, v = word[:k], word[k:]
            if u not in X.members and v not in X.members:
                return u, v
    return None


def _semigroup_witness(X: HorizonLang) -> Optional[Tuple[str, str]]:
    members = X.sorted()
    for u in members:
        for v in members:
            if len(u) + len(v) <= X.horizon and u + v not in X.members:
                return u, v
    return None


@dataclass(frozen=True)
class PredicateLang:
    """
    {w : |w|_1 < k|w|_2 + offset}, or ≤ when not strict

    |w|_1 counts positions holding a letter of sigma1, |w|_2 likewise for
    sigma2. With offset 0 and strict comparison these are the clopen
    counting languages; other offsets give non-clopen ones.
    """
    alphabet: Alphabet
    sigma1: FrozenSet[str]
    sigma2: FrozenSet[str]
    k: int
    offset: int = 0
    strict: bool = True

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        for letter in self.sigma1 | self.sigma2:
            if letter not in self.alphabet:
                raise ValueError(f"Letter {letter!r} is not in {self.alphabet}")

    def __contains__(self, word: str) -> bool:
        left = sum(1 for letter in word if letter in self.sigma1)
        right = self.k * sum(1 for letter in word if letter in self.sigma2) + self.offset
        return left < right if self.strict else left <= right

    def to_horizon(self, n: int) -> HorizonLang:
        return HorizonLang(self.alphabet, n, frozenset(w for w in words_upto(self.alphabet, n) if w in self))


@dataclass(frozen=True)
class PredicateCheck:
    """Outcome of a clopen check; witness is a failing (u, v) and side names the set it escapes"""
    holds: bool
    witness: Optional[Tuple[str, str]] = None
    side: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def check_clopen_predicate(P: PredicateLang, n: int) -> PredicateCheck:
    """
    Check that P and its complement are both closed under concatenation up to n

    Args:
        P: The counting language
        n: Horizon

    Returns:
        PredicateCheck: holds, or the first (u, v) whose product leaves the set
    """
    X = P.to_horizon(n)
    for side, candidate in (('language', X), ('complement', complement_h(X))):
        witness = _semigroup_witness(candidate)
        if witness is not None:
            logger.debug(f"{P} fails on the {side}: {witness}")
            return PredicateCheck(False, witness, side)
    return PredicateCheck(True)


@dataclass(frozen=True)
class LatticeCheck:
    """Outcome of a lattice check; checked of total subsets X were tried"""
    holds: bool
    checked: int
    total: int
    counterexample: Optional[HorizonLang] = None

    def __bool__(self) -> bool:
        return self.holds

    @property
    def exhaustive(self) -> bool:
        return self.checked == self.total


class _SubsetSpace:
    """Subsets of Σ^{≤n} as bitmasks over the shortlex word list"""

    def __init__(self, alphabet: Alphabet, n: int):
        self.alphabet = alphabet
        self.horizon = n
        self.words = words_upto(alphabet, n)
        if len(self.words) > MAX_LATTICE_WORDS:
            raise ValueError(
                f"{len(self.words)} words up to length {n} over {alphabet}; "
                f"exhaustive subset enumeration supports at most {MAX_LATTICE_WORDS}"
            )
        position = {word: i for i, word in enumerate(self.words)}
        self.full = (1 << len(self.words)) - 1
        self.total = self.full + 1
        # (u, v, uv) for non-empty u, v within the horizon
        self.products = [
            (1 << position[u], 1 << position[v], 1 << position[u + v])
            for u in self.words[1:]
            for v in self.words[1:]
            if len(u) + len(v) <= n
        ]
        self.closed_masks = [mask for mask in range(self.total) if self.is_closed(mask)]
        # open means split-free: the complement is closed
        self.open_masks = [self.full ^ mask for mask in self.closed_masks]

    def is_closed(self, mask: int) -> bool:
        for u, v, uv in self.products:
            if mask & u and mask & v and not mask & uv:
                return False
        return True

    def to_mask(self, X: HorizonLang) -> int:
        mask = 0
        for i, word in enumerate(self.words):
            if word in X.members:
                mask |= 1 << i
        return mask

    def to_lang(self, mask: int) -> HorizonLang:
        return HorizonLang(
            self.alphabet, self.horizon,
            frozenset(word for i, word in enumerate(self.words) if mask >> i & 1)
        )

    def sample(self, samples: int, seed: int) -> List[int]:
        """Every subset when there are at most samples of them, else a seeded sample"""
        if self.total <= samples:
            return list(range(self.total))
        rng = random.Random(seed)
        return [rng.getrandbits(len(self.words)) for _ in range(samples)]


def exhaustive_horizon(alphabet: Alphabet) -> int:
    """Largest n whose subsets of Σ^{≤n} can all be checked against every closed set"""
    n = 0
    while len(words_upto(alphabet, n + 1)) <= EXHAUSTIVE_LATTICE_WORDS:
        n += 1
    return n


def lattice_closure_check(alphabet: Alphabet, n: int, samples: int, seed: int) -> LatticeCheck:
    """
    plus_h(X) is the intersection of every concatenation-closed superset of X

    Closed subsets are enumerated exhaustively; X ranges over every subset,
    or a seeded sample when there are more than samples of them.
    """
    space = _SubsetSpace(alphabet, n)
    logger.debug(f"{len(space.closed_masks)} closed subsets of {len(space.words)} words")
    checked = 0
    for x in space.sample(samples, seed):
        meet = space.full
        for y in space.closed_masks:
            if x & y == x:
                meet &= y
        X = space.to_lang(x)
        checked += 1
        if space.to_mask(plus_h(X)) != meet:
            return LatticeCheck(False, checked, space.total, X)
    return LatticeCheck(True, checked, space.total)


def lattice_interior_check(alphabet: Alphabet, n: int, samples: int, seed: int) -> LatticeCheck:
    """interior_h(X) is the union of every open subset of X, open meaning split-free"""
    space = _SubsetSpace(alphabet, n)
    checked = 0
    for x in space.sample(samples, seed):
        join = 0
        for y in space.open_masks:
            if y & x == y:
                join |= y
        X = space.to_lang(x)
        checked += 1
        if space.to_mask(interior_h(X)) != join:
            return LatticeCheck(False, checked, space.total, X)
    return LatticeCheck(True, checked, space.total)


def lattice_pointwise_check(alphabet: Alphabet, n: int, samples: int, seed: int) -> LatticeCheck:
    """
    Word-by-word descriptions of closure and interior

    w is in plus_h(X) iff every open set containing w meets X, and w is in
    interior_h(X) iff some open subset of X contains w.
    """
    space = _SubsetSpace(alphabet, n)
    # open sets containing each word
    around = [[y for y in space.open_masks if y >> i & 1] for i in range(len(space.words))]
    checked = 0
    for x in space.sample(samples, seed):
        X = space.to_lang(x)
        closure, interior = space.to_mask(plus_h(X)), space.to_mask(interior_h(X))
        checked += 1
        for i, neighbourhoods in enumerate(around):
            in_closure = all(y & x for y in neighbourhoods)
            in_interior = any(y & x == y for y in neighbourhoods)
            if bool(closure >> i & 1) != in_closure or bool(interior >> i & 1) != in_interior:
                logger.debug(f"Pointwise check fails on {space.words[i]!r} for {X.sorted()}")
                return LatticeCheck(False, checked, space.total, X)
    return LatticeCheck(True, checked, space.total)
