import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from config import get_state_cap
from errors import AlphabetMismatch, StateBlowup, UnknownSymbol
from regexp import (
    Alphabet, Concat, EmptySet, Epsilon, Plus, RegexAst, Star, Symbol, Union
)

logger = logging.getLogger('klang')

# Label of an ε-transition
EPSILON = None

Transition = Tuple[int, Optional[str], int]


@dataclass(frozen=True)
class Nfa:
    """
    Nondeterministic automaton with ε-transitions

    States are 0..state_count-1; a transition label is a letter of the
    alphabet or EPSILON.
    """
    state_count: int
    alphabet: Alphabet
    transitions: FrozenSet[Transition]
    start: int
    accepting: FrozenSet[int]

    def __post_init__(self):
        states = range(self.state_count)
        if self.start not in states:
            raise ValueError(f"Start state {self.start} out of range")
        if not all(q in states for q in self.accepting):
            raise ValueError("Accepting state out of range")
        for src, label, dst in self.transitions:
            if src not in states or dst not in states:
                raise ValueError(f"Transition {(src, label, dst)} out of range")
            if label is not EPSILON and label not in self.alphabet:
                raise ValueError(f"Transition label {label!r} not in alphabet")


@dataclass(frozen=True)
class Dfa:
    """
    Complete deterministic automaton

    transition[state][i] is the successor of state on the i-th letter of the
    alphabet; every entry is defined, so a dead state exists whenever some
    word cannot be extended to an accepted one.
    """
    state_count: int
    alphabet: Alphabet
    transition: Tuple[Tuple[int, ...], ...]
    start: int
    accepting: FrozenSet[int]

    def __post_init__(self):
        if len(self.transition) != self.state_count:
            raise ValueError("Transition table must have one row per state")
        for row in self.transition:
            if len(row) != len(self.alphabet):
                raise ValueError("Transition table must have one column per letter")
            if not all(0 <= q < self.state_count for q in row):
                raise ValueError("Transition target out of range")
        if not 0 <= self.start < self.state_count:
            raise ValueError(f"Start state {self.start} out of range")

    def step(self, state: int, letter: str) -> int:
        """
        Follow one transition

        Args:
            state: Current state
            letter: Letter to read

        Returns:
            int: Successor state
        """
        if letter not in self.alphabet:
            raise UnknownSymbol(letter)
        return self.transition[state][self.alphabet.index(letter)]

    def run(self, word: str) -> int:
        """
        Follow a whole word from the start state

        Args:
            word: Letters to read

        Returns:
            int: The state reached
        """
        state = self.start
        for position, letter in enumerate(word):
            if letter not in self.alphabet:
                raise UnknownSymbol(letter, position)
            state = self.transition[state][self.alphabet.index(letter)]
        return state

    def to_nfa(self) -> Nfa:
        """View this automaton as an ε-free NFA"""
        transitions = frozenset(
            (q, letter, row[i])
            for q, row in enumerate(self.transition)
            for i, letter in enumerate(self.alphabet)
        )
        return Nfa(self.state_count, self.alphabet, transitions, self.start, self.accepting)


@dataclass(frozen=True)
class CanonicalDfa(Dfa):
    """
    Minimal complete DFA with states numbered in breadth-first discovery
    order from the start state, letters explored in alphabet order

    Two CanonicalDfas denote the same language iff they compare equal.
    """


class _NfaBuilder:
    """Thompson construction: every fragment has one start and one accepting state"""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.state_count = 0
        self.transitions = set()

    def new_state(self) -> int:
        self.state_count += 1
        return self.state_count - 1

    def add(self, src: int, label: Optional[str], dst: int) -> None:
        self.transitions.add((src, label, dst))

    def fragment(self, ast: RegexAst) -> Tuple[int, int]:
        start = self.new_state()
        if isinstance(ast, EmptySet):
            return start, self.new_state()
        if isinstance(ast, Epsilon):
            final = self.new_state()
            self.add(start, EPSILON, final)
            return start, final
        if isinstance(ast, Symbol):
            if ast.letter not in self.alphabet:
                raise UnknownSymbol(ast.letter)
            final = self.new_state()
            self.add(start, ast.letter, final)
            return start, final
        if isinstance(ast, Union):
            left_start, left_final = self.fragment(ast.left)
            right_start, right_final = self.fragment(ast.right)
            final = self.new_state()
            self.add(start, EPSILON, left_start)
            self.add(start, EPSILON, right_start)
            self.add(left_final, EPSILON, final)
            self.add(right_final, EPSILON, final)
            return start, final
        if isinstance(ast, Concat):
            left_start, left_final = self.fragment(ast.left)
            right_start, right_final = self.fragment(ast.right)
            self.add(start, EPSILON, left_start)
            self.add(left_final, EPSILON, right_start)
            return start, right_final
        if isinstance(ast, (Star, Plus)):
            inner_start, inner_final = self.fragment(ast.inner)
            final = self.new_state()
            self.add(start, EPSILON, inner_start)
            self.add(inner_final, EPSILON, final)
            self.add(inner_final, EPSILON, inner_start)
            if isinstance(ast, Star):
                self.add(start, EPSILON, final)
            return start, final
        raise TypeError(f"Not a regex node: {ast!r}")


def compile(ast: RegexAst, alphabet: Alphabet) -> Nfa:
    """
    Compile a syntax tree to an NFA

    Plus(x) accepts the non-empty concatenations of words of x, so it
    accepts ε only when x does.

    Args:
        ast: The syntax tree
        alphabet: The alphabet the language lives over

    Returns:
        Nfa: An automaton accepting the denoted language
    """
    builder = _NfaBuilder(alphabet)
    start, final = builder.fragment(ast)
    return Nfa(builder.state_count, alphabet, frozenset(builder.transitions), start, frozenset([final]))


def determinize(nfa: Nfa, state_cap: Optional[int] = None) -> Dfa:
    """
    Subset construction

    The empty subset, when reached, is the dead state, so the result is
    complete.

    Args:
        nfa: The automaton to determinize
        state_cap: Maximum number of subsets; defaults to get_state_cap()

    Returns:
        Dfa: An equivalent complete DFA

    Raises:
        StateBlowup: More than state_cap subsets were discovered
    """
    cap = state_cap if state_cap is not None else get_state_cap()
    letters = nfa.alphabet.letters

    epsilon_moves: List[List[int]] = [[] for _ in range(nfa.state_count)]
    letter_moves: List[Dict[str, List[int]]] = [{} for _ in range(nfa.state_count)]
    for src, label, dst in nfa.transitions:
        if label is EPSILON:
            epsilon_moves[src].append(dst)
        else:
            letter_moves[src].setdefault(label, []).append(dst)

    def closure(states: Iterable[int]) -> FrozenSet[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            for nxt in epsilon_moves[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(seen)

    start = closure([nfa.start])
    subsets = [start]
    index = {start: 0}
    rows = []

    i = 0
    while i < len(subsets):
        current = subsets[i]
        row = []
        for letter in letters:
            moved = set()
            for q in current:
                moved.update(letter_moves[q].get(letter, ()))
            target = closure(moved)
            j = index.get(target)
            if j is None:
                if len(subsets) >= cap:
                    logger.error(f"Subset construction hit the state cap of {cap}")
                    raise StateBlowup(cap)
                j = len(subsets)
                subsets.append(target)
                index[target] = j
            row.append(j)
        rows.append(tuple(row))
        i += 1

    accepting = frozenset(k for k, subset in enumerate(subsets) if subset & nfa.accepting)
    return Dfa(len(subsets), nfa.alphabet, tuple(rows), 0, accepting)


def _reachable(dfa: Dfa) -> List[int]:
    seen = {dfa.start}
    order = [dfa.start]
    queue = deque(order)
    while queue:
        for nxt in dfa.transition[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def minimize(dfa: Dfa) -> CanonicalDfa:
    """
    Minimize and canonically renumber a complete DFA

    Unreachable states are dropped, equivalent states merged by partition
    refinement, and the quotient numbered breadth-first from the start state.
    Idempotent.

    Args:
        dfa: Any complete DFA

    Returns:
        CanonicalDfa: The canonical automaton of the same language
    """
    states = _reachable(dfa)
    block = {q: (1 if q in dfa.accepting else 0) for q in states}
    block_count = len(set(block.values()))

    while True:
        signatures = {
            q: (block[q],) + tuple(block[nxt] for nxt in dfa.transition[q])
            for q in states
        }
        numbering: Dict[tuple, int] = {}
        refined = {q: numbering.setdefault(signatures[q], len(numbering)) for q in states}
        if len(numbering) == block_count:
            break
        block, block_count = refined, len(numbering)

    # Any member of a block represents it
    representative = {}
    for q in states:
        representative.setdefault(block[q], q)

    start_block = block[dfa.start]
    canonical = {start_block: 0}
    order = [start_block]
    i = 0
    while i < len(order):
        for nxt in dfa.transition[representative[order[i]]]:
            target = block[nxt]
            if target not in canonical:
                canonical[target] = len(order)
                order.append(target)
        i += 1

    rows = tuple(
        tuple(canonical[block[nxt]] for nxt in dfa.transition[representative[b]])
        for b in order
    )
    accepting = frozenset(canonical[b] for b in order if representative[b] in dfa.accepting)
    return CanonicalDfa(len(order), dfa.alphabet, rows, 0, accepting)


def canonicalize(nfa: Nfa) -> CanonicalDfa:
    """Determinize then minimize"""
    return minimize(determinize(nfa))


def _check_alphabets(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"Alphabets differ: {a.alphabet} vs {b.alphabet}")


def equivalent(a: CanonicalDfa, b: CanonicalDfa) -> bool:
    """
    Decide language equality

    Args:
        a: First automaton
        b: Second automaton over the same alphabet

    Returns:
        bool: True iff both accept the same language
    """
    _check_alphabets(a, b)
    return a == b


def accepts(d: Dfa, word: str) -> bool:
    """
    Decide membership of a word

    Raises:
        UnknownSymbol: The word uses a letter outside the alphabet
    """
    return d.run(word) in d.accepting


def is_empty(d: CanonicalDfa) -> bool:
    """True iff no word is accepted (every canonical state is reachable)"""
    return not d.accepting


def contains_epsilon(d: Dfa) -> bool:
    """True iff the empty word is accepted"""
    return d.start in d.accepting


def complement_dfa(d: CanonicalDfa) -> CanonicalDfa:
    """
    Flip acceptance

    Flipping keeps the automaton minimal and its numbering canonical, so no
    re-minimization is needed.
    """
    accepting = frozenset(q for q in range(d.state_count) if q not in d.accepting)
    return CanonicalDfa(d.state_count, d.alphabet, d.transition, d.start, accepting)


def product(a: Dfa, b: Dfa, combine: Callable[[bool, bool], bool]) -> CanonicalDfa:
    """
    Synchronous product of two complete DFAs

    Args:
        a: Left automaton
        b: Right automaton over the same alphabet
        combine: Acceptance of a pair state from the acceptance of its parts

    Returns:
        CanonicalDfa: The canonical product automaton
    """
    _check_alphabets(a, b)
    start = (a.start, b.start)
    pairs = [start]
    index = {start: 0}
    rows = []

    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row = []
        for nxt in zip(a.transition[p], b.transition[q]):
            j = index.get(nxt)
            if j is None:
                j = len(pairs)
                pairs.append(nxt)
                index[nxt] = j
            row.append(j)
        rows.append(tuple(row))
        i += 1

    accepting = frozenset(
        k for k, (p, q) in enumerate(pairs) if combine(p in a.accepting, q in b.accepting)
    )
    return minimize(Dfa(len(pairs), a.alphabet, tuple(rows), 0, accepting))


def shortest_word(d: Dfa) -> Optional[str]:
    """
    The shortlex-least accepted word

    Returns:
        Optional[str]: The word, or None if the language is empty
    """
    parent: Dict[int, Tuple[int, str]] = {}
    seen = {d.start}
    queue = deque([d.start])
    while queue:
        state = queue.popleft()
        if state in d.accepting:
            letters = []
            cursor = state
            while cursor in parent:
                cursor, letter = parent[cursor]
                letters.append(letter)
            return "".join(reversed(letters))
        for i, nxt in enumerate(d.transition[state]):
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = (state, d.alphabet.letters[i])
                queue.append(nxt)
    return None


def empty_nfa(alphabet: Alphabet) -> Nfa:
    """An NFA accepting nothing"""
    return Nfa(1, alphabet, frozenset(), 0, frozenset())


def epsilon_nfa(alphabet: Alphabet) -> Nfa:
    """An NFA accepting only the empty word"""
    return Nfa(1, alphabet, frozenset(), 0, frozenset([0]))


def universe_nfa(alphabet: Alphabet) -> Nfa:
    """An NFA accepting every word"""
    return Nfa(1, alphabet, frozenset((0, letter, 0) for letter in alphabet), 0, frozenset([0]))


def _shift(nfa: Nfa, offset: int) -> FrozenSet[Transition]:
    return frozenset((src + offset, label, dst + offset) for src, label, dst in nfa.transitions)


def concat_nfa(first: Nfa, second: Nfa) -> Nfa:
    """
    NFA for the concatenation of two languages

    Every accepting state of the first automaton gets an ε-move to the start
    of the second.
    """
    if first.alphabet != second.alphabet:
        raise AlphabetMismatch(f"Alphabets differ: {first.alphabet} vs {second.alphabet}")
    offset = first.state_count
    links = frozenset((q, EPSILON, second.start + offset) for q in first.accepting)
    return Nfa(
        first.state_count + second.state_count,
        first.alphabet,
        first.transitions | _shift(second, offset) | links,
        first.start,
        frozenset(q + offset for q in second.accepting),
    )


def plus_nfa(nfa: Nfa) -> Nfa:
    """
    NFA for the positive closure

    A fresh non-accepting copy of the start state is added; every accepting
    state gets an ε-move to it. The start state keeps its acceptance, so the
    result accepts ε exactly when the input does.
    """
    restart = nfa.state_count
    copied = frozenset((restart, label, dst) for src, label, dst in nfa.transitions if src == nfa.start)
    loops = frozenset((q, EPSILON, restart) for q in nfa.accepting)
    return Nfa(
        nfa.state_count + 1,
        nfa.alphabet,
        nfa.transitions | copied | loops,
        nfa.start,
        nfa.accepting,
    )

