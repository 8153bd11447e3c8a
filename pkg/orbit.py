import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from constants import (
    MAX_KLEENE_ORBIT, MAX_POSITIVE_ORBIT, MODE_KLEENE, MODE_OPERATORS, MODE_POSITIVE,
    OP_COMPLEMENT, OP_KLEENE_INTERIOR, OP_PLUS, OP_POSITIVE_INTERIOR, OP_STAR
)
from errors import BoundViolation, DisjointnessViolation, PhiUndefined
from language import (
    OPERATORS, Lang, add_epsilon, apply_word, complement, is_closed, is_open,
    plus_closure, positive_interior, remove_epsilon, same
)

logger = logging.getLogger('klang')

# Largest closure/interior family: |B| and |E|
MAX_POSITIVE_BASE = MAX_POSITIVE_ORBIT // 2
MAX_KLEENE_BASE = MAX_KLEENE_ORBIT // 2


@dataclass(frozen=True)
class OrbitNode:
    """
    One language of an orbit

    roles are the shortest operator words reaching the language from L,
    ordered with complement before closure before interior; word is the
    first of them. open/closed are in the positive sense in both modes.
    """
    index: int
    lang: Lang
    roles: Tuple[str, ...]
    in_base: bool
    open: bool
    closed: bool
    contains_epsilon: bool

    @property
    def word(self) -> str:
        return self.roles[0]

    @property
    def flags(self) -> Dict[str, bool]:
        return {'open': self.open, 'closed': self.closed, 'epsilon': self.contains_epsilon}


@dataclass(frozen=True)
class OrbitEdge:
    source: int
    op: str
    target: int


@dataclass(frozen=True)
class OrbitGraph:
    """
    The languages generated from root by complement, closure and interior

    In positive mode the base family is B(L) and the whole graph A(L); in
    Kleene mode they are E(L) and D(L).
    """
    mode: str
    root: Lang
    nodes: Tuple[OrbitNode, ...]
    edges: Tuple[OrbitEdge, ...]

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def base_size(self) -> int:
        return sum(1 for node in self.nodes if node.in_base)

    @property
    def family_names(self) -> Tuple[str, str, str]:
        return ('B', 'C', 'A') if self.mode == MODE_POSITIVE else ('E', 'F', 'D')

    def summary(self) -> Dict[str, int]:
        """Family sizes keyed by family name, e.g. {'B': 5, 'C': 5, 'A': 10}"""
        base, complements, whole = self.family_names
        return {base: self.base_size, complements: self.size - self.base_size, whole: self.size}

    def base(self) -> FrozenSet[Lang]:
        return frozenset(node.lang for node in self.nodes if node.in_base)

    def find(self, lang: Lang) -> Optional[OrbitNode]:
        for node in self.nodes:
            if node.lang == lang:
                return node
        return None

    def successor(self, index: int, op: str) -> OrbitNode:
        for edge in self.edges:
            if edge.source == index and edge.op == op:
                return self.nodes[edge.target]
        raise KeyError(f"No {op!r} edge from node {index}")


def _word_key(ops: Sequence[str]):
    return lambda word: (len(word), [ops.index(op) for op in word])


def _explore(root: Lang, ops: Sequence[str], bound: int) -> Tuple[List[Lang], List[List[str]], List[Tuple[int, str, int]]]:
    """
    Breadth-first fixpoint of ops from root, deduplicated by canonical automaton

    Returns the languages in discovery order, their shortest reaching words
    and every (source, op, target) edge.

    Raises:
        BoundViolation: More than bound distinct languages arise
    """
    index: Dict[Lang, int] = {root: 0}
    langs = [root]
    roles: List[List[str]] = [[""]]
    depth = [0]
    edges = []
    queue = deque([0])

    while queue:
        i = queue.popleft()
        for op in ops:
            target = OPERATORS[op](langs[i])
            j = index.get(target)
            if j is None:
                if len(langs) >= bound:
                    raise BoundViolation(
                        f"More than {bound} languages generated by {''.join(ops)} "
                        f"(after {len(langs)} from words {roles[i]} + {op!r})"
                    )
                j = len(langs)
                index[target] = j
                langs.append(target)
                roles.append([word + op for word in roles[i]])
                depth.append(depth[i] + 1)
                queue.append(j)
            elif depth[j] == depth[i] + 1:
                roles[j].extend(word + op for word in roles[i])
            edges.append((i, op, j))

    key = _word_key(ops)
    roles = [sorted(set(words), key=key) for words in roles]
    return langs, roles, edges


def _parities(count: int, edges: List[Tuple[int, str, int]]) -> List[set]:
    """Complement parities with which each node is reachable from node 0"""
    reached = [set() for _ in range(count)]
    reached[0].add(0)
    queue = deque([(0, 0)])
    while queue:
        node, parity = queue.popleft()
        for source, op, target in edges:
            if source != node:
                continue
            flipped = parity ^ (op == OP_COMPLEMENT)
            if flipped not in reached[target]:
                reached[target].add(flipped)
                queue.append((target, flipped))
    return reached


def _build_graph(L: Lang, mode: str) -> OrbitGraph:
    ops = MODE_OPERATORS[mode]
    bound = MAX_POSITIVE_ORBIT if mode == MODE_POSITIVE else MAX_KLEENE_ORBIT
    langs, roles, edges = _explore(L, ops, bound)
    parities = _parities(len(langs), edges)

    nodes = []
    for i, lang in enumerate(langs):
        if len(parities[i]) != 1:
            raise DisjointnessViolation(
                f"{roles[i][0] or 'L'} is reached with both an even and an odd number of complements"
            )
        nodes.append(OrbitNode(
            index=i,
            lang=lang,
            roles=tuple(roles[i]),
            in_base=0 in parities[i],
            open=is_open(lang),
            closed=is_closed(lang),
            contains_epsilon=lang.contains_epsilon(),
        ))

    graph = OrbitGraph(
        mode=mode,
        root=L,
        nodes=tuple(nodes),
        edges=tuple(OrbitEdge(s, op, t) for s, op, t in edges),
    )
    if graph.size != 2 * graph.base_size:
        raise DisjointnessViolation(f"Orbit sizes {graph.summary()} are not a disjoint pairing")
    logger.debug(f"{mode} orbit: {graph.summary()}")
    return graph


def generate_B(L: Lang) -> FrozenSet[Lang]:
    """
    Languages generated from L by positive closure and positive interior

    At most 5: L, L^+, L^{+⊕}, L^⊕, L^{⊕+}.
    """
    langs, _, _ = _explore(L, (OP_PLUS, OP_POSITIVE_INTERIOR), MAX_POSITIVE_BASE)
    return frozenset(langs)


def generate_C(L: Lang) -> FrozenSet[Lang]:
    """Complements of B(L)"""
    return frozenset(complement(M) for M in generate_B(L))


def generate_A(L: Lang) -> OrbitGraph:
    """
    Languages generated from L by complement and positive closure

    Raises:
        BoundViolation: More than 10 languages
        DisjointnessViolation: B(L) and C(L) overlap
    """
    return _build_graph(L, MODE_POSITIVE)


def generate_E(L: Lang) -> FrozenSet[Lang]:
    """Languages generated from L by Kleene closure and Kleene interior (at most 7)"""
    langs, _, _ = _explore(L, (OP_STAR, OP_KLEENE_INTERIOR), MAX_KLEENE_BASE)
    return frozenset(langs)


def generate_F(L: Lang) -> FrozenSet[Lang]:
    """Complements of E(L)"""
    return frozenset(complement(M) for M in generate_E(L))


def generate_D(L: Lang) -> OrbitGraph:
    """
    Languages generated from L by complement and Kleene closure

    Raises:
        BoundViolation: More than 14 languages
        DisjointnessViolation: E(L) and F(L) overlap
    """
    return _build_graph(L, MODE_KLEENE)


def generate(L: Lang, mode: str) -> OrbitGraph:
    """The A(L) graph in positive mode, the D(L) graph in Kleene mode"""
    if mode == MODE_KLEENE:
        return generate_D(L)
    return generate_A(L)


def orbit_is_closed(graph: OrbitGraph) -> bool:
    """Recompute every operator on every node and check the result is a node"""
    members = {node.lang for node in graph.nodes}
    for node in graph.nodes:
        for op in MODE_OPERATORS[graph.mode]:
            if OPERATORS[op](node.lang) not in members:
                return False
    return True


def verify_eq3(L: Lang, closure: str = OP_STAR) -> bool:
    """
    X^{c-c-c-c} = X^{c-c} for a closure operator c

    Holds for every closure operator, positive or Kleene.
    """
    c, m = closure, OP_COMPLEMENT
    return same(apply_word(c + m + c + m + c + m + c, L), apply_word(c + m + c, L))


def verify_eq4(L: Lang, closure: str = OP_PLUS) -> bool:
    """
    X^{c-c-c} = X^{c-c-}

    Holds for positive closure; fails for Kleene closure, which does not
    preserve openness.
    """
    c, m = closure, OP_COMPLEMENT
    return same(apply_word(c + m + c + m + c, L), apply_word(c + m + c + m, L))


def phi(M: Lang, base: FrozenSet[Lang]) -> Lang:
    """
    Whichever of M ∪ {ε} and M minus ε lies in the base family

    Raises:
        PhiUndefined: Neither does
    """
    for candidate in (add_epsilon(M), remove_epsilon(M)):
        if candidate in base:
            return candidate
    raise PhiUndefined("Neither M ∪ {ε} nor M \\ {ε} lies in B(L)")


def verify_phi(L: Lang) -> bool:
    """
    phi maps E(L) into B(L) and commutes with the operators:
    phi(M^*) = phi(M)^+ and phi(M^⊛) = phi(M)^⊕
    """
    base = generate_B(L)
    for M in generate_E(L):
        image = phi(M, base)
        if phi(OPERATORS[OP_STAR](M), base) != plus_closure(image):
            return False
        if phi(OPERATORS[OP_KLEENE_INTERIOR](M), base) != positive_interior(image):
            return False
    return True


def predicted_kleene_base(L: Lang) -> FrozenSet[Lang]:
    """
    E(L) predicted from B(L) for L neither open nor closed:
    L, M ∪ {ε} for closed M in B(L), M minus ε for open M in B(L)
    """
    family = {L}
    for M in generate_B(L):
        if is_closed(M):
            family.add(add_epsilon(M))
        if is_open(M):
            family.add(remove_epsilon(M))
    return frozenset(family)
