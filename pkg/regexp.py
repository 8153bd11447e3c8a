import random
from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union as TypingUnion

from constants import (
    CLOSE_PAREN, EMPTY_TOKEN, EPSILON_TOKEN, LEAF_PROBABILITY,
    OPEN_PAREN, PLUS_TOKEN, RESERVED_CHARS, STAR_TOKEN, SYMBOL_LEAF_PROBABILITY,
    UNION_TOKEN
)
from errors import AlphabetError, RegexSyntaxError, UnknownSymbol


@dataclass(frozen=True)
class Alphabet:
    """
    An ordered set of single-character letters

    The order is lexicographic and fixed: canonical automata number their
    states by exploring letters in this order.
    """
    letters: Tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise AlphabetError("Alphabet must not be empty")
        if len(set(self.letters)) != len(self.letters):
            raise AlphabetError(f"Alphabet has duplicate letters: {''.join(self.letters)!r}")
        for letter in self.letters:
            if len(letter) != 1 or letter.isspace() or letter in RESERVED_CHARS:
                raise AlphabetError(f"Invalid alphabet letter {letter!r}")
        if list(self.letters) != sorted(self.letters):
            raise AlphabetError("Alphabet letters must be sorted")

    @classmethod
    def of(cls, letters: Iterable[str]) -> 'Alphabet':
        """
        Build an alphabet from a string such as "ba"

        Args:
            letters: The letters, in any order

        Returns:
            Alphabet: Sorted alphabet
        """
        letters = list(letters)
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"Alphabet has duplicate letters: {''.join(letters)!r}")
        return cls(tuple(sorted(letters)))

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)

    def index(self, letter: str) -> int:
        return self.letters.index(letter)


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Symbol:
    letter: str


@dataclass(frozen=True)
class Union:
    left: 'RegexAst'
    right: 'RegexAst'


@dataclass(frozen=True)
class Concat:
    left: 'RegexAst'
    right: 'RegexAst'


@dataclass(frozen=True)
class Star:
    inner: 'RegexAst'


@dataclass(frozen=True)
class Plus:
    inner: 'RegexAst'


RegexAst = TypingUnion[EmptySet, Epsilon, Symbol, Union, Concat, Star, Plus]

# Binding strength, loosest first
_UNION_LEVEL = 0
_CONCAT_LEVEL = 1
_POSTFIX_LEVEL = 2
_ATOM_LEVEL = 3

_BASE_START = (OPEN_PAREN, EPSILON_TOKEN, EMPTY_TOKEN, "letter")


class _Parser:
    """Recursive descent over the token stream of one expression"""

    def __init__(self, text: str, alphabet: Alphabet):
        self.alphabet = alphabet
        # Whitespace is insignificant; keep original offsets for error messages
        self.tokens: List[Tuple[int, str]] = [
            (i, ch) for i, ch in enumerate(text) if not ch.isspace()
        ]
        self.pos = 0
        self.end_offset = len(text)

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (self.end_offset, None)

    def advance(self) -> Tuple[int, str]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> RegexAst:
        node = self.expr()
        offset, ch = self.peek()
        if ch is not None:
            raise RegexSyntaxError(f"Unexpected {ch!r}", offset, (UNION_TOKEN, "end of input"))
        return node

    def expr(self) -> RegexAst:
        node = self.term()
        while self.peek()[1] == UNION_TOKEN:
            self.advance()
            node = Union(node, self.term())
        return node

    def term(self) -> RegexAst:
        node = self.factor()
        while self.starts_base(self.peek()[1]):
            node = Concat(node, self.factor())
        return node

    def factor(self) -> RegexAst:
        node = self.base()
        while self.peek()[1] in (STAR_TOKEN, PLUS_TOKEN):
            _, op = self.advance()
            node = Star(node) if op == STAR_TOKEN else Plus(node)
        return node

    def base(self) -> RegexAst:
        offset, ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("Unexpected end of input", offset, _BASE_START)
        if ch == OPEN_PAREN:
            self.advance()
            node = self.expr()
            offset, ch = self.peek()
            if ch != CLOSE_PAREN:
                found = "end of input" if ch is None else repr(ch)
                raise RegexSyntaxError(f"Unexpected {found}", offset, (CLOSE_PAREN, UNION_TOKEN))
            self.advance()
            return node
        if ch == EPSILON_TOKEN:
            self.advance()
            return Epsilon()
        if ch == EMPTY_TOKEN:
            self.advance()
            return EmptySet()
        if ch in RESERVED_CHARS:
            raise RegexSyntaxError(f"Unexpected {ch!r}", offset, _BASE_START)
        if ch not in self.alphabet:
            raise UnknownSymbol(ch, offset)
        self.advance()
        return Symbol(ch)

    @staticmethod
    def starts_base(ch) -> bool:
        return ch is not None and (ch not in RESERVED_CHARS or ch in (OPEN_PAREN, EPSILON_TOKEN, EMPTY_TOKEN))


def parse_regex(text: str, alphabet: Alphabet) -> RegexAst:
    """
    Parse a regular expression

    Precedence is star/plus over concatenation over union; all binary
    operators associate to the left. '@' is the empty word, '#' the empty
    language.

    Args:
        text: Source text
        alphabet: Letters allowed as literals

    Returns:
        RegexAst: The syntax tree

    Raises:
        RegexSyntaxError: Malformed input
        UnknownSymbol: A literal outside the alphabet
    """
    return _Parser(text, alphabet).parse()


def _level(ast: RegexAst) -> int:
    if isinstance(ast, Union):
        return _UNION_LEVEL
    if isinstance(ast, Concat):
        return _CONCAT_LEVEL
    if isinstance(ast, (Star, Plus)):
        return _POSTFIX_LEVEL
    return _ATOM_LEVEL


def _render(ast: RegexAst, context: int) -> str:
    if isinstance(ast, EmptySet):
        text = EMPTY_TOKEN
    elif isinstance(ast, Epsilon):
        text = EPSILON_TOKEN
    elif isinstance(ast, Symbol):
        text = ast.letter
    elif isinstance(ast, Union):
        # Right operand one level tighter so a right-nested union keeps its parentheses
        text = _render(ast.left, _UNION_LEVEL) + UNION_TOKEN + _render(ast.right, _CONCAT_LEVEL)
    elif isinstance(ast, Concat):
        text = _render(ast.left, _CONCAT_LEVEL) + _render(ast.right, _POSTFIX_LEVEL)
    elif isinstance(ast, Star):
        text = _render(ast.inner, _POSTFIX_LEVEL) + STAR_TOKEN
    elif isinstance(ast, Plus):
        text = _render(ast.inner, _POSTFIX_LEVEL) + PLUS_TOKEN
    else:
        raise TypeError(f"Not a regex node: {ast!r}")

    if _level(ast) < context:
        return OPEN_PAREN + text + CLOSE_PAREN
    return text


def render_regex(ast: RegexAst) -> str:
    """
    Render a syntax tree with as few parentheses as re-parsing allows

    Args:
        ast: The syntax tree

    Returns:
        str: Text that parses back to a structurally identical tree
    """
    return _render(ast, _UNION_LEVEL)


def random_regex(seed: int, max_depth: int, alphabet: Alphabet) -> RegexAst:
    """
    Generate a random syntax tree

    Each level is a leaf or an internal node with equal probability; trees
    never exceed max_depth levels. The result depends only on the arguments.

    Args:
        seed: Seed for a private random generator
        max_depth: Maximum tree depth, at least 1
        alphabet: Letters to draw symbols from

    Returns:
        RegexAst: A reproducible random tree
    """
    if max_depth < 1:
        raise ValueError(f"max_depth must be at least 1, got {max_depth}")

    rng = random.Random(seed)
    letters = alphabet.letters

    def leaf() -> RegexAst:
        if rng.random() < SYMBOL_LEAF_PROBABILITY:
            return Symbol(letters[rng.randrange(len(letters))])
        return Epsilon() if rng.random() < 0.5 else EmptySet()

    def grow(depth: int) -> RegexAst:
        if depth <= 1 or rng.random() < LEAF_PROBABILITY:
            return leaf()
        kind = rng.randrange(4)
        if kind == 0:
            return Union(grow(depth - 1), grow(depth - 1))
        if kind == 1:
            return Concat(grow(depth - 1), grow(depth - 1))
        if kind == 2:
            return Star(grow(depth - 1))
        return Plus(grow(depth - 1))

    return grow(max_depth)


def depth(ast: RegexAst) -> int:
    """Number of levels in the tree (a leaf has depth 1)"""
    if isinstance(ast, (Union, Concat)):
        return 1 + max(depth(ast.left), depth(ast.right))
    if isinstance(ast, (Star, Plus)):
        return 1 + depth(ast.inner)
    return 1


def matches(ast: RegexAst, word: str) -> bool:
    """
    Decide membership by interpreting the tree directly

    Independent of the automata pipeline; used to cross-check it. Runs in
    polynomial time by memoizing on (node, start, end) spans.

    Args:
        ast: The syntax tree
        word: The word to test

    Returns:
        bool: True if the word is in the denoted language
    """
    memo = {}

    def spans(node: RegexAst, i: int, j: int) -> bool:
        key = (id(node), i, j)
        if key in memo:
            return memo[key]
        if isinstance(node, EmptySet):
            result = False
        elif isinstance(node, Epsilon):
            result = i == j
        elif isinstance(node, Symbol):
            result = j == i + 1 and word[i] == node.letter
        elif isinstance(node, Union):
            result = spans(node.left, i, j) or spans(node.right, i, j)
        elif isinstance(node, Concat):
            result = any(spans(node.left, i, k) and spans(node.right, k, j) for k in range(i, j + 1))
        elif isinstance(node, Plus):
            # one copy, or a non-empty first copy followed by more
            result = spans(node.inner, i, j) or any(
                spans(node.inner, i, k) and spans(node, k, j) for k in range(i + 1, j)
            )
        else:  # Star
            result = i == j or spans(node.inner, i, j) or any(
                spans(node.inner, i, k) and spans(node, k, j) for k in range(i + 1, j)
            )
        memo[key] = result
        return result

    return spans(ast, 0, len(word))
