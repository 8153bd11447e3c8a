from typing import Optional, Sequence


class KlangError(Exception):
    """Base class for every error raised by klang"""


class AlphabetError(KlangError):
    """An alphabet declaration is empty, repeats a letter or uses a reserved character"""


class RegexSyntaxError(KlangError):
    """
    A regular expression does not follow the grammar

    Args:
        message: Human readable description
        position: Zero-based offset into the source text
        expected: Tokens that would have been accepted at that offset
    """

    def __init__(self, message: str, position: int, expected: Sequence[str] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class UnknownSymbol(KlangError):
    """A letter outside the declared alphabet was used"""

    def __init__(self, symbol: str, position: Optional[int] = None):
        self.symbol = symbol
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"Unknown symbol {symbol!r}{where}")


class AlphabetMismatch(KlangError):
    """Two languages over different alphabets were combined"""


class StateBlowup(KlangError):
    """Subset construction produced more states than the configured cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Subset construction exceeded {cap} states")


class InvariantViolation(KlangError):
    """A proven identity or bound failed; always an implementation bug"""


class BoundViolation(InvariantViolation):
    """An orbit grew past its theoretical maximum size"""


class DisjointnessViolation(InvariantViolation):
    """A language was reached by both an even and an odd number of complements"""


class PhiUndefined(InvariantViolation):
    """Neither M with nor M without the empty word lies in B(L)"""


class Unclassifiable(InvariantViolation):
    """No case condition holds, or the classified case disagrees with the orbit sizes"""
