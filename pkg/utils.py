import sys
import time
import logging
from typing import Callable, Dict, Iterable, Optional

logger = logging.getLogger('klang')


def format_time(seconds: float) -> str:
    """
    Format a duration for verification reports.

    Args:
        seconds: Duration in seconds

    Returns:
        str: e.g. "0.42s" or "1m 03s"
    """
    if seconds < 60:
        return f"{seconds:.2f}s"
    minutes, secs = divmod(int(seconds), 60)
    return f"{minutes}m {secs:02d}s"


def format_word(word: str) -> str:
    """
    Format an input word, showing the empty word as ε.

    Args:
        word: A word over the alphabet

    Returns:
        str: The word, or "ε"
    """
    return word if word else "ε"


def format_role(word: str) -> str:
    """
    Format an operator word as a superscript on L.

    Args:
        word: Operator word such as "+⊕-"

    Returns:
        str: "L" for the empty word, otherwise "L^{...}"
    """
    return f"L^{{{word}}}" if word else "L"


def format_sizes(sizes: Dict[str, int]) -> str:
    """
    Format orbit family sizes, e.g. {"B": 5, "A": 10} -> "|B|=5, |A|=10".

    Args:
        sizes: Family name to size, in display order

    Returns:
        str: Comma separated sizes
    """
    return ", ".join(f"|{name}|={size}" for name, size in sizes.items())


def format_flags(flags: Dict[str, bool]) -> str:
    """
    Format the true flags of a node.

    Args:
        flags: Flag name to value

    Returns:
        str: Space separated names of set flags, or "-" if none
    """
    names = [name for name, value in flags.items() if value]
    return " ".join(names) if names else "-"


def create_timer() -> Callable[[], float]:
    """
    Create a timer that reports seconds elapsed since its creation.

    Returns:
        Callable[[], float]: Function returning the elapsed time
    """
    start = time.perf_counter()

    def elapsed() -> float:
        return time.perf_counter() - start

    return elapsed


def write_lines(lines: Iterable[str], stream=None) -> None:
    """
    Write lines to a stream (stdout by default), one per line.

    Args:
        lines: Lines without trailing newlines
        stream: Optional target stream
    """
    out = stream if stream is not None else sys.stdout
    for line in lines:
        out.write(line + "\n")
    out.flush()


def clean_exit(exit_code: int = 0, message: Optional[str] = None):
    """
    Flush output streams and exit the process.

    Args:
        exit_code: Exit code to return
        message: Optional message written to stderr first
    """
    try:
        if message:
            sys.stderr.write(message + "\n")
        sys.stdout.flush()
        sys.stderr.flush()
        logger.info(f"Clean exit with code {exit_code}")
    except Exception as e:
        logger.error(f"Error during clean exit: {e}")

    sys.exit(exit_code)
