import io

import pytest

from utils import (
    clean_exit, format_flags, format_role, format_sizes, format_time, format_word, write_lines
)


@pytest.mark.parametrize("seconds, text", [(0.421, "0.42s"), (63.9, "1m 03s")])
def test_format_time(seconds, text):
    assert format_time(seconds) == text


def test_formatting():
    assert format_word("") == "ε"
    assert format_word("ab") == "ab"
    assert format_role("") == "L"
    assert format_role("+⊕") == "L^{+⊕}"
    assert format_sizes({"B": 5, "A": 10}) == "|B|=5, |A|=10"
    assert format_flags({"open": True, "closed": False, "epsilon": True}) == "open epsilon"
    assert format_flags({"open": False}) == "-"


def test_write_lines():
    stream = io.StringIO()
    write_lines(["one", "two"], stream)
    assert stream.getvalue() == "one\ntwo\n"


def test_clean_exit(capsys):
    with pytest.raises(SystemExit) as info:
        clean_exit(2, "bad input")
    assert info.value.code == 2
    assert capsys.readouterr().err == "bad input\n"
