import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from language import Lang
from regexp import (
    Alphabet, Concat, EmptySet, Epsilon, Plus, Star, Symbol, Union, random_regex
)

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "thorough", max_examples=1000, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

UNARY = Alphabet.of("a")
BINARY = Alphabet.of("ab")


def regex_asts(alphabet: Alphabet, max_leaves: int = 8):
    """Syntax trees over alphabet built by st.recursive"""
    leaves = st.one_of(
        st.sampled_from([Symbol(letter) for letter in alphabet]),
        st.just(Epsilon()),
        st.just(EmptySet()),
    )
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Union, children, children),
            st.builds(Concat, children, children),
            st.builds(Star, children),
            st.builds(Plus, children),
        ),
        max_leaves=max_leaves,
    )


def alphabets():
    return st.sampled_from([UNARY, BINARY])


@st.composite
def langs(draw, alphabet=None):
    """Languages from seeded random regexes, replayable with random_regex"""
    alphabet = alphabet or draw(alphabets())
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return Lang.from_ast(random_regex(seed, 4, alphabet), alphabet)


@pytest.fixture
def unary():
    return UNARY


@pytest.fixture
def binary():
    return BINARY


@pytest.fixture
def lang():
    """Build a language from regex text and alphabet letters"""
    def build(text: str, letters: str = "ab") -> Lang:
        return Lang.from_regex(text, Alphabet.of(letters))
    return build


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point config lookup at an empty directory and clear the state cap override"""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "xdg"))
    monkeypatch.delenv("KLANG_STATE_CAP", raising=False)
