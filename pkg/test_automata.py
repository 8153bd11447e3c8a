from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

from automata import (
    EPSILON, CanonicalDfa, Dfa, Nfa, accepts, canonicalize, compile, complement_dfa,
    contains_epsilon, determinize, equivalent, is_empty, minimize, product, shortest_word
)
from conftest import BINARY, UNARY
from errors import AlphabetMismatch, StateBlowup, UnknownSymbol
from regexp import matches, parse_regex, random_regex


def canon(text, alphabet=BINARY) -> CanonicalDfa:
    return canonicalize(compile(parse_regex(text, alphabet), alphabet))


def words(alphabet, n):
    for length in range(n + 1):
        for letters in cartesian(alphabet.letters, repeat=length):
            yield "".join(letters)


def test_compile_plus():
    d = determinize(compile(parse_regex("a+", UNARY), UNARY))
    assert accepts(d, "a") and accepts(d, "aa") and accepts(d, "aaa")
    assert not accepts(d, "")


def test_compile_empty_set_accepts_nothing():
    assert is_empty(canon("#"))


def test_compile_non_topological_witness():
    assert accepts(canon("(aa|aaa)+", UNARY), "aaaaa")
    assert not accepts(canon("(aa|aaa)+", UNARY), "a")


def test_determinize_single_letter():
    d = determinize(compile(parse_regex("a", BINARY), BINARY))
    assert [w for w in words(BINARY, 4) if accepts(d, w)] == ["a"]


def test_determinize_epsilon_cycle():
    # 0 -ε-> 1 -ε-> 0, 1 -a-> 2
    transitions = frozenset([(0, EPSILON, 1), (1, EPSILON, 0), (1, 'a', 2)])
    nfa = Nfa(3, UNARY, transitions, 0, frozenset([2]))
    d = determinize(nfa)
    assert accepts(d, "a")
    assert not accepts(d, "") and not accepts(d, "aa")


def test_determinize_is_complete():
    d = determinize(compile(parse_regex("(a|b)*b", BINARY), BINARY))
    assert accepts(d, "ab")
    assert not accepts(d, "ba")
    assert all(len(row) == len(BINARY) for row in d.transition)


def test_determinize_state_cap():
    with pytest.raises(StateBlowup) as info:
        determinize(compile(parse_regex("(a|b)*a(a|b)(a|b)(a|b)", BINARY), BINARY), state_cap=4)
    assert info.value.cap == 4


def test_state_cap_from_environment(monkeypatch):
    monkeypatch.setenv("KLANG_STATE_CAP", "3")
    with pytest.raises(StateBlowup):
        canon("(a|b)*a(a|b)(a|b)")


def test_minimize_two_automata_for_a_star():
    small = Dfa(1, UNARY, ((0,),), 0, frozenset([0]))
    # five accepting states in a cycle
    large = Dfa(5, UNARY, ((1,), (2,), (3,), (4,), (0,)), 0, frozenset(range(5)))
    assert minimize(small) == minimize(large)
    assert minimize(small).state_count == 1


def test_minimize_is_idempotent():
    d = canon("(a|b)*abb")
    assert minimize(d) == d


def test_minimize_same_language():
    assert canon("aa*", UNARY) == canon("a+", UNARY)


def test_minimize_drops_unreachable_states():
    d = Dfa(3, UNARY, ((0,), (2,), (1,)), 0, frozenset([0, 1]))
    assert minimize(d).state_count == 1


@pytest.mark.parametrize("left, right, expected", [
    ("a+", "aa*", True),
    ("a*", "a+", False),
    ("(aa|aaa)+", "aa(a|aa)*|aaa(a|aa)*", True),
    ("(a|b)*", "(a*b*)*", True),
    ("#", "#*", False),
    ("@", "#*", True),
])
def test_equivalent(left, right, expected):
    assert equivalent(canon(left), canon(right)) == expected


def test_equivalent_rejects_mixed_alphabets():
    with pytest.raises(AlphabetMismatch):
        equivalent(canon("a", UNARY), canon("a", BINARY))


def test_accepts_unknown_letter():
    with pytest.raises(UnknownSymbol) as info:
        accepts(canon("a+", UNARY), "aab")
    assert info.value.position == 2


def test_contains_epsilon():
    assert contains_epsilon(canon("a*", UNARY))
    assert not contains_epsilon(canon("a+", UNARY))


def test_complement_is_canonical():
    d = canon("ab|ba")
    flipped = complement_dfa(d)
    assert minimize(flipped) == flipped
    assert complement_dfa(flipped) == d


def test_product_operations():
    left, right = canon("a(a|b)*"), canon("(a|b)*b")
    assert product(left, right, lambda x, y: x and y) == canon("a(a|b)*b")
    assert product(left, right, lambda x, y: x or y) == canon("a(a|b)*|(a|b)*b")
    assert product(left, left, lambda x, y: x and not y) == canon("#")


@pytest.mark.parametrize("text, expected", [
    ("#", None),
    ("a*", ""),
    ("b|ab|aa", "b"),
    ("(a|b)*abb", "abb"),
])
def test_shortest_word(text, expected):
    assert shortest_word(canon(text)) == expected


def test_to_nfa_keeps_language():
    d = canon("(ab)*a")
    assert canonicalize(d.to_nfa()) == d


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from([UNARY, BINARY]))
def test_pipeline_agrees_with_interpreter(seed, alphabet):
    ast = random_regex(seed, 4, alphabet)
    d = canonicalize(compile(ast, alphabet))
    for word in words(alphabet, 8):
        assert accepts(d, word) == matches(ast, word)


@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=10**6))
def test_inequivalent_languages_have_a_distinguishing_word(seed1, seed2):
    first = canonicalize(compile(random_regex(seed1, 4, BINARY), BINARY))
    second = canonicalize(compile(random_regex(seed2, 4, BINARY), BINARY))
    difference = product(first, second, lambda x, y: x != y)
    if equivalent(first, second):
        assert shortest_word(difference) is None
    else:
        witness = shortest_word(difference)
        assert accepts(first, witness) != accepts(second, witness)
