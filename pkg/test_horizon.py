import pytest
from hypothesis import given, strategies as st

from conftest import BINARY, UNARY, langs
from constants import MODE_OPERATORS, MODE_KLEENE, MODE_POSITIVE
from errors import AlphabetMismatch
from horizon import (
    HorizonLang, PredicateLang, check_clopen_predicate, complement_h, cross_validate,
    cross_validate_words, exhaustive_horizon, from_dfa, interior_h, intersection_h,
    lattice_closure_check, lattice_interior_check, lattice_pointwise_check, plus_h, split_check_h, star_h, union_h, universe_h, words_upto
)
from language import Lang, is_open, plus_closure, positive_interior


def h(words, alphabet=UNARY, n=4) -> HorizonLang:
    return HorizonLang.of(alphabet, n, words)


def test_words_upto_is_shortlex():
    assert words_upto(BINARY, 2) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert words_upto(UNARY, 0) == [""]


def test_horizon_lang_validates_members():
    with pytest.raises(ValueError):
        h(["aaaaa"])
    with pytest.raises(ValueError):
        h(["b"])
    with pytest.raises(ValueError):
        HorizonLang.of(UNARY, -1, [])


def test_from_dfa():
    X = from_dfa(Lang.from_regex("a|aaaa", UNARY), 4)
    assert X == h(["a", "aaaa"])
    assert X.sorted() == ["a", "aaaa"]
    assert "aaaa" in X and len(X) == 2
    with pytest.raises(ValueError):
        from_dfa(Lang.from_regex("a", UNARY), -1)


def test_plus_h():
    assert plus_h(h(["a"])) == h(["a", "aa", "aaa", "aaaa"])
    assert plus_h(h(["aa"])) == h(["aa", "aaaa"])
    assert plus_h(h([""])) == h([""])


def test_star_and_complement():
    assert star_h(h([])) == h([""])
    assert complement_h(h(["a"])) == h(["", "aa", "aaa", "aaaa"])
    assert complement_h(universe_h(UNARY, 4)) == h([])


def test_interior_h():
    assert interior_h(h(["a", "aaaa"])) == h(["a"])
    assert interior_h(h(["aa"])) == h([])


def test_set_operations_need_the_same_space():
    assert union_h(h(["a"]), h(["aa"])) == h(["a", "aa"])
    assert intersection_h(h(["a"]), h(["aa"])) == h([])
    with pytest.raises(ValueError):
        union_h(h(["a"]), h(["a"], n=3))
    with pytest.raises(AlphabetMismatch):
        intersection_h(h(["a"]), h(["a"], BINARY))


def test_split_check():
    assert split_check_h(h(["a", "aaaa"])) == ("aa", "aa")
    assert split_check_h(h(["a", "aaa"])) is None
    assert split_check_h(h(["aa"])) == ("a", "a")


def test_cross_validate():
    L = Lang.from_regex("a|ab|bb", BINARY)
    assert cross_validate("+−+", L, 8)
    assert cross_validate("⊕-+⊕", L, 6)
    assert cross_validate("*⊛-", L, 6)


@pytest.mark.parametrize("mode", [MODE_POSITIVE, MODE_KLEENE])
def test_cross_validate_words(mode):
    L = Lang.from_regex("a|bb", BINARY)
    assert cross_validate_words(L, MODE_OPERATORS[mode], 3, 6) is None


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_counting_predicates_are_clopen(k):
    P = PredicateLang(BINARY, frozenset("a"), frozenset("b"), k)
    assert check_clopen_predicate(P, 6)


def test_counting_predicate_with_shared_letters():
    P = PredicateLang(BINARY, frozenset("ab"), frozenset("b"), 2)
    assert check_clopen_predicate(P, 6)


def test_shifted_predicate_is_not_clopen():
    # #a < #b + 2 contains a but not aa
    P = PredicateLang(BINARY, frozenset("a"), frozenset("b"), 1, offset=2)
    result = check_clopen_predicate(P, 4)
    assert not result
    assert result.witness == ("a", "a")
    assert result.side == 'language'


def test_predicate_membership():
    P = PredicateLang(BINARY, frozenset("a"), frozenset("b"), 1)
    assert "ab" not in P
    assert "abb" in P
    assert "" not in P
    assert "" in PredicateLang(BINARY, frozenset("a"), frozenset("b"), 1, strict=False)


def test_predicate_validation():
    with pytest.raises(ValueError):
        PredicateLang(BINARY, frozenset("a"), frozenset("b"), -1)
    with pytest.raises(ValueError):
        PredicateLang(BINARY, frozenset("c"), frozenset("b"), 1)


@pytest.mark.parametrize("alphabet, n", [(UNARY, 4), (BINARY, 2)])
def test_lattice_checks_exhaustive(alphabet, n):
    total = 2 ** len(words_upto(alphabet, n))
    closure = lattice_closure_check(alphabet, n, samples=total, seed=1)
    interior = lattice_interior_check(alphabet, n, samples=total, seed=1)
    assert closure and closure.checked == total
    assert interior and interior.checked == total
    assert closure.exhaustive and closure.total == total


@pytest.mark.parametrize("alphabet, n", [(UNARY, 4), (BINARY, 2)])
def test_pointwise_closure_and_interior_exhaustive(alphabet, n):
    total = 2 ** len(words_upto(alphabet, n))
    result = lattice_pointwise_check(alphabet, n, samples=total, seed=1)
    assert result.holds
    assert result.exhaustive and result.checked == total


def test_pointwise_check_samples_past_the_exhaustive_horizon():
    result = lattice_pointwise_check(BINARY, 3, samples=5, seed=2)
    assert result.holds and result.checked == 5
    assert not result.exhaustive


@pytest.mark.parametrize("alphabet, n", [(UNARY, 7), (BINARY, 2)])
def test_exhaustive_horizon(alphabet, n):
    assert exhaustive_horizon(alphabet) == n


def test_lattice_checks_sample_when_asked_for_fewer():
    result = lattice_closure_check(BINARY, 2, samples=10, seed=3)
    assert result.holds and result.checked == 10


def test_lattice_checks_refuse_large_spaces():
    with pytest.raises(ValueError):
        lattice_closure_check(BINARY, 4, samples=10, seed=1)


@given(langs(), st.integers(min_value=0, max_value=7))
def test_oracle_agrees_with_automata(L, n):
    assert from_dfa(plus_closure(L), n) == plus_h(from_dfa(L, n))
    assert from_dfa(positive_interior(L), n) == interior_h(from_dfa(L, n))


@given(langs(), st.integers(min_value=0, max_value=6))
def test_interior_fixpoint_iff_no_bad_split(L, n):
    X = from_dfa(L, n)
    assert (interior_h(X) == X) == (split_check_h(X) is None)
    if is_open(L):
        assert split_check_h(X) is None
