import pytest
from hypothesis import given

from conftest import BINARY, UNARY, langs
from errors import AlphabetMismatch
from language import (
    Lang, add_epsilon, apply_word, complement, concatenate, difference, intersection,
    interior_sandwich_check, is_clopen, is_closed, is_closed_semigroup_check,
    is_kleene_closed, is_kleene_open, is_open, is_open_split_check, is_proper_subset,
    is_subset, kleene_interior, left_ideal, normalize_word, plus_closure, positive_interior,
    prefix_closure, remove_epsilon, right_ideal, same, sandwich_check, shuffle_ideal,
    star_closure, suffix_closure, two_sided_ideal, union
)


def u(text):
    return Lang.from_regex(text, UNARY)


def b(text):
    return Lang.from_regex(text, BINARY)


def test_complement():
    assert complement(u("a*")).is_empty()
    assert complement(u("a")) == u("@|aaa*")
    assert complement(complement(b("ab*"))) == b("ab*")


def test_plus_closure():
    assert plus_closure(u("#")).is_empty()
    assert plus_closure(u("a+")) == u("a+")
    assert plus_closure(u("a|aaaa")) == u("a+")
    assert plus_closure(u("a*")) == u("a*")


def test_star_closure():
    assert star_closure(u("#")) == Lang.epsilon(UNARY)
    assert star_closure(u("a")) == u("a*")


def test_positive_interior():
    assert positive_interior(u("aa")).is_empty()
    assert positive_interior(u("a|aaaa")) == u("a")
    assert positive_interior(Lang.universe(BINARY)) == Lang.universe(BINARY)


def test_kleene_interior():
    assert kleene_interior(u("a*")) == u("a+")
    assert kleene_interior(u("#")).is_empty()


def test_boolean_operations():
    assert concatenate(u("a"), u("a")) == u("aa")
    assert add_epsilon(u("a+")) == u("a*")
    assert remove_epsilon(u("a*")) == u("a+")
    assert intersection(u("a*"), u("(aa)*")) == u("(aa)*")
    assert union(b("a"), b("b")) == b("a|b")
    assert difference(b("a|b"), b("b")) == b("a")


def test_mixed_alphabets():
    with pytest.raises(AlphabetMismatch):
        same(u("a"), b("a"))
    with pytest.raises(AlphabetMismatch):
        concatenate(u("a"), b("a"))


def test_subsets():
    assert is_subset(u("aa"), u("a+"))
    assert not is_subset(u("a+"), u("aa"))
    assert is_proper_subset(u("(aa)+|(aaa)+"), u("(aa|aaa)+"))
    assert not is_proper_subset(u("a+"), u("aa*"))


@pytest.mark.parametrize("text, letters, expected", [
    ("aaa*", "a", True),
    ("a", "a", False),
    ("#", "a", True),
    ("aa", "a", False),
    ("a|bb", "ab", False),
    ("a*", "a", True),
])
def test_is_closed(text, letters, expected, lang):
    L = lang(text, letters)
    assert is_closed(L) == expected
    assert is_closed_semigroup_check(L) == expected


@pytest.mark.parametrize("text, letters, expected", [
    ("a", "a", True),
    ("aa", "a", False),
    ("a|abaa", "ab", False),
    ("(a|b)*", "ab", True),
    ("a|aaa", "a", True),
])
def test_is_open(text, letters, expected, lang):
    L = lang(text, letters)
    assert is_open(L) == expected
    assert is_open_split_check(L) == expected


def test_is_clopen():
    assert is_clopen(u("a*"))
    assert not is_clopen(u("a"))


def test_kleene_sense_predicates():
    assert is_kleene_closed(u("a*"))
    assert not is_kleene_closed(u("a+"))
    assert is_kleene_open(u("a+"))
    assert not is_kleene_open(u("a*"))


def test_prefix_and_suffix_closure():
    assert prefix_closure(b("ab")) == b("a|ab")
    assert suffix_closure(b("ab")) == b("b|ab")
    assert prefix_closure(b("@|ab")) == b("@|a|ab")


def test_ideals():
    assert right_ideal(b("a")) == b("a(a|b)*")
    assert left_ideal(b("a")) == b("(a|b)*a")
    assert two_sided_ideal(b("ab")) == b("(a|b)*ab(a|b)*")
    assert left_ideal(b("#")).is_empty()
    assert shuffle_ideal(b("ab")) == b("(a|b)*a(a|b)*b(a|b)*")


def test_sandwich_check():
    L = u("a|aaaa")
    assert sandwich_check(L, u("a+"))
    assert is_clopen(u("a+"))
    # {a} is open but does not contain aaaa
    assert not sandwich_check(L, u("a"))
    assert not sandwich_check(u("aa"), u("aa"))


def test_interior_sandwich_check():
    # L = a*: interior a*, itself closed
    assert interior_sandwich_check(u("a*"), u("a*"))
    assert not interior_sandwich_check(u("a|aaaa"), u("a"))


def test_apply_word():
    L = b("a|ab|bb")
    assert apply_word("", L) == L
    assert apply_word("+-", L) == complement(plus_closure(L))
    assert apply_word("+−+", L) == apply_word("+-+", L)
    assert apply_word("⊕", L) == positive_interior(L)
    assert apply_word("*⊛", L) == kleene_interior(star_closure(L))


def test_normalize_word_rejects_unknown_operator():
    assert normalize_word("−+") == "-+"
    with pytest.raises(ValueError):
        normalize_word("+x")


@given(langs(), langs())
def test_closure_axioms(L, M):
    if L.alphabet != M.alphabet:
        M = complement(L)
    closure = plus_closure(L)
    assert is_subset(L, closure)
    assert same(plus_closure(closure), closure)
    assert is_subset(closure, plus_closure(union(L, M)))
    assert is_subset(L, star_closure(L))
    assert same(star_closure(star_closure(L)), star_closure(L))
    assert same(plus_closure(union(L, M)), plus_closure(union(closure, plus_closure(M))))
    assert is_subset(plus_closure(intersection(L, M)), intersection(closure, plus_closure(M)))


@given(langs(), langs())
def test_interior_axioms(L, M):
    if L.alphabet != M.alphabet:
        M = complement(L)
    interior = positive_interior(L)
    assert is_subset(interior, L)
    assert same(positive_interior(interior), interior)
    assert is_subset(positive_interior(intersection(L, M)), interior)
    assert same(complement(interior), plus_closure(complement(L)))


@given(langs())
def test_characterizations_agree(L):
    assert is_open(L) == is_open_split_check(L)
    assert is_closed(L) == is_closed_semigroup_check(L)


@given(langs())
def test_closure_of_open_is_open(L):
    if is_open(L):
        assert is_open(plus_closure(L))


@given(langs())
def test_mixed_closures_are_clopen(L):
    assert is_clopen(plus_closure(positive_interior(L)))
    assert is_clopen(positive_interior(plus_closure(L)))


@given(langs())
def test_closed_plus_epsilon_is_kleene_closed(L):
    if is_closed(L):
        assert same(star_closure(add_epsilon(L)), add_epsilon(L))


@given(langs(), langs())
def test_lattice_of_closed_and_open_sets(L, M):
    if L.alphabet != M.alphabet:
        M = complement(L)
    assert is_closed(intersection(plus_closure(L), plus_closure(M)))
    assert is_open(union(positive_interior(L), positive_interior(M)))


@given(langs())
def test_example_languages(L):
    assert is_open(prefix_closure(L))
    assert is_open(suffix_closure(L))
    assert is_closed(left_ideal(L))
    assert is_closed(right_ideal(L))
    assert is_closed(two_sided_ideal(L))
    assert is_closed(shuffle_ideal(L))


@given(langs())
def test_sandwich_with_closure(L):
    closure = plus_closure(L)
    assert sandwich_check(L, closure) == is_clopen(closure)


@given(langs())
def test_kleene_interior_is_positive_interior_without_epsilon(L):
    assert same(kleene_interior(L), remove_epsilon(positive_interior(L)))
