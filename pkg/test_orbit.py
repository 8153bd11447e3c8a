import pytest
from hypothesis import given

from conftest import BINARY, UNARY, langs
from constants import MODE_KLEENE, MODE_POSITIVE
from errors import PhiUndefined
from language import (
    Lang, add_epsilon, apply_word, complement, is_closed, is_open, is_subset,
    plus_closure, positive_interior, remove_epsilon
)
from orbit import (
    generate, generate_A, generate_B, generate_C, generate_D, generate_E, generate_F,
    orbit_is_closed, phi, predicted_kleene_base, verify_eq3, verify_eq4, verify_phi
)


def u(text):
    return Lang.from_regex(text, UNARY)


def b(text):
    return Lang.from_regex(text, BINARY)


@pytest.mark.parametrize("L, expected", [
    (u("a*"), 1),
    (u("aa"), 3),
    (b("a|ab|bb"), 5),
])
def test_generate_B_sizes(L, expected):
    assert len(generate_B(L)) == expected


def test_generate_C_is_complements():
    L = b("a|bb")
    assert generate_C(L) == frozenset(complement(M) for M in generate_B(L))
    assert not generate_B(L) & generate_C(L)


@pytest.mark.parametrize("L, expected", [
    (b("a|ab|bb"), 10),
    (b("a|bb"), 8),
    (u("#"), 2),
])
def test_generate_A_sizes(L, expected):
    assert generate_A(L).size == expected


def test_generate_A_of_empty_language():
    graph = generate_A(u("#"))
    assert {node.lang for node in graph.nodes} == {u("#"), Lang.universe(UNARY)}
    assert graph.summary() == {'B': 1, 'C': 1, 'A': 2}


def test_generate_E():
    assert len(generate_E(b("a|ab|bb"))) == 7
    assert generate_E(u("a")) == frozenset([u("a"), u("a*"), u("a+")])
    assert generate_E(u("a*")) == frozenset([u("a*"), u("a+")])
    assert generate_F(u("a*")) == frozenset([u("#"), u("@")])


@pytest.mark.parametrize("L, expected", [
    (b("a|ab|bb"), 14),
    (u("aa"), 8),
    (u("a*"), 4),
])
def test_generate_D_sizes(L, expected):
    assert generate_D(L).size == expected


def test_generate_D_of_clopen_language():
    graph = generate_D(u("a*"))
    assert {node.lang for node in graph.nodes} == {u("a*"), u("a+"), u("@"), u("#")}


def test_generate_dispatches_on_mode():
    L = b("a|bb")
    assert generate(L, MODE_POSITIVE).mode == MODE_POSITIVE
    assert generate(L, MODE_KLEENE).family_names == ('E', 'F', 'D')


def test_roles_are_shortest_words():
    graph = generate_A(b("a|ab|bb"))
    root = graph.nodes[0]
    assert root.word == "" and root.in_base
    for node in graph.nodes:
        for role in node.roles:
            assert apply_word(role, graph.root) == node.lang
            assert len(role) == len(node.word)
    complement_node = graph.successor(0, '-')
    assert complement_node.word == "-"
    assert not complement_node.in_base


def test_role_tie_break_prefers_complement_then_closure():
    # L^{+-} and L^{-⊕} are the same language
    graph = generate_A(b("a|bb"))
    node = graph.find(complement(plus_closure(b("a|bb"))))
    assert node.roles == ("-⊕", "+-")
    assert node.word == "-⊕"


def test_node_flags():
    graph = generate_A(u("aa"))
    for node in graph.nodes:
        assert node.open == is_open(node.lang)
        assert node.closed == is_closed(node.lang)
        assert node.contains_epsilon == node.lang.contains_epsilon()
        assert set(node.flags) == {'open', 'closed', 'epsilon'}


def test_find_and_successor():
    L = u("aa")
    graph = generate_A(L)
    assert graph.find(L).index == 0
    assert graph.find(u("a")) is None
    assert graph.successor(0, '+').lang == plus_closure(L)
    with pytest.raises(KeyError):
        graph.successor(0, '*')


def test_eq3():
    assert verify_eq3(b("a|ab|bb"))
    assert verify_eq3(b("a|ab|bb"), '+')


def test_eq4():
    assert verify_eq4(u("aa"))
    assert not verify_eq4(u("a"), '*')
    assert apply_word("*-*-*", u("a")) == u("a*")
    assert apply_word("*-*-", u("a")) == u("a+")


@pytest.mark.parametrize("L", [b("a|bb"), u("aa"), b("a|ab|bb")])
def test_verify_phi(L):
    assert verify_phi(L)


def test_phi_undefined():
    with pytest.raises(PhiUndefined):
        phi(b("b"), generate_B(b("a|ab|bb")))


def test_predicted_kleene_base():
    L = b("a|ab|bb")
    assert predicted_kleene_base(L) == generate_E(L)


@given(langs())
def test_orbit_invariants(L):
    positive, kleene = generate_A(L), generate_D(L)
    assert positive.size <= 10 and kleene.size <= 14
    assert positive.size == 2 * len(generate_B(L)) == 2 * positive.base_size
    assert kleene.size == 2 * len(generate_E(L)) == 2 * kleene.base_size
    assert positive.base() == generate_B(L)
    assert kleene.base() == generate_E(L)
    assert orbit_is_closed(positive) and orbit_is_closed(kleene)


@given(langs())
def test_interior_is_least_of_B(L):
    interior = positive_interior(L)
    for M in generate_B(L):
        assert is_subset(interior, M)


@given(langs())
def test_identities(L):
    assert verify_eq3(L, '*')
    assert verify_eq3(L, '+')
    assert verify_eq4(L, '+')


@given(langs())
def test_clopen_closure_and_interior_force_open_or_closed(L):
    if is_open(plus_closure(L)) and is_closed(positive_interior(L)):
        assert is_open(L) or is_closed(L)


@given(langs())
def test_kleene_base_from_positive_base(L):
    if not is_open(L) and not is_closed(L):
        assert generate_E(L) == predicted_kleene_base(L)


@given(langs(UNARY))
def test_unary_bound(L):
    assert generate_A(L).size <= 6


@given(langs())
def test_phi(L):
    assert verify_phi(L)
    base = generate_B(L)
    for M in generate_E(L):
        assert phi(M, base) in (add_epsilon(M), remove_epsilon(M))
