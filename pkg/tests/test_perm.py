import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from distinguo.errors import MalformedCycles, MalformedGroupFile, OrderExceedsCap
from distinguo.perm import (
    FiniteAction,
    Permutation,
    cyclic_group,
    dihedral_group,
    enumerate_elements,
    format_group,
    group_order,
    orbit,
    parse_group,
    parse_permutation,
    point_stabilizer,
    setwise_stabilizer_order,
    symmetric_group,
)

import corpus
from oracles import brute_closure, brute_setwise_order


def test_parse_cycles():
    assert parse_permutation("(0 1 2)(3 4)", 5).images == (1, 2, 0, 4, 3)
    assert parse_permutation("()", 3).images == (0, 1, 2)


@pytest.mark.parametrize("text", ["(0 1)(0 2)", "(0 3)", "(0 1", "0 1", "(a b)", ""])
def test_parse_cycles_rejects(text):
    with pytest.raises(MalformedCycles):
        parse_permutation(text, 3)


def test_cycle_string_round_trip():
    p = parse_permutation("(0 4 2)(1 3)", 6)
    assert parse_permutation(p.cycle_string(), 6) == p
    assert p.cycle_count() == 3
    assert p.support() == {0, 1, 2, 3, 4}


def test_multiplication_applies_right_factor_first():
    p = parse_permutation("(0 1)", 3)
    q = parse_permutation("(1 2)", 3)
    assert (p * q)(1) == p(q(1)) == 2
    assert (p * q)(0) == 1


def test_enumerate_dihedral_pentagon():
    g = FiniteAction.from_cycles(5, "(0 1 2 3 4)", "(1 4)(2 3)")
    assert len(enumerate_elements(g, cap=100)) == 10


def test_enumerate_trivial():
    assert len(enumerate_elements(FiniteAction.from_cycles(3, "()"), cap=10)) == 1


def test_enumerate_cap():
    with pytest.raises(OrderExceedsCap):
        enumerate_elements(FiniteAction.from_cycles(4, "(0 1)", "(0 1 2 3)"), cap=10)


def test_enumeration_order_is_bfs_then_lex():
    g = symmetric_group(3)
    elems = enumerate_elements(g)
    assert elems[0].is_identity()
    level1 = elems[1:3]
    assert level1 == sorted(g.generators)
    assert len(set(elems)) == len(elems) == 6


def test_orbits():
    assert orbit(FiniteAction.from_cycles(5, "(0 1 2 3 4)"), 0) == {0, 1, 2, 3, 4}
    assert orbit(FiniteAction.from_cycles(3, "(0 1)"), 2) == {2}
    assert orbit(FiniteAction.from_cycles(4, "(0 1)(2 3)", "(1 2)"), 0) == {0, 1, 2, 3}


def test_point_stabilizer():
    s3 = FiniteAction.from_cycles(3, "(0 1)", "(0 1 2)")
    stab = point_stabilizer(s3, 0)
    elems = enumerate_elements(stab)
    assert len(elems) == 2 and all(g(0) == 0 for g in elems)
    assert group_order(point_stabilizer(cyclic_group(5), 0)) == 1
    assert group_order(point_stabilizer(FiniteAction.trivial(3), 1)) == 1


def test_setwise_stabilizer():
    assert setwise_stabilizer_order(cyclic_group(11), {0}) == 1
    assert setwise_stabilizer_order(dihedral_group(6), {0, 1, 3}) == 1
    assert setwise_stabilizer_order(symmetric_group(4), {0, 1}) == 4


def test_group_file_round_trip():
    text = "# comment\npermgroup 5\ngen (0 1 2 3 4)\ngen (1 4)(2 3)\n"
    g = parse_group(text)
    assert g.degree == 5 and len(g.generators) == 2
    assert parse_group(format_group(g)) == g


@pytest.mark.parametrize("text", ["permgroup 3\n", "gen (0 1)\n", "permgroup x\ngen ()\n", "permgroup 3\nfoo\n"])
def test_group_file_rejects(text):
    with pytest.raises((MalformedGroupFile, MalformedCycles)):
        parse_group(text)


def _sympy_order(action):
    return PermutationGroup([SymPerm(list(g.images)) for g in action.generators]).order()


@pytest.mark.parametrize("name", sorted(corpus.transitive_groups()))
def test_enumeration_size_matches_stabilizer_chain_order(name):
    g = corpus.transitive_groups()[name]
    # sympy computes the order with Schreier-Sims, independently of our BFS.
    assert len(enumerate_elements(g)) == _sympy_order(g) == corpus.TRANSITIVE_ORDERS[name]


def test_enumeration_matches_product_closure():
    for name in ("D5", "A4", "S4on6"):
        g = corpus.transitive_groups()[name]
        assert {e.images for e in enumerate_elements(g)} == brute_closure(g.generators, g.degree)


def test_stabilizer_generates_exactly_the_stabilizer():
    for name in ("S4", "D6", "PSL25", "F42"):
        g = corpus.transitive_groups()[name]
        for x in range(g.degree):
            expected = {e for e in enumerate_elements(g) if e(x) == x}
            assert set(enumerate_elements(point_stabilizer(g, x))) == expected


def test_setwise_matches_oracle():
    rng = random.Random(5)
    for name in ("D6", "S4on6", "F21"):
        g = corpus.transitive_groups()[name]
        elems = enumerate_elements(g)
        for _ in range(10):
            subset = {x for x in range(g.degree) if rng.random() < 0.5}
            assert setwise_stabilizer_order(g, subset) == brute_setwise_order(elems, subset)


perm_strategy = st.integers(2, 9).flatmap(lambda n: st.permutations(list(range(n))))


@given(perm_strategy, st.data())
@settings(max_examples=150)
def test_motion_is_conjugation_invariant(images, data):
    p = Permutation(images)
    q = Permutation(data.draw(st.permutations(list(range(len(images))))))
    conj = q * p * q.inverse()
    assert conj.support() == q.image_of_set(p.support())
    assert conj.motion() == p.motion()


@given(perm_strategy)
@settings(max_examples=200)
def test_cycle_count_bound(images):
    p = Permutation(images)
    if not p.is_identity():
        assert 2 * p.cycle_count() <= 2 * p.degree - p.motion()


@pytest.mark.parametrize("name", ["D6", "S3wrS2", "F21", "PSL32"])
def test_orbit_relation_is_symmetric(name):
    g = corpus.transitive_groups()[name]
    h = point_stabilizer(g, 0)
    for x in range(g.degree):
        for y in orbit(h, x):
            assert x in orbit(h, y)


def test_image_mask():
    p = parse_permutation("(0 1 2)", 4)
    assert p.image_mask(0b1001) == 0b1010
