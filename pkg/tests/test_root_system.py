import math

import pytest

from coxcell import bundled_graph
from coxcell.errors import BoundRequired, NotFinitelyPaired
from coxcell.root_system import (
    UNKNOWN,
    beta_sequence,
    enumerate_roots,
    hat_m,
    prefix_product_check,
    reflect_root,
    reflection_element,
)

from oracles import roots as oracle_roots, round_vec

COUNTS = {"a1": 2, "a2": 6, "a3": 12, "b2": 8, "g2": 12, "i2_5": 10, "a1xa1": 4}


def _vec(table, rid):
    return round_vec([float(x) for x in table[rid].coeffs])


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_roots_match_float_oracle(name):
    g = bundled_graph(name)
    table = enumerate_roots(g)
    expected = oracle_roots([list(r) for r in g.m])
    assert len(expected) == COUNTS[name]
    assert table.complete and len(table) == COUNTS[name]
    assert {_vec(table, r.id) for r in table.roots} == expected
    for r in table.roots:
        assert table.negate(table.negate(r.id)) == r.id
        assert r.positive == (sum(float(x) for x in r.coeffs) > 0)


def test_a2_root_table_layout():
    t = enumerate_roots(bundled_graph("a2"))
    assert [tuple(int(x) for x in r.coeffs) for r in t.roots] == [
        (1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)
    ]


def test_reflect_root_examples():
    t = enumerate_roots(bundled_graph("a2"))
    assert tuple(reflect_root(t, 0, 1)) == t[4].coeffs  # s(alpha_t) = alpha_s + alpha_t
    assert tuple(reflect_root(t, 0, 0)) == t[2].coeffs
    assert tuple(reflect_root(t, 4, 0)) == t[3].coeffs  # r_{s+t}(alpha_s) = -alpha_t
    b2 = enumerate_roots(bundled_graph("b2"))
    for b in range(len(b2)):
        for v in range(len(b2)):
            once = reflect_root(b2, b, v)
            assert b2.id_of(once) is not None
            assert b2.id_of(reflect_root(b2, b, once)) == v


def test_reflection_element_of_highest_a2_root_is_sts():
    t = enumerate_roots(bundled_graph("a2"))
    G = t.group
    s, u = G.generators
    assert reflection_element(t, 4) == G.multiply(G.multiply(s, u), s)
    assert reflection_element(t, 0) == s
    for r in range(len(t)):
        refl = reflection_element(t, r)
        assert G.multiply(refl, refl) == G.identity
        assert t.apply(refl, r) == t.negate(r)


def test_hat_m_examples():
    a2 = enumerate_roots(bundled_graph("a2"))
    assert hat_m(a2, 0, 1) == 3
    assert hat_m(a2, 0, 0) == 1
    assert math.isinf(hat_m(a2, 0, 2))
    # alpha_s and alpha_s + alpha_t meet at an acute angle: never in a common simple system
    assert math.isinf(hat_m(a2, 0, 4))
    assert hat_m(a2, 2, 4) == 3 and hat_m(a2, 4, 3) == 3
    b2 = enumerate_roots(bundled_graph("b2"))
    assert hat_m(b2, 0, 1) == 4
    # orthogonal, but every simple system of B2 pairs its roots at m = 4
    assert b2.group.arith.is_zero(b2.pair(4, 0))
    assert math.isinf(hat_m(b2, 4, 0))
    a1xa1 = enumerate_roots(bundled_graph("a1xa1"))
    assert hat_m(a1xa1, 0, 1) == 2
    g2 = enumerate_roots(bundled_graph("g2"))
    assert hat_m(g2, 0, 1) == 6


@pytest.mark.parametrize("name", ["a2", "b2", "g2", "i2_5", "a3"])
def test_hat_m_symmetry_and_negation(name):
    t = enumerate_roots(bundled_graph(name))
    for a in range(len(t)):
        for b in range(len(t)):
            m = hat_m(t, a, b)
            assert m == hat_m(t, b, a)
            if a != b and m != math.inf:
                # the pair generates a dihedral group of order 2m: (r_a r_b)^m = 1
                G = t.group
                x = G.multiply(t.reflection(a), t.reflection(b))
                p = G.identity
                for _ in range(m):
                    p = G.multiply(p, x)
                assert p == G.identity


def test_beta_sequences():
    a2 = enumerate_roots(bundled_graph("a2"))
    seq = beta_sequence(a2, 0, 1)
    assert seq.m == 3 and seq.entries == (0, 4, 1)
    assert seq.z_word == (1, 4, 0)
    b2 = enumerate_roots(bundled_graph("b2"))
    assert beta_sequence(b2, 0, 1).entries == (0, 5, 4, 1)
    with pytest.raises(NotFinitelyPaired):
        beta_sequence(a2, 0, 2)


@pytest.mark.parametrize("name", ["a2", "b2", "g2", "i2_5"])
def test_beta_sequence_ends_and_prefix_products(name):
    t = enumerate_roots(bundled_graph(name))
    seq = beta_sequence(t, 0, 1)
    assert seq.entries[0] == 0 and seq.entries[-1] == 1
    assert len(set(seq.entries)) == seq.m
    for k in range(2, seq.m + 1):
        prefix_product_check(t, 0, 1, k)


def test_affine_roots_need_a_bound():
    g = bundled_graph("a1tilde")
    with pytest.raises(BoundRequired):
        enumerate_roots(g)
    t = enumerate_roots(g, 10)
    assert len(t) == 44 and not t.complete


def test_truncated_pairing_can_be_unknown():
    t = enumerate_roots(bundled_graph("a1tilde"), 3)
    values = {hat_m(t, a, b) for a in range(len(t)) for b in range(len(t)) if a != b}
    assert values <= {math.inf, UNKNOWN} | set(range(2, 100))
    assert hat_m(t, 0, 1) == math.inf or hat_m(t, 0, 1) is UNKNOWN
