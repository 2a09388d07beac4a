import numpy as np
import pytest

from coxcell import bundled_graph
from coxcell.ap_theory import (
    build_polytope,
    enumerate_ap_spherical,
    hat_polytope_transport_check,
    is_ap,
    sign_flip_polytope_check,
    spherical_ap_sets,
    vector_rank,
)
from coxcell.errors import NotSpherical, PremiseViolated
from coxcell.root_system import enumerate_roots

from oracles import gram, group_elements, round_vec, spherical_ap_counts

SPHERICAL = ["a1", "a2", "b2", "g2", "i2_5", "a1xa1", "a3"]


@pytest.mark.parametrize("name", SPHERICAL)
def test_spherical_ap_levels_match_oracle(name):
    g = bundled_graph(name)
    table = enumerate_roots(g)
    expected = spherical_ap_counts([list(r) for r in g.m])
    got = [len(enumerate_ap_spherical(table, k)) for k in range(len(expected) + 1)]
    assert got == expected + [0]
    assert len(spherical_ap_sets(table)) == sum(expected)


def test_is_ap_examples():
    a2 = enumerate_roots(bundled_graph("a2"))
    yes = is_ap(a2, (0, 1))
    assert yes and yes.apset.M == ((1, 3), (3, 1))
    assert yes.apset.type.kind == "spherical"
    no_dep = is_ap(a2, (0, 2))
    assert no_dep.status == "no" and "AP1" in no_dep.reason
    no_pair = is_ap(a2, (0, 4))
    assert no_pair.status == "no" and "AP2" in no_pair.reason
    assert is_ap(a2, (2, 4)).apset.M[0][1] == 3
    assert is_ap(a2, ()).status == "yes"


def test_ap_set_json():
    a2 = enumerate_roots(bundled_graph("a2"))
    doc = is_ap(a2, (1, 0)).apset.to_json()
    assert doc["roots"] == [0, 1] and doc["M"] == [[1, 3], [3, 1]] and doc["type"] == "spherical"


def test_affine_ap_pair_is_infinite():
    t = enumerate_roots(bundled_graph("a1tilde"), 6)
    res = is_ap(t, (0, 1))
    assert res and res.apset.M[0][1] == float("inf")
    assert res.apset.type.kind == "affine"


def test_vector_rank():
    t = enumerate_roots(bundled_graph("a3"))
    ar = t.group.arith
    assert vector_rank([r.coeffs for r in t.roots], ar) == 3
    assert vector_rank([t[0].coeffs, t[t.negate(0)].coeffs], ar) == 1


@pytest.mark.parametrize(
    "name,roots,fvec",
    [
        ("a2", (0, 1), [6, 6, 1]),
        ("b2", (0, 1), [8, 8, 1]),
        ("g2", (0, 1), [12, 12, 1]),
        ("i2_5", (0, 1), [10, 10, 1]),
        ("a1xa1", (0, 1), [4, 4, 1]),
        ("a3", (0, 1, 2), [24, 36, 14, 1]),
        ("a2", (0,), [2, 1]),
    ],
)
def test_polytope_f_vectors(name, roots, fvec):
    table = enumerate_roots(bundled_graph(name))
    poly = build_polytope(table, roots)
    assert poly.f_vector() == fvec
    # each edge is oriented from shorter to longer element
    for f, (s, t) in poly.edge_orientations.items():
        assert poly.lengths[t] == poly.lengths[s] + 1


@pytest.mark.parametrize("name", ["a2", "b2", "g2", "a3"])
def test_polytope_vertices_match_numpy_orbit(name):
    g = bundled_graph(name)
    m = [list(r) for r in g.m]
    B = gram(m)
    n = len(m)
    o = np.linalg.solve(B, np.ones(n))  # <o, alpha_s> = 1 for every simple root
    expected = {round_vec(M @ o) for M, _ in group_elements(m).values()}
    table = enumerate_roots(g)
    poly = build_polytope(table, tuple(range(n)))
    got = {round_vec([float(x) for x in v]) for v in poly.vertices}
    assert got == expected and len(poly.vertices) == len(expected)
    for i in range(n):
        assert round_vec([float(x) for x in poly.base_point]) == round_vec(o)
        assert abs(float(table.pair(poly.dual_basis[i], table[i].coeffs)) - 1) < 1e-9


def test_polytope_of_non_spherical_set_refused():
    t = enumerate_roots(bundled_graph("a1tilde"), 6)
    with pytest.raises(NotSpherical):
        build_polytope(t, (0, 1))


def test_sign_flip_orthogonal_pair():
    t = enumerate_roots(bundled_graph("a1xa1"))
    cert = sign_flip_polytope_check(t, (0, 1), tuple(sorted((t.negate(0), 1))))
    assert cert.passed and cert.vertices_equal and cert.orthogonal and cert.product_decomposition
    assert cert.flipped == (0,) and cert.common == (1,)
    assert {e["x_face"]["root"] for e in cert.reversed_edges} == {0}
    assert {e["x_face"]["root"] for e in cert.kept_edges} == {1}
    assert len(cert.reversed_edges) == 2 and len(cert.kept_edges) == 2
    assert cert.relabel_formula_matches


def test_sign_flip_whole_set_in_b2():
    t = enumerate_roots(bundled_graph("b2"))
    cert = sign_flip_polytope_check(t, (0, 1), tuple(sorted(t.negate(r) for r in (0, 1))))
    assert cert.passed and cert.kept_edges == [] and len(cert.reversed_edges) == 8


def test_sign_flip_premises():
    a2 = enumerate_roots(bundled_graph("a2"))
    with pytest.raises(PremiseViolated):
        sign_flip_polytope_check(a2, (0, 1), (2, 1))  # {-alpha_s, alpha_t} is not AP
    with pytest.raises(PremiseViolated):
        sign_flip_polytope_check(a2, (0, 1), (2, 4))  # different reflections


@pytest.mark.parametrize("name", ["a2", "b2", "g2", "a1xa1", "a3"])
def test_transport_check(name):
    table = enumerate_roots(bundled_graph(name))
    for X in spherical_ap_sets(table):
        cert = hat_polytope_transport_check(table, X)
        assert cert.passed and cert.bijective and not cert.mismatches
        n = cert.vertices
        assert cert.pairs_checked == n * (n - 1) // 2
