import json
import warnings

import pytest

from coxcell import bundled_graph
from coxcell.complexes import (
    BuildContext,
    build_beer,
    build_sigma,
    build_theta,
    coherence_check,
    deck_quotient_check,
    euler_characteristic,
    f_vector,
    normalize_relator,
    pi1_presentation,
    relation_set,
    verify_iso_g,
)
from coxcell.errors import TruncationWarning

from oracles import group_elements, spherical_ap_counts

GRAPHS = ["a1", "a2", "b2", "g2", "i2_5", "a1xa1", "a3"]


def _padded(counts):
    return counts + [0] * (3 - len(counts)) if len(counts) < 3 else counts


@pytest.fixture(scope="module")
def built():
    out = {}
    for name in GRAPHS:
        ctx = BuildContext(bundled_graph(name))
        out[name] = (
            ctx,
            build_sigma(ctx),
            build_beer(ctx),
            build_theta(ctx, "sigma"),
            build_theta(ctx, "omega"),
        )
    return out


@pytest.mark.parametrize("name", GRAPHS)
def test_f_vectors_against_oracle(built, name):
    m = [list(r) for r in bundled_graph(name).m]
    base = _padded(spherical_ap_counts(m))
    order = len(group_elements(m))
    _, sigma, omega, ts, to = built[name]
    assert f_vector(sigma) == base
    assert f_vector(omega) == base
    assert f_vector(ts) == [order * c for c in base]
    assert f_vector(to) == [order * c for c in base]
    assert euler_characteristic(ts) == order * euler_characteristic(omega)


def test_euler_characteristics(built):
    assert euler_characteristic(built["a1"][2]) == -1
    assert euler_characteristic(built["a2"][2]) == 1
    assert euler_characteristic(built["a2"][4]) == 6
    assert euler_characteristic(built["a3"][2]) == 1


def test_two_skeleton_counts():
    ctx = BuildContext(bundled_graph("a3"))
    # the f-vector keeps the full dimension, with nothing above the 2-skeleton
    assert f_vector(build_beer(ctx, max_dim=2)) == [1, 12, 36, 0]
    assert f_vector(build_theta(ctx, "omega", max_dim=2)) == [24, 288, 864, 0]


@pytest.mark.parametrize("name", GRAPHS)
def test_coherence(built, name):
    for cx in built[name][1:]:
        rep = coherence_check(cx)
        assert rep.passed


@pytest.mark.parametrize("name", GRAPHS)
def test_boundary_words_have_polygon_length(built, name):
    ctx, sigma, omega, _, _ = built[name]
    for cx in (sigma, omega):
        for c in cx.cells_of_dim(2):
            word = cx.boundary[c]
            assert len(word) % 2 == 0 and len(word) >= 4
            for e, s in word:
                assert e.dim == 1 and s in (1, -1)


@pytest.mark.parametrize("name", GRAPHS)
def test_covers_isomorphic_and_thread_independent(built, name):
    _, _, _, ts, to = built[name]
    one = verify_iso_g(ts, to, threads=1)
    four = verify_iso_g(ts, to, threads=4)
    assert one.passed and not one.failures
    assert json.dumps(one.to_json(), sort_keys=True) == json.dumps(four.to_json(), sort_keys=True)


@pytest.mark.parametrize("name", GRAPHS)
def test_deck_quotient(built, name):
    _, sigma, omega, ts, to = built[name]
    for theta, base in ((to, omega), (ts, sigma)):
        cert = deck_quotient_check(theta, base)
        assert cert.passed
        assert cert.orbit_counts == cert.base_counts == f_vector(base)


def test_build_is_byte_deterministic():
    a = build_beer(BuildContext(bundled_graph("b2")))
    b = build_beer(BuildContext(bundled_graph("b2")))
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)
    c = build_theta(BuildContext(bundled_graph("a2")), "sigma")
    d = build_theta(BuildContext(bundled_graph("a2")), "sigma")
    assert json.dumps(c.to_json(), sort_keys=True) == json.dumps(d.to_json(), sort_keys=True)


def test_pi1_of_beer_a2():
    p = pi1_presentation(build_beer(BuildContext(bundled_graph("a2")), max_dim=2))
    assert len(p.generators) == 6 and len(p.relations) == 6
    for rel in p.relations:
        assert len(rel) == 6
        letters = [g for g, _ in rel]
        # z_a z_b z_c z_a^-1 z_b^-1 z_c^-1 on three distinct generators
        assert len(set(letters)) == 3 and [s for _, s in rel] == [1, 1, 1, -1, -1, -1]
        assert letters[:3] == letters[3:]


def test_pi1_of_sigma_is_artin_like():
    p = pi1_presentation(build_sigma(BuildContext(bundled_graph("a1xa1")), max_dim=2))
    assert len(p.generators) == 4 and len(p.relations) == 4
    for rel in p.relations:
        a, b = rel[0][0], rel[1][0]
        assert normalize_relator(rel) == normalize_relator([(a, 1), (b, 1), (a, -1), (b, -1)])


def test_pi1_of_a1_is_free():
    p = pi1_presentation(build_beer(BuildContext(bundled_graph("a1"))))
    assert len(p.generators) == 2 and list(p.relations) == []


def test_normalize_relator_invariance():
    w = [("a", 1), ("b", 1), ("a", 1), ("b", -1), ("a", -1), ("b", -1)]
    n = normalize_relator(w)
    for k in range(len(w)):
        rot = w[k:] + w[:k]
        assert normalize_relator(rot) == n
        inv = [(g, -s) for g, s in reversed(rot)]
        assert normalize_relator(inv) == n
    assert normalize_relator([("a", 1), ("a", -1), ("b", 1)]) == normalize_relator([("b", 1)])


def test_relation_set_rename():
    p = pi1_presentation(build_sigma(BuildContext(bundled_graph("a2")), max_dim=2))
    plain = relation_set(p)
    renamed = relation_set(p, lambda g: g.upper())
    assert len(plain) == len(renamed) == 6
    assert {normalize_relator([(g.upper(), s) for g, s in r]) for r in plain} == renamed


def test_truncated_affine_build_warns():
    ctx = BuildContext(bundled_graph("a1tilde"), 10, 10)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        omega = build_beer(ctx)
        theta = build_theta(ctx, "omega")
    assert omega.truncated and theta.truncated and ctx.truncated
    assert f_vector(omega) == [1, 44, 0]
    assert any(issubclass(w.category, TruncationWarning) for w in caught)
    assert coherence_check(omega).passed and coherence_check(theta).passed
