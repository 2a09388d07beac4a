from itertools import permutations
from math import comb, factorial, prod

import pytest

from coxcell.beer_partitions import (
    DecoratedFace,
    OrderedPartition,
    all_class_labels,
    all_ordered_partitions,
    bardakov_presentation,
    build_omega_n,
    canonical_representative,
    class_label,
    compose,
    crosscheck_with_general,
    inverse,
    is_min_coset_rep,
    left_coset,
    pair_equivalent,
    partition_lemma_checks,
    partition_of_coset,
    perm_length,
    pi1_matches_bardakov,
    roots_to_class,
    stabilizer,
    transposition,
)
from coxcell.complexes import f_vector


def lah(n: int, k: int) -> int:
    """Ways to split n labelled points into k nonempty linearly ordered lists."""
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def fubini(n: int) -> int:
    """Number of ordered set partitions of n points, by the standard recurrence."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


# --------------------------------------------------------------- permutations and partitions
def test_permutation_conventions():
    s1 = transposition(3, 1)
    s2 = transposition(3, 2)
    assert s1 == (2, 1, 3) and s2 == (1, 3, 2)
    w = compose(s1, s2)  # s1 after s2
    assert w == tuple(s1[s2[i] - 1] for i in range(3))
    assert compose(w, inverse(w)) == (1, 2, 3)
    assert perm_length((3, 2, 1)) == 3 and perm_length((1, 2, 3)) == 0


def test_ordered_partition_counts():
    for n in range(1, 5):
        assert len(all_ordered_partitions(n)) == fubini(n)


def test_ordered_partition_validation():
    with pytest.raises(ValueError):
        OrderedPartition(((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        OrderedPartition(((1,), ()))
    assert OrderedPartition(((2, 1), (3,))).blocks == ((1, 2), (3,))


def test_partition_of_coset_examples():
    assert partition_of_coset((1, 2, 3), set()).blocks == ((1,), (2,), (3,))
    assert partition_of_coset((1, 2, 3), {1, 2}).blocks == ((1, 2, 3),)
    assert partition_of_coset((2, 1, 3), {1}).blocks == ((1, 2), (3,))
    assert partition_of_coset((3, 1, 2), {2}).blocks == ((3,), (1, 2))
    with pytest.raises(ValueError):
        partition_of_coset((1,), set())


def test_partition_constant_on_cosets():
    n = 4
    for X in ({1}, {2, 3}, {1, 3}):
        for u in permutations(range(1, n + 1)):
            P = partition_of_coset(u, X)
            for v in left_coset(u, X):
                assert partition_of_coset(v, X) == P
            reps = [v for v in left_coset(u, X) if is_min_coset_rep(v, X)]
            assert len(reps) == 1


def test_refinement_order():
    P = OrderedPartition(((1,), (2,), (3,)))
    Q = OrderedPartition(((1, 2), (3,)))
    R = OrderedPartition(((2,), (1,), (3,)))
    top = OrderedPartition(((1, 2, 3),))
    assert P.refines(Q) and R.refines(Q) and Q.refines(top) and P.refines(P)
    assert not Q.refines(P)
    assert not OrderedPartition(((3,), (1, 2))).refines(Q)
    # refinements of a single block of size k: all ordered partitions of it
    assert len(list(top.refinements())) == fubini(3)
    assert sum(1 for _ in Q.refinements()) == fubini(2) * fubini(1)


def test_action_and_stabilizer():
    P = OrderedPartition(((1, 3), (2,), (4,)))
    assert P.act((2, 1, 3, 4)).blocks == ((2, 3), (1,), (4,))
    for blocks in (((1, 3), (2,), (4,)), ((1, 2, 3), (4,)), ((1, 2), (3, 4))):
        Q = OrderedPartition(blocks)
        assert len(stabilizer(Q)) == prod(factorial(len(b)) for b in blocks)
        assert all(Q.act(v) == Q for v in stabilizer(Q))


# --------------------------------------------------------------- decorated faces and classes
def _classes_by_definition(n):
    faces = [DecoratedFace(P, w) for P in all_ordered_partitions(n) for w in permutations(range(1, n + 1))]
    reps: list[DecoratedFace] = []
    for f in faces:
        if not any(pair_equivalent(f, r) for r in reps):
            reps.append(f)
    return faces, reps


def test_class_labels_agree_with_the_relation():
    faces, reps = _classes_by_definition(3)
    assert len(reps) == sum(lah(3, k) for k in range(1, 4))
    for a in faces[::3]:
        for b in faces[::2]:
            same = class_label(a.partition, a.w) == class_label(b.partition, b.w)
            assert same == pair_equivalent(a, b)


def test_class_examples():
    assert class_label(OrderedPartition(((1, 2), (3,))), (2, 1, 3)) == ((2, 1),)
    assert class_label(OrderedPartition(((3,), (1, 2))), (1, 2, 3)) == ((1, 2),)
    rep = canonical_representative(((1, 3),), 3)
    assert rep.partition.blocks == ((1, 3), (2,)) and rep.w == (1, 2, 3)
    rep = canonical_representative(((3, 1),), 3)
    assert rep.w == (2, 3, 1)  # the least w with w(3) < w(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_canonical_representative_is_least(n):
    for L in all_class_labels(n):
        rep = canonical_representative(L, n)
        assert class_label(rep.partition, rep.w) == L
        blocks = rep.partition.blocks
        assert list(blocks) == sorted(blocks, key=min)
        better = [w for w in permutations(range(1, n + 1)) if w < rep.w and class_label(rep.partition, w) == L]
        assert not better


# --------------------------------------------------------------- the complex
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_omega_n_f_vector_is_lah(n):
    cx = build_omega_n(n, check=n < 5)
    expected = [lah(n, n - k) for k in range(n)]
    assert f_vector(cx)[:n] == expected
    assert sum(f_vector(cx)) == len(all_class_labels(n))


def test_omega_n_skeleton_and_coherence():
    cx = build_omega_n(4, max_dim=2)
    assert f_vector(cx) == [1, 12, 36, 0]
    assert cx.coherence.passed and cx.coherence.checked > 0
    assert build_omega_n(3).coherence.passed


def test_omega_3_boundary_word():
    cx = build_omega_n(3)
    cell = next(c for c in cx.cells_of_dim(2) if c.label == ((1, 2, 3),))
    word = [(cx.name(e), s) for e, s in cx.boundary[cell]]
    assert word == [("z12", 1), ("z13", 1), ("z23", 1), ("z12", -1), ("z13", -1), ("z23", -1)]


def test_square_cells_are_commutators():
    cx = build_omega_n(4, max_dim=2)
    for c in cx.cells_of_dim(2):
        word = cx.boundary[c]
        if len(c.label) == 2:
            assert len(word) == 4
            a, b = word[0][0], word[1][0]
            assert [e for e, _ in word] == [a, b, a, b]
            assert [s for _, s in word] == [word[0][1], word[1][1], -word[0][1], -word[1][1]]
        else:
            assert len(word) == 6


def test_n_out_of_range():
    with pytest.raises(ValueError):
        build_omega_n(1)
    with pytest.raises(ValueError):
        build_omega_n(6)


# --------------------------------------------------------------- comparison with the general builder
def test_roots_to_class():
    assert roots_to_class([(1, 2), (2, 3)]) == ((1, 2, 3),)
    assert roots_to_class([(3, 1), (2, 4)]) == ((3, 1), (2, 4))
    assert roots_to_class([]) == ()


@pytest.mark.parametrize("n,cells", [(2, 3), (3, 13), (4, 73)])
def test_crosscheck(n, cells):
    cert = crosscheck_with_general(n)
    assert cert.passed, cert.to_json()["mismatches"]
    assert cert.checked == cells == len(cert.bijection)


def test_crosscheck_two_skeleton():
    cert = crosscheck_with_general(4, max_dim=2)
    assert cert.passed and cert.checked == 49


def test_bardakov_presentation_shape():
    for n in (2, 3, 4):
        p = bardakov_presentation(n)
        disjoint = n * (n - 1) * (n - 2) * (n - 3) // 2  # unordered pairs of disjoint ordered pairs
        assert len(p.generators) == n * (n - 1)
        assert len(p.relations) == n * (n - 1) * (n - 2) + disjoint


@pytest.mark.parametrize("n,gens,rels", [(2, 2, 0), (3, 6, 6), (4, 12, 36)])
def test_pi1_matches_bardakov(n, gens, rels):
    ok, info = pi1_matches_bardakov(n)
    assert ok, info
    assert info["generators"] == gens and info["relations"] == rels
    assert info["missing"] == [] and info["extra"] == []


@pytest.mark.parametrize("n", [3, 4])
def test_partition_lemmas(n):
    reports = partition_lemma_checks(n)
    assert len(reports) == 7
    for r in reports:
        assert r.passed, r.to_json()
        assert r.checked > 0
