"""Ordered set partitions, the permutohedron of the symmetric group and the complex Omega_n.

Permutations are one-line tuples: ``w[i - 1] == w(i)``.  The simple transposition
``s_i`` swaps ``i`` and ``i + 1``; a subset of simple transpositions is given by
the set of indices ``i`` in ``1..n-1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterable, Iterator, Sequence

from .complexes import (
    OMEGA_N,
    AttachingRecord,
    Cell,
    CellComplex,
    CoherenceReport,
    Presentation,
    build_beer,
    normalize_relator,
    pi1_presentation,
    relation_set,
)
from .coxeter_core import CoxeterGraph
from .errors import InternalInvariantViolation, MismatchReport
from .root_system import RootTable

Perm = tuple[int, ...]
Block = tuple[int, ...]

MAX_N = 5


# --------------------------------------------------------------------------- permutations
def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """``a o b``: first ``b``, then ``a``."""
    return tuple(a[x - 1] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        out[x - 1] = i
    return tuple(out)


def transposition(n: int, i: int) -> Perm:
    """The simple transposition ``s_i`` of ``{1..n}``."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def perm_length(w: Perm) -> int:
    """Coxeter length, i.e. the number of inversions."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def all_perms(n: int) -> list[Perm]:
    return list(permutations(range(1, n + 1)))


def all_subsets(n: int) -> list[frozenset[int]]:
    """Every subset of the simple transposition indices ``1..n-1``."""
    idx = range(1, n)
    return [frozenset(i for i in idx if mask >> (i - 1) & 1) for mask in range(1 << (n - 1))]


def parabolic(n: int, X: Iterable[int]) -> frozenset[Perm]:
    """The standard parabolic subgroup generated by ``s_i`` for ``i`` in ``X`` (closure under generators)."""
    gens = [transposition(n, i) for i in X]
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                x = compose(w, s)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return frozenset(seen)


def left_coset(u: Perm, X: Iterable[int]) -> frozenset[Perm]:
    return frozenset(compose(u, x) for x in parabolic(len(u), X))


def is_min_coset_rep(u: Perm, X: Iterable[int]) -> bool:
    """``u`` has no right descent in ``X``, i.e. ``u(i) < u(i+1)`` for every ``i`` in ``X``."""
    return all(u[i - 1] < u[i] for i in X)


# --------------------------------------------------------------------------- ordered partitions
@dataclass(frozen=True)
class OrderedPartition:
    """An ordered tuple of disjoint nonempty blocks covering ``{1..n}``; each block is stored sorted."""

    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise ValueError("ordered partition blocks must be nonempty")
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks {blocks} are not a partition of 1..{len(flat)}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_set(self) -> frozenset[Block]:
        return frozenset(self.blocks)

    def refines(self, other: "OrderedPartition") -> bool:
        """``self <=_pa other``: the blocks of ``other`` are unions of consecutive blocks of ``self``, in order."""
        if self.n != other.n:
            return False
        it = iter(self.blocks)
        for big in other.blocks:
            need = set(big)
            while need:
                b = next(it, None)
                if b is None or not set(b) <= need:
                    return False
                need -= set(b)
        return next(it, None) is None

    def act(self, v: Perm) -> "OrderedPartition":
        """Left action ``v . P``: apply ``v`` to every block."""
        return OrderedPartition(tuple(tuple(v[x - 1] for x in b) for b in self.blocks))

    def refinements(self) -> Iterator["OrderedPartition"]:
        """All ordered partitions refining this one (itself included)."""
        per_block = [list(ordered_set_partitions(b)) for b in self.blocks]

        def rec(k: int, acc: tuple[Block, ...]) -> Iterator[OrderedPartition]:
            if k == len(per_block):
                yield OrderedPartition(acc)
                return
            for choice in per_block[k]:
                yield from rec(k + 1, acc + choice)

        yield from rec(0, ())

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def ordered_set_partitions(items: Sequence[int]) -> Iterator[tuple[Block, ...]]:
    """Every ordered partition of ``items`` into nonempty blocks."""
    items = tuple(items)
    if not items:
        yield ()
        return
    n = len(items)
    for mask in range(1, 1 << n):
        first = tuple(items[i] for i in range(n) if mask >> i & 1)
        rest = tuple(items[i] for i in range(n) if not mask >> i & 1)
        for tail in ordered_set_partitions(rest):
            yield (first,) + tail


def all_ordered_partitions(n: int) -> list[OrderedPartition]:
    return [OrderedPartition(p) for p in ordered_set_partitions(tuple(range(1, n + 1)))]


def partition_of_coset(u: Perm, X: Iterable[int], n: int | None = None) -> OrderedPartition:
    """Cut ``1..n`` after every ``i`` not in ``X`` and push the intervals forward by ``u``."""
    n = len(u) if n is None else n
    if n < 2 or len(u) != n:
        raise ValueError("need a permutation of 1..n with n >= 2")
    X = set(X)
    blocks, cur = [], []
    for i in range(1, n + 1):
        cur.append(u[i - 1])
        if i == n or i not in X:
            blocks.append(tuple(cur))
            cur = []
    return OrderedPartition(tuple(blocks))


def stabilizer(P: OrderedPartition) -> frozenset[Perm]:
    """Permutations preserving every block setwise (brute force over the symmetric group)."""
    blocks = [set(b) for b in P.blocks]
    return frozenset(
        w for w in all_perms(P.n) if all({w[x - 1] for x in b} == b for b in blocks)
    )


# --------------------------------------------------------------------------- decorated faces
@dataclass(frozen=True)
class DecoratedFace:
    partition: OrderedPartition
    w: Perm


def pair_equivalent(a: DecoratedFace, b: DecoratedFace) -> bool:
    """Same blocks up to order, and ``w`` and ``w'`` order every block the same way."""
    if a.partition.n != b.partition.n:
        raise ValueError("decorated faces over different n")
    if len(a.partition) != len(b.partition) or a.partition.block_set() != b.partition.block_set():
        return False
    for blk in a.partition.blocks:
        for i in blk:
            for j in blk:
                if (a.w[i - 1] < a.w[j - 1]) != (b.w[i - 1] < b.w[j - 1]):
                    return False
    return True


def class_label(P: OrderedPartition, w: Perm) -> tuple[Block, ...]:
    """Label of the class of ``(P, w)``: non-singleton blocks listed in increasing ``w`` order, sorted by least element."""
    out = [tuple(sorted(b, key=lambda x: w[x - 1])) for b in P.blocks if len(b) > 1]
    return tuple(sorted(out, key=min))


def class_partition(label: Sequence[Block], n: int) -> OrderedPartition:
    """Blocks of a class label, singletons restored, sorted by least element."""
    used = {x for b in label for x in b}
    blocks = [tuple(sorted(b)) for b in label] + [(x,) for x in range(1, n + 1) if x not in used]
    return OrderedPartition(tuple(sorted(blocks, key=min)))


@lru_cache(maxsize=None)
def canonical_representative(label: tuple[Block, ...], n: int) -> DecoratedFace:
    """Blocks sorted by least element together with the lexicographically least compatible ``w``."""
    P = class_partition(label, n)
    for w in all_perms(n):  # itertools yields lexicographic order
        if class_label(P, w) == label:
            return DecoratedFace(P, w)
    raise InternalInvariantViolation(f"no permutation realises class {label}")


def all_class_labels(n: int) -> list[tuple[Block, ...]]:
    perms = all_perms(n)
    labels = {class_label(P, w) for P in all_ordered_partitions(n) for w in perms}
    return sorted(labels, key=lambda L: (class_dim(L), L))


def class_dim(label: Sequence[Block]) -> int:
    return sum(len(b) - 1 for b in label)


# --------------------------------------------------------------------------- Omega_n
def type_a_graph(n: int) -> CoxeterGraph:
    """The Coxeter graph of the symmetric group on ``n`` letters, generators ``s1 .. s(n-1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    r = n - 1
    m = tuple(tuple(1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(r)) for i in range(r))
    return CoxeterGraph(tuple(f"s{i + 1}" for i in range(r)), m)


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be between 2 and {MAX_N}")


def build_omega_n(n: int, max_dim: int | None = None, check: bool = True) -> CellComplex:
    """Classes of decorated faces, with faces attached through refinement."""
    _check_n(n)
    labels = [L for L in all_class_labels(n) if max_dim is None or class_dim(L) <= max_dim]
    cells = {L: Cell(class_dim(L), L) for L in labels}
    records: dict[Cell, tuple[AttachingRecord, ...]] = {}
    for L, c in cells.items():
        if c.dim == 0:
            continue
        rep = canonical_representative(L, n)
        recs = []
        for Q in rep.partition.refinements():
            if Q == rep.partition:
                continue
            t = class_label(Q, rep.w)
            tgt = cells.get(t, Cell(class_dim(t), t))
            recs.append(AttachingRecord(Q.blocks, tgt, "refine", (("w", rep.w),), t in cells))
        records[c] = tuple(recs)
    vertex = cells[()]
    endpoints = {c: (vertex, vertex) for c in cells.values() if c.dim == 1}
    boundary = {c: _omega_n_boundary(c.label, n, cells) for c in cells.values() if c.dim == 2}
    full = n - 1
    cx = CellComplex(OMEGA_N, cells.values(), records, boundary, endpoints, False, type_a_graph(n), None, full)
    if check:
        cx.coherence = omega_n_coherence(cx, n)
        if not cx.coherence.passed:
            raise InternalInvariantViolation("refinement coherence failed: " + cx.coherence.failures[0])
    return cx


def _omega_n_boundary(label: tuple[Block, ...], n: int, cells: dict[tuple[Block, ...], Cell]) -> tuple[tuple[Cell, int], ...]:
    """Perimeter word from the vertex listing every block in ``w`` order.

    A move swaps two adjacent letters of the same block; it reads the edge of
    that pair with sign +1 when the ``w``-smaller letter stood first.
    """
    rep = canonical_representative(label, n)
    w = rep.w
    seq = [x for b in rep.partition.blocks for x in sorted(b, key=lambda y: w[y - 1])]
    block_of = {x: k for k, b in enumerate(rep.partition.blocks) for x in b}
    moves = [i for i in range(n - 1) if block_of[seq[i]] == block_of[seq[i + 1]]]
    if len(moves) != 2:
        raise InternalInvariantViolation(f"class {label} is not two-dimensional")
    m = 3 if moves[1] == moves[0] + 1 else 2

    def path(first: int, second: int) -> list[tuple[Cell, int]]:
        cur = list(seq)
        out = []
        for k in range(m):
            i = first if k % 2 == 0 else second
            a, b = cur[i], cur[i + 1]
            lo, hi = (a, b) if w[a - 1] < w[b - 1] else (b, a)
            out.append((cells[((lo, hi),)], 1 if lo == a else -1))
            cur[i], cur[i + 1] = b, a
        return out

    back = path(moves[1], moves[0])
    return tuple(path(moves[0], moves[1]) + [(e, -s) for e, s in reversed(back)])


def omega_n_coherence(cx: CellComplex, n: int) -> CoherenceReport:
    """Faces of faces: a refinement of a face, carried back into the cell, lands on the same class."""
    checked = 0
    failures: list[str] = []
    for c in cx.cells:
        if c.dim < 2:
            continue
        rep = canonical_representative(c.label, n)
        for rec in cx.records[c]:
            t = rec.target
            if not rec.present or t is None or t.dim == 0:
                continue
            Q = OrderedPartition(rec.face)
            trep = canonical_representative(t.label, n)
            pos = {b: k for k, b in enumerate(Q.blocks)}
            for rec2 in cx.records.get(t, ()):
                checked += 1
                # regroup the refinement of the target's blocks in the order of Q's blocks
                groups: dict[int, list[Block]] = {}
                for small in rec2.face:
                    owner = next(b for b in trep.partition.blocks if set(small) <= set(b))
                    groups.setdefault(pos[owner], []).append(small)
                Q2 = OrderedPartition(tuple(b for k in sorted(groups) for b in groups[k]))
                if not Q2.refines(Q) or class_label(Q2, rep.w) != rec2.target.label:  # type: ignore[union-attr]
                    failures.append(f"{cx.name(c)}: face {rec2.face} of {cx.name(t)} disagrees")
    return CoherenceReport(checked, tuple(failures))


# --------------------------------------------------------------------------- roots and Bardakov
def root_pair(table: RootTable, rid: int) -> tuple[int, int]:
    """The pair ``(i, j)`` with root ``e_i - e_j``; coordinates ``x_k = c_k - c_(k-1)`` from simple-root coefficients."""
    coeffs = [_as_int(table.group, x) for x in table[rid].coeffs]
    c = [0] + coeffs + [0]
    x = [c[k] - c[k - 1] for k in range(1, len(c))]
    plus = [k + 1 for k, v in enumerate(x) if v == 1]
    minus = [k + 1 for k, v in enumerate(x) if v == -1]
    if len(plus) != 1 or len(minus) != 1 or sum(abs(v) for v in x) != 2:
        raise InternalInvariantViolation(f"root {rid} is not of the form e_i - e_j")
    return plus[0], minus[0]


def _as_int(group: Any, x: Any) -> int:
    if isinstance(x, int):
        return x
    return int(round(group.arith.to_float(x)))


def root_pair_dictionary(table: RootTable) -> dict[int, tuple[int, int]]:
    return {r.id: root_pair(table, r.id) for r in table.roots}


def bardakov_presentation(n: int) -> Presentation:
    """Generators ``z_ij`` (i != j); the triple relations and the commutation of disjoint pairs."""
    if n < 2:
        raise ValueError("n must be at least 2")
    pts = range(1, n + 1)
    gens = tuple(f"z{i}{j}" for i in pts for j in pts if i != j)
    rels = []
    for i, j, k in permutations(pts, 3):
        a, b, c = f"z{i}{j}", f"z{i}{k}", f"z{j}{k}"
        rels.append(((a, 1), (b, 1), (c, 1), (a, -1), (b, -1), (c, -1)))
    seen = set()
    for i, j, k, l in permutations(pts, 4):
        key = frozenset({(i, j), (k, l)})
        if key in seen:
            continue
        seen.add(key)
        a, b = f"z{i}{j}", f"z{k}{l}"
        rels.append(((a, 1), (b, 1), (a, -1), (b, -1)))
    return Presentation(gens, tuple(rels))


def pi1_matches_bardakov(n: int, omega: CellComplex | None = None) -> tuple[bool, dict[str, Any]]:
    """Compare the fundamental group presentation of the general complex with the pure virtual braid presentation."""
    _check_n(n)
    omega = omega or build_beer(type_a_graph(n), max_dim=2)
    table = omega.context.table  # type: ignore[union-attr]
    names = {f"z{rid}": "z{}{}".format(*ij) for rid, ij in root_pair_dictionary(table).items()}
    p = pi1_presentation(omega)
    b = bardakov_presentation(n)
    got = relation_set(p, names.__getitem__)
    want = relation_set(b)
    gens_ok = sorted(names[g] for g in p.generators) == sorted(b.generators)
    return gens_ok and got == want, {
        "generators": len(p.generators),
        "relations": len(got),
        "missing": sorted(str(r) for r in want - got),
        "extra": sorted(str(r) for r in got - want),
    }


# --------------------------------------------------------------------------- cross-check
@dataclass
class CrosscheckCertificate:
    passed: bool
    n: int
    checked: int
    bijection: dict[str, str]
    mismatches: list[MismatchReport] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "n": self.n,
            "checked": self.checked,
            "bijection": dict(sorted(self.bijection.items())),
            "mismatches": [{"message": m.message, "details": m.details} for m in self.mismatches],
        }


def roots_to_class(pairs: Iterable[tuple[int, int]]) -> tuple[Block, ...]:
    """Chain the arrows ``i -> j`` of roots ``e_i - e_j`` into ordered blocks."""
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    for i, j in pairs:
        if i in succ or j in pred:
            raise InternalInvariantViolation("root set is not a union of chains")
        succ[i], pred[j] = j, i
    blocks = []
    for start in sorted(succ):
        if start in pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        blocks.append(tuple(chain))
    if sum(len(b) - 1 for b in blocks) != len(succ):
        raise InternalInvariantViolation("root set contains a cycle")
    return tuple(sorted(blocks, key=min))


def crosscheck_with_general(n: int, max_dim: int | None = None, omega: CellComplex | None = None) -> CrosscheckCertificate:
    """Match every cell of the generalised complex for the symmetric group with a class of Omega_n.

    Checks dimensions, endpoints, 2-cell words up to rotation and inversion, and
    the multiset of classes reached by the faces of each cell.
    """
    _check_n(n)
    base = build_omega_n(n, max_dim)
    omega = omega or build_beer(type_a_graph(n), max_dim=max_dim)
    table = omega.context.table  # type: ignore[union-attr]
    pairs = root_pair_dictionary(table)
    mismatches: list[MismatchReport] = []

    def to_class(c: Cell | None) -> tuple[Block, ...] | None:
        return None if c is None else roots_to_class(pairs[r] for r in c.label)

    bij: dict[str, str] = {}
    seen: set[tuple[Block, ...]] = set()
    checked = 0
    for c in omega.cells:
        checked += 1
        L = to_class(c)
        assert L is not None
        tgt = Cell(c.dim, L)
        if tgt not in base:
            mismatches.append(MismatchReport("no matching class", {"cell": omega.name(c), "class": [list(b) for b in L]}))
            continue
        if L in seen:
            mismatches.append(MismatchReport("two cells map to one class", {"cell": omega.name(c)}))
        seen.add(L)
        bij[omega.name(c)] = base.name(tgt)
        if c.dim == 1:
            s, t = omega.endpoints[c]
            if (Cell(0, to_class(s)), Cell(0, to_class(t))) != base.endpoints[tgt]:  # type: ignore[arg-type]
                mismatches.append(MismatchReport("endpoints differ", {"cell": omega.name(c)}))
        if c.dim == 2:
            ours = normalize_relator([(base.name(Cell(1, to_class(e))), s) for e, s in omega.boundary[c]])  # type: ignore[arg-type]
            theirs = normalize_relator([(base.name(e), s) for e, s in base.boundary[tgt]])
            if ours != theirs:
                mismatches.append(MismatchReport("boundary words differ", {"cell": omega.name(c)}))
        if c.dim >= 1:
            got = Counter(to_class(r.target) for r in omega.records[c])
            want = Counter(r.target.label for r in base.records[tgt] if r.target is not None)
            if got != want:
                mismatches.append(MismatchReport("face targets differ", {"cell": omega.name(c)}))
    if len(seen) != len(base.cells):
        mismatches.append(MismatchReport("cell counts differ", {"general": len(omega.cells), "partitions": len(base.cells)}))
    return CrosscheckCertificate(not mismatches, n, checked, bij, mismatches)


# --------------------------------------------------------------------------- lemma checks
@dataclass
class LemmaReport:
    name: str
    n: int
    checked: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "n": self.n, "checked": self.checked, "pass": self.passed, "failures": self.failures[:20]}


def _faces(n: int) -> list[tuple[Perm, frozenset[int]]]:
    return [(u, X) for X in all_subsets(n) for u in all_perms(n)]


def check_stabilizers(n: int) -> LemmaReport:
    """The stabiliser of P(u, X) is the conjugate u W_X u^-1."""
    fails = []
    faces = _faces(n)
    for u, X in faces:
        conj = frozenset(compose(compose(u, x), inverse(u)) for x in parabolic(n, X))
        if stabilizer(partition_of_coset(u, X)) != conj:
            fails.append(f"u={u} X={sorted(X)}")
    return LemmaReport("stabilizer", n, len(faces), fails)


def check_coset_bijection(n: int) -> LemmaReport:
    """P(u, X) = P(v, Y) exactly when u W_X = v W_Y."""
    faces = _faces(n)
    parts = [partition_of_coset(u, X) for u, X in faces]
    cosets = [left_coset(u, X) for u, X in faces]
    fails = []
    checked = 0
    for a in range(len(faces)):
        for b in range(len(faces)):
            checked += 1
            if (parts[a] == parts[b]) != (cosets[a] == cosets[b]):
                fails.append(f"{faces[a]} vs {faces[b]}")
    return LemmaReport("coset_bijection", n, checked, fails)


def check_refinement_order(n: int) -> LemmaReport:
    """P(u, X) refines P(v, Y) exactly when u W_X is contained in v W_Y."""
    reps = {}
    for u, X in _faces(n):
        reps.setdefault(left_coset(u, X), (u, X))
    items = [(partition_of_coset(u, X), C) for C, (u, X) in reps.items()]
    fails = []
    checked = 0
    for P, C in items:
        for Q, D in items:
            checked += 1
            if P.refines(Q) != (C <= D):
                fails.append(f"{P.blocks} vs {Q.blocks}")
    return LemmaReport("refinement_order", n, checked, fails)


def check_refinement_compatibility(n: int) -> LemmaReport:
    """Equivalent decorated faces stay equivalent after matching refinements.

    The relation is an equivalence, so the permutations are first split into
    classes for ``(P, .)`` against ``(Q, .)``; each class is then compared against
    its first member, which covers every equivalent pair ``(w, w')``.
    """
    by_blocks: dict[frozenset[Block], list[OrderedPartition]] = {}
    for P in all_ordered_partitions(n):
        by_blocks.setdefault(P.block_set(), []).append(P)
    perms = all_perms(n)
    fails = []
    checked = 0
    for group in by_blocks.values():
        for P in group:
            refs = list(P.refinements())
            for Q in group:
                classes: list[list[Perm]] = []
                for w in perms:
                    for cls in classes:
                        if pair_equivalent(DecoratedFace(P, cls[0]), DecoratedFace(Q, w)):
                            cls.append(w)
                            break
                    else:
                        classes.append([w])
                matches = [
                    (P1, OrderedPartition(order))
                    for P1 in refs
                    for order in permutations(P1.blocks)
                    if OrderedPartition(order).refines(Q)
                ]
                for P1, Q1 in matches:
                    for cls in classes:
                        checked += len(cls) ** 2
                        head = cls[0]
                        for w2 in cls:
                            if not pair_equivalent(DecoratedFace(P1, head), DecoratedFace(Q1, w2)):
                                fails.append(f"{P.blocks},{head} / {Q.blocks},{w2} via {P1.blocks}")
    return LemmaReport("refinement_compatibility", n, checked, fails)


def _minimal_equivalent_pairs(n: int) -> list[tuple[Perm, frozenset[int], Perm, frozenset[int]]]:
    """Pairs of faces with minimal representatives and equal conjugated parabolics."""
    faces = [(u, X) for u, X in _faces(n) if is_min_coset_rep(u, X)]
    conj = {
        (u, X): frozenset(compose(compose(u, x), inverse(u)) for x in parabolic(n, X)) for u, X in faces
    }
    groups: dict[frozenset[Perm], list[tuple[Perm, frozenset[int]]]] = {}
    for f in faces:
        groups.setdefault(conj[f], []).append(f)
    return [(u, X, v, Y) for g in groups.values() for u, X in g for v, Y in g]


def scaled_base_point(n: int) -> tuple[int, ...]:
    """The permutohedron base point multiplied by sqrt(2): coordinate ``j`` is ``n + 1 - 2j``."""
    return tuple(n + 1 - 2 * j for j in range(1, n + 1))


def act_on_point(w: Perm, x: Sequence[int]) -> tuple[int, ...]:
    """``w(e_j) = e_{w(j)}``: coordinate ``j`` of ``x`` moves to slot ``w(j)``."""
    out = [0] * len(x)
    for j, v in enumerate(x):
        out[w[j] - 1] = v
    return tuple(out)


def check_translation(n: int) -> LemmaReport:
    """Translating by v(o) - u(o) carries the vertices of F(u, X) onto those of F(v, Y); exact integers."""
    o = scaled_base_point(n)
    fails = []
    pairs = _minimal_equivalent_pairs(n)
    for u, X, v, Y in pairs:
        shift = [a - b for a, b in zip(act_on_point(v, o), act_on_point(u, o))]
        src = {act_on_point(compose(u, g), o) for g in parabolic(n, X)}
        dst = {act_on_point(compose(v, h), o) for h in parabolic(n, Y)}
        moved = {tuple(a + s for a, s in zip(p, shift)) for p in src}
        if moved != dst:
            fails.append(f"u={u} X={sorted(X)} v={v} Y={sorted(Y)}")
        if (partition_of_coset(u, X).block_set() != partition_of_coset(v, Y).block_set()):
            fails.append(f"equivalence via stabilisers disagrees with blocks for u={u} v={v}")
    return LemmaReport("translation", n, len(pairs), fails)


def check_double_coset(n: int) -> LemmaReport:
    """The minimal element of W_Y v^-1 u W_X conjugates X onto Y."""
    fails = []
    pairs = _minimal_equivalent_pairs(n)
    for u, X, v, Y in pairs:
        mid = compose(inverse(v), u)
        dc = {compose(compose(a, mid), b) for a in parabolic(n, Y) for b in parabolic(n, X)}
        w0 = min(dc, key=lambda w: (perm_length(w), w))
        conj = {compose(compose(w0, transposition(n, i)), inverse(w0)) for i in X}
        if conj != {transposition(n, j) for j in Y}:
            fails.append(f"u={u} X={sorted(X)} v={v} Y={sorted(Y)}")
    return LemmaReport("double_coset", n, len(pairs), fails)


def check_simple_roots(n: int) -> LemmaReport:
    """u(Pi_X) = v(Pi_Y), with the root e_i - e_(i+1) stored as the pair (i, i+1)."""
    fails = []
    pairs = _minimal_equivalent_pairs(n)
    for u, X, v, Y in pairs:
        a = {(u[i - 1], u[i]) for i in X}
        b = {(v[j - 1], v[j]) for j in Y}
        if a != b:
            fails.append(f"u={u} X={sorted(X)} v={v} Y={sorted(Y)}")
    return LemmaReport("simple_roots", n, len(pairs), fails)


def partition_lemma_checks(n: int) -> list[LemmaReport]:
    """Run every brute-force check of the ordered-partition model for one ``n``."""
    return [
        check_stabilizers(n),
        check_coset_bijection(n),
        check_refinement_order(n),
        check_refinement_compatibility(n),
        check_translation(n),
        check_double_coset(n),
        check_simple_roots(n),
    ]


__all__ = [
    "CrosscheckCertificate",
    "DecoratedFace",
    "LemmaReport",
    "OrderedPartition",
    "bardakov_presentation",
    "build_omega_n",
    "canonical_representative",
    "class_label",
    "crosscheck_with_general",
    "pair_equivalent",
    "partition_lemma_checks",
    "partition_of_coset",
    "pi1_matches_bardakov",
    "root_pair_dictionary",
    "stabilizer",
    "type_a_graph",
]
