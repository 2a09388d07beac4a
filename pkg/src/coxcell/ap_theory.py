"""Almost parabolic root sets, their induced Coxeter systems, and Coxeter polytopes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Sequence

from .coxeter_core import CoxeterGraph, CoxeterGroup, GroupElement, TypeClass, classify, determinant
from .errors import InternalInvariantViolation, NotSpherical, PremiseViolated
from .root_system import RootTable

INF = math.inf
ORDER_CAP = 1000


# --------------------------------------------------------------------------- AP sets
@dataclass(frozen=True)
class APSet:
    roots: tuple[int, ...]
    M: tuple[tuple[float, ...], ...]
    type: TypeClass = field(compare=False)
    witnesses: tuple[tuple[tuple[int, int], tuple[tuple[int, ...], int, int]], ...] = field(compare=False)

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def spherical(self) -> bool:
        return self.type.spherical

    def to_json(self) -> dict[str, Any]:
        return {
            "roots": list(self.roots),
            "M": [["inf" if x == INF else int(x) for x in row] for row in self.M],
            "type": self.type.kind,
            "witnesses": [
                {"pair": list(p), "w": list(w), "s": s, "t": t} for p, (w, s, t) in self.witnesses
            ],
        }


@dataclass(frozen=True)
class APResult:
    status: str  # "yes" | "no" | "unknown"
    apset: APSet | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.status == "yes"


def vector_rank(vectors: Sequence[Sequence[Any]], arith: Any) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    n = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < n:
        piv = next((r for r in range(rank, len(rows)) if not arith.is_zero(rows[r][col])), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if arith.is_zero(rows[r][col]):
                continue
            f = arith.div(rows[r][col], p)
            rows[r] = [arith.norm(a - f * b) for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _order_of_product(table: RootTable, a: int, b: int, spherical: bool) -> float:
    """Order of r_a r_b by iterating the action matrix up to the cap."""
    g = table.group
    if a == b:
        return 1
    P = g.multiply(table.reflection(a), table.reflection(b)).matrix
    ident = g.matrix_key(g.identity.matrix)
    cur = P
    for k in range(1, ORDER_CAP + 1):
        if g.matrix_key(cur) == ident:
            return k
        cur = g.matmul(cur, P)
    if spherical:
        raise InternalInvariantViolation(f"r_{a} r_{b} exceeds order cap {ORDER_CAP} in a finite group")
    return INF


_TYPE_CACHE: dict[tuple[tuple[float, ...], ...], TypeClass] = {}


def matrix_type(M: tuple[tuple[float, ...], ...]) -> TypeClass:
    hit = _TYPE_CACHE.get(M)
    if hit is None:
        k = len(M)
        graph = CoxeterGraph(tuple(f"r{i}" for i in range(k)), M)
        hit = classify(graph) if k else TypeClass("spherical", ())
        _TYPE_CACHE[M] = hit
    return hit


def _search_bound(table: RootTable, search_bound: int | None) -> int | None:
    if table.group.type.spherical:
        return None
    return table.depth if search_bound is None else search_bound


def is_ap(table: RootTable, roots: Iterable[int], search_bound: int | None = None) -> APResult:
    """Decide AP1 (linear independence) and AP2 (pairwise simple-system witnesses)."""
    ids = tuple(sorted(set(int(r) for r in roots)))
    arith = table.group.arith
    if vector_rank([table.roots[r].coeffs for r in ids], arith) < len(ids):
        return APResult("no", reason="AP1: roots are linearly dependent")
    bound = _search_bound(table, search_bound)
    wmap, exhaustive = table.pair_witnesses(bound)
    witnesses = []
    unknown = False
    for a, b in combinations(ids, 2):
        wit = wmap.get((a, b))
        if wit is None:
            alt = wmap.get((b, a))
            if alt is not None:
                wit = type(alt)(alt.m, alt.w, alt.t, alt.s)
        if wit is None:
            if exhaustive:
                return APResult("no", reason=f"AP2: no simple-system witness for the pair ({a}, {b})")
            unknown = True
            continue
        witnesses.append(((a, b), (wit.w.word, wit.s, wit.t)))
    if unknown:
        return APResult("unknown", reason="AP2: witness search truncated")
    spherical = table.group.type.spherical
    k = len(ids)
    M = [[1.0] * k for _ in range(k)]
    wit_m = {p: table.group.graph.m[s][t] for p, (_, s, t) in witnesses}
    for i in range(k):
        M[i][i] = 1
        for j in range(i + 1, k):
            order = _order_of_product(table, ids[i], ids[j], spherical)
            if order != wit_m[(ids[i], ids[j])]:
                raise InternalInvariantViolation(
                    f"order of r_{ids[i]} r_{ids[j]} is {order}, witness label is {wit_m[(ids[i], ids[j])]}"
                )
            M[i][j] = M[j][i] = order
    Mt = tuple(tuple(x if x == INF else int(x) for x in row) for row in M)
    return APResult("yes", APSet(ids, Mt, matrix_type(Mt), tuple(witnesses)))


def enumerate_ap_spherical(table: RootTable, k: int, search_bound: int | None = None) -> list[APSet]:
    """All size-k AP sets of spherical type, ordered by sorted root ids."""
    levels = _ap_levels(table, search_bound, k)
    return list(levels[k]) if k < len(levels) else []


def _ap_levels(table: RootTable, search_bound: int | None, upto: int) -> list[tuple[APSet, ...]]:
    bound = _search_bound(table, search_bound)
    key = ("ap_levels", bound)
    levels: list[tuple[APSet, ...]] = table.cache.get(key) or []
    if not levels:
        levels = [(APSet((), (), TypeClass("spherical", ()), ()),)]
    if upto >= 1 and len(levels) < 2:
        levels.append(tuple(is_ap(table, [r], bound).apset for r in range(len(table))))  # type: ignore[misc]
    if upto >= 2 and len(levels) < 3:
        good: dict[int, set[int]] = {r: set() for r in range(len(table))}
        pairs = []
        for a, b in combinations(range(len(table)), 2):
            res = is_ap(table, (a, b), bound)
            if res.status == "yes" and res.apset is not None and res.apset.M[0][1] != INF:
                good[a].add(b)
                good[b].add(a)
                pairs.append(res.apset)
        levels.append(tuple(pairs))
        table.cache[("ap_good_pairs", bound)] = good
    good = table.cache.get(("ap_good_pairs", bound), {})
    while len(levels) <= upto and levels[-1]:
        nxt = []
        for base in levels[-1]:
            last = base.roots[-1]
            common = set.intersection(*(good[r] for r in base.roots))
            for r in sorted(x for x in common if x > last):
                res = is_ap(table, base.roots + (r,), bound)
                if res.status == "yes" and res.apset is not None and res.apset.spherical:
                    nxt.append(res.apset)
        levels.append(tuple(nxt))
    table.cache[key] = levels
    return levels


def spherical_ap_sets(table: RootTable, search_bound: int | None = None, max_size: int | None = None) -> list[APSet]:
    """Every spherical AP set (the family R^f), grouped by size."""
    out: list[APSet] = []
    k = 0
    cap = max_size if max_size is not None else table.group.rank
    while k <= cap:
        level = enumerate_ap_spherical(table, k, search_bound)
        if not level:
            break
        out.extend(level)
        k += 1
    return out


# --------------------------------------------------------------------------- polytopes
@dataclass(frozen=True)
class Face:
    u: int  # index into CoxPolytope.elements
    Y: tuple[int, ...]  # root ids, a subset of the base set


@dataclass
class CoxPolytope:
    """The W_X-orbit polytope of the dual-basis sum, with its coset face poset."""

    apset: APSet
    base_point: tuple[Any, ...]
    dual_basis: tuple[tuple[Any, ...], ...]
    elements: tuple[GroupElement, ...]
    lengths: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]  # words in the roots of the base set (root ids)
    vertices: tuple[tuple[Any, ...], ...]
    faces: tuple[Face, ...]
    edge_orientations: dict[Face, tuple[int, int]]
    _index: dict[int, int]
    _mul: dict[tuple[int, int], int]
    _cosets: dict[Face, frozenset[int]]
    _face_at: dict[tuple[int, tuple[int, ...]], Face]

    @property
    def roots(self) -> tuple[int, ...]:
        return self.apset.roots

    @property
    def dim(self) -> int:
        return len(self.apset.roots)

    def index(self, w: GroupElement) -> int:
        return self._index[w.id]

    def coset(self, face: Face) -> frozenset[int]:
        return self._cosets[face]

    def face(self, u: int, Y: Iterable[int]) -> Face:
        """The face containing u with directions Y (u is reduced to its minimal representative)."""
        Yt = tuple(sorted(Y))
        return self._face_at[(u, Yt)]

    def faces_of_dim(self, k: int) -> list[Face]:
        return [f for f in self.faces if len(f.Y) == k]

    def contains(self, inner: Face, outer: Face) -> bool:
        return self._cosets[inner] <= self._cosets[outer]

    def f_vector(self) -> list[int]:
        return [len(self.faces_of_dim(k)) for k in range(self.dim + 1)]


def _solve(G: Sequence[Sequence[Any]], rhs: Sequence[Any], arith: Any) -> list[Any]:
    k = len(G)
    a = [list(G[i]) + [rhs[i]] for i in range(k)]
    for c in range(k):
        piv = next(r for r in range(c, k) if not arith.is_zero(a[r][c]))
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [arith.div(x, p) for x in a[c]]
        for r in range(k):
            if r != c and not arith.is_zero(a[r][c]):
                f = a[r][c]
                a[r] = [arith.norm(x - f * y) for x, y in zip(a[r], a[c])]
    return [arith.norm(a[i][k]) for i in range(k)]


def build_polytope(table: RootTable, X: APSet | Sequence[int]) -> CoxPolytope:
    """Vertices z(o_X) over z in W_X, faces (u, Y) with u (empty, R_Y)-minimal."""
    if not isinstance(X, APSet):
        res = is_ap(table, X)
        if res.apset is None:
            raise NotSpherical(f"{tuple(X)} is not an AP set ({res.reason})")
        X = res.apset
    if not X.spherical:
        raise NotSpherical(f"{X.roots} is not of spherical type")
    key = ("polytope", X.roots)
    hit = table.cache.get(key)
    if hit is not None:
        return hit
    g = table.group
    arith = g.arith
    ids = X.roots
    k = len(ids)
    n = g.rank
    G = [[table.pair(a, b) for b in ids] for a in ids]
    coef = _solve(G, [1] * k, arith) if k else []
    zero = tuple(arith.norm(0) for _ in range(n))
    o = list(zero)
    for c, r in zip(coef, ids):
        o = [arith.norm(x + c * y) for x, y in zip(o, table.roots[r].coeffs)]
    duals = []
    for i in range(k):
        e = [1 if j == i else 0 for j in range(k)]
        ci = _solve(G, e, arith)
        d = list(zero)
        for c, r in zip(ci, ids):
            d = [arith.norm(x + c * y) for x, y in zip(d, table.roots[r].coeffs)]
        duals.append(tuple(d))
    # W_X by breadth-first search over the reflections R_X
    refl = [table.reflection(r) for r in ids]
    elements = [g.identity]
    lengths = [0]
    words: list[tuple[int, ...]] = [()]
    index = {g.identity.id: 0}
    layer = [0]
    while layer:
        nxt = []
        for i in layer:
            for j, rj in enumerate(refl):
                w = g.multiply(elements[i], rj)
                if w.id not in index:
                    index[w.id] = len(elements)
                    elements.append(w)
                    lengths.append(lengths[i] + 1)
                    words.append(words[i] + (ids[j],))
                    nxt.append(index[w.id])
        layer = nxt
    mul: dict[tuple[int, int], int] = {}
    pos = {r: j for j, r in enumerate(ids)}

    def times(i: int, r: int) -> int:
        key2 = (i, r)
        out = mul.get(key2)
        if out is None:
            out = index[g.multiply(elements[i], refl[pos[r]]).id]
            mul[key2] = out
        return out

    vertices = tuple(g.apply(w, tuple(o)) for w in elements)
    faces = []
    cosets: dict[Face, frozenset[int]] = {}
    face_at: dict[tuple[int, tuple[int, ...]], Face] = {}
    orient: dict[Face, tuple[int, int]] = {}
    for size in range(k + 1):
        for Y in combinations(ids, size):
            for u in range(len(elements)):
                if any(lengths[times(u, y)] < lengths[u] for y in Y):
                    continue
                f = Face(u, Y)
                faces.append(f)
                seen = {u}
                stack = [u]
                while stack:
                    x = stack.pop()
                    for y in Y:
                        z = times(x, y)
                        if z not in seen:
                            seen.add(z)
                            stack.append(z)
                cs = frozenset(seen)
                cosets[f] = cs
                for x in cs:
                    face_at[(x, Y)] = f
                if size == 1:
                    orient[f] = (u, times(u, Y[0]))
    poly = CoxPolytope(
        apset=X,
        base_point=tuple(o),
        dual_basis=tuple(duals),
        elements=tuple(elements),
        lengths=tuple(lengths),
        words=tuple(words),
        vertices=vertices,
        faces=tuple(faces),
        edge_orientations=orient,
        _index=index,
        _mul=mul,
        _cosets=cosets,
        _face_at=face_at,
    )
    table.cache[key] = poly
    return poly


# --------------------------------------------------------------------------- checks
@dataclass
class SignFlipCertificate:
    passed: bool
    vertices_equal: bool
    orthogonal: bool
    product_decomposition: bool
    reversed_edges: list[dict[str, Any]]
    kept_edges: list[dict[str, Any]]
    pattern_matches: bool
    relabel_formula_matches: bool
    flipped: tuple[int, ...]
    common: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "vertices_equal": self.vertices_equal,
            "orthogonal": self.orthogonal,
            "product_decomposition": self.product_decomposition,
            "reversed_edges": self.reversed_edges,
            "kept_edges": self.kept_edges,
            "pattern_matches": self.pattern_matches,
            "relabel_formula_matches": self.relabel_formula_matches,
            "flipped": list(self.flipped),
            "common": list(self.common),
        }


def _require_spherical_ap(table: RootTable, X: APSet | Sequence[int]) -> APSet:
    if isinstance(X, APSet):
        return X
    res = is_ap(table, X)
    if res.apset is None or not res.apset.spherical:
        raise PremiseViolated(f"{tuple(sorted(X))} is not a spherical AP set ({res.reason or 'not spherical'})")
    return res.apset


def _point_key(table: RootTable, v: Sequence[Any]) -> tuple[Any, ...]:
    return table.key(v)


def sign_flip_polytope_check(table: RootTable, X: APSet | Sequence[int], Xp: APSet | Sequence[int]) -> SignFlipCertificate:
    """Compare C[X] and C[X'] for two AP sets with the same reflections.

    X' must be obtained from X by negating a subset T; the remaining roots V
    are shared.  Edges along roots of T must reverse and edges along V keep
    their orientation.
    """
    A = _require_spherical_ap(table, X)
    B = _require_spherical_ap(table, Xp)
    ra = {table.reflection(r).id for r in A.roots}
    rb = {table.reflection(r).id for r in B.roots}
    if ra != rb:
        raise PremiseViolated("the two sets generate different reflection sets")
    arith = table.group.arith
    g = table.group
    T = tuple(r for r in A.roots if r not in B.roots)
    V = tuple(r for r in A.roots if r in B.roots)
    if sorted(table.negate(t) for t in T) != sorted(r for r in B.roots if r not in A.roots):
        raise PremiseViolated("X' is not a sign flip of X")
    pa, pb = build_polytope(table, A), build_polytope(table, B)
    keys_a = {_point_key(table, v): i for i, v in enumerate(pa.vertices)}
    keys_b = {_point_key(table, v): i for i, v in enumerate(pb.vertices)}
    vertices_equal = set(keys_a) == set(keys_b)
    orthogonal = all(arith.is_zero(table.pair(t, v)) for t in T for v in V)
    product = False
    if orthogonal:
        pt = build_polytope(table, _require_spherical_ap(table, T))
        pv = build_polytope(table, _require_spherical_ap(table, V))
        sums = {
            _point_key(table, tuple(arith.norm(x + y) for x, y in zip(a, b)))
            for a in pt.vertices
            for b in pv.vertices
        }
        product = sums == set(keys_a)
    # edge orientation comparison through vertex keys
    def edges(p: CoxPolytope) -> dict[frozenset, tuple[Face, tuple[Any, Any]]]:
        out = {}
        for f, (s, t) in p.edge_orientations.items():
            ks, kt = _point_key(table, p.vertices[s]), _point_key(table, p.vertices[t])
            out[frozenset((ks, kt))] = (f, (ks, kt))
        return out

    ea, eb = edges(pa), edges(pb)
    reversed_edges, kept_edges = [], []
    pattern = vertices_equal and set(ea) == set(eb)
    relabel = pattern
    pt_full = build_polytope(table, _require_spherical_ap(table, T))
    w_t = pt_full.elements[max(range(len(pt_full.elements)), key=lambda i: pt_full.lengths[i])]
    for key in sorted(ea, key=lambda e: (pa.edge_orientations[ea[e][0]], ea[e][0].Y)):
        fa, (sa, ta) = ea[key]
        if key not in eb:
            pattern = False
            continue
        fb, (sb, tb) = eb[key]
        beta = fa.Y[0]
        entry = {
            "x_face": {"u": list(pa.elements[fa.u].word), "root": beta},
            "xp_face": {"u": list(pb.elements[fb.u].word), "root": fb.Y[0]},
        }
        rev = (sa, ta) == (tb, sb)
        (reversed_edges if rev else kept_edges).append(entry)
        if rev != (beta in T):
            pattern = False
        # predicted label on the X' side
        u = pa.elements[fa.u]
        if beta in T:
            pred_u = g.multiply(g.multiply(u, w_t), table.reflection(beta))
            pred_root = table.negate(beta)
        else:
            pred_u = g.multiply(u, w_t)
            pred_root = beta
        idx = pb._index.get(pred_u.id)
        if idx is None or fb.Y[0] != pred_root or pb.face(idx, (pred_root,)) != fb:
            relabel = False
    passed = vertices_equal and orthogonal and product and pattern
    return SignFlipCertificate(
        passed, vertices_equal, orthogonal, product, reversed_edges, kept_edges, pattern, relabel, T, V
    )


@dataclass
class TransportCertificate:
    passed: bool
    vertices: int
    pairs_checked: int
    bijective: bool
    mismatches: list[tuple[int, int]]

    def to_json(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "vertices": self.vertices,
            "pairs_checked": self.pairs_checked,
            "bijective": self.bijective,
            "mismatches": [list(p) for p in self.mismatches],
        }


def hat_polytope_transport_check(table: RootTable, X: APSet | Sequence[int]) -> TransportCertificate:
    """Build the abstract polytope of (W_X, R_X) from M_X alone and compare it with C[X].

    The vertex map z-hat(o-hat) -> z(o_X) must be a bijection preserving every
    pairwise inner product.
    """
    A = _require_spherical_ap(table, X)
    poly = build_polytope(table, A)
    k = len(A.roots)
    # labels of M_X are labels of the ambient graph, so the ambient backend applies
    abstract = CoxeterGroup(CoxeterGraph(tuple(f"r{r}" for r in A.roots), A.M), arith=table.group.arith)
    ha = abstract.arith
    if k:
        Bh = abstract.form.B
        c = _solve(Bh, [1] * k, ha)
        o_hat = tuple(c)
    else:
        o_hat = ()
    enum = abstract.enumerate()
    g = table.group
    images = []
    hat_vertices = []
    for z in enum.elements:
        emb = g.product(table.reflection(A.roots[i]) for i in z.word)
        images.append(poly._index.get(emb.id))
        hat_vertices.append(abstract.apply(z, o_hat))
    bijective = None not in images and len(set(images)) == len(images) == len(poly.elements)
    mismatches = []
    pairs = 0
    if bijective:
        eq = table.group.arith.eq
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                pairs += 1
                lhs = abstract.form.pair(hat_vertices[i], hat_vertices[j])
                rhs = table.pair(poly.vertices[images[i]], poly.vertices[images[j]])
                if not eq(lhs, rhs):
                    mismatches.append((i, j))
            lhs = abstract.form.pair(hat_vertices[i], hat_vertices[i])
            rhs = table.pair(poly.vertices[images[i]], poly.vertices[images[i]])
            if not eq(lhs, rhs):
                mismatches.append((i, i))
    return TransportCertificate(bijective and not mismatches, len(images), pairs, bool(bijective), mismatches)
