"""Roots of the canonical representation, reflections, the hat-m pairing and beta sequences."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Any, Sequence, Union

from .coxeter_core import CoxeterGraph, CoxeterGroup, GroupElement, prod_left, prod_right
from .errors import BoundRequired, InternalInvariantViolation, NoWitness, NotFinitelyPaired

INF = math.inf


class _Unknown:
    """Result of a pairing search that was cut off by a bound."""

    _instance: "_Unknown | None" = None

    def __new__(cls) -> "_Unknown":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def to_json(self) -> str:
        return "unknown"


UNKNOWN = _Unknown()
Pairing = Union[int, float, _Unknown]


@dataclass(frozen=True)
class Root:
    id: int
    coeffs: tuple[Any, ...]
    positive: bool
    witness_word: tuple[int, ...]  # reduced word of w with w(alpha_s) equal to this root
    witness_s: int
    depth: int

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "coeffs": [_scalar_json(x) for x in self.coeffs],
            "positive": self.positive,
        }


def _scalar_json(x: Any) -> Any:
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return round(x, 12)
    return str(x)


@dataclass(frozen=True)
class PairWitness:
    m: float
    w: GroupElement
    s: int
    t: int


class RootTable:
    """Deduplicated, negation-closed list of roots with breadth-first witnesses."""

    def __init__(self, group: CoxeterGroup, roots: list[Root], depth: int, complete: bool) -> None:
        self.group = group
        self.graph: CoxeterGraph = group.graph
        self.roots = tuple(roots)
        self.depth = depth
        self.complete = complete
        self._by_key = {self.key(r.coeffs): r.id for r in roots}
        self._neg = tuple(self._by_key[self.key(tuple(-x for x in r.coeffs))] for r in roots)
        self._lock = threading.Lock()
        self._apply_cache: dict[tuple[int, int], int | None] = {}
        self._reflections: dict[int, GroupElement] = {}
        self._witness_maps: dict[int | None, tuple[dict[tuple[int, int], PairWitness], bool]] = {}
        self.cache: dict[Any, Any] = {}  # scratch space for downstream modules

    def __len__(self) -> int:
        return len(self.roots)

    def __getitem__(self, i: int) -> Root:
        return self.roots[i]

    def key(self, v: Sequence[Any]) -> tuple[Any, ...]:
        k = self.group.arith.key
        return tuple(k(x) for x in v)

    def id_of(self, v: Sequence[Any]) -> int | None:
        return self._by_key.get(self.key(v))

    def negate(self, rid: int) -> int:
        return self._neg[rid]

    def pair(self, a: int | Sequence[Any], b: int | Sequence[Any]) -> Any:
        va = self.roots[a].coeffs if isinstance(a, int) else a
        vb = self.roots[b].coeffs if isinstance(b, int) else b
        return self.group.form.pair(va, vb)

    def apply(self, w: GroupElement, rid: int) -> int | None:
        """Id of w(beta), or None when it lies beyond a truncated table."""
        key = (w.id, rid)
        hit = self._apply_cache.get(key, -1)
        if hit != -1:
            return hit  # type: ignore[return-value]
        out = self.id_of(self.group.apply(w, self.roots[rid].coeffs))
        self._apply_cache[key] = out
        return out

    def reflection(self, rid: int) -> GroupElement:
        hit = self._reflections.get(rid)
        if hit is not None:
            return hit
        r = self.roots[rid]
        g = self.group
        w = g.from_word(r.witness_word)
        refl = g.multiply(g.multiply(w, g.generators[r.witness_s]), g.inverse(w))
        self._reflections[rid] = refl
        return refl

    def pair_witnesses(self, search_bound: int | None = None) -> tuple[dict[tuple[int, int], PairWitness], bool]:
        """Map (w(alpha_s), w(alpha_t)) -> first witness in shortlex order.

        The boolean is True when the search covered all of W.
        """
        bound = None if self.group.type.spherical else search_bound
        if not self.group.type.spherical and bound is None:
            raise BoundRequired("pair witnesses over an infinite group need a search bound")
        with self._lock:
            hit = self._witness_maps.get(bound)
            if hit is not None:
                return hit
            g = self.group
            n = g.rank
            out: dict[tuple[int, int], PairWitness] = {}
            enum = g.enumerate(bound)
            for w in enum.elements:
                ids = [self.apply(w, s) for s in range(n)]
                for s in range(n):
                    for t in range(n):
                        if s == t or ids[s] is None or ids[t] is None:
                            continue
                        key = (ids[s], ids[t])
                        if key not in out:
                            out[key] = PairWitness(g.graph.m[s][t], w, s, t)
            res = (out, not enum.truncated)
            self._witness_maps[bound] = res
            return res


def _as_group(graph_or_group: CoxeterGraph | CoxeterGroup, mode: str | None = None) -> CoxeterGroup:
    if isinstance(graph_or_group, CoxeterGroup):
        return graph_or_group
    return CoxeterGroup(graph_or_group, mode=mode)


def enumerate_roots(graph_or_group: CoxeterGraph | CoxeterGroup, depth_bound: int | None = None) -> RootTable:
    """Breadth-first orbit closure of the simple roots under generator reflections.

    Ids: simple roots first in generator order, then each new layer sorted
    lexicographically by coefficient vector.  ``complete`` is True when the
    closure finished within the bound.
    """
    group = _as_group(graph_or_group)
    if depth_bound is None and not group.type.spherical:
        raise BoundRequired("the root system is infinite: a depth bound is required")
    g = group
    n = g.rank
    arith = g.arith
    two_b = g._two_b

    def reflect_simple(t: int, v: tuple[Any, ...]) -> tuple[Any, ...]:
        c = 0
        for k in range(n):
            if not arith.is_zero(two_b[t][k]) and not arith.is_zero(v[k]):
                c = c + two_b[t][k] * v[k]
        if arith.is_zero(c):
            return v
        out = list(v)
        out[t] = arith.norm(out[t] - c)
        return tuple(out)

    def sort_key(v: tuple[Any, ...]) -> tuple[Any, ...]:
        return tuple(float(x) for x in v) + tuple(repr(x) for x in v)

    roots: list[Root] = []
    seen: dict[tuple[Any, ...], int] = {}

    def add(v: tuple[Any, ...], word: tuple[int, ...], s: int, depth: int) -> None:
        k = tuple(arith.key(x) for x in v)
        if k in seen:
            return
        seen[k] = len(roots)
        roots.append(Root(len(roots), v, g.sign_of_root(v) > 0, word, s, depth))

    for s in range(n):
        v = tuple(arith.norm(1 if i == s else 0) for i in range(n))
        add(v, (), s, 0)
    layer = list(range(n))
    depth = 0
    complete = False
    while True:
        found: dict[tuple[Any, ...], tuple[tuple[Any, ...], tuple[int, ...], int]] = {}
        for rid in layer:
            r = roots[rid]
            for t in range(n):
                v = reflect_simple(t, r.coeffs)
                k = tuple(arith.key(x) for x in v)
                if k in seen or k in found:
                    continue
                w = g.multiply(g.generators[t], g.from_word(r.witness_word))
                found[k] = (v, w.word, r.witness_s)
        if not found:
            complete = True
            break
        if depth_bound is not None and depth >= depth_bound:
            break
        depth += 1
        layer = []
        for v, word, s in sorted(found.values(), key=lambda item: sort_key(item[0])):
            add(v, word, s, depth)
            layer.append(len(roots) - 1)
    if not complete:
        # close under negation: -w(alpha_s) = ws(alpha_s)
        for r in list(roots):
            neg = tuple(arith.norm(-x) for x in r.coeffs)
            w = g.multiply(g.from_word(r.witness_word), g.generators[r.witness_s])
            add(neg, w.word, r.witness_s, r.depth + 1)
    return RootTable(g, roots, depth, complete)


# --------------------------------------------------------------------------- operations
def _vector(table: RootTable, v: int | Root | Sequence[Any]) -> tuple[Any, ...]:
    if isinstance(v, Root):
        return v.coeffs
    if isinstance(v, int):
        return table.roots[v].coeffs
    return tuple(v)


def _rid(beta: int | Root) -> int:
    return beta.id if isinstance(beta, Root) else int(beta)


def reflect_root(table: RootTable, beta: int | Root, v: int | Root | Sequence[Any]) -> tuple[Any, ...]:
    """r_beta(v) = v - 2<v, beta> beta."""
    b = _vector(table, beta)
    x = _vector(table, v)
    arith = table.group.arith
    c = table.pair(x, b)
    if arith.is_zero(c):
        return x
    return tuple(arith.norm(xi - 2 * c * bi) for xi, bi in zip(x, b))


def reflection_element(table: RootTable, beta: int | Root) -> GroupElement:
    """The reflection w s w^-1 recorded by the enumeration witness of beta."""
    rid = _rid(beta)
    if not 0 <= rid < len(table):
        raise NoWitness(f"root {rid} is not in the table")
    return table.reflection(rid)


def hat_m(table: RootTable, beta: int | Root, gamma: int | Root, search_bound: int | None = None) -> Pairing:
    """The pairing hat-m(beta, gamma): an int, ``math.inf`` or ``UNKNOWN``.

    A witness w with w(alpha_s) = beta and w(alpha_t) = gamma yields m_{s,t}.
    Without a witness the value is infinite when the search was exhaustive
    and ``UNKNOWN`` otherwise.
    """
    b, c = _rid(beta), _rid(gamma)
    if b == c:
        return 1
    if table.negate(b) == c:
        return INF
    if not table.group.type.spherical and search_bound is None:
        search_bound = table.depth
    wmap, exhaustive = table.pair_witnesses(search_bound)
    wit = wmap.get((b, c))
    if wit is not None:
        return int(wit.m) if wit.m != INF else INF
    return INF if exhaustive else UNKNOWN


@dataclass(frozen=True)
class BetaSequence:
    beta: int
    gamma: int
    m: int
    entries: tuple[int, ...]

    @property
    def z_word(self) -> tuple[int, ...]:
        """Root ids of Z(gamma, beta, m), read left to right: beta_m ... beta_1."""
        return tuple(reversed(self.entries))

    @property
    def z_word_swapped(self) -> tuple[int, ...]:
        """Root ids of Z(beta, gamma, m), the reverse of :attr:`z_word`."""
        return self.entries


def _apply_reflections(table: RootTable, letters: Sequence[int], v: tuple[Any, ...]) -> tuple[Any, ...]:
    for rid in reversed(letters):  # the rightmost factor acts first
        v = reflect_root(table, rid, v)
    return v


def beta_sequence(table: RootTable, beta: int | Root, gamma: int | Root, search_bound: int | None = None) -> BetaSequence:
    """beta_1 = beta; beta_k alternates reflections of gamma (k even) and beta (k odd)."""
    b, c = _rid(beta), _rid(gamma)
    m = hat_m(table, b, c, search_bound)
    if not isinstance(m, int) or b == c:
        raise NotFinitelyPaired(f"hat-m({b}, {c}) is {m!r}")
    vb, vc = table.roots[b].coeffs, table.roots[c].coeffs
    entries = [b]
    for k in range(2, m + 1):
        if k % 2 == 0:
            v = _apply_reflections(table, prod_right(c, b, k - 1), vc)
        else:
            v = _apply_reflections(table, prod_right(b, c, k - 1), vb)
        rid = table.id_of(v)
        if rid is None:
            if table.complete:
                raise InternalInvariantViolation(f"beta_{k} of ({b}, {c}) is not a root")
            raise NoWitness(f"beta_{k} of ({b}, {c}) lies beyond the truncation frontier")
        entries.append(rid)
    return BetaSequence(b, c, m, tuple(entries))


def prefix_product_check(table: RootTable, beta: int | Root, gamma: int | Root, k: int) -> GroupElement:
    """Return r_{beta_1} ... r_{beta_{k-1}} after checking it against the alternating product."""
    seq = beta_sequence(table, beta, gamma)
    if not 2 <= k <= seq.m:
        raise ValueError(f"k must lie in [2, {seq.m}]")
    g = table.group
    lhs = g.product(table.reflection(r) for r in seq.entries[: k - 1])
    rb, rc = table.reflection(seq.beta), table.reflection(seq.gamma)
    letters = prod_left(rb, rc, k - 1) if k % 2 == 0 else prod_left(rc, rb, k - 1)
    rhs = g.product(letters)
    if lhs != rhs:
        raise InternalInvariantViolation(f"prefix product identity fails for ({seq.beta}, {seq.gamma}, k={k})")
    return lhs
