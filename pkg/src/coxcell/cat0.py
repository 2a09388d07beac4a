"""Vertex links of piecewise-Euclidean 2-complexes and the Gromov link condition.

Every 2-cell with a boundary word of length ``2m`` is a regular ``2m``-gon, so
its corners have interior angle ``pi (m - 1) / m``.  Lengths are kept as exact
rational multiples of ``pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import networkx as nx

from .complexes import AttachingRecord, Cell, CellComplex
from .errors import HypothesisNotMet, NotTwoDimensional

EPS_ANGLE = 1e-9

# node of a link graph: ("+", edge) is the end where the edge arrives, ("-", edge) where it leaves
Node = tuple[str, Cell]

NOT_LOCALLY_CAT0 = "NotLocallyCAT0"
LOCALLY_CAT0 = "LocallyCAT0"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Arc:
    u: Node
    v: Node
    angle: Fraction  # multiple of pi
    cell: Cell
    corner: int


@dataclass
class LinkGraph:
    vertex: Cell
    nodes: list[Node]
    arcs: list[Arc]

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.nodes)
        for k, a in enumerate(self.arcs):
            g.add_edge(a.u, a.v, key=k, weight=a.angle)
        return g


def corner_angle(word_length: int) -> Fraction:
    """Interior angle, over pi, of a regular polygon with ``word_length`` sides."""
    m = word_length // 2
    if word_length != 2 * m or m < 2:
        raise NotTwoDimensional(f"a boundary of length {word_length} is not a rank-2 polytope perimeter")
    return Fraction(m - 1, m)


def _require_2d(cx: CellComplex) -> None:
    if cx.dim >= 3:
        raise NotTwoDimensional(f"complex has cells of dimension {cx.dim}; only 2-skeletons are checked")


def _node_key(cx: CellComplex, n: Node) -> tuple:
    return (cx.index[n[1]], n[0])


def vertex_link(cx: CellComplex, vertex: Cell | None = None) -> LinkGraph:
    """The link of a vertex: one node per edge end there, one arc per 2-cell corner there."""
    _require_2d(cx)
    zero = cx.cells_of_dim(0)
    if vertex is None:
        vertex = zero[0]
    nodes: set[Node] = set()
    for e in cx.cells_of_dim(1):
        src, tgt = cx.endpoints[e]
        if tgt == vertex:
            nodes.add(("+", e))
        if src == vertex:
            nodes.add(("-", e))

    def arrive(e: Cell, s: int) -> tuple[Node, Cell]:
        src, tgt = cx.endpoints[e]
        return (("+", e), tgt) if s > 0 else (("-", e), src)

    def leave(e: Cell, s: int) -> Node:
        return ("-", e) if s > 0 else ("+", e)

    arcs = []
    for c in cx.cells_of_dim(2):
        word = cx.boundary[c]
        angle = corner_angle(len(word))
        for k, (e, s) in enumerate(word):
            a, at = arrive(e, s)
            if at != vertex:
                continue
            e2, s2 = word[(k + 1) % len(word)]
            arcs.append(Arc(a, leave(e2, s2), angle, c, k))
    return LinkGraph(vertex, sorted(nodes, key=lambda n: _node_key(cx, n)), arcs)


@dataclass
class Systole:
    length: Fraction | float  # multiple of pi; math.inf when the graph has no cycle
    cycle: list[Node]
    arcs: list[Arc]


def systole(g: LinkGraph, order: Sequence[int] | None = None) -> Systole:
    """Shortest closed cycle: the minimum over arcs of its weight plus the shortest path avoiding it."""
    mg = g.to_networkx()
    best: Systole = Systole(math.inf, [], [])
    for k in order if order is not None else range(len(g.arcs)):
        a = g.arcs[k]
        if a.u == a.v:
            cand = Systole(a.angle, [a.u], [a])
        else:
            def weight(x: Any, y: Any, d: dict, skip: int = k) -> Any:
                vals = [attr["weight"] for key, attr in d.items() if key != skip]
                return min(vals) if vals else None

            try:
                length, path = nx.single_source_dijkstra(mg, a.v, a.u, weight=weight)
            except nx.NetworkXNoPath:
                continue
            # u -> v along the arc, then the path v -> u back
            cand = Systole(a.angle + length, [a.u] + list(path[:-1]),
                           [a] + _path_arcs(g, mg, path, skip=k))
        if cand.length < best.length:
            best = cand
    return best


def _path_arcs(g: LinkGraph, mg: nx.MultiGraph, path: Sequence[Node], skip: int) -> list[Arc]:
    out = []
    for x, y in zip(path, path[1:]):
        keys = sorted((attr["weight"], key) for key, attr in mg.get_edge_data(x, y).items() if key != skip)
        out.append(g.arcs[keys[0][1]])
    return out


@dataclass
class Verdict:
    verdict: str
    systole: Fraction | float
    vertex: Cell | None
    witness: list[str]
    links_checked: int

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "systole_over_pi": _fmt(self.systole),
            "witness": self.witness,
            "links_checked": self.links_checked,
        }


def _fmt(x: Fraction | float) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return "inf" if math.isinf(x) else repr(x)


def node_name(cx: CellComplex, n: Node) -> str:
    return f"y{n[0]}({cx.name(n[1])})"


def gromov_check(cx: CellComplex) -> Verdict:
    """Locally CAT(0) iff every vertex link has systole at least 2 pi."""
    _require_2d(cx)
    if cx.truncated:
        raise HypothesisNotMet("a truncated build does not have finitely many cells; refusing to judge")
    best: Systole | None = None
    best_vertex: Cell | None = None
    for v in cx.cells_of_dim(0):
        s = systole(vertex_link(cx, v))
        if best is None or s.length < best.length:
            best, best_vertex = s, v
    if best is None:
        return Verdict(LOCALLY_CAT0, math.inf, None, [], 0)
    length = best.length
    two = Fraction(2)
    if isinstance(length, Fraction):
        verdict = NOT_LOCALLY_CAT0 if length < two else LOCALLY_CAT0
    elif math.isinf(length) or length >= 2 + EPS_ANGLE / math.pi:
        verdict = LOCALLY_CAT0
    elif length < 2 - EPS_ANGLE / math.pi:
        verdict = NOT_LOCALLY_CAT0
    else:
        verdict = INCONCLUSIVE
    witness = [node_name(cx, n) for n in best.cycle] if verdict == NOT_LOCALLY_CAT0 else []
    return Verdict(verdict, length, best_vertex, witness, len(cx.cells_of_dim(0)))


def complex_from_words(words: Iterable[Sequence[tuple[str, int]]], kind: str = "words") -> CellComplex:
    """A one-vertex 2-complex with one edge per letter and one 2-cell per boundary word."""
    words = [tuple(w) for w in words]
    letters = sorted({g for w in words for g, _ in w})
    vertex = Cell(0, ())
    edges = {g: Cell(1, (g,)) for g in letters}
    faces = [Cell(2, (k,)) for k in range(len(words))]
    boundary = {f: tuple((edges[g], s) for g, s in w) for f, w in zip(faces, words)}
    records: dict[Cell, tuple[AttachingRecord, ...]] = {}
    names = {vertex: "v", **{e: g for g, e in edges.items()}, **{f: f"D{f.label[0]}" for f in faces}}
    return CellComplex(
        kind,
        [vertex, *edges.values(), *faces],
        records,
        boundary,
        {e: (vertex, vertex) for e in edges.values()},
        letter_name=names.__getitem__,
    )


def torus() -> CellComplex:
    """One square glued along ``a b a^-1 b^-1``."""
    return complex_from_words([[("a", 1), ("b", 1), ("a", -1), ("b", -1)]], kind="torus")


__all__ = [
    "Arc",
    "LinkGraph",
    "Systole",
    "Verdict",
    "complex_from_words",
    "corner_angle",
    "gromov_check",
    "node_name",
    "systole",
    "torus",
    "vertex_link",
]
