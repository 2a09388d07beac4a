"""Combinatorial CW-complexes: the Salvetti-type complex, the BEER-type complex and their cover.

Attaching maps are stored as records ``face (u, Y) -> target cell`` together
with the transport rule that produced them.  Boundary words of 2-cells are read
from the oriented perimeter of the rank-2 polytope, starting at the base vertex
and walking first along the smaller root id.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .ap_theory import APSet, CoxPolytope, build_polytope, spherical_ap_sets
from .coxeter_core import CoxeterGraph, CoxeterGroup, Enumeration, GroupElement
from .errors import (
    BoundRequired,
    GraphMismatch,
    InternalInvariantViolation,
    MismatchReport,
    OrbitMismatch,
    PremiseViolated,
    TruncationWarning,
)
from .root_system import RootTable, enumerate_roots

Letter = tuple["Cell", int]

SIGMA = "sigma"
OMEGA = "omega"
THETA_SIGMA = "theta_sigma"
THETA_OMEGA = "theta_omega"
OMEGA_N = "omega_n"


# --------------------------------------------------------------------------- data types
@dataclass(frozen=True)
class Cell:
    """A cell: dimension, a label (root ids or partition blocks) and an optional group word."""

    dim: int
    label: tuple
    z: tuple[int, ...] | None = None

    def sort_key(self) -> tuple:
        return (self.dim, self.label, -1 if self.z is None else len(self.z), self.z or ())


@dataclass(frozen=True)
class AttachingRecord:
    face: tuple  # (u word, Y root ids) for Coxeter polytopes; partition blocks for the n-model
    target: Cell | None
    rule: str
    params: tuple[tuple[str, Any], ...] = ()
    present: bool = True


@dataclass(frozen=True)
class CoherenceReport:
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


class CellComplex:
    """Cells graded by dimension, with attaching records and 2-cell boundary words."""

    def __init__(
        self,
        kind: str,
        cells: Iterable[Cell],
        records: dict[Cell, tuple[AttachingRecord, ...]],
        boundary: dict[Cell, tuple[Letter, ...]],
        endpoints: dict[Cell, tuple[Cell, Cell]],
        truncated: bool = False,
        graph: CoxeterGraph | None = None,
        context: "BuildContext | None" = None,
        full_dim: int | None = None,
        letter_name: Callable[[Cell], str] | None = None,
    ) -> None:
        self.kind = kind
        self.cells = tuple(sorted(cells, key=Cell.sort_key))
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.records = records
        self.boundary = boundary
        self.endpoints = endpoints
        self.truncated = truncated
        self.graph = graph
        self.context = context
        self.dim = max((c.dim for c in self.cells), default=-1)
        self.full_dim = self.dim if full_dim is None else full_dim
        self._letter_name = letter_name or default_letter_name(kind, graph)
        self.coherence: CoherenceReport | None = None
        self._record_maps: dict[Cell, dict[tuple, AttachingRecord]] = {}

    def __contains__(self, c: object) -> bool:
        return c in self.index

    def cells_of_dim(self, k: int) -> list[Cell]:
        return [c for c in self.cells if c.dim == k]

    def record_map(self, c: Cell) -> dict[tuple, AttachingRecord]:
        hit = self._record_maps.get(c)
        if hit is None:
            hit = {r.face: r for r in self.records.get(c, ())}
            self._record_maps[c] = hit
        return hit

    def name(self, c: Cell) -> str:
        return self._letter_name(c)

    def f_vector(self) -> list[int]:
        return f_vector(self)

    def to_json(self) -> dict[str, Any]:
        gens = self.graph.generators if self.graph else ()

        def label_json(c: Cell) -> dict[str, Any]:
            if self.kind == OMEGA_N:
                return {"blocks": [list(b) for b in c.label]}
            out: dict[str, Any] = {"roots": list(c.label)}
            if c.z is not None:
                out["z"] = [gens[i] for i in c.z]
            return out

        def face_json(face: tuple) -> Any:
            if self.kind == OMEGA_N:
                return {"blocks": [list(b) for b in face]}
            u, Y = face
            return {"u": [gens[i] for i in u], "Y": list(Y)}

        # permutation parameters of the partition model are one-line tuples, not generator words
        param_gens = () if self.kind == OMEGA_N else gens
        attach = []
        for c in self.cells:
            for r in self.records.get(c, ()):
                attach.append({
                    "cell": self.index[c],
                    "face": face_json(r.face),
                    "target": self.index.get(r.target) if r.target is not None else None,
                    "rule": r.rule,
                    "params": {k: _param_json(v, param_gens) for k, v in r.params},
                })
        return {
            "kind": self.kind,
            "graph": self.graph.to_json() if self.graph else None,
            "truncated": self.truncated,
            "f_vector": self.f_vector(),
            "cells": [{"dim": c.dim, "label": label_json(c), "name": self.name(c)} for c in self.cells],
            "endpoints": [
                {"cell": self.index[e], "source": self.index.get(s), "target": self.index.get(t)}
                for e, (s, t) in sorted(self.endpoints.items(), key=lambda kv: self.index[kv[0]])
            ],
            "attach": attach,
            "boundary2": [
                {"cell": self.index[c], "word": [[self.index[e], s] for e, s in self.boundary[c]]}
                for c in self.cells_of_dim(2)
                if c in self.boundary
            ],
        }


def _param_json(v: Any, gens: Sequence[str]) -> Any:
    if isinstance(v, tuple):
        return [gens[i] for i in v] if gens and all(isinstance(i, int) for i in v) else list(v)
    return v


def default_letter_name(kind: str, graph: CoxeterGraph | None) -> Callable[[Cell], str]:
    gens = graph.generators if graph else ()

    def name(c: Cell) -> str:
        if kind == OMEGA_N:
            return "z" + "".join(str(x) for b in c.label for x in b) if c.dim == 1 else repr(c.label)
        prefix = {SIGMA: "d", OMEGA: "z"}.get(kind, "e")
        roots = ",".join(str(r) for r in c.label)
        base = f"{prefix}{roots}" if c.dim == 1 else f"{prefix}({roots})"
        if c.z is not None:
            base += "[" + ".".join(gens[i] for i in c.z) + "]"
        return base

    return name


# --------------------------------------------------------------------------- build context
class BuildContext:
    """Everything a builder needs: group, roots, the family R^f and polytopes."""

    def __init__(
        self,
        graph: CoxeterGraph,
        depth: int | None = None,
        wlen: int | None = None,
        mode: str | None = None,
    ) -> None:
        self.graph = graph
        self.group = CoxeterGroup(graph, mode=mode)
        spherical = self.group.type.spherical
        if not spherical and (depth is None or wlen is None):
            raise BoundRequired("infinite Coxeter group: both a root depth and a word-length bound are required")
        self.depth = depth
        self.wlen = wlen
        self.table: RootTable = enumerate_roots(self.group, depth)
        self.search_bound = None if spherical else wlen
        self.apsets: tuple[APSet, ...] = tuple(spherical_ap_sets(self.table, self.search_bound))
        self.apset_by_roots = {X.roots: X for X in self.apsets}
        truncated = not self.table.complete
        if not spherical:
            truncated = truncated or self.group.enumerate(wlen).truncated
        self.truncated = truncated
        self._words: dict[tuple[int, ...], GroupElement] = {}

    def polytope(self, roots: tuple[int, ...]) -> CoxPolytope:
        return build_polytope(self.table, self.apset_by_roots[roots])

    def elements(self) -> Enumeration:
        return self.group.enumerate(self.wlen)

    @property
    def theta_truncated(self) -> bool:
        return self.truncated or self.elements().truncated

    def elem(self, word: tuple[int, ...]) -> GroupElement:
        hit = self._words.get(word)
        if hit is None:
            hit = self.group.from_word(word)
            self._words[word] = hit
        return hit

    def image(self, w: GroupElement, roots: Iterable[int]) -> tuple[int, ...] | None:
        out = []
        for r in roots:
            x = self.table.apply(w, r)
            if x is None:
                return None
            out.append(x)
        return tuple(sorted(out))


def make_context(graph: CoxeterGraph, depth: int | None = None, wlen: int | None = None, mode: str | None = None) -> BuildContext:
    return BuildContext(graph, depth, wlen, mode)


def _ctx(source: CoxeterGraph | BuildContext, depth: int | None, wlen: int | None) -> BuildContext:
    if isinstance(source, BuildContext):
        return source
    return BuildContext(source, depth, wlen)


# --------------------------------------------------------------------------- builders
def build_sigma(source: CoxeterGraph | BuildContext, depth: int | None = None, wlen: int | None = None,
                max_dim: int | None = None, check: bool = True) -> CellComplex:
    """One vertex, one 1-cell per root, one k-cell per spherical AP set of size k."""
    return _build_base(_ctx(source, depth, wlen), SIGMA, max_dim, check)


def build_beer(source: CoxeterGraph | BuildContext, depth: int | None = None, wlen: int | None = None,
               max_dim: int | None = None, check: bool = True) -> CellComplex:
    """Same cells as :func:`build_sigma`; faces (u, Y) attach to the cell of u(Y)."""
    return _build_base(_ctx(source, depth, wlen), OMEGA, max_dim, check)


def build_theta(source: CoxeterGraph | BuildContext, side: str = "sigma", depth: int | None = None,
                wlen: int | None = None, max_dim: int | None = None, check: bool = True) -> CellComplex:
    """The common cover: cells (X, z) for z in W, built with the rule of one side."""
    side = side.lower()
    if side not in ("sigma", "omega"):
        raise ValueError("side must be 'sigma' or 'omega'")
    return _build_theta(_ctx(source, depth, wlen), THETA_SIGMA if side == "sigma" else THETA_OMEGA, max_dim, check)


def _full_dim(ctx: BuildContext) -> int:
    return max(len(X) for X in ctx.apsets)


def _build_base(ctx: BuildContext, kind: str, max_dim: int | None, check: bool) -> CellComplex:
    table = ctx.table
    sets = [X for X in ctx.apsets if max_dim is None or len(X) <= max_dim]
    cells = [Cell(len(X), X.roots) for X in sets]
    cellset = set(cells)
    records: dict[Cell, tuple[AttachingRecord, ...]] = {}
    rule = "xi" if kind == SIGMA else "chi"
    for c in cells:
        if c.dim == 0:
            continue
        P = ctx.polytope(c.label)
        recs = []
        for f in P.faces:
            if len(f.Y) == c.dim:
                continue
            u = P.elements[f.u]
            if kind == SIGMA:
                tgt: Cell | None = Cell(len(f.Y), f.Y)
            else:
                img = ctx.image(u, f.Y)
                tgt = None if img is None else Cell(len(f.Y), img)
            recs.append(AttachingRecord((u.word, f.Y), tgt, rule, (("u", u.word),), tgt in cellset))
        records[c] = tuple(recs)
    cx = CellComplex(kind, cells, records, {}, {}, ctx.truncated, ctx.graph, ctx, _full_dim(ctx))
    _finish(cx, ctx, check)
    return cx


def _build_theta(ctx: BuildContext, kind: str, max_dim: int | None, check: bool) -> CellComplex:
    g = ctx.group
    enum = ctx.elements()
    in_range = {w.id for w in enum.elements}
    sets = [X for X in ctx.apsets if max_dim is None or len(X) <= max_dim]
    present_sets = {X.roots for X in sets}
    cells = [Cell(len(X), X.roots, z.word) for z in enum.elements for X in sets]
    records: dict[Cell, tuple[AttachingRecord, ...]] = {}
    rule = "xi_bar" if kind == THETA_SIGMA else "chi_bar"
    for z in enum.elements:
        for X in sets:
            if not X.roots:
                continue
            P = ctx.polytope(X.roots)
            recs = []
            for f in P.faces:
                if len(f.Y) == len(X):
                    continue
                u = P.elements[f.u]
                if kind == THETA_SIGMA:
                    w = g.multiply(z, u)
                    label: tuple[int, ...] | None = f.Y
                else:
                    w = g.multiply(z, g.inverse(u))
                    label = ctx.image(u, f.Y)
                tgt = None if label is None else Cell(len(f.Y), label, w.word)
                present = label is not None and label in present_sets and w.id in in_range
                recs.append(AttachingRecord((u.word, f.Y), tgt, rule, (("u", u.word), ("z", z.word)), present))
            records[Cell(len(X), X.roots, z.word)] = tuple(recs)
    cx = CellComplex(kind, cells, records, {}, {}, ctx.theta_truncated, ctx.graph, ctx, _full_dim(ctx))
    _finish(cx, ctx, check)
    return cx


def _finish(cx: CellComplex, ctx: BuildContext, check: bool) -> None:
    """Endpoints, boundary words, and the face-of-face coherence check."""
    for c in cx.cells_of_dim(1):
        P = ctx.polytope(c.label)
        rm = cx.record_map(c)
        src = rm[(P.elements[0].word, ())].target
        tgt = rm[(P.elements[1].word, ())].target
        cx.endpoints[c] = (src, tgt)  # type: ignore[assignment]
    for c in cx.cells_of_dim(2):
        cx.boundary[c] = _boundary_word(cx, ctx, c)
    if check:
        cx.coherence = coherence_check(cx)
        if not cx.coherence.passed:
            raise InternalInvariantViolation("face-of-face coherence failed: " + cx.coherence.failures[0])
    if cx.truncated:
        warnings.warn(f"{cx.kind} complex of {ctx.graph.generators} built under truncation", TruncationWarning, stacklevel=3)


def _perimeter_path(ctx: BuildContext, P: CoxPolytope, first: int, second: int, m: int) -> list[tuple[int, int]]:
    """Faces (u index, root) along the path id -> longest element starting with ``first``."""
    out = []
    idx = 0
    for k in range(m):
        d = first if k % 2 == 0 else second
        out.append((idx, d))
        idx = P._index[ctx.group.multiply(P.elements[idx], ctx.table.reflection(d)).id]
    return out


def _boundary_word(cx: CellComplex, ctx: BuildContext, c: Cell) -> tuple[Letter, ...]:
    P = ctx.polytope(c.label)
    beta, gamma = c.label
    m = int(P.apset.M[0][1])
    rm = cx.record_map(c)

    def letter(u: int, d: int) -> Cell | None:
        f = P.face(u, (d,))
        return rm[(P.elements[f.u].word, (d,))].target

    word: list[Letter] = []
    for u, d in _perimeter_path(ctx, P, beta, gamma, m):
        word.append((letter(u, d), 1))  # type: ignore[arg-type]
    back = [(letter(u, d), -1) for u, d in _perimeter_path(ctx, P, gamma, beta, m)]
    word.extend(reversed(back))  # type: ignore[arg-type]
    return tuple(word)


# --------------------------------------------------------------------------- coherence
def coherence_check(cx: CellComplex) -> CoherenceReport:
    """Every face of a face must attach where the corresponding face attaches directly."""
    ctx = cx.context
    if ctx is None:
        raise PremiseViolated("coherence of this complex is checked by its own builder")
    g = ctx.group
    sigma_type = cx.kind in (SIGMA, THETA_SIGMA)
    checked = 0
    failures: list[str] = []
    for c in cx.cells:
        if c.dim < 2:
            continue
        P = ctx.polytope(c.label)
        rm = cx.record_map(c)
        for rec in cx.records[c]:
            t = rec.target
            if not rec.present or t is None or t.dim == 0:
                continue
            u = ctx.elem(rec.face[0])
            u_inv = g.inverse(u)
            for rec2 in cx.records.get(t, ()):
                if not rec2.present:
                    continue
                v = ctx.elem(rec2.face[0])
                Z2 = rec2.face[1]
                if sigma_type:
                    w = g.multiply(u, v)
                    Z: tuple[int, ...] | None = Z2
                else:
                    w = g.multiply(v, u)
                    Z = ctx.image(u_inv, Z2)
                checked += 1
                idx = P._index.get(w.id)
                if idx is None or Z is None:
                    failures.append(f"{cx.name(c)}: face {rec2.face} of {cx.name(t)} has no counterpart")
                    continue
                f = P.face(idx, Z)
                direct = rm.get((P.elements[f.u].word, f.Y))
                if direct is None or direct.target != rec2.target:
                    failures.append(f"{cx.name(c)}: face {rec2.face} of {cx.name(t)} disagrees with the direct record")
    return CoherenceReport(checked, tuple(failures))


# --------------------------------------------------------------------------- isomorphism g
@dataclass
class IsoCertificate:
    passed: bool
    checked: int
    failures: list[dict[str, Any]]
    cells: list[str] = field(default_factory=list)
    steps: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"pass": self.passed, "checked": self.checked, "failures": self.failures, "steps": self.steps}


def _invert_word(word: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple((e, -s) for e, s in reversed(word))


def verify_iso_g(theta_sigma: CellComplex, theta_omega: CellComplex, threads: int | None = None,
                 strict: bool = False) -> IsoCertificate:
    """Check the cellular isomorphism (X, z) -> (z(X), z^-1) between the two covers."""
    if theta_sigma.kind != THETA_SIGMA or theta_omega.kind != THETA_OMEGA:
        raise PremiseViolated("expected a sigma-side cover and an omega-side cover")
    if theta_sigma.graph != theta_omega.graph:
        raise GraphMismatch("the two covers are built over different graphs")
    ctx = theta_sigma.context
    octx = theta_omega.context
    assert ctx is not None and octx is not None
    g = ctx.group

    def image(c: Cell) -> Cell | None:
        z = ctx.elem(c.z or ())
        label = ctx.image(z, c.label)
        if label is None:
            return None
        return Cell(c.dim, label, g.inverse(z).word)

    def check_cell(c: Cell) -> tuple[list[dict[str, Any]], dict[str, int]]:
        fails: list[dict[str, Any]] = []
        steps = {"bijection": 1, "endpoints": 0, "boundary_words": 0, "face_sets": 0}
        gc = image(c)
        if gc is None or gc not in theta_omega:
            fails.append({"cell": theta_sigma.name(c), "step": "bijection", "detail": "image missing"})
            return fails, steps
        if c.dim == 1:
            steps["endpoints"] = 1
            s, t = theta_sigma.endpoints[c]
            if (image(s), image(t)) != theta_omega.endpoints[gc]:
                fails.append({"cell": theta_sigma.name(c), "step": "endpoints", "detail": "endpoint images differ"})
        if c.dim == 2:
            steps["boundary_words"] = 1
            mapped = tuple((image(e), s) for e, s in theta_sigma.boundary[c])
            target = theta_omega.boundary[gc]
            if mapped != target and _invert_word(mapped) != target:
                fails.append({"cell": theta_sigma.name(c), "step": "boundary_words", "detail": "relabelled word differs"})
        if c.dim >= 1:
            steps["face_sets"] = 1
            z = ctx.elem(c.z or ())
            z_inv = g.inverse(z)
            PO = octx.polytope(gc.label)
            orm = theta_omega.record_map(gc)
            recs = theta_sigma.records[c]
            if len(recs) != len(theta_omega.records[gc]):
                fails.append({"cell": theta_sigma.name(c), "step": "face_sets", "detail": "face counts differ"})
            for rec in recs:
                u = ctx.elem(rec.face[0])
                u2 = g.multiply(g.multiply(z, u), z_inv)
                Y2 = ctx.image(z, rec.face[1])
                idx = PO._index.get(u2.id)
                ok = idx is not None and Y2 is not None
                if ok:
                    f = PO.face(idx, Y2)  # type: ignore[arg-type]
                    ok = f.u == idx  # u' must itself be the minimal representative
                    orec = orm.get((u2.word, Y2))
                    ok = ok and orec is not None and (
                        not rec.present or (rec.target is not None and orec.target == image(rec.target))
                    )
                if not ok:
                    fails.append({"cell": theta_sigma.name(c), "step": "face_sets", "detail": f"face {rec.face}"})
        return fails, steps

    cells = list(theta_sigma.cells)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check_cell, cells))
    else:
        results = [check_cell(c) for c in cells]
    failures: list[dict[str, Any]] = []
    steps = {"bijection": 0, "endpoints": 0, "boundary_words": 0, "face_sets": 0}
    for fs, st in results:
        failures.extend(fs)
        for k, v in st.items():
            steps[k] += v
    # bijection per dimension
    for k in range(theta_sigma.dim + 1):
        imgs = {image(c) for c in theta_sigma.cells_of_dim(k)}
        if imgs != set(theta_omega.cells_of_dim(k)):
            failures.append({"cell": None, "step": "bijection", "detail": f"dimension {k} is not matched bijectively"})
    cert = IsoCertificate(not failures, len(cells), failures, [theta_sigma.name(c) for c in cells], steps)
    if strict and failures:
        raise MismatchReport(f"{failures[0]['step']} failed at {failures[0]['cell']}", failures[0])
    return cert


# --------------------------------------------------------------------------- deck action
@dataclass
class DeckCertificate:
    passed: bool
    free: bool
    orbit_counts: list[int]
    base_counts: list[int]
    labels_match: bool
    equivariant: bool
    right_rule_cellular: bool
    checked: int

    def to_json(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "free": self.free,
            "orbit_counts": self.orbit_counts,
            "base_counts": self.base_counts,
            "labels_match": self.labels_match,
            "equivariant": self.equivariant,
            "right_rule_cellular": self.right_rule_cellular,
            "checked": self.checked,
        }


def deck_quotient_check(theta: CellComplex, base: CellComplex, strict: bool = False) -> DeckCertificate:
    """Check that W acts freely on the cover with the base complex as quotient.

    The action moves the group coordinate, (X, z) -> (X, z' z).  Orbits coincide
    with those of (X, z) -> (X, z z'); only the left version commutes with the
    attaching records, and ``right_rule_cellular`` reports whether the right
    version happens to do so as well (it does exactly when W is abelian).
    """
    pairs = {THETA_SIGMA: SIGMA, THETA_OMEGA: OMEGA}
    if pairs.get(theta.kind) != base.kind:
        raise PremiseViolated(f"{theta.kind} does not cover {base.kind}")
    if theta.graph != base.graph:
        raise GraphMismatch("cover and base are built over different graphs")
    if theta.truncated:
        raise PremiseViolated("the deck check needs the complete group")
    ctx = theta.context
    assert ctx is not None
    g = ctx.group
    W = ctx.elements().elements
    gens = g.generators

    def act(s: GroupElement, c: Cell | None) -> Cell | None:
        if c is None:
            return None
        return Cell(c.dim, c.label, g.multiply(s, ctx.elem(c.z or ())).word)

    # orbits through the generators
    parent = {c: c for c in theta.cells}

    def find(c: Cell) -> Cell:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for c in theta.cells:
        for s in gens:
            a, b = find(c), find(act(s, c))  # type: ignore[arg-type]
            if a != b:
                parent[max(a, b, key=Cell.sort_key)] = min(a, b, key=Cell.sort_key)
    orbits: dict[Cell, list[Cell]] = {}
    for c in theta.cells:
        orbits.setdefault(find(c), []).append(c)
    free = all(len(o) == len(W) for o in orbits.values())
    top = len(f_vector(base)) - 1  # same padding as the f-vector
    orbit_counts = [sum(1 for r in orbits if r.dim == k) for k in range(top + 1)]
    base_counts = [len(base.cells_of_dim(k)) for k in range(top + 1)]
    labels_match = sorted((r.dim, r.label) for r in orbits) == sorted((c.dim, c.label) for c in base.cells)
    equivariant = True
    checked = 0
    for c in theta.cells:
        rm = theta.records.get(c, ())
        for s in gens:
            sc = act(s, c)
            srm = theta.record_map(sc)  # type: ignore[arg-type]
            for rec in rm:
                checked += 1
                other = srm.get(rec.face)
                if other is None or (rec.present and other.present and other.target != act(s, rec.target)):
                    equivariant = False
    right_cellular = True
    for e in theta.cells_of_dim(1):
        src, tgt = theta.endpoints[e]
        for s in gens:
            moved = Cell(1, e.label, g.multiply(ctx.elem(e.z or ()), s).word)
            if moved not in theta:
                continue
            ms, mt = theta.endpoints[moved]
            exp_s = Cell(0, (), g.multiply(ctx.elem(src.z or ()), s).word)
            exp_t = Cell(0, (), g.multiply(ctx.elem(tgt.z or ()), s).word)
            if (ms, mt) != (exp_s, exp_t):
                right_cellular = False
    passed = free and orbit_counts == base_counts and labels_match and equivariant
    cert = DeckCertificate(passed, free, orbit_counts, base_counts, labels_match, equivariant, right_cellular, checked)
    if strict and not passed:
        raise OrbitMismatch(f"orbit counts {orbit_counts} vs base {base_counts}")
    return cert


# --------------------------------------------------------------------------- presentations
@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[str, int], ...], ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "generators": list(self.generators),
            "relations": [[[g, e] for g, e in r] for r in self.relations],
        }


def _base_vertex(cx: CellComplex) -> Cell:
    zero = cx.cells_of_dim(0)
    for c in zero:
        if not c.z:
            return c
    return zero[0]


def spanning_tree(cx: CellComplex) -> set[Cell]:
    """Breadth-first spanning forest; edges at a vertex are taken in (root, length, word) order."""
    incident: dict[Cell, list[Cell]] = {}
    for e, (s, t) in cx.endpoints.items():
        incident.setdefault(s, []).append(e)
        if t != s:
            incident.setdefault(t, []).append(e)
    for v in incident:
        incident[v].sort(key=lambda e: (e.label, len(e.z or ()), e.z or ()))
    tree: set[Cell] = set()
    seen: set[Cell] = set()
    order = [_base_vertex(cx)] + [v for v in cx.cells_of_dim(0)]
    for root in order:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for e in incident.get(v, ()):
                    s, t = cx.endpoints[e]
                    other = t if s == v else s
                    if other is None or other in seen:
                        continue
                    seen.add(other)
                    tree.add(e)
                    nxt.append(other)
            queue = nxt
    return tree


def pi1_presentation(cx: CellComplex) -> Presentation:
    """Generators: 1-cells off a spanning tree.  Relations: 2-cell boundary words without tree edges."""
    tree = spanning_tree(cx) if len(cx.cells_of_dim(0)) > 1 else set()
    gens = tuple(cx.name(e) for e in cx.cells_of_dim(1) if e not in tree)
    rels = []
    for c in cx.cells_of_dim(2):
        rels.append(tuple((cx.name(e), s) for e, s in cx.boundary[c] if e not in tree))
    return Presentation(gens, tuple(rels))


def free_reduce(word: Sequence[tuple[str, int]], cyclic: bool = True) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    if cyclic:
        while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
            out = out[1:-1]
    return tuple(out)


def normalize_relator(word: Sequence[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    """Canonical representative up to cyclic rotation and inversion."""
    w = free_reduce(word)
    if not w:
        return ()
    inv = tuple((g, -e) for g, e in reversed(w))
    cands = []
    for base in (w, inv):
        for i in range(len(base)):
            cands.append(base[i:] + base[:i])
    return min(cands)


def relation_set(p: Presentation, rename: Callable[[str], str] | None = None) -> set[tuple[tuple[str, int], ...]]:
    f = rename or (lambda x: x)
    return {normalize_relator([(f(g), e) for g, e in r]) for r in p.relations}


# --------------------------------------------------------------------------- counts
def f_vector(cx: CellComplex) -> list[int]:
    """Cell counts per dimension, padded with zeros through dimension two."""
    top = max(cx.dim, cx.full_dim, 2)
    return [len(cx.cells_of_dim(k)) for k in range(top + 1)]


def euler_characteristic(cx: CellComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(f_vector(cx)))
