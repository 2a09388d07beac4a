"""Coxeter graphs, group elements in the canonical representation, and classification.

A group element is carried as its action matrix on V in the basis of simple
roots, together with a reduced word recomputed by descent stripping.  Elements
are interned per :class:`CoxeterGroup`, so each distinct matrix receives one
integer id and products can be cached by id pairs.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .arith import INF, Arithmetic, ExactArithmetic, select_arithmetic
from .errors import BoundRequired, GraphMismatch, LabelError, SchemaError

Label = float  # an int label or math.inf
Matrix = tuple[tuple[Any, ...], ...]


# --------------------------------------------------------------------------- graphs
@dataclass(frozen=True)
class CoxeterGraph:
    """Generator names plus a symmetric Coxeter matrix (``math.inf`` for no relation)."""

    generators: tuple[str, ...]
    m: tuple[tuple[Label, ...], ...]

    def __post_init__(self) -> None:
        _validate(self.generators, self.m)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def label(self, i: int, j: int) -> Label:
        return self.m[i][j]

    def off_diagonal_labels(self) -> list[Label]:
        n = self.rank
        return [self.m[i][j] for i in range(n) for j in range(i + 1, n)]

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the graph whose edges are the labels >= 3."""
        n = self.rank
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and j != i and self.m[i][j] >= 3:
                        seen[j] = True
                        stack.append(j)
            out.append(tuple(sorted(comp)))
        return out

    def restrict(self, idx: Sequence[int]) -> "CoxeterGraph":
        return CoxeterGraph(
            tuple(self.generators[i] for i in idx),
            tuple(tuple(self.m[i][j] for j in idx) for i in idx),
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "generators": list(self.generators),
            "m": [["inf" if x == INF else int(x) for x in row] for row in self.m],
        }


def _validate(gens: tuple[str, ...], m: tuple[tuple[Label, ...], ...]) -> None:
    n = len(gens)
    if len(set(gens)) != n:
        raise SchemaError("generator names must be unique")
    if len(m) != n or any(len(row) != n for row in m):
        raise SchemaError("m must be a square matrix indexed by the generators")
    for i in range(n):
        if m[i][i] != 1:
            raise LabelError(f"m[{i}][{i}] must be 1, got {m[i][i]}")
        for j in range(n):
            if i == j:
                continue
            if m[i][j] != m[j][i]:
                raise LabelError(f"m is not symmetric at ({i},{j})")
            if m[i][j] < 2:
                raise LabelError(f"m[{i}][{j}] must be at least 2, got {m[i][j]}")


def _parse_label(x: Any) -> Label:
    if isinstance(x, bool):
        raise SchemaError(f"invalid label {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, float) and x == INF:
        return INF
    if isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    raise SchemaError(f"invalid label {x!r}; expected an integer or \"inf\"")


def parse_graph(doc: Mapping[str, Any] | str) -> CoxeterGraph:
    """Validate a graph document ``{"generators": [...], "m": [[...]...]}``.

    A string argument is parsed as JSON text.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise SchemaError("graph document must be a JSON object")
    if set(doc) - {"generators", "m", "name"} or not {"generators", "m"} <= set(doc):
        raise SchemaError("graph document needs exactly the keys 'generators' and 'm'")
    gens = doc["generators"]
    rows = doc["m"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise SchemaError("'generators' must be a list of strings")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("'m' must be a list of lists")
    m = tuple(tuple(_parse_label(x) for x in row) for row in rows)
    return CoxeterGraph(tuple(gens), m)


def load_graph(path: str | Path) -> CoxeterGraph:
    return parse_graph(Path(path).read_text())


# --------------------------------------------------------------------------- forms
@dataclass(frozen=True)
class GramForm:
    """The canonical symmetric bilinear form on V in the simple-root basis."""

    B: Matrix
    arith: Arithmetic = field(compare=False)

    def pair(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        n = len(self.B)
        total: Any = 0
        for i in range(n):
            if self.arith.is_zero(x[i]):
                continue
            row = self.B[i]
            for j in range(n):
                b = row[j]
                if not self.arith.is_zero(b) and not self.arith.is_zero(y[j]):
                    total = total + x[i] * b * y[j]
        return self.arith.norm(total) if isinstance(self.arith, ExactArithmetic) else total


def gram_form(graph: CoxeterGraph, arith: Arithmetic | None = None) -> GramForm:
    arith = arith or select_arithmetic(graph.off_diagonal_labels())
    n = graph.rank
    B = tuple(
        tuple(arith.norm(1 if i == j else arith.form_entry(graph.m[i][j])) for j in range(n))
        for i in range(n)
    )
    return GramForm(B, arith)


def determinant(rows: Sequence[Sequence[Any]], arith: Arithmetic) -> Any:
    """Determinant by Gaussian elimination over the backend's field."""
    a = [list(r) for r in rows]
    n = len(a)
    det: Any = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if not arith.is_zero(a[r][c])), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det = det * p
        for r in range(c + 1, n):
            if arith.is_zero(a[r][c]):
                continue
            f = arith.div(a[r][c], p)
            for k in range(c, n):
                a[r][k] = a[r][k] - f * a[c][k]
    return arith.norm(det) if isinstance(arith, ExactArithmetic) else det


# --------------------------------------------------------------------------- classification
@dataclass(frozen=True)
class ComponentType:
    generators: tuple[str, ...]
    kind: str  # "spherical" | "affine" | "other"
    label: str | None


@dataclass(frozen=True)
class TypeClass:
    kind: str  # "spherical" | "affine" | "other"
    components: tuple[ComponentType, ...]

    @property
    def spherical(self) -> bool:
        return self.kind == "spherical"

    def to_json(self) -> dict[str, Any]:
        return {
            "type": self.kind,
            "components": [
                {"generators": list(c.generators), "type": c.kind, "label": c.label}
                for c in self.components
            ],
        }


def _definiteness(B: Matrix, arith: Arithmetic) -> str:
    """Return "pd", "psd" or "indefinite" for an irreducible Gram matrix."""
    n = len(B)
    if not arith.exact:
        ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in B]))
        lo = float(ev.min())
        if lo > arith.eps:  # type: ignore[union-attr]
            return "pd"
        if lo >= -arith.eps:  # type: ignore[union-attr]
            return "psd"
        return "indefinite"
    if all(arith.sign(determinant([r[:k] for r in B[:k]], arith)) > 0 for k in range(1, n + 1)):
        return "pd"
    # An irreducible form is psd but not pd exactly when it is singular and every
    # one-vertex deletion is positive definite (interlacing leaves one zero eigenvalue).
    if not arith.is_zero(determinant(B, arith)):
        return "indefinite"
    for drop in range(n):
        keep = [i for i in range(n) if i != drop]
        sub = tuple(tuple(B[i][j] for j in keep) for i in keep)
        if _definiteness(sub, arith) != "pd":
            return "indefinite"
    return "psd"


def _edges(graph: CoxeterGraph) -> dict[tuple[int, int], Label]:
    n = graph.rank
    return {(i, j): graph.m[i][j] for i in range(n) for j in range(i + 1, n) if graph.m[i][j] >= 3}


def _adjacency(graph: CoxeterGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {i: [] for i in range(graph.rank)}
    for i, j in _edges(graph):
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _arms(graph: CoxeterGraph) -> tuple[int | None, list[list[Label]]] | None:
    """For a tree with at most one branch node, return (branch, arm label lists).

    Without a branch node the single arm is the whole path read from its
    lower-numbered end.  Returns None when there are two or more branch nodes.
    """
    adj = _adjacency(graph)
    branch = [i for i in adj if len(adj[i]) >= 3]
    if len(branch) > 1:
        return None
    root = branch[0] if branch else min(i for i in adj if len(adj[i]) <= 1)
    arms = []
    for nb in sorted(adj[root]):
        labels, prev, cur = [], root, nb
        while True:
            labels.append(graph.m[prev][cur])
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        arms.append(labels)
    return (branch[0] if branch else None), arms


def _is_tree(graph: CoxeterGraph) -> bool:
    return len(_edges(graph)) == graph.rank - 1


def _spherical_label(graph: CoxeterGraph) -> str | None:
    n = graph.rank
    if n == 1:
        return "A1"
    if n == 2:
        m = int(graph.m[0][1])
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    shape = _arms(graph) if _is_tree(graph) else None
    if shape is None:
        return None
    branch, arms = shape
    if branch is None:
        path = arms[0]
        big = [k for k, x in enumerate(path) if x != 3]
        if not big:
            return f"A{n}"
        if len(big) == 1:
            k, x = big[0], path[big[0]]
            at_end = k in (0, len(path) - 1)
            if x == 4 and at_end:
                return f"B{n}"
            if x == 4 and n == 4:
                return "F4"
            if x == 5 and at_end and n in (3, 4):
                return f"H{n}"
        return None
    if len(arms) != 3 or any(x != 3 for arm in arms for x in arm):
        return None
    lens = sorted(len(a) for a in arms)
    if lens[0] == 1 and lens[1] == 1:
        return f"D{n}"
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        return f"E{n}"
    return None


def _affine_label(graph: CoxeterGraph) -> str | None:
    n = graph.rank
    r = n - 1
    edges = _edges(graph)
    labels = sorted(edges.values())
    if n == 2:
        return "A~1" if graph.m[0][1] == INF else None
    if len(edges) == n and all(x == 3 for x in labels):
        return f"A~{r}"
    if not _is_tree(graph):
        return None
    shape = _arms(graph)
    if shape is None:
        # two branch nodes: D~ when every label is 3
        deg = [len(v) for v in _adjacency(graph).values()]
        if all(x == 3 for x in labels) and deg.count(3) == 2 and deg.count(1) == 4:
            return f"D~{r}"
        return None
    branch, arms = shape
    if branch is None:
        path = arms[0]
        if path in ([3, 6], [6, 3]):
            return "G~2"
        if path in ([3, 3, 4, 3], [3, 4, 3, 3]):
            return "F~4"
        if len(path) >= 2 and path[0] == 4 and path[-1] == 4 and all(x == 3 for x in path[1:-1]):
            return f"C~{r}"
        return None
    lens = sorted(len(a) for a in arms)
    if len(arms) == 4 and all(x == 3 for x in labels) and lens == [1, 1, 1, 1]:
        return "D~4"
    if len(arms) != 3:
        return None
    if all(x == 3 for x in labels):
        return {(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}.get(tuple(lens))
    long = max(arms, key=len)
    if labels.count(4) == 1 and len(labels) == r and long[-1] == 4 and lens[:2] == [1, 1]:
        return f"B~{r}"
    return None


def classify(graph: CoxeterGraph, arith: Arithmetic | None = None, mode: str | None = None) -> TypeClass:
    """Spherical, affine or other, with an irreducible-component breakdown."""
    arith = arith or select_arithmetic(graph.off_diagonal_labels(), mode)
    comps = []
    kinds = []
    for idx in graph.components():
        sub = graph.restrict(idx)
        d = _definiteness(gram_form(sub, arith).B, arith)
        if d == "pd":
            kind, label = "spherical", _spherical_label(sub)
        elif d == "psd":
            kind, label = "affine", _affine_label(sub)
        else:
            kind, label = "other", None
        kinds.append(kind)
        comps.append(ComponentType(sub.generators, kind, label))
    if all(k == "spherical" for k in kinds):
        total = "spherical"
    elif all(k in ("spherical", "affine") for k in kinds):
        total = "affine"
    else:
        total = "other"
    return TypeClass(total, tuple(comps))


# --------------------------------------------------------------------------- elements
class GroupElement:
    """A Coxeter group element: reduced word plus action matrix on V.

    ``matrix[i][j]`` is the coefficient of the simple root i in w(alpha_j).
    Equality compares matrices (through the interned id of the owning group).
    """

    __slots__ = ("group", "id", "word", "matrix")

    def __init__(self, group: "CoxeterGroup", ident: int, word: tuple[int, ...], matrix: Matrix) -> None:
        self.group = group
        self.id = ident
        self.word = word
        self.matrix = matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group is self.group:
            return other.id == self.id
        if other.group.graph != self.group.graph:
            return False
        return self.group.matrix_key(self.matrix) == other.group.matrix_key(other.matrix)

    def __hash__(self) -> int:
        return hash(self.word)  # reduced words are canonical (descent stripping is deterministic)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "GroupElement":
        return self.group.inverse(self)

    def word_names(self) -> list[str]:
        return [self.group.graph.generators[i] for i in self.word]

    def __repr__(self) -> str:
        return "GroupElement(" + ("*".join(self.word_names()) or "1") + ")"


@dataclass(frozen=True)
class Enumeration:
    """Elements of W in breadth-first shortlex discovery order, up to a length bound."""

    elements: tuple[GroupElement, ...]
    max_length: int | None
    truncated: bool

    def __len__(self) -> int:
        return len(self.elements)


class CoxeterGroup:
    """The Coxeter group of a graph acting on V through the canonical representation.

    Instances own interning tables and product caches; they are safe to share
    between threads (interning is guarded by a lock).
    """

    def __init__(self, graph: CoxeterGraph, arith: Arithmetic | None = None, mode: str | None = None) -> None:
        self.graph = graph
        self.arith = arith or select_arithmetic(graph.off_diagonal_labels(), mode)
        self.form = gram_form(graph, self.arith)
        n = graph.rank
        self.rank = n
        # twice the form: column update coefficients for right multiplication by s_j
        self._two_b = tuple(tuple(self.arith.norm(2 * self.form.B[j][k]) for k in range(n)) for j in range(n))
        self._lock = threading.RLock()
        self._by_key: dict[Any, GroupElement] = {}
        self._elements: list[GroupElement] = []
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inv_cache: dict[int, int] = {}
        self._enum_cache: dict[int | None, Enumeration] = {}
        self._type: TypeClass | None = None
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        self.identity = self._intern(self.arith_matrix(ident))
        self.generators = tuple(self._intern(self._generator_matrix(s)) for s in range(n))

    # -- basic linear algebra --------------------------------------------------
    def arith_matrix(self, rows: Iterable[Iterable[Any]]) -> Matrix:
        return tuple(tuple(self.arith.norm(x) for x in r) for r in rows)

    def _generator_matrix(self, s: int) -> Matrix:
        n = self.rank
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                v = 1 if i == j else 0
                if i == s:
                    v = v - self._two_b[s][j]
                row.append(v)
            rows.append(row)
        return self.arith_matrix(rows)

    def matrix_key(self, M: Matrix) -> Any:
        key = self.arith.key
        return tuple(key(x) for r in M for x in r)

    def matmul(self, A: Matrix, Bm: Matrix) -> Matrix:
        n = self.rank
        zero = self.arith.is_zero
        out = []
        cols = list(zip(*Bm))
        for i in range(n):
            Ai = A[i]
            row = []
            for j in range(n):
                c = cols[j]
                acc: Any = 0
                for k in range(n):
                    a = Ai[k]
                    if zero(a):
                        continue
                    b = c[k]
                    if zero(b):
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return self.arith_matrix(out)

    def apply(self, w: GroupElement, v: Sequence[Any]) -> tuple[Any, ...]:
        """w(v) for a coefficient vector v over the simple roots."""
        n = self.rank
        zero = self.arith.is_zero
        out = []
        for i in range(n):
            row = w.matrix[i]
            acc: Any = 0
            for k in range(n):
                if not zero(row[k]) and not zero(v[k]):
                    acc = acc + row[k] * v[k]
            out.append(self.arith.norm(acc))
        return tuple(out)

    def sign_of_root(self, v: Sequence[Any]) -> int:
        """+1 for a positive root vector, -1 for a negative one, 0 for the zero vector."""
        for x in v:
            s = self.arith.sign(x)
            if s:
                return s
        return 0

    def _column_negative(self, M: Matrix, j: int) -> bool:
        for i in range(self.rank):
            s = self.arith.sign(M[i][j])
            if s:
                return s < 0
        return False

    def _times_generator(self, M: Matrix, s: int) -> Matrix:
        """M * s_j as a column operation."""
        n = self.rank
        tb = self._two_b[s]
        rows = []
        for i in range(n):
            Mi = M[i]
            ms = Mi[s]
            row = []
            for k in range(n):
                if k == s:
                    row.append(-ms)
                elif self.arith.is_zero(tb[k]) or self.arith.is_zero(ms):
                    row.append(Mi[k])
                else:
                    row.append(Mi[k] - tb[k] * ms)
            rows.append(row)
        return self.arith_matrix(rows)

    def _reduced_word(self, M: Matrix) -> tuple[int, ...]:
        rev = []
        cur = M
        while True:
            j = next((j for j in range(self.rank) if self._column_negative(cur, j)), None)
            if j is None:
                break
            cur = self._times_generator(cur, j)
            rev.append(j)
            if len(rev) > 100000:  # pragma: no cover - guards against a broken backend
                raise RuntimeError("descent stripping did not terminate")
        return tuple(reversed(rev))

    # -- interning --------------------------------------------------------------
    def _intern(self, M: Matrix, word: tuple[int, ...] | None = None) -> GroupElement:
        key = self.matrix_key(M)
        el = self._by_key.get(key)
        if el is not None:
            return el
        if word is None:
            word = self._reduced_word(M)
        with self._lock:
            el = self._by_key.get(key)
            if el is None:
                el = GroupElement(self, len(self._elements), word, M)
                self._elements.append(el)
                self._by_key[key] = el
        return el

    def element(self, ident: int) -> GroupElement:
        return self._elements[ident]

    def from_matrix(self, M: Matrix) -> GroupElement:
        return self._intern(self.arith_matrix(M))

    def from_word(self, word: Iterable[int | str]) -> GroupElement:
        w = self.identity
        for s in word:
            idx = self.graph.generators.index(s) if isinstance(s, str) else int(s)
            w = self.multiply(w, self.generators[idx])
        return w

    # -- group operations -------------------------------------------------------
    def _check(self, *els: GroupElement) -> None:
        for e in els:
            if e.group is not self and e.group.graph != self.graph:
                raise GraphMismatch("elements belong to different Coxeter graphs")

    def _own(self, e: GroupElement) -> GroupElement:
        return e if e.group is self else self._intern(self.arith_matrix(e.matrix))

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a, b)
        a, b = self._own(a), self._own(b)
        key = (a.id, b.id)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return self._elements[hit]
        if len(b.word) == 1:
            M = self._times_generator(a.matrix, b.word[0])
        elif b.id == self.identity.id:
            M = a.matrix
        elif a.id == self.identity.id:
            M = b.matrix
        else:
            M = self.matmul(a.matrix, b.matrix)
        el = self._intern(M)
        self._mul_cache[key] = el.id
        return el

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check(a)
        a = self._own(a)
        hit = self._inv_cache.get(a.id)
        if hit is not None:
            return self._elements[hit]
        M = self.identity.matrix
        for s in reversed(a.word):
            M = self._times_generator(M, s)
        el = self._intern(M, tuple(reversed(a.word)))
        self._inv_cache[a.id] = el.id
        self._inv_cache[el.id] = a.id
        return el

    def product(self, els: Iterable[GroupElement]) -> GroupElement:
        w = self.identity
        for e in els:
            w = self.multiply(w, e)
        return w

    def right_descent(self, w: GroupElement, s: int) -> bool:
        """True iff l(ws) < l(w)."""
        return self._column_negative(w.matrix, s)

    def left_descent(self, w: GroupElement, s: int) -> bool:
        """True iff l(sw) < l(w)."""
        return self._column_negative(self.inverse(w).matrix, s)

    @property
    def type(self) -> TypeClass:
        if self._type is None:
            self._type = classify(self.graph, self.arith)
        return self._type

    def enumerate(self, max_length: int | None = None) -> Enumeration:
        """Breadth-first enumeration of W; a bound is mandatory for infinite groups."""
        if max_length is None and not self.type.spherical:
            raise BoundRequired("W is infinite: a word-length bound is required")
        cached = self._enum_cache.get(max_length)
        if cached is not None:
            return cached
        seen = {self.identity.id}
        out = [self.identity]
        layer = [self.identity]
        length = 0
        truncated = False
        while layer:
            if max_length is not None and length == max_length:
                truncated = any(
                    not self.right_descent(w, s) for w in layer for s in range(self.rank)
                )
                break
            nxt = []
            for w in layer:
                for s in range(self.rank):
                    if self.right_descent(w, s):
                        continue
                    ws = self.multiply(w, self.generators[s])
                    if ws.id not in seen:
                        seen.add(ws.id)
                        nxt.append(ws)
            out.extend(nxt)
            layer = nxt
            length += 1
        res = Enumeration(tuple(out), max_length, truncated)
        self._enum_cache[max_length] = res
        return res


# --------------------------------------------------------------------------- module-level API
def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.group is not b.group and a.group.graph != b.group.graph:
        raise GraphMismatch("elements belong to different Coxeter graphs")
    return a.group.multiply(a, b)


def length(w: GroupElement) -> int:
    return len(w.word)


def _indices(group: CoxeterGroup, X: Iterable[int | str]) -> list[int]:
    return sorted(group.graph.generators.index(s) if isinstance(s, str) else int(s) for s in X)


def min_coset_rep(w: GroupElement, X: Iterable[int | str]) -> GroupElement:
    """The unique (empty, X)-minimal element of the left coset w W_X."""
    g = w.group
    Xi = _indices(g, X)
    changed = True
    while changed:
        changed = False
        for s in Xi:
            if g.right_descent(w, s):
                w = g.multiply(w, g.generators[s])
                changed = True
    return w


def min_double_coset_rep(w: GroupElement, Y: Iterable[int | str], X: Iterable[int | str]) -> GroupElement:
    """The unique (Y, X)-minimal element of W_Y w W_X."""
    g = w.group
    Yi, Xi = _indices(g, Y), _indices(g, X)
    changed = True
    while changed:
        changed = False
        for s in Xi:
            if g.right_descent(w, s):
                w = g.multiply(w, g.generators[s])
                changed = True
        for s in Yi:
            if g.left_descent(w, s):
                w = g.multiply(g.generators[s], w)
                changed = True
    return w


def prod_left(x: Any, y: Any, n: int) -> list[Any]:
    """The alternating sequence x y x ... of length n (leftmost letter x)."""
    return [x if k % 2 == 0 else y for k in range(n)]


def prod_right(x: Any, y: Any, n: int) -> list[Any]:
    """The alternating sequence ... x y of length n (rightmost letter y)."""
    return list(reversed(prod_left(y, x, n)))


def element_order(group: CoxeterGroup, w: GroupElement, cap: int = 1000) -> float:
    """Order of w, or ``math.inf`` when it exceeds ``cap``."""
    p = w
    for k in range(1, cap + 1):
        if p.id == group.identity.id:
            return k
        p = group.multiply(p, w)
    return math.inf
