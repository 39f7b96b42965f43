"""Whitehead graphs of cyclic words on the vertices A+, A-, B+, B-.

An adjacent letter pair ``xy`` (wraparound included) contributes one edge
between vertex ``x`` and vertex ``y^-1``; letter ``A`` is vertex ``A+`` and
``A^-1`` is ``A-``.  Only the six multiplicities are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .automorphisms import WhiteheadMove
from .words import as_cyclic

VERTICES = ("A+", "A-", "B+", "B-")
EDGE_CLASSES = ("A+A-", "B+B-", "A+B+", "A+B-", "A-B+", "A-B-")
_ENDPOINTS = {name: (name[:2], name[2:]) for name in EDGE_CLASSES}


def _edge_class(u: str, v: str) -> str:
    key = u + v if VERTICES.index(u) < VERTICES.index(v) else v + u
    if key not in _ENDPOINTS:
        raise ValueError(f"loop at {u}: word is not cyclically reduced")
    return key


@dataclass(frozen=True)
class WhiteheadGraph:
    multiplicities: tuple  # counts in EDGE_CLASSES order

    @classmethod
    def from_dict(cls, mult: dict) -> "WhiteheadGraph":
        unknown = set(mult) - set(EDGE_CLASSES)
        if unknown:
            raise ValueError(f"unknown edge classes {sorted(unknown)}")
        counts = tuple(int(mult.get(k, 0)) for k in EDGE_CLASSES)
        if any(c < 0 for c in counts):
            raise ValueError("multiplicities must be nonnegative")
        return cls(counts)

    def __getitem__(self, key: str) -> int:
        return self.multiplicities[EDGE_CLASSES.index(key)]

    def as_dict(self) -> dict:
        return dict(zip(EDGE_CLASSES, self.multiplicities))

    @property
    def edge_count(self) -> int:
        return sum(self.multiplicities)

    def degree(self, v: str) -> int:
        return sum(c for k, c in zip(EDGE_CLASSES, self.multiplicities) if v in _ENDPOINTS[k])

    def active_vertices(self) -> tuple:
        return tuple(v for v in VERTICES if self.degree(v) > 0)

    def remove(self, *classes: str) -> "WhiteheadGraph":
        """Delete one edge from each named class (classes must be nonempty)."""
        counts = list(self.multiplicities)
        for k in classes:
            i = EDGE_CLASSES.index(k)
            if counts[i] == 0:
                raise ValueError(f"no {k} edge to delete")
            counts[i] -= 1
        return WhiteheadGraph(tuple(counts))


def _vertex(letter_gen: str, exp_sign: int) -> str:
    return letter_gen + ("+" if exp_sign > 0 else "-")


def build(*words) -> WhiteheadGraph:
    """Whitehead graph of one or more nonempty cyclic words.

    >>> build("A^3B^2").as_dict()
    {'A+A-': 2, 'B+B-': 1, 'A+B+': 0, 'A+B-': 1, 'A-B+': 1, 'A-B-': 0}
    """
    if not words:
        raise ValueError("build needs at least one word")
    counts = dict.fromkeys(EDGE_CLASSES, 0)
    for w in words:
        syls = as_cyclic(w).syllables
        if not syls:
            raise ValueError("the identity word has no Whitehead graph")
        n = len(syls)
        for i, (gen, exp) in enumerate(syls):
            inner = abs(exp) - 1 if n > 1 else abs(exp)
            counts[gen + "+" + gen + "-"] += inner
            if n > 1:
                ngen, nexp = syls[(i + 1) % n]
                x = _vertex(gen, exp)
                y_inv = _vertex(ngen, -nexp)
                counts[_edge_class(x, y_inv)] += 1
    return WhiteheadGraph(tuple(counts[k] for k in EDGE_CLASSES))


def _components(g: WhiteheadGraph, vertices: Iterable[str]) -> int:
    verts = list(vertices)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for k, c in zip(EDGE_CLASSES, g.multiplicities):
        u, v = _ENDPOINTS[k]
        if c and u in parent and v in parent:
            parent[find(u)] = find(v)
    return len({find(v) for v in verts})


def _connected_on(g: WhiteheadGraph, vertices) -> bool:
    return _components(g, vertices) <= 1


def _cut_vertices_on(g: WhiteheadGraph, vertices) -> frozenset:
    verts = tuple(vertices)
    if not _connected_on(g, verts):
        return frozenset()
    return frozenset(
        v for v in verts if not _connected_on(g, [u for u in verts if u != v])
    )


def is_connected(g: WhiteheadGraph) -> bool:
    """Connectivity over vertices that carry at least one edge."""
    return _connected_on(g, g.active_vertices())


def cut_vertices(g: WhiteheadGraph) -> frozenset:
    """Cut vertices of a connected graph; empty when disconnected."""
    return _cut_vertices_on(g, g.active_vertices())


class WeightForm(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    @property
    def length(self) -> int:
        return 2 * self.a + 2 * self.b + self.c + self.d


def weight_form(g: WhiteheadGraph) -> Optional[WeightForm]:
    """The ``(a, b, c, d)`` weights when the involution-symmetric pattern holds.

    ``a`` counts A+B- (= A-B+), ``b`` counts A+B+ (= A-B-), ``c`` and ``d``
    count A+A- and B+B-.
    """
    if g["A+B-"] != g["A-B+"] or g["A+B+"] != g["A-B-"]:
        return None
    return WeightForm(g["A+B-"], g["A+B+"], g["A+A-"], g["B+B-"])


def t_move_lengths(wf: WeightForm) -> dict:
    """Cyclic length after each T-move for a graph in weight form."""
    a, b, c, d = wf
    return {
        WhiteheadMove.A_AB: 3 * a + b + 2 * c + d,
        WhiteheadMove.A_Ab: a + 3 * b + 2 * c + d,
        WhiteheadMove.B_BA: 3 * a + b + c + 2 * d,
        WhiteheadMove.B_Ba: a + 3 * b + c + 2 * d,
    }


def minimality_and_level(wf: WeightForm) -> tuple[bool, frozenset]:
    """Whether the weights are length-minimal, and which T-moves are level.

    >>> minimality_and_level(WeightForm(1, 0, 2, 1))
    (True, frozenset({<WhiteheadMove.B_Ba: ('B>Ba', 3)>}))
    >>> minimality_and_level(WeightForm(2, 0, 1, 5))[0]
    False
    """
    a, b, c, d = wf
    minimal = abs(a - b) <= c and abs(a - b) <= d
    if not minimal:
        return False, frozenset()
    lengths = t_move_lengths(wf)
    return True, frozenset(m for m, n in lengths.items() if n == wf.length)


# deletions of involution-invariant edge sets: cross pairs, then singletons
_INVARIANT_DELETIONS = (
    ("A+B-", "A-B+"),
    ("A+B+", "A-B-"),
    ("A+A-",),
    ("B+B-",),
)


def is_robust(g: WhiteheadGraph) -> bool:
    """Every admissible invariant deletion leaves a 2-connected graph.

    Deletions from empty classes are skipped.  Connectivity after a deletion
    is judged on the vertices that carried edges before it.
    """
    verts = g.active_vertices()
    if not _connected_on(g, verts) or _cut_vertices_on(g, verts):
        return False
    for classes in _INVARIANT_DELETIONS:
        if any(g[k] == 0 for k in classes):
            continue
        h = g.remove(*classes)
        if not _connected_on(h, verts) or _cut_vertices_on(h, verts):
            return False
    return True


def graph_from_weights(wf: WeightForm) -> WhiteheadGraph:
    a, b, c, d = wf
    return WhiteheadGraph.from_dict(
        {"A+A-": c, "B+B-": d, "A+B-": a, "A-B+": a, "A+B+": b, "A-B-": b}
    )


def involution_symmetric(g: WhiteheadGraph) -> bool:
    return g["A+B-"] == g["A-B+"] and g["A+B+"] == g["A-B-"]


def is_disconnected_or_cut(g: WhiteheadGraph) -> bool:
    """Judged on all four vertices, so an isolated vertex counts as disconnected.

    >>> is_disconnected_or_cut(build("A^3"))
    True
    """
    return not _connected_on(g, VERTICES) or bool(_cut_vertices_on(g, VERTICES))


__all__ = [
    "VERTICES", "EDGE_CLASSES", "WhiteheadGraph", "WeightForm", "build",
    "is_connected", "cut_vertices", "weight_form", "minimality_and_level",
    "is_robust", "graph_from_weights", "t_move_lengths", "involution_symmetric",
    "is_disconnected_or_cut",
]
