"""Finite quivers and their paths.

Paths compose left to right: ``compose(u, v)`` is defined when the target of
``u`` is the source of ``v``. Identifiers of vertices and arrows are opaque
strings, ordered lexicographically wherever a canonical order is needed.
Lengths are arrow counts, so a trivial path has length 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import CompositionError, InvalidPathError, QuiverError


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """An arrow sequence together with its endpoints.

    Identity is structural. The dataclass ordering compares arrow tuples
    first, which is the lexicographic catalog order used for every
    deterministic listing.
    """

    arrows: tuple
    source: str
    target: str

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    @property
    def is_cycle(self):
        return bool(self.arrows) and self.source == self.target

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)

    def __repr__(self):
        return f"Path({self})"


def trivial_path(vertex) -> Path:
    return Path((), str(vertex), str(vertex))


def compose(u: Path, v: Path) -> Path:
    if u.target != v.source:
        raise CompositionError(
            f"cannot compose {u} (ends at {u.target}) with {v} (starts at {v.source})"
        )
    return Path(u.arrows + v.arrows, u.source, v.target)


def reverse(p: Path) -> Path:
    """The same path read in the opposite quiver."""
    return Path(tuple(reversed(p.arrows)), p.target, p.source)


def occurrences(u: Path, v: Path) -> list:
    """Offsets at which the arrows of ``u`` occur contiguously in ``v``."""
    if u.is_trivial:
        raise ValueError("divisibility is only defined for nontrivial divisors")
    n, m = len(u), len(v)
    return [o for o in range(m - n + 1) if v.arrows[o:o + n] == u.arrows]


def divides(u: Path, v: Path) -> bool:
    return bool(occurrences(u, v))


class Quiver:
    """A finite directed multigraph with named vertices and arrows."""

    def __init__(self, vertices: Iterable, arrows: Iterable):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex identifiers")
        vset = set(self.vertices)
        self._arrows = {}
        for spec in arrows:
            arrow = spec if isinstance(spec, Arrow) else Arrow(*map(str, spec))
            if arrow.id in self._arrows:
                raise QuiverError(f"duplicate arrow identifier {arrow.id!r}")
            for end in (arrow.source, arrow.target):
                if end not in vset:
                    raise QuiverError(f"arrow {arrow.id!r} uses unknown vertex {end!r}")
            self._arrows[arrow.id] = arrow
        self.arrow_ids = tuple(sorted(self._arrows))
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrow_ids:
            self._out[self._arrows[a].source].append(a)
            self._in[self._arrows[a].target].append(a)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrow_ids)} arrows)"

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self._arrows == other._arrows

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self._arrows.values())))

    @property
    def arrows(self):
        """Arrow records in declaration-independent (sorted id) order."""
        return tuple(self._arrows[a] for a in self.arrow_ids)

    def arrow(self, a) -> Arrow:
        try:
            return self._arrows[a]
        except KeyError:
            raise InvalidPathError(f"unknown arrow {a!r}") from None

    def source(self, a):
        return self.arrow(a).source

    def target(self, a):
        return self.arrow(a).target

    def out_arrows(self, v):
        return tuple(self._out[v])

    def in_arrows(self, v):
        return tuple(self._in[v])

    def path(self, arrows: Sequence = (), vertex=None) -> Path:
        """Build and validate a path.

        ``arrows`` may be a sequence of arrow ids or, for convenience, a
        whitespace- or dot-separated string. An empty sequence needs
        ``vertex`` and gives the trivial path there.
        """
        if isinstance(arrows, Path):
            arrows = arrows.arrows
        if isinstance(arrows, str):
            arrows = arrows.replace(".", " ").split()
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None or str(vertex) not in self._out:
                raise InvalidPathError("a trivial path needs a vertex of the quiver")
            return trivial_path(vertex)
        for a, b in zip(arrows, arrows[1:]):
            if self.target(a) != self.source(b):
                raise InvalidPathError(
                    f"arrows {a!r} and {b!r} do not compose in {'.'.join(arrows)}"
                )
        return Path(arrows, self.source(arrows[0]), self.target(arrows[-1]))

    def factor(self, p: Path, start: int, stop: int) -> Path:
        """The subpath of ``p`` made of arrows ``start``..``stop - 1``."""
        if start == stop:
            vertex = p.source if start == 0 else self.target(p.arrows[start - 1])
            return trivial_path(vertex)
        arrows = p.arrows[start:stop]
        return Path(arrows, self.source(arrows[0]), self.target(arrows[-1]))

    def arrow_path(self, a) -> Path:
        arrow = self.arrow(a)
        return Path((a,), arrow.source, arrow.target)

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.id)
        return g

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return nx.is_weakly_connected(self.graph())

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [(a.id, a.target, a.source) for a in self.arrows])

    def subquiver(self, arrow_ids: Iterable) -> "Quiver":
        """Subquiver spanned by the given arrows and their endpoints."""
        chosen = sorted(set(arrow_ids))
        ends = {v for a in chosen for v in (self.source(a), self.target(a))}
        return Quiver([v for v in self.vertices if v in ends], [self.arrow(a) for a in chosen])


def arrow_stars(i, quiver: Quiver):
    """Arrows starting at ``i`` and arrows ending at ``i``."""
    return quiver.out_arrows(str(i)), quiver.in_arrows(str(i))


def cyclic_quiver_cycle(quiver: Quiver) -> Optional[Path]:
    """The covering cycle of a quiver that is a single oriented cycle.

    Starts at the smallest arrow id. Returns None for any other quiver.
    """
    if not quiver.arrow_ids or not quiver.is_connected():
        return None
    for v in quiver.vertices:
        if len(quiver.out_arrows(v)) != 1 or len(quiver.in_arrows(v)) != 1:
            return None
    first = quiver.arrow_ids[0]
    arrows = [first]
    while True:
        nxt = quiver.out_arrows(quiver.target(arrows[-1]))[0]
        if nxt == first:
            break
        arrows.append(nxt)
    return quiver.path(arrows)
