"""Monomial algebras kQ/I with I generated by a minimal set of paths."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx

from .errors import (
    DisconnectedQuiverError,
    InvalidPathError,
    InvalidRelationError,
    NotAdmissibleError,
)
from .matcher import FactorAutomaton
from .quiver import Path, Quiver, divides, reverse


def normalize_relations(relations: Iterable, quiver: Optional[Quiver] = None):
    """Drop every relation that another relation divides.

    Returns ``(minimal, removed)``, both sorted. Relations may be given as
    :class:`Path` objects or, together with ``quiver``, as arrow-id
    sequences. Pruning by divisibility is confluent, so the input order never
    matters.
    """
    paths = []
    for r in relations:
        if not isinstance(r, Path):
            if quiver is None:
                raise InvalidRelationError("arrow sequences need a quiver to be checked")
            try:
                r = quiver.path(r)
            except InvalidPathError as exc:
                raise InvalidRelationError(str(exc)) from None
        elif quiver is not None:
            try:
                quiver.path(r.arrows)
            except InvalidPathError as exc:
                raise InvalidRelationError(str(exc)) from None
        if len(r) < 2:
            raise InvalidRelationError(f"relation length must be >= 2, got {r}")
        paths.append(r)
    unique = sorted(set(paths))
    minimal, removed = [], []
    for r in unique:
        if any(other != r and divides(other, r) for other in unique):
            removed.append(r)
        else:
            minimal.append(r)
    duplicates = len(paths) - len(unique)
    if duplicates:
        counts = Counter(paths)
        removed.extend(sorted(r for r, c in counts.items() for _ in range(c - 1)))
    return minimal, removed


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    witness: Optional[Path] = None

    def __bool__(self):
        return self.ok


class MonomialAlgebra:
    """The bound quiver algebra kQ/<R> for a set R of paths of length >= 2.

    R is normalized on construction (``removed_relations`` keeps what was
    dropped). Construction does not require admissibility; operations that
    need a finite catalog of nonzero paths raise :class:`NotAdmissibleError`.
    Instances are treated as immutable.
    """

    def __init__(self, quiver: Quiver, relations: Iterable = (), name: str = "algebra"):
        self.quiver = quiver
        self.name = name
        minimal, removed = normalize_relations(relations, quiver)
        self.relations = tuple(minimal)
        self.removed_relations = tuple(removed)
        self.matcher = FactorAutomaton(r.arrows for r in self.relations)

    def __repr__(self):
        rels = ", ".join(map(str, self.relations))
        return f"MonomialAlgebra({self.name!r}, {self.quiver!r}, R={{{rels}}})"

    def path(self, arrows=(), vertex=None) -> Path:
        return self.quiver.path(arrows, vertex)

    def is_zero(self, p: Path) -> bool:
        return self.matcher.contains_any(p.arrows)

    def zero_witness(self, p: Path) -> Optional[Path]:
        """A relation dividing ``p``, or None when ``p`` is nonzero."""
        hit = self.matcher.first_match(p.arrows)
        return None if hit is None else self.relations[hit[1]]

    @cached_property
    def admissibility(self) -> Admissibility:
        graph = self._avoidance_graph()
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            return Admissibility(True)
        arrows = [graph.edges[u, v]["arrow"] for u, v in cycle]
        return Admissibility(False, self.quiver.path(arrows))

    def _avoidance_graph(self) -> nx.DiGraph:
        # nodes are (vertex, automaton state); walks are relation-avoiding paths
        m = self.matcher
        graph = nx.DiGraph()
        stack = [(v, m.ROOT) for v in self.quiver.vertices]
        graph.add_nodes_from(stack)
        seen = set(stack)
        while stack:
            v, state = stack.pop()
            for a in self.quiver.out_arrows(v):
                nxt = m.step(state, a)
                if m.accepting(nxt):
                    continue
                node = (self.quiver.target(a), nxt)
                graph.add_edge((v, state), node, arrow=a)
                if node not in seen:
                    seen.add(node)
                    stack.append(node)
        return graph

    def require_admissible(self):
        adm = self.admissibility
        if not adm.ok:
            raise NotAdmissibleError(
                f"{self.name}: infinitely many nonzero paths, e.g. powers of {adm.witness}",
                adm.witness,
            )

    def require_connected(self):
        if not self.quiver.is_connected():
            raise DisconnectedQuiverError(f"{self.name}: the quiver is not connected")

    def require_analyzable(self):
        self.require_connected()
        self.require_admissible()

    @cached_property
    def nonzero_paths(self) -> tuple:
        """All nontrivial nonzero paths in lexicographic arrow order."""
        self.require_admissible()
        q, m = self.quiver, self.matcher
        found = []

        def extend(arrows, state, end):
            for a in q.out_arrows(end):
                nxt = m.step(state, a)
                if m.accepting(nxt):
                    continue
                word = arrows + (a,)
                found.append(Path(word, q.source(word[0]), q.target(a)))
                extend(word, nxt, q.target(a))

        for a in q.arrow_ids:
            state = m.step(m.ROOT, a)
            if m.accepting(state):
                continue
            found.append(q.arrow_path(a))
            extend((a,), state, q.target(a))
        return tuple(sorted(found))

    @cached_property
    def opposite(self) -> "MonomialAlgebra":
        return MonomialAlgebra(
            self.quiver.opposite(), [reverse(r) for r in self.relations], self.name + "^op"
        )

    @cached_property
    def _suffix_counts(self):
        counts = Counter()
        for w in self.nonzero_paths:
            for k in range(len(w)):
                counts[w.arrows[k:]] += 1
        return counts

    @cached_property
    def _prefix_counts(self):
        counts = Counter()
        for w in self.nonzero_paths:
            for k in range(1, len(w) + 1):
                counts[w.arrows[:k]] += 1
        return counts

    @cached_property
    def _ending_counts(self):
        return Counter(w.target for w in self.nonzero_paths)

    @cached_property
    def _starting_counts(self):
        return Counter(w.source for w in self.nonzero_paths)

    def dim_left_ideal(self, p: Path) -> int:
        """dim Ap: nonzero paths r.p, the trivial r included."""
        if p.is_trivial:
            return 1 + self._ending_counts[p.source]
        return self._suffix_counts[p.arrows]

    def dim_right_ideal(self, p: Path) -> int:
        """dim pA: nonzero paths p.r, the trivial r included."""
        if p.is_trivial:
            return 1 + self._starting_counts[p.source]
        return self._prefix_counts[p.arrows]

    def dimension(self) -> int:
        return len(self.quiver.vertices) + len(self.nonzero_paths)


def is_zero(p: Path, algebra: MonomialAlgebra) -> bool:
    return algebra.is_zero(p)


def validate_admissibility(algebra: MonomialAlgebra) -> Admissibility:
    return algebra.admissibility


def enumerate_nonzero_paths(algebra: MonomialAlgebra) -> tuple:
    return algebra.nonzero_paths
