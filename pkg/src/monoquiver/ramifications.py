"""Omega paths, the ramifications graph and its component algebras."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .algebra import MonomialAlgebra
from .errors import AuditError
from .quiver import Path, Quiver, cyclic_quiver_cycle
from .structure import MaximalPathSet, Verdict, maximal_paths


def _through(q: Quiver, v) -> bool:
    return len(q.out_arrows(v)) == 1 and len(q.in_arrows(v)) == 1


def omega_path(a, quiver: Quiver) -> Path:
    """Longest path through ``a`` whose inner vertices have one arrow in and one out.

    On a quiver that is a single oriented cycle every arrow gets the same
    covering cycle. Depends on the quiver only, never on the relations.
    """
    cycle = cyclic_quiver_cycle(quiver)
    if cycle is not None:
        return cycle
    arrows = [a]
    used = {a}
    while _through(quiver, quiver.source(arrows[0])):
        prev = quiver.in_arrows(quiver.source(arrows[0]))[0]
        if prev in used:
            raise AssertionError(f"omega extension of {a} revisits {prev}")
        arrows.insert(0, prev)
        used.add(prev)
    while _through(quiver, quiver.target(arrows[-1])):
        nxt = quiver.out_arrows(quiver.target(arrows[-1]))[0]
        if nxt in used:
            raise AssertionError(f"omega extension of {a} revisits {nxt}")
        arrows.append(nxt)
        used.add(nxt)
    return quiver.path(arrows)


@dataclass(frozen=True)
class Component:
    index: int
    vertices: tuple
    edges: tuple

    def __contains__(self, omega):
        return omega in self.vertices

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @property
    def arrows(self):
        return tuple(sorted({a for w in self.vertices for a in w.arrows}))


@dataclass(frozen=True)
class RamificationsGraph:
    omega_of: dict
    vertices: tuple
    edges: tuple
    components: tuple

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def component_of(self, arrow) -> Component:
        omega = self.omega_of[arrow]
        return next(c for c in self.components if omega in c)


def weak_components(vertices, edges) -> tuple:
    """Weakly connected components, ordered by their smallest member."""
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    parts = sorted((tuple(sorted(c)) for c in nx.weakly_connected_components(g)))
    out = []
    for index, part in enumerate(parts):
        members = set(part)
        inner = tuple(sorted(e for e in edges if e[0] in members))
        out.append(Component(index, part, inner))
    return tuple(out)


def ramifications_graph(algebra: MonomialAlgebra) -> RamificationsGraph:
    algebra.require_analyzable()
    q = algebra.quiver
    omega_of = {a: omega_path(a, q) for a in q.arrow_ids}
    vertices = tuple(sorted(set(omega_of.values())))
    edges = []
    for w in vertices:
        for v in vertices:
            if w == v or w.target != v.source:
                continue
            joint = q.path((w.arrows[-1], v.arrows[0]))
            if not algebra.is_zero(joint):
                edges.append((w, v))
    edges = tuple(sorted(edges))
    return RamificationsGraph(omega_of, vertices, edges, weak_components(vertices, edges))


@dataclass(frozen=True)
class InducedComponentAlgebra:
    component: Component
    quiver: Quiver
    relations: tuple
    algebra: MonomialAlgebra
    maximal: MaximalPathSet


def induced_component_algebra(component: Component, algebra: MonomialAlgebra) -> InducedComponentAlgebra:
    q_n = algebra.quiver.subquiver(component.arrows)
    arrows = set(q_n.arrow_ids)
    r_n = tuple(r for r in algebra.relations if set(r.arrows) <= arrows)
    a_n = MonomialAlgebra(q_n, r_n, f"{algebra.name}[N{component.index}]")
    a_n.require_admissible()
    return InducedComponentAlgebra(component, q_n, r_n, a_n, maximal_paths(a_n))


@dataclass(frozen=True)
class Decomposition:
    maximal: MaximalPathSet
    components: tuple  # InducedComponentAlgebra per component
    assignment: dict  # maximal path of A -> component index


def decompose_maximal_paths(algebra: MonomialAlgebra, graph: Optional[RamificationsGraph] = None) -> Decomposition:
    """Split the maximal paths of ``algebra`` over the ramification components.

    Audits that the images of the component maximal paths partition the
    maximal paths of the whole algebra.
    """
    graph = graph or ramifications_graph(algebra)
    whole = maximal_paths(algebra)
    induced = tuple(induced_component_algebra(c, algebra) for c in graph.components)
    assignment = {}
    for part in induced:
        for m in part.maximal:
            if m not in whole:
                raise AuditError(f"{m} is maximal in component {part.component.index} but not in A")
            if m in assignment:
                raise AuditError(f"{m} is maximal in two components")
            assignment[m] = part.component.index
    missing = [m for m in whole if m not in assignment]
    if missing:
        raise AuditError(f"maximal paths {missing} lie in no component")
    if len(whole) != sum(len(p.maximal) for p in induced):
        raise AuditError("maximal path counts do not add up")
    return Decomposition(whole, induced, assignment)


def is_unilaterally_connected(component: Component) -> Verdict:
    """Every pair of vertices is joined by a directed path one way or the other."""
    g = component.digraph()
    reach = {v: nx.descendants(g, v) for v in component.vertices}
    for i, v in enumerate(component.vertices):
        for w in component.vertices[i + 1:]:
            if w not in reach[v] and v not in reach[w]:
                return Verdict(False, (v, w))
    return Verdict(True)


@dataclass(frozen=True)
class ComponentShape:
    kind: str  # nakayama_path | nakayama_cycle | other
    cycle_flags: dict  # omega path -> whether it is a cycle in Q


def component_shape(component: Component) -> ComponentShape:
    g = component.digraph()
    flags = {w: w.source == w.target for w in component.vertices}
    ins = [g.in_degree(v) for v in g]
    outs = [g.out_degree(v) for v in g]
    if all(d == 1 for d in ins) and all(d == 1 for d in outs):
        kind = "nakayama_cycle"
    elif max(ins) <= 1 and max(outs) <= 1 and nx.is_directed_acyclic_graph(g):
        kind = "nakayama_path"
    else:
        kind = "other"
    return ComponentShape(kind, flags)
