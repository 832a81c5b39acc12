"""Graphviz DOT export for the quiver, the ramifications graph and Q^L."""
from __future__ import annotations

from .algebra import MonomialAlgebra
from .homology import relations_quiver
from .ramifications import ramifications_graph

GRAPHS = ("quiver", "ramifications", "relations")


def _q(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _cluster(lines, index, label, nodes):
    lines.append(f"  subgraph cluster_{index} {{")
    lines.append(f"    label={_q(label)};")
    for n in nodes:
        lines.append(f"    {_q(n)};")
    lines.append("  }")


def _quiver_dot(algebra):
    q = algebra.quiver
    lines = [f"digraph {_q(algebra.name)} {{"]
    for v in q.vertices:
        lines.append(f"  {_q(v)};")
    for a in q.arrows:
        lines.append(f"  {_q(a.source)} -> {_q(a.target)} [label={_q(a.id)}];")
    lines.append("}")
    return lines


def _ramifications_dot(algebra):
    graph = ramifications_graph(algebra)
    lines = [f"digraph {_q(algebra.name + ' ramifications')} {{"]
    for comp in graph.components:
        _cluster(lines, comp.index, f"N{comp.index}", comp.vertices)
    for a, b in graph.edges:
        lines.append(f"  {_q(a)} -> {_q(b)};")
    lines.append("}")
    return lines


def _relations_dot(algebra):
    ql = relations_quiver(algebra)
    lines = [f"digraph {_q(algebra.name + ' relations')} {{"]
    for index, (part, kind) in enumerate(ql.components):
        _cluster(lines, index, kind, part)
    for q, p in ql.arrows:
        lines.append(f"  {_q(q)} -> {_q(p)};")
    lines.append("}")
    return lines


def export_dot(algebra: MonomialAlgebra, which: str = "quiver") -> str:
    if which not in GRAPHS:
        raise ValueError(f"unknown graph {which!r}; choose from {', '.join(GRAPHS)}")
    algebra.require_analyzable()
    build = {"quiver": _quiver_dot, "ramifications": _ramifications_dot, "relations": _relations_dot}[which]
    return "\n".join(build(algebra)) + "\n"
