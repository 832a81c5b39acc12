"""JSON analysis reports.

The schema has five top-level keys (algebra, structural, ramifications,
homology, diagnostics). Paths are written as dot-joined arrow ids, trivial
paths as ``e_<vertex>``. Keys that do not apply are left out rather than set
to null, and verdicts that need hypotheses the algebra lacks are written as
``{"applicable": false, "reason": ...}``.
"""
from __future__ import annotations

import json
import math

from .algebra import MonomialAlgebra
from .errors import HypothesisError
from .homology import (
    ConditionalVerdict,
    homological_report,
    overlaps,
    projective_dimension,
    stable_category_shape,
    syzygy_audit,
)
from .ramifications import (
    component_shape,
    decompose_maximal_paths,
    is_unilaterally_connected,
    ramifications_graph,
)
from .structure import (
    Branching,
    SharedArrow,
    is_quadratic,
    is_special_multiserial,
    is_ump,
    structure_verdict,
    ump_criterion,
)


def _s(p) -> str:
    return str(p)


def _paths(ps) -> list:
    return [str(p) for p in ps]


def _witness(w) -> dict:
    if isinstance(w, SharedArrow):
        return {"first": _s(w.first), "second": _s(w.second), "shared_arrow": w.arrow}
    if isinstance(w, Branching):
        return {"arrow": w.arrow, "side": w.side, "continuations": list(w.arrows)}
    raise TypeError(f"no serializer for witness {w!r}")


def _verdict(v) -> dict:
    out = {"holds": v.holds}
    if not v.holds:
        out["witness"] = _witness(v.witness)
    return out


def _conditional(v: ConditionalVerdict) -> dict:
    if not v.applicable:
        return {"applicable": False, "reason": v.reason}
    out = {"applicable": True, "holds": v.holds}
    if v.bound is not None:
        out["bound"] = v.bound
    return out


def _criterion(algebra) -> dict:
    try:
        result = ump_criterion(algebra)
    except HypothesisError as exc:
        return {"applicable": False, "reason": str(exc)}
    cycles = {_s(r): _s(u) for r, u in result.witnesses.items() if u is not None}
    out = {"applicable": True, "holds": result.holds, "cycles": cycles}
    if not result.holds:
        out["relations_without_cycle"] = [_s(r) for r, u in result.witnesses.items() if u is None]
    return out


def _nakayama(cls) -> dict:
    out = {"class": cls.tag}
    if cls.tag == "selfinjective":
        out.update(n=cls.n, m=cls.m, ump=cls.ump)
    return out


def _algebra_section(algebra: MonomialAlgebra) -> dict:
    q = algebra.quiver
    out = {
        "name": algebra.name,
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "source": a.source, "target": a.target} for a in q.arrows],
        "relations": _paths(algebra.relations),
        "dimension": algebra.dimension(),
        "nonzero_paths": len(algebra.nonzero_paths),
    }
    if algebra.removed_relations:
        out["removed_relations"] = _paths(algebra.removed_relations)
    return out


def _structural_section(algebra: MonomialAlgebra) -> dict:
    sv = structure_verdict(algebra)
    return {
        "ump": _verdict(sv.ump),
        "special_multiserial": _verdict(sv.special_multiserial),
        "quadratic": sv.quadratic,
        "nakayama": _nakayama(sv.nakayama),
        "maximal_paths": _paths(sv.maximal),
        "ump_criterion": _criterion(algebra),
    }


def _ramifications_section(algebra: MonomialAlgebra) -> dict:
    graph = ramifications_graph(algebra)
    decomposition = decompose_maximal_paths(algebra, graph)
    components = []
    for part in decomposition.components:
        comp = part.component
        shape = component_shape(comp)
        uni = is_unilaterally_connected(comp)
        entry = {
            "index": comp.index,
            "omega_paths": _paths(comp.vertices),
            "edges": [[_s(a), _s(b)] for a, b in comp.edges],
            "shape": shape.kind,
            "cycles": {_s(w): flag for w, flag in shape.cycle_flags.items()},
            "unilaterally_connected": {"holds": uni.holds},
            "relations": _paths(part.relations),
            "maximal_paths": _paths(part.maximal),
            "structural": {
                "ump": _verdict(is_ump(part.algebra)),
                "special_multiserial": _verdict(is_special_multiserial(part.algebra)),
                "quadratic": is_quadratic(part.algebra),
                "cm_free": homological_report(part.algebra).cm_free,
            },
        }
        if not uni.holds:
            entry["unilaterally_connected"]["witness"] = _paths(uni.witness)
        components.append(entry)
    return {
        "omega": {a: _s(w) for a, w in sorted(graph.omega_of.items())},
        "edges": [[_s(a), _s(b)] for a, b in graph.edges],
        "components": components,
        "decomposition": {
            "maximal_paths": len(decomposition.maximal),
            "per_component": [len(p.maximal) for p in decomposition.components],
        },
    }


def _pd(value):
    return "infinite" if value == math.inf else value


def _homology_section(algebra: MonomialAlgebra, hr) -> dict:
    ql = hr.relations_quiver
    out = {
        "cm_free": hr.cm_free,
        "perfect_paths": _paths(hr.perfect.paths),
        "relation_cycles": [_paths(c) for c in hr.perfect.cycles],
        "perfect_pairs": [[_s(p), _s(q)] for p, q in hr.perfect.pairs],
        "relations_quiver": {
            "vertices": _paths(ql.vertices),
            "arrows": [[_s(q), _s(p)] for q, p in ql.arrows],
            "components": [{"vertices": _paths(part), "kind": kind} for part, kind in ql.components],
            "d": ql.d,
            "unbounded": [_s(v) for v in ql.vertices if not ql.bounded[v]],
        },
        "projective_dimension": {_s(v): _pd(projective_dimension(v, algebra)) for v in ql.vertices},
        "gorenstein": _conditional(hr.gorenstein),
        "finite_global_dimension": _conditional(hr.finite_global_dimension),
        "overlaps": [
            {"p": _s(o.p), "q": _s(o.q), "x": _s(o.x), "kind": o.kind} for o in overlaps(algebra, hr.perfect)
        ],
    }
    try:
        shape = stable_category_shape(algebra)
    except HypothesisError as exc:
        out["stable_category"] = {"applicable": False, "reason": str(exc)}
    else:
        stable = {"applicable": True, "kind": shape.kind, "degrees": list(shape.degrees)}
        if shape.offending is not None:
            stable["offending"] = _s(shape.offending)
        out["stable_category"] = stable
    return out


def _diagnostics_section(algebra: MonomialAlgebra, hr) -> dict:
    agreement = hr.diagnostics["perfect_components"]
    audit = syzygy_audit(algebra)
    out = {
        "cm_free_by_components": hr.diagnostics["cm_free_by_components"],
        "cm_free_consistent": hr.diagnostics["cm_free_consistent"],
        "perfect_components": {
            "agree": agreement["agree"],
            "perfect_not_on_perfect_component": _paths(agreement["perfect_not_on_perfect_component"]),
            "on_perfect_component_not_perfect": _paths(agreement["on_perfect_component_not_perfect"]),
        },
        "syzygy_audit": {"ok": audit.ok, "checked": audit.checked},
        "decomposition_audit": "ok",
    }
    if audit.violation is not None:
        p, side, lhs, rhs = audit.violation
        out["syzygy_audit"]["violation"] = {"path": _s(p), "side": side, "lhs": lhs, "rhs": rhs}
    if is_special_multiserial(algebra):
        out["criterion_matches_ump"] = ump_criterion(algebra).holds == is_ump(algebra).holds
    return out


def analysis_report(algebra: MonomialAlgebra) -> dict:
    algebra.require_analyzable()
    hr = homological_report(algebra)
    return {
        "algebra": _algebra_section(algebra),
        "structural": _structural_section(algebra),
        "ramifications": _ramifications_section(algebra),
        "homology": _homology_section(algebra, hr),
        "diagnostics": _diagnostics_section(algebra, hr),
    }


def emit_report(algebra: MonomialAlgebra, indent: int = 2, sections=None) -> str:
    """Serialize the analysis as JSON; ``sections`` keeps only the named top-level keys."""
    report = analysis_report(algebra)
    if sections is not None:
        report = {k: v for k, v in report.items() if k in sections}
    return json.dumps(report, indent=indent, ensure_ascii=False) + "\n"
