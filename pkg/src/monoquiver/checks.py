"""Property checks run by ``monoquiver check`` and by the test suite.

Each check takes an algebra and returns None when the property holds (or
does not apply) and a short failure message otherwise.
"""
from __future__ import annotations

from .errors import AuditError
from .homology import perfect_paths, syzygy_audit
from .quiver import Path
from .ramifications import (
    decompose_maximal_paths,
    induced_component_algebra,
    is_unilaterally_connected,
    ramifications_graph,
)
from .structure import is_quadratic, is_special_multiserial, is_ump, ump_criterion


def check_criterion(algebra):
    if not is_special_multiserial(algebra):
        return None
    crit, ump = ump_criterion(algebra).holds, is_ump(algebra).holds
    if crit != ump:
        return f"relation criterion says {crit}, maximal paths say {ump}"
    return None


def check_quadratic(algebra):
    if not is_quadratic(algebra):
        return None
    ump, sm = is_ump(algebra).holds, is_special_multiserial(algebra).holds
    if ump != sm:
        return f"quadratic algebra with ump={ump} but special_multiserial={sm}"
    return None


def check_unilateral(algebra):
    if not is_ump(algebra):
        return None
    for comp in ramifications_graph(algebra).components:
        v = is_unilaterally_connected(comp)
        if not v:
            a, b = v.witness
            return f"component {comp.index}: no directed path between {a} and {b}"
    return None


def check_components_ump(algebra):
    """A is UMP exactly when every induced component algebra is."""
    whole = is_ump(algebra).holds
    parts = [is_ump(induced_component_algebra(c, algebra).algebra).holds
             for c in ramifications_graph(algebra).components]
    if whole != all(parts):
        return f"ump={whole} but components give {parts}"
    return None


def check_decomposition(algebra):
    try:
        decompose_maximal_paths(algebra)
    except AuditError as exc:
        return f"decomposition audit: {exc}"
    return None


def check_syzygy(algebra):
    audit = syzygy_audit(algebra)
    if not audit.ok:
        p, side, lhs, rhs = audit.violation
        return f"syzygy audit at {p} ({side}): {lhs} != {rhs}"
    return None


def _root_candidates(p: Path):
    n = len(p)
    for k in range(1, n + 1):
        if n % k == 0 and p.arrows == p.arrows[:k] * (n // k):
            yield p.arrows[:k]


def cycle_power_witness(p: Path, relations):
    """A cycle u with p a power of u meeting both conditions, or None.

    The conditions: u^l is a relation for some l >= 2, and no length-2
    relation ends in the first arrow of u or starts with its last arrow.
    """
    if p.source != p.target:
        return None
    rels = {r.arrows for r in relations}
    for u in _root_candidates(p):
        longest = max((len(r) for r in rels), default=0)
        powers = any(u * l in rels for l in range(2, longest // len(u) + 1))
        entering = any(len(r) == 2 and r[1] == u[0] for r in rels)
        leaving = any(len(r) == 2 and r[0] == u[-1] for r in rels)
        if powers and not entering and not leaving:
            return u
    return None


def check_perfect_structure(algebra):
    if not (is_special_multiserial(algebra) and is_ump(algebra)):
        return None
    for p in perfect_paths(algebra).paths:
        if len(p) == 1:
            continue
        if cycle_power_witness(p, algebra.relations) is None:
            return f"perfect path {p} is neither an arrow nor an admissible cycle power"
    return None


PROPERTIES = {
    "criterion": check_criterion,
    "quadratic": check_quadratic,
    "unilateral": check_unilateral,
    "components_ump": check_components_ump,
    "decomposition": check_decomposition,
    "syzygy": check_syzygy,
    "perfect_structure": check_perfect_structure,
}


def run_checks(algebra, names=None) -> dict:
    """Failure messages keyed by property name; empty when everything holds."""
    failures = {}
    for name in names or PROPERTIES:
        message = PROPERTIES[name](algebra)
        if message is not None:
            failures[name] = message
    return failures
