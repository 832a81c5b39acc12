"""Killer sets, perfect paths and the left minimal relations quiver built from them.

Conventions: paths compose left to right and A acts on Ae_i by left
multiplication, so a basis of Ae_i is the nonzero paths ending at i and
Ap has the basis of nonzero paths r.p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .algebra import MonomialAlgebra
from .errors import HypothesisError, QuiverError
from .quiver import Path, reverse
from .structure import is_special_multiserial, is_ump


def right_killers(p: Path, algebra: MonomialAlgebra) -> tuple:
    """R(p): nonzero q with pq = 0 and no proper prefix of q killing p."""
    if algebra.is_zero(p):
        raise QuiverError(f"{p} is zero")
    if p.is_trivial:
        return ()
    q, m = algebra.quiver, algebra.matcher
    after_p = m.run(p.arrows)
    found = []
    stack = [((), after_p, m.ROOT, p.target)]
    while stack:
        word, joint, alone, end = stack.pop()
        for a in q.out_arrows(end):
            alone2 = m.step(alone, a)
            if m.accepting(alone2):
                continue
            joint2 = m.step(joint, a)
            if m.accepting(joint2):
                found.append(word + (a,))
            else:
                stack.append((word + (a,), joint2, alone2, q.target(a)))
    return tuple(sorted(q.path(w) for w in found))


def left_killers(p: Path, algebra: MonomialAlgebra) -> tuple:
    """L(p): the mirror of R(p), computed in the opposite algebra."""
    op = algebra.opposite
    return tuple(sorted(reverse(x) for x in right_killers(reverse(p), op)))


@dataclass(frozen=True)
class MinimalKillerSets:
    right: tuple
    left: tuple


def minimal_killers(p: Path, algebra: MonomialAlgebra) -> MinimalKillerSets:
    return MinimalKillerSets(right_killers(p, algebra), left_killers(p, algebra))


@dataclass(frozen=True)
class PairCheck:
    holds: bool
    failed: Optional[str] = None  # "P1", "P2" or "P3"

    def __bool__(self):
        return self.holds


def is_perfect_pair(p: Path, q: Path, algebra: MonomialAlgebra) -> PairCheck:
    if p.is_trivial or q.is_trivial or p.target != q.source or not algebra.is_zero(p * q):
        return PairCheck(False, "P1")
    if right_killers(p, algebra) != (q,):
        return PairCheck(False, "P2")
    if left_killers(q, algebra) != (p,):
        return PairCheck(False, "P3")
    return PairCheck(True)


@dataclass(frozen=True)
class PerfectStructure:
    pairs: tuple  # every perfect pair (p, q)
    paths: tuple  # perfect paths
    cycles: tuple  # relation-cycles, each starting at its smallest member

    @property
    def cycle_lengths(self):
        return tuple(len(c) for c in self.cycles)


def perfect_paths(algebra: MonomialAlgebra) -> PerfectStructure:
    """Chase the forced successors of P2 to find closed chains of perfect pairs."""
    algebra.require_admissible()
    successor = {}
    for p in algebra.nonzero_paths:
        right = right_killers(p, algebra)
        if len(right) == 1 and left_killers(right[0], algebra) == (p,):
            successor[p] = right[0]
    # P2 and P3 make the successor map injective, so it splits into chains and cycles
    cycles, on_cycle = [], set()
    for start in sorted(successor):
        if start in on_cycle:
            continue
        chain, p = [start], successor[start]
        while p != start and p in successor and len(chain) <= len(successor):
            chain.append(p)
            p = successor[p]
        if p == start:
            cycles.append(tuple(chain))
            on_cycle.update(chain)
    pairs = tuple(sorted(successor.items()))
    return PerfectStructure(pairs, tuple(sorted(on_cycle)), tuple(cycles))


@dataclass(frozen=True)
class RelationsQuiver:
    vertices: tuple
    arrows: tuple  # (q, p) meaning the arrow [pq]: q -> p
    components: tuple  # (vertices, kind) with kind perfect | acyclic | mixed
    bounded: dict
    d: int

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def component_of(self, p):
        return next(c for c in self.components if p in c[0])


def _relations_quiver_vertices(algebra: MonomialAlgebra):
    q = algebra.quiver
    split = set()
    for r in algebra.relations:
        for k in range(1, len(r)):
            head, tail = q.factor(r, 0, k), q.factor(r, k, len(r))
            if not algebra.is_zero(head) and not algebra.is_zero(tail):
                split.update((head, tail))
    loose = {q.arrow_path(a) for a in q.arrow_ids} - split
    return tuple(sorted(split | loose))


def classify_components(vertices, arrows):
    """Kinds of the weakly connected components and the longest acyclic path length."""
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    g.add_edges_from(arrows)
    components, d = [], 0
    for part in sorted(tuple(sorted(c)) for c in nx.weakly_connected_components(g)):
        sub = g.subgraph(part)
        if all(sub.in_degree(v) == 1 and sub.out_degree(v) == 1 for v in part):
            kind = "perfect"
        elif nx.is_directed_acyclic_graph(sub):
            kind = "acyclic"
            d = max(d, nx.dag_longest_path_length(sub))
        else:
            kind = "mixed"
        components.append((part, kind))
    return tuple(components), d


def relations_quiver(algebra: MonomialAlgebra) -> RelationsQuiver:
    algebra.require_admissible()
    vertices = _relations_quiver_vertices(algebra)
    members = set(vertices)
    arrows = []
    for q in vertices:
        for p in left_killers(q, algebra):
            if p not in members:
                raise AssertionError(f"left killer {p} of {q} is not a relation prefix")
            arrows.append((q, p))
    arrows = tuple(sorted(arrows))
    components, d = classify_components(vertices, arrows)
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    g.add_edges_from(arrows)
    cyclic = {v for scc in nx.strongly_connected_components(g)
              if len(scc) > 1 or g.has_edge(next(iter(scc)), next(iter(scc)))
              for v in scc}
    unbounded = set(cyclic)
    for v in cyclic:
        unbounded |= nx.ancestors(g, v)
    bounded = {v: v not in unbounded for v in vertices}
    return RelationsQuiver(vertices, arrows, components, bounded, d)


def projective_dimension(p: Path, algebra: MonomialAlgebra):
    """pd(Ap) through the syzygy recursion; ``math.inf`` when it never stops."""
    memo = {}
    active = set()

    def pd(x):
        if x in memo:
            return memo[x]
        if x in active:
            return math.inf
        active.add(x)
        kernel = left_killers(x, algebra)
        value = 0 if not kernel else 1 + max(pd(y) for y in kernel)
        active.discard(x)
        memo[x] = value
        return value

    if algebra.is_zero(p):
        raise QuiverError(f"{p} is zero")
    if p.is_trivial:
        return 0
    return pd(p)


@dataclass(frozen=True)
class ConditionalVerdict:
    """A verdict that only exists when the algebra meets some hypotheses."""

    applicable: bool
    holds: Optional[bool] = None
    bound: Optional[int] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class HomologyReport:
    cm_free: bool
    perfect: PerfectStructure
    relations_quiver: RelationsQuiver
    failed_hypotheses: tuple
    gorenstein: ConditionalVerdict
    finite_global_dimension: ConditionalVerdict
    diagnostics: dict = field(default_factory=dict)


def failed_hypotheses(algebra: MonomialAlgebra) -> tuple:
    failed = []
    if not is_special_multiserial(algebra):
        failed.append("special_multiserial")
    if not is_ump(algebra):
        failed.append("ump")
    return tuple(failed)


def perfect_component_agreement(perfect: PerfectStructure, ql: RelationsQuiver) -> dict:
    """Compare perfect paths with the vertices lying on perfect components of Q^L."""
    on_perfect = {v for part, kind in ql.components if kind == "perfect" for v in part}
    direct = set(perfect.paths)
    return {
        "agree": direct == on_perfect,
        "perfect_not_on_perfect_component": tuple(sorted(direct - on_perfect)),
        "on_perfect_component_not_perfect": tuple(sorted(on_perfect - direct)),
    }


def homological_report(algebra: MonomialAlgebra) -> HomologyReport:
    algebra.require_analyzable()
    perfect = perfect_paths(algebra)
    ql = relations_quiver(algebra)
    cm_free = not perfect.paths
    failed = failed_hypotheses(algebra)
    kinds = [kind for _, kind in ql.components]
    if failed:
        reason = "hypothesis fails: " + ", ".join(f"not {h}" for h in failed)
        gorenstein = ConditionalVerdict(False, reason=reason)
        gldim = ConditionalVerdict(False, reason=reason)
    else:
        gor = all(k in ("perfect", "acyclic") for k in kinds)
        gorenstein = ConditionalVerdict(True, gor, ql.d + 2 if gor else None)
        gldim = ConditionalVerdict(True, all(k == "acyclic" for k in kinds))
    no_perfect_components = "perfect" not in kinds
    diagnostics = {
        "cm_free_by_components": no_perfect_components,
        "cm_free_consistent": cm_free == no_perfect_components,
        "perfect_components": perfect_component_agreement(perfect, ql),
    }
    return HomologyReport(cm_free, perfect, ql, failed, gorenstein, gldim, diagnostics)


@dataclass(frozen=True)
class Overlap:
    p: Path
    q: Path
    x: Path
    p_head: Path  # p = p_head . x
    q_tail: Path  # q = x . q_tail
    kind: str  # O1 | O2


def overlaps(algebra: MonomialAlgebra, perfect: Optional[PerfectStructure] = None) -> tuple:
    quiver = algebra.quiver
    perfect = perfect or perfect_paths(algebra)
    found = []
    for p in perfect.paths:
        for q in perfect.paths:
            for k in range(1, min(len(p), len(q)) + 1):
                if p.arrows[len(p) - k:] != q.arrows[:k]:
                    continue
                head = quiver.factor(p, 0, len(p) - k)
                x = quiver.factor(p, len(p) - k, len(p))
                tail = quiver.factor(q, k, len(q))
                if p == q and (head.is_trivial or tail.is_trivial):
                    continue
                if head.is_trivial and tail.is_trivial:
                    continue
                if algebra.is_zero(head * x * tail):
                    continue
                found.append(Overlap(p, q, x, head, tail, "O1" if p == q else "O2"))
    return tuple(found)


@dataclass(frozen=True)
class StableCategoryShape:
    kind: str  # product_equivalence | fails_condition
    degrees: tuple  # relation-cycle lengths
    shapes: dict  # perfect path -> arrow | loop_power | other
    offending: Optional[Path] = None


def perfect_path_kind(p: Path) -> str:
    if len(p) == 1:
        return "arrow"
    loop = p.arrows[0]
    if len(p) == 2 and p.arrows == (loop, loop) and p.source == p.target:
        return "loop_power"
    return "other"


def stable_category_shape(algebra: MonomialAlgebra) -> StableCategoryShape:
    algebra.require_analyzable()
    failed = failed_hypotheses(algebra)
    if failed:
        raise HypothesisError("needs a special multiserial UMP algebra; fails: " + ", ".join(failed))
    perfect = perfect_paths(algebra)
    shapes = {p: perfect_path_kind(p) for p in perfect.paths}
    bad = [p for p in perfect.paths if shapes[p] == "other"]
    if bad:
        return StableCategoryShape("fails_condition", perfect.cycle_lengths, shapes, bad[0])
    return StableCategoryShape("product_equivalence", perfect.cycle_lengths, shapes)


@dataclass(frozen=True)
class SyzygyAudit:
    ok: bool
    checked: int
    violation: Optional[tuple] = None  # (path, side, lhs, rhs)


def syzygy_audit(algebra: MonomialAlgebra) -> SyzygyAudit:
    """Dimension check of 0 -> (+) Aq -> Ae_s(p) -> Ap -> 0 and its right mirror."""
    algebra.require_admissible()
    checked = 0
    for p in algebra.nonzero_paths:
        lhs = algebra.dim_left_ideal(algebra.quiver.path(vertex=p.source))
        rhs = algebra.dim_left_ideal(p) + sum(algebra.dim_left_ideal(q) for q in left_killers(p, algebra))
        if lhs != rhs:
            return SyzygyAudit(False, checked, (p, "left", lhs, rhs))
        lhs = algebra.dim_right_ideal(algebra.quiver.path(vertex=p.target))
        rhs = algebra.dim_right_ideal(p) + sum(algebra.dim_right_ideal(q) for q in right_killers(p, algebra))
        if lhs != rhs:
            return SyzygyAudit(False, checked, (p, "right", lhs, rhs))
        checked += 1
    return SyzygyAudit(True, checked)
