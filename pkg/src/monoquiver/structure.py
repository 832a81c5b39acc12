"""Maximal paths and the structural predicates built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .algebra import MonomialAlgebra
from .errors import HypothesisError
from .matcher import FactorAutomaton
from .quiver import Path, Quiver, cyclic_quiver_cycle, divides


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer; negative answers carry a concrete witness."""

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class MaximalPathSet:
    paths: tuple
    # (path, side, arrow) -> relation showing the one-arrow extension is zero
    blocking: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __contains__(self, p):
        return p in self.paths


def maximal_paths(algebra: MonomialAlgebra) -> MaximalPathSet:
    algebra.require_analyzable()
    q = algebra.quiver
    found, blocking = [], {}
    for m in algebra.nonzero_paths:
        evidence = {}
        for a in q.out_arrows(m.target):
            rel = algebra.zero_witness(m * q.arrow_path(a))
            if rel is None:
                break
            evidence[(m, "right", a)] = rel
        else:
            for a in q.in_arrows(m.source):
                rel = algebra.zero_witness(q.arrow_path(a) * m)
                if rel is None:
                    break
                evidence[(m, "left", a)] = rel
            else:
                found.append(m)
                blocking.update(evidence)
    return MaximalPathSet(tuple(found), blocking)


@dataclass(frozen=True)
class SharedArrow:
    first: Path
    second: Path
    arrow: str


def is_ump(algebra: MonomialAlgebra) -> Verdict:
    """Distinct maximal paths must have disjoint arrow sets."""
    paths = maximal_paths(algebra).paths
    for i, m in enumerate(paths):
        for n in paths[i + 1:]:
            shared = sorted(set(m.arrows) & set(n.arrows))
            if shared:
                return Verdict(False, SharedArrow(m, n, shared[0]))
    return Verdict(True)


@dataclass(frozen=True)
class Branching:
    arrow: str
    side: str  # "right": two nonzero continuations, "left": two nonzero predecessors
    arrows: tuple


def is_special_multiserial(algebra: MonomialAlgebra) -> Verdict:
    q = algebra.quiver
    for a in q.arrow_ids:
        pa = q.arrow_path(a)
        after = [b for b in q.out_arrows(q.target(a)) if not algebra.is_zero(pa * q.arrow_path(b))]
        if len(after) > 1:
            return Verdict(False, Branching(a, "right", tuple(after[:2])))
        before = [c for c in q.in_arrows(q.source(a)) if not algebra.is_zero(q.arrow_path(c) * pa)]
        if len(before) > 1:
            return Verdict(False, Branching(a, "left", tuple(before[:2])))
    return Verdict(True)


def is_quadratic(algebra: MonomialAlgebra) -> bool:
    return all(len(r) == 2 for r in algebra.relations)


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    # long relation -> witnessing cycle, or None when no cycle works
    witnesses: dict

    def __bool__(self):
        return self.holds


def _power(u: Path, k: int) -> tuple:
    return u.arrows * k


def relations_in_powers(algebra: MonomialAlgebra, u: Path) -> set:
    """Relations dividing some power of the cycle ``u``."""
    longest = max((len(r) for r in algebra.relations), default=0)
    k = -(-longest // len(u)) + 1
    word = Path(_power(u, k), u.source, u.target)
    return {r for r in algebra.relations if divides(r, word)}


def _criterion_cycle(algebra: MonomialAlgebra, r: Path) -> Optional[Path]:
    """Smallest arrow-repetition-free cycle ``u`` with R meeting powers of u in {r}.

    The cycle is rotated to start with the first arrow of ``r``; while
    shorter than ``r`` it must follow ``r``. Walks that already contain a
    relation other than ``r`` are pruned.
    """
    q = algebra.quiver
    others = FactorAutomaton(s.arrows for s in algebra.relations if s != r)
    start = r.source

    def search(arrows, state, used):
        end = q.target(arrows[-1])
        if end == start:
            u = q.path(arrows)
            if relations_in_powers(algebra, u) == {r}:
                return u
        depth = len(arrows)
        choices = (r.arrows[depth],) if depth < len(r) else q.out_arrows(end)
        for a in choices:
            if a in used or q.source(a) != end:
                continue
            nxt = others.step(state, a)
            if others.accepting(nxt):
                continue
            found = search(arrows + (a,), nxt, used | {a})
            if found is not None:
                return found
        return None

    first = r.arrows[0]
    return search((first,), others.step(others.ROOT, first), frozenset({first}))


def ump_criterion(algebra: MonomialAlgebra) -> CriterionResult:
    """Decide UMP from the relations alone (special multiserial algebras only).

    Every relation longer than two needs a cycle u such that the only
    relation dividing a power of u is that relation itself.
    """
    algebra.require_analyzable()
    sm = is_special_multiserial(algebra)
    if not sm:
        raise HypothesisError(
            f"the relation criterion needs a special multiserial algebra; "
            f"arrow {sm.witness.arrow} branches on the {sm.witness.side}"
        )
    witnesses = {r: _criterion_cycle(algebra, r) for r in algebra.relations if len(r) > 2}
    return CriterionResult(all(u is not None for u in witnesses.values()), witnesses)


@dataclass(frozen=True)
class NakayamaClass:
    tag: str  # not_nakayama | linear_nakayama | selfinjective | cyclic_nakayama_other
    n: Optional[int] = None
    m: Optional[int] = None
    ump: Optional[bool] = None


def selfinjective_nakayama(n: int, m: int, name=None) -> MonomialAlgebra:
    """Oriented n-cycle 1 -> 2 -> ... -> n -> 1 bound by all (m+1)-step paths."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    arrows = [(f"a{i}", str(i), str(i % n + 1)) for i in range(1, n + 1)]
    q = Quiver([str(i) for i in range(1, n + 1)], arrows)
    relations = [[f"a{(i + j - 1) % n + 1}" for j in range(m + 1)] for i in range(1, n + 1)]
    return MonomialAlgebra(q, relations, name or f"N_{n}^{m}")


def classify_nakayama(algebra: MonomialAlgebra) -> NakayamaClass:
    algebra.require_analyzable()
    q = algebra.quiver
    if any(len(q.out_arrows(v)) > 1 or len(q.in_arrows(v)) > 1 for v in q.vertices):
        return NakayamaClass("not_nakayama")
    cycle = cyclic_quiver_cycle(q)
    if cycle is None:
        return NakayamaClass("linear_nakayama")
    n = len(cycle)
    lengths = {len(r) for r in algebra.relations}
    if len(lengths) == 1 and len(algebra.relations) == n:
        length = lengths.pop()
        doubled = cycle.arrows * (length // n + 2)
        windows = {doubled[i:i + length] for i in range(n)}
        if windows == {r.arrows for r in algebra.relations}:
            m = length - 1
            return NakayamaClass("selfinjective", n, m, m == 1)
    return NakayamaClass("cyclic_nakayama_other")


@dataclass(frozen=True)
class StructureVerdict:
    ump: Verdict
    special_multiserial: Verdict
    quadratic: bool
    nakayama: NakayamaClass
    maximal: MaximalPathSet


def structure_verdict(algebra: MonomialAlgebra) -> StructureVerdict:
    return StructureVerdict(
        ump=is_ump(algebra),
        special_multiserial=is_special_multiserial(algebra),
        quadratic=is_quadratic(algebra),
        nakayama=classify_nakayama(algebra),
        maximal=maximal_paths(algebra),
    )
