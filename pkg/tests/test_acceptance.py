"""Acceptance criteria 1-12, one test each.

Every criterion records a PASS/FAIL line; the lines are printed in the
pytest terminal summary. Run directly (``python tests/test_acceptance.py``)
for just this suite.
"""
import functools
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from conftest import FIXTURES, load  # noqa: E402
from oracles import naive_perfect  # noqa: E402
from monoquiver.checks import (  # noqa: E402
    check_criterion,
    check_decomposition,
    check_perfect_structure,
    check_quadratic,
    check_syzygy,
    check_unilateral,
)
from monoquiver.generate import random_algebra, sample_seed  # noqa: E402
from monoquiver.homology import (  # noqa: E402
    homological_report,
    is_perfect_pair,
    perfect_paths,
    relations_quiver,
    right_killers,
    stable_category_shape,
)
from monoquiver.ramifications import (  # noqa: E402
    decompose_maximal_paths,
    induced_component_algebra,
    is_unilaterally_connected,
    ramifications_graph,
)
from monoquiver.structure import (  # noqa: E402
    classify_nakayama,
    is_special_multiserial,
    is_ump,
    maximal_paths,
    selfinjective_nakayama,
    ump_criterion,
)

SAMPLES = 200
SEED = 2024


def names(paths):
    return {str(p) for p in paths}


@functools.lru_cache(maxsize=None)
def special_multiserial_samples():
    # half with relations up to length 4, half up to 6, so long relations are common
    return tuple(
        random_algebra(sample_seed(SEED, i), require="special_multiserial",
                       max_relation_length=4 if i % 2 else 6)
        for i in range(SAMPLES + 100)
    )


@functools.lru_cache(maxsize=None)
def quadratic_samples():
    return tuple(random_algebra(sample_seed(SEED + 1, i), require="quadratic") for i in range(SAMPLES))


@functools.lru_cache(maxsize=None)
def ump_samples():
    return tuple(random_algebra(sample_seed(SEED + 2, i), require="ump", max_relation_length=5)
                 for i in range(SAMPLES))


@functools.lru_cache(maxsize=None)
def loop_samples():
    # one vertex, so every arrow is a loop and cycle-power perfect paths are frequent
    return tuple(random_algebra(sample_seed(SEED + 3, i), vertices=1, require="ump", max_relation_length=6)
                 for i in range(SAMPLES))


def report(number, title):
    """Run the criterion body and print one PASS/FAIL line for it."""

    def wrap(func):
        @functools.wraps(func)
        def run(*args, **kwargs):
            try:
                detail = func(*args, **kwargs)
            except Exception as exc:
                _emit(f"[FAIL] criterion {number:2d}: {title} -- {type(exc).__name__}: {exc}")
                raise
            _emit(f"[PASS] criterion {number:2d}: {title}" + (f" ({detail})" if detail else ""))

        return run

    return wrap


RESULTS = []


def _emit(line):
    # printed by the terminal summary hook in conftest.py
    RESULTS.append(line)


@report(1, "tailed triangle golden values")
def test_criterion_01_tailed_triangle():
    A = load("tailed_triangle")
    assert names(maximal_paths(A)) == {"f", "a.b.c.a.b.c.d", "e"}
    assert is_ump(A).holds and not is_special_multiserial(A).holds
    g = ramifications_graph(A)
    assert len(g.components) == 2
    big = induced_component_algebra(g.component_of("a"), A)
    small = induced_component_algebra(g.component_of("f"), A)
    assert names(big.relations) == {"c.a.b.c.a", "d.e"}
    assert names(big.maximal) == {"a.b.c.a.b.c.d", "e"}
    assert names(small.maximal) == {"f"} and small.relations == ()
    d = decompose_maximal_paths(A, g)
    assert len(d.maximal) == 3 == sum(len(p.maximal) for p in d.components)
    return "|M| = 3 = 1 + 2"


@report(2, "two-cycle-with-tail golden values")
def test_criterion_02_two_cycle_tail():
    A = load("two_cycle_tail")
    assert names(maximal_paths(A)) == {"b.a.c", "a.b"}
    v = is_ump(A)
    assert not v.holds and v.witness.arrow == "a"
    g = ramifications_graph(A)
    assert len(g.components) == 1
    assert {(str(a), str(b)) for a, b in g.edges} == {("b.a", "c")}
    assert is_unilaterally_connected(g.components[0]).holds
    return f"witness {v.witness.first} / {v.witness.second} share {v.witness.arrow}"


@report(3, "Nakayama classification")
def test_criterion_03_nakayama():
    for n in range(2, 6):
        for m in range(1, 5):
            A = selfinjective_nakayama(n, m)
            cls = classify_nakayama(A)
            assert (cls.tag, cls.n, cls.m) == ("selfinjective", n, m)
            assert is_ump(A).holds == (m == 1)
    tri = load("three_cycle")
    assert is_ump(tri).holds and len(maximal_paths(tri)) == 1
    return "16 selfinjective cases and the three-cycle"


@report(4, "crossed two-cycle golden values")
def test_criterion_04_crossed_two_cycle():
    A = load("crossed_two_cycle")
    ps = perfect_paths(A)
    assert names(ps.paths) == {"a1", "a2"} and ps.cycle_lengths == (2,)
    assert [p for p in naive_perfect(A)[1]] == [("a1",), ("a2",)]
    hr = homological_report(A)
    assert not hr.cm_free
    parts = [induced_component_algebra(c, A) for c in ramifications_graph(A).components]
    assert len(parts) == 2
    for part in parts:
        assert part.relations == () and homological_report(part.algebra).cm_free
    kinds = [kind for _, kind in hr.relations_quiver.components]
    assert kinds.count("perfect") == 1 and hr.relations_quiver.d == 0
    assert hr.gorenstein.holds and hr.gorenstein.bound == 2
    shape = stable_category_shape(A)
    assert (shape.kind, shape.degrees) == ("product_equivalence", (2,))


@report(5, "four-cycle-with-entry golden values")
def test_criterion_05_four_cycle_entry():
    A = load("four_cycle_entry")
    hr = homological_report(A)
    assert hr.cm_free
    part = induced_component_algebra(ramifications_graph(A).component_of("a1"), A).algebra
    assert names(perfect_paths(part).paths) == {"a4.a1", "a2.a3"}
    assert not homological_report(part).cm_free
    assert not ump_criterion(A).holds
    assert not hr.gorenstein.applicable and not hr.finite_global_dimension.applicable
    return hr.gorenstein.reason


LONG_BRIDGE_VERTICES = {
    "a1", "a2.a3.a1.a2.a3", "a3.a1", "a2.a3.a1.a2", "a2.a3.a1", "a1.a2.a3.a1", "a2.a3", "a3", "b", "g2",
    "g1.g2.g3.g1", "g1.g2.g3", "g1.g2", "g3.g1.g2", "a3.a1.a2.a3.a1", "a2", "g2.g3.g1.g2", "g1", "g3",
}
LONG_BRIDGE_CORE_ARROWS = {
    ("a1", "a2.a3.a1.a2.a3"), ("a3.a1", "a2.a3.a1.a2"), ("a2.a3.a1", "a2.a3.a1"),
    ("a1.a2.a3.a1", "a2.a3"), ("a3", "b"), ("b", "g2"), ("g2", "g1.g2.g3.g1"),
    ("g1.g2.g3.g1", "g1.g2.g3"), ("g1.g2.g3", "g1.g2.g3"), ("g1.g2", "g1.g2.g3"),
    ("g3.g1.g2", "g1.g2"), ("a3.a1.a2.a3.a1", "a2"), ("g2.g3.g1.g2", "g1"),
}


@report(6, "bridged triangles (long relations) golden values")
def test_criterion_06_bridged_long():
    A = load("bridged_triangles_long")
    ql = relations_quiver(A)
    assert names(ql.vertices) == LONG_BRIDGE_VERTICES
    assert LONG_BRIDGE_CORE_ARROWS <= {(str(q), str(p)) for q, p in ql.arrows}
    assert is_ump(A).holds and is_special_multiserial(A).holds
    assert names(perfect_paths(A).paths) == {"a2.a3.a1"}
    assert [p for p in naive_perfect(A)[1]] == [("a2", "a3", "a1")]
    shape = stable_category_shape(A)
    assert shape.kind == "fails_condition" and str(shape.offending) == "a2.a3.a1"
    agreement = homological_report(A).diagnostics["perfect_components"]
    assert not agreement["agree"]
    assert names(agreement["perfect_not_on_perfect_component"]) == {"a2.a3.a1"}
    return f"{len(ql.vertices)} vertices as drawn; diagnostic records the disagreement"


@report(7, "bridged triangles (short relations) golden values")
def test_criterion_07_bridged_short():
    A = load("bridged_triangles_short")
    assert names(right_killers(A.path("g1 g2"), A)) == {"g3", "b"}
    for p, q in (("g2", "b"), ("a2", "a3"), ("g1", "g2 g3")):
        assert is_perfect_pair(A.path(p), A.path(q), A).holds
    assert is_perfect_pair(A.path("g1 g2"), A.path("g3"), A).failed == "P2"
    hr = homological_report(A)
    ql = hr.relations_quiver
    assert {(str(q), str(p)) for q, p in ql.arrows} == {("b", "g2"), ("a3", "a2"), ("g3", "g1.g2"), ("g2.g3", "g1")}
    assert ql.component_of(A.path("a1")) == ((A.path("a1"),), "acyclic")
    assert {kind for _, kind in ql.components} == {"acyclic"}
    assert hr.cm_free
    assert hr.gorenstein.holds and hr.gorenstein.bound == 3
    assert hr.finite_global_dimension.holds


def _failures(check, algebras):
    return [(A.name, msg) for A in algebras for msg in [check(A)] if msg is not None]


@report(8, "relation criterion equals UMP on random special multiserial algebras")
def test_criterion_08_main_criterion():
    samples = special_multiserial_samples()
    assert len(samples) >= 200
    assert all(is_special_multiserial(A).holds for A in samples)
    bad = _failures(check_criterion, samples)
    assert bad == []
    long_rel = sum(any(len(r) > 2 for r in A.relations) for A in samples)
    non_ump = sum(not is_ump(A).holds for A in samples)
    return f"{len(samples)} samples, {long_rel} with relations longer than 2, {non_ump} not UMP"


@report(9, "quadratic: UMP iff special multiserial on random quadratic algebras")
def test_criterion_09_quadratic():
    samples = quadratic_samples()
    assert len(samples) >= 200
    assert _failures(check_quadratic, samples) == []
    ump = sum(is_ump(A).holds for A in samples)
    return f"{len(samples)} samples, {ump} UMP"


@report(10, "UMP components are unilaterally connected")
def test_criterion_10_unilateral():
    samples = ump_samples()
    assert len(samples) >= 200 and all(is_ump(A).holds for A in samples)
    assert _failures(check_unilateral, samples) == []
    tail2 = load("two_cycle_tail")
    assert not is_ump(tail2).holds
    assert all(is_unilaterally_connected(c).holds for c in ramifications_graph(tail2).components)
    return f"{len(samples)} samples; two_cycle_tail shows the converse fails"


@report(11, "decomposition and syzygy audits")
def test_criterion_11_audits():
    fixtures = [load(tag) for tag in sorted(FIXTURES)]
    fixtures += [selfinjective_nakayama(n, m) for n in range(2, 6) for m in range(1, 5)]
    pool = fixtures + list(special_multiserial_samples()) + list(quadratic_samples()) + list(ump_samples())
    pool += list(loop_samples())
    assert _failures(check_decomposition, pool) == []
    assert _failures(check_syzygy, pool) == []
    return f"{len(pool)} algebras"


@report(12, "perfect paths are arrows or admissible cycle powers")
def test_criterion_12_perfect_structure():
    pool = [A for A in special_multiserial_samples() + ump_samples() + loop_samples()
            if is_special_multiserial(A).holds and is_ump(A).holds]
    assert len(pool) >= 200
    assert _failures(check_perfect_structure, pool) == []
    longer = sum(any(len(p) > 1 for p in perfect_paths(A).paths) for A in pool)
    return f"{len(pool)} algebras, {longer} with perfect paths longer than an arrow"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
