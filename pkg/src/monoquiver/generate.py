"""Seeded random monomial algebras for property checks.

Every instance is connected and admissible. Relations come from random
walks; any surviving relation-avoiding cycle is then cut by a relation read
off that cycle. ``require`` selects the class by rejection sampling.
"""
from __future__ import annotations

import random
import string

from .algebra import MonomialAlgebra
from .errors import GenerationBudgetExhausted
from .quiver import Quiver
from .structure import is_quadratic, is_special_multiserial, is_ump

REQUIREMENTS = ("any", "quadratic", "special_multiserial", "ump")
MAX_VERTICES = 12
MAX_ARROWS = 40
MAX_REPAIRS = 200


def arrow_names(count: int) -> list:
    letters = string.ascii_lowercase
    names = list(letters[:count])
    k = 1
    while len(names) < count:
        names.extend(f"{c}{k}" for c in letters[: count - len(names)])
        k += 1
    return names


def random_quiver(rng: random.Random, vertices: int, arrows: int) -> Quiver:
    """Connected quiver: a random spanning tree with random orientations plus extra arrows."""
    vs = [str(i) for i in range(1, vertices + 1)]
    ends = []
    for i in range(1, vertices):
        j = rng.randrange(i)
        ends.append((vs[i], vs[j]) if rng.random() < 0.5 else (vs[j], vs[i]))
    while len(ends) < arrows:
        ends.append((rng.choice(vs), rng.choice(vs)))
    rng.shuffle(ends)
    names = arrow_names(len(ends))
    return Quiver(vs, [(n, s, t) for n, (s, t) in zip(names, ends)])


def _random_walk(rng, quiver, length):
    a = rng.choice(quiver.arrow_ids)
    walk = [a]
    while len(walk) < length:
        out = quiver.out_arrows(quiver.target(walk[-1]))
        if not out:
            break
        walk.append(rng.choice(out))
    return walk


def _serial_bias(rng, quiver, relations):
    """Kill all but one continuation of each arrow with length-2 relations."""
    rels = list(relations)
    for a in quiver.arrow_ids:
        out = list(quiver.out_arrows(quiver.target(a)))
        if len(out) > 1:
            rng.shuffle(out)
            rels.extend((a, b) for b in out[1:])
    for a in quiver.arrow_ids:
        into = list(quiver.in_arrows(quiver.source(a)))
        if len(into) > 1:
            rng.shuffle(into)
            rels.extend((c, a) for c in into[1:])
    return rels


def repair_admissibility(algebra: MonomialAlgebra, rng: random.Random, max_length: int) -> MonomialAlgebra:
    """Add relations until no relation-avoiding cycle is left.

    Each round reads a factor off the powers of the witness cycle, of length
    3 to ``max_length`` (exactly 2 when that is the cap), so that cycle can no longer be repeated.
    """
    for _ in range(MAX_REPAIRS):
        adm = algebra.admissibility
        if adm.ok:
            return algebra
        cycle = adm.witness.arrows
        length = rng.randint(min(3, max_length), max_length)
        start = rng.randrange(len(cycle))
        word = [cycle[(start + i) % len(cycle)] for i in range(length)]
        relations = [r.arrows for r in algebra.relations] + [tuple(word)]
        algebra = MonomialAlgebra(algebra.quiver, relations, algebra.name)
    raise GenerationBudgetExhausted(f"admissibility repair did not finish in {MAX_REPAIRS} rounds")


def _accepts(algebra, require):
    if require == "quadratic":
        return is_quadratic(algebra)
    if require == "special_multiserial":
        return bool(is_special_multiserial(algebra))
    if require == "ump":
        return bool(is_ump(algebra))
    return True


def random_algebra(
    seed,
    vertices=None,
    arrows=None,
    relation_count=None,
    max_relation_length=4,
    require="any",
    max_attempts=500,
) -> MonomialAlgebra:
    """Draw an admissible connected algebra; unset sizes are drawn from the seed.

    ``vertices`` in [1, 12], ``arrows`` in [vertices - 1, 40],
    ``max_relation_length`` >= 2 (forced to 2 when ``require='quadratic'``).
    Raises GenerationBudgetExhausted after ``max_attempts`` rejected drafts.
    """
    if require not in REQUIREMENTS:
        raise ValueError(f"require must be one of {REQUIREMENTS}")
    if max_relation_length < 2:
        raise ValueError("max_relation_length must be >= 2")
    if vertices is not None and not 1 <= vertices <= MAX_VERTICES:
        raise ValueError(f"vertices must lie in [1, {MAX_VERTICES}]")
    rng = random.Random(seed)
    max_len = 2 if require == "quadratic" else max_relation_length
    for attempt in range(max_attempts):
        n = vertices or rng.randint(2, 6)
        k = arrows if arrows is not None else rng.randint(max(1, n - 1), n + 3)
        if not max(n - 1, 0) <= k <= MAX_ARROWS:
            raise ValueError(f"arrows must lie in [{n - 1}, {MAX_ARROWS}]")
        count = relation_count if relation_count is not None else rng.randint(0, k)
        quiver = random_quiver(rng, n, k)
        relations = []
        for _ in range(count):
            walk = _random_walk(rng, quiver, rng.randint(2, max_len))
            if len(walk) >= 2:
                relations.append(tuple(walk))
        if require in ("special_multiserial", "ump") and rng.random() < 0.7:
            relations = _serial_bias(rng, quiver, relations)
        name = f"random_{seed}_{attempt}"
        algebra = repair_admissibility(MonomialAlgebra(quiver, relations, name), rng, max_len)
        if _accepts(algebra, require):
            algebra.require_admissible()
            return algebra
    raise GenerationBudgetExhausted(f"no {require} algebra after {max_attempts} attempts (seed {seed})")


def sample_seed(seed: int, index: int) -> int:
    """Seed of sample ``index`` in a run started from ``seed``."""
    return seed * 1_000_003 + index
