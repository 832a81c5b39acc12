"""Command line entry point.

Exit codes: 0 success, 1 the algebra is outside the class an analysis needs
(including disconnected quivers), 2 unreadable, malformed or non-admissible
input, 3 a property check failed (a counterexample file is written).
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from .checks import PROPERTIES, run_checks
from .dot import GRAPHS, export_dot
from .errors import (
    DisconnectedQuiverError,
    GenerationBudgetExhausted,
    HypothesisError,
    InvalidPathError,
    InvalidRelationError,
    NotAdmissibleError,
    ParseError,
)
from .fileformat import QuiverDocument, format_document, load_algebra
from .generate import REQUIREMENTS, random_algebra, sample_seed
from .report import emit_report

log = logging.getLogger("monoquiver")

EXIT_OK, EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_PROPERTY = 0, 1, 2, 3


def _analyze(args):
    sys.stdout.write(emit_report(load_algebra(args.file)))
    return EXIT_OK


def _decompose(args):
    sys.stdout.write(emit_report(load_algebra(args.file), sections=("algebra", "ramifications")))
    return EXIT_OK


def _homology(args):
    sys.stdout.write(emit_report(load_algebra(args.file), sections=("algebra", "homology", "diagnostics")))
    return EXIT_OK


def _export_dot(args):
    sys.stdout.write(export_dot(load_algebra(args.file), args.graph))
    return EXIT_OK


def dump_counterexample(algebra, failures, directory) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{algebra.name}.quiver")
    header = "".join(f"# {name}: {msg}\n" for name, msg in sorted(failures.items()))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + format_document(QuiverDocument.from_algebra(algebra)))
    return path


def _check(args):
    names = args.property or list(PROPERTIES)
    counts = {"criterion": 0, "quadratic": 0, "ump": 0}
    for index in range(args.samples):
        seed = sample_seed(args.seed, index)
        algebra = random_algebra(
            seed,
            vertices=args.vertices,
            max_relation_length=args.max_relation_length,
            require=args.require,
        )
        failures = run_checks(algebra, names)
        if failures:
            path = dump_counterexample(algebra, failures, args.out)
            for name, msg in sorted(failures.items()):
                print(f"FAIL {name} on sample {index} (seed {seed}): {msg}")
            print(f"counterexample written to {path}")
            return EXIT_PROPERTY
        log.debug("sample %d ok: %s", index, algebra.name)
    print(f"ok: {args.samples} samples, require={args.require}, properties={','.join(names)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoquiver", description="Analyze monomial bound quiver algebras.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, text in (
        ("analyze", _analyze, "full JSON report"),
        ("decompose", _decompose, "ramifications graph and component algebras"),
        ("homology", _homology, "perfect paths, relations quiver and homological verdicts"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("export-dot", help="Graphviz DOT text")
    p.add_argument("file")
    p.add_argument("--graph", choices=GRAPHS, default="quiver")
    p.set_defaults(func=_export_dot)

    p = sub.add_parser("check", help="property checks on random algebras")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require", choices=REQUIREMENTS, default="any")
    p.add_argument("--property", action="append", choices=sorted(PROPERTIES),
                   help="restrict to this property (repeatable)")
    p.add_argument("--vertices", type=int, default=None)
    p.add_argument("--max-relation-length", type=int, default=4)
    p.add_argument("--out", default=".", help="directory for counterexample files")
    p.set_defaults(func=_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (HypothesisError, DisconnectedQuiverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ParseError, InvalidPathError, InvalidRelationError, NotAdmissibleError,
            GenerationBudgetExhausted, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
