"""Line-oriented quiver description files.

Grammar (``#`` starts a comment)::

    quiver NAME
    vertex ID [ID ...]
    arrow ID SRC DST
    relation ID ID [ID ...]

Identifiers must be declared before use. Relations list arrow ids in
composition order and need at least two of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import MonomialAlgebra
from .errors import ParseError
from .quiver import Quiver


@dataclass
class QuiverDocument:
    name: str = "unnamed"
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (id, source, target)
    relations: list = field(default_factory=list)  # tuples of arrow ids

    def to_algebra(self) -> MonomialAlgebra:
        return MonomialAlgebra(Quiver(self.vertices, self.arrows), self.relations, self.name)

    @classmethod
    def from_algebra(cls, algebra: MonomialAlgebra) -> "QuiverDocument":
        q = algebra.quiver
        return cls(
            algebra.name,
            list(q.vertices),
            [(a.id, a.source, a.target) for a in q.arrows],
            [r.arrows for r in algebra.relations],
        )


def _tokens(line):
    """Split off the comment and return (token, column) pairs, columns 1-based."""
    body = line.split("#", 1)[0]
    out, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], i + 1))
        i = j
    return out


def parse_quiver_file(text: str, source: str = None) -> QuiverDocument:
    doc = QuiverDocument()
    named = False
    vertices = set()
    arrows = {}

    def fail(message, lineno, column=None):
        raise ParseError(message, lineno, column, source)

    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        (keyword, kcol), args = tokens[0], tokens[1:]
        if keyword == "quiver":
            if named:
                fail("duplicate quiver declaration", lineno, kcol)
            if len(args) != 1:
                fail("expected: quiver NAME", lineno, kcol)
            doc.name = args[0][0]
            named = True
        elif keyword == "vertex":
            if not args:
                fail("expected: vertex ID [ID ...]", lineno, kcol)
            for vid, col in args:
                if vid in vertices:
                    fail(f"duplicate vertex {vid!r}", lineno, col)
                vertices.add(vid)
                doc.vertices.append(vid)
        elif keyword == "arrow":
            if len(args) != 3:
                fail("expected: arrow ID SRC DST", lineno, kcol)
            (aid, acol), (src, scol), (dst, dcol) = args
            if aid in arrows:
                fail(f"duplicate arrow {aid!r}", lineno, acol)
            if aid in vertices:
                fail(f"arrow {aid!r} clashes with a vertex id", lineno, acol)
            for vid, col in ((src, scol), (dst, dcol)):
                if vid not in vertices:
                    fail(f"undeclared vertex {vid!r}", lineno, col)
            arrows[aid] = (src, dst)
            doc.arrows.append((aid, src, dst))
        elif keyword == "relation":
            if len(args) < 2:
                fail("relation length must be >= 2", lineno, kcol)
            for (aid, col) in args:
                if aid not in arrows:
                    fail(f"undeclared arrow {aid!r}", lineno, col)
            for (a, _), (b, col) in zip(args, args[1:]):
                if arrows[a][1] != arrows[b][0]:
                    fail(f"arrows {a!r} and {b!r} do not compose", lineno, col)
            rel = tuple(aid for aid, _ in args)
            if rel in doc.relations:
                fail("duplicate relation", lineno, kcol)
            doc.relations.append(rel)
        else:
            fail(f"unknown keyword {keyword!r}", lineno, kcol)
    if not doc.vertices:
        raise ParseError("no vertices declared", None, None, source)
    return doc


def format_document(doc: QuiverDocument) -> str:
    lines = [f"quiver {doc.name}", "vertex " + " ".join(doc.vertices)]
    lines += [f"arrow {a} {s} {t}" for a, s, t in doc.arrows]
    lines += ["relation " + " ".join(r) for r in doc.relations]
    return "\n".join(lines) + "\n"


def load_algebra(path) -> MonomialAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver_file(fh.read(), str(path)).to_algebra()
