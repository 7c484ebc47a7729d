"""Plain-text ``.mg`` graph files.

    # comment
    vertices 4
    0 -- 1        digon
    1 -> 2        arc 1 -> 2
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from .graph import GraphError, MixedGraph

_HEADER = re.compile(r"^vertices\s+(\d+)$")
_EDGE = re.compile(r"^(\d+)\s*(--|->|<-)\s*(\d+)$")


class GraphFileError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, source: str | None = None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


def parse(text: str, source: str | None = None) -> MixedGraph:
    n = None
    digons: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise GraphFileError("expected 'vertices N' header", lineno, source)
            n = int(m.group(1))
            if n < 1:
                raise GraphFileError("vertex count must be positive", lineno, source)
            continue
        m = _EDGE.match(line)
        if not m:
            raise GraphFileError(f"cannot parse {line!r}", lineno, source)
        u, op, v = int(m.group(1)), m.group(2), int(m.group(3))
        if op == "<-":
            u, v, op = v, u, "->"
        for x in (u, v):
            if x >= n:
                raise GraphFileError(f"vertex {x} out of range for 'vertices {n}'", lineno, source)
        if u == v:
            raise GraphFileError(f"self-loop at {u}", lineno, source)
        key = (min(u, v), max(u, v))
        if key in seen:
            first_line, first = seen[key]
            if op == "->" and first == f"{v} -> {u}":
                kind = "anti-parallel arcs"
            else:
                kind = "duplicate or conflicting declaration of"
            raise GraphFileError(
                f"{kind} pair {key[0]},{key[1]} (first declared on line {first_line})",
                lineno,
                source,
            )
        seen[key] = (lineno, f"{u} {op} {v}")
        (digons if op == "--" else arcs).append((u, v))
    if n is None:
        raise GraphFileError("missing 'vertices N' header", None, source)
    try:
        return MixedGraph.from_edges(n, digons, arcs)
    except GraphError as exc:
        raise GraphFileError(str(exc), None, source) from exc


def load(path: str | Path) -> MixedGraph:
    path = Path(path)
    return parse(path.read_text(), source=str(path))


def emit(X: MixedGraph, comments: Iterable[str] = ()) -> str:
    """Canonical text: header, then digons, then arcs, in incidence column order."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"vertices {X.n}")
    lines.extend(str(e) for e in X.edges())
    return "\n".join(lines) + "\n"


def save(X: MixedGraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(emit(X, comments))
