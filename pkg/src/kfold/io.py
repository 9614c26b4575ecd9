"""DIMACS ``.col`` graphs and the JSON coloring document."""

from __future__ import annotations

import json
from typing import Iterable, TextIO

from .coloring import KFoldColoring
from .families import Family, FamilyParams, GenericGraph


class FormatError(ValueError):
    pass


def to_dimacs(g: GenericGraph) -> str:
    """``p edge n m`` then one ``e i j`` line per edge, 1-based, ``i < j``, sorted."""
    edges = g.edges()
    lines = [f"p edge {g.vertex_count} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_dimacs(lines: Iterable[str]) -> GenericGraph:
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or n is not None:
                raise FormatError(f"line {lineno}: bad or repeated problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: edge line needs two endpoints")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise FormatError(f"line {lineno}: invalid edge {parts[1]} {parts[2]}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing problem line")
    return GenericGraph.from_edges(n, sorted(edges))


def read_dimacs(fh: TextIO) -> GenericGraph:
    return parse_dimacs(fh)


def coloring_to_dict(params: FamilyParams, k: int, coloring: KFoldColoring) -> dict:
    return {
        "family": params.family.value,
        "n": params.n,
        "p": params.p,
        "k": k,
        "x": coloring.x,
        "classes": coloring.classes,
    }


def coloring_from_dict(doc: dict) -> tuple[FamilyParams, int, KFoldColoring]:
    try:
        params = FamilyParams(Family(doc["family"]), int(doc["n"]), int(doc["p"]))
        k = int(doc["k"])
        x = int(doc["x"])
        classes = [[int(v) for v in cls] for cls in doc["classes"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed coloring document: {exc}") from None
    if len(classes) != x:
        raise FormatError(f"x={x} but {len(classes)} classes listed")
    return params, k, KFoldColoring.from_classes(params.n, classes)


def dumps_coloring(params: FamilyParams, k: int, coloring: KFoldColoring) -> str:
    return json.dumps(coloring_to_dict(params, k, coloring))


def loads_coloring(text: str) -> tuple[FamilyParams, int, KFoldColoring]:
    return coloring_from_dict(json.loads(text))
