"""Closed-form k-th chromatic numbers and explicit optimal k-fold colorings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .families import FamilyParams, GenericGraph, alpha, stable_seq
from .numtheory import ceil_div, checked_mul


class MalformedColoringError(ValueError):
    pass


@dataclass(frozen=True)
class KFoldColoring:
    """``x`` colors named ``1..x`` and, per vertex, the set of colors it receives."""

    x: int
    assignment: tuple[frozenset[int], ...]

    @classmethod
    def from_classes(cls, vertex_count: int, classes: Sequence[Sequence[int]]) -> "KFoldColoring":
        """Build from class-major form: ``classes[c - 1]`` lists the vertices of color ``c``."""
        per_vertex: list[set[int]] = [set() for _ in range(vertex_count)]
        for color, members in enumerate(classes, start=1):
            for v in members:
                if not 0 <= v < vertex_count:
                    raise MalformedColoringError(f"vertex {v} out of range in class {color}")
                per_vertex[v].add(color)
        return cls(len(classes), tuple(frozenset(s) for s in per_vertex))

    @property
    def vertex_count(self) -> int:
        return len(self.assignment)

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.x)]
        for v, colors in enumerate(self.assignment):
            for c in colors:
                if not 1 <= c <= self.x:
                    raise MalformedColoringError(f"color {c} at vertex {v} outside 1..{self.x}")
                out[c - 1].append(v)
        return out


def chi_k(params: FamilyParams, k: int) -> int:
    """``ceil(k*n / alpha)`` for both webs and antiwebs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return ceil_div(checked_mul(k, params.n), alpha(params))


def color_web(params: FamilyParams, k: int) -> KFoldColoring:
    """Color ``c`` is the run ``S_{(c-1)p}``; consecutive runs tile the cycle.

    ``x*p >= k*n`` positions are laid down end to end, so every vertex is hit
    at least ``k`` times.  Trailing runs that over-cover are kept untrimmed.
    """
    if not params.is_web:
        raise ValueError("color_web needs web parameters")
    x = chi_k(params, k)
    p = params.p
    classes = [stable_seq(params, (c * p) % params.n) for c in range(x)]
    return KFoldColoring.from_classes(params.n, classes)


def color_antiweb(params: FamilyParams, k: int) -> KFoldColoring:
    """Write ``k = l*alpha + i``; use ``S_0..S_{ceil(i*n/alpha)-1}`` once and all ``n`` rotations ``l`` times."""
    if params.is_web:
        raise ValueError("color_antiweb needs antiweb parameters")
    x = chi_k(params, k)
    n = params.n
    a = alpha(params)
    reps, rest = divmod(k, a)
    head = ceil_div(rest * n, a)
    classes = [stable_seq(params, i) for i in range(head)]
    for _ in range(reps):
        classes.extend(stable_seq(params, i) for i in range(n))
    assert len(classes) == x
    return KFoldColoring.from_classes(n, classes)


def optimal_coloring(params: FamilyParams, k: int) -> KFoldColoring:
    return color_web(params, k) if params.is_web else color_antiweb(params, k)


@dataclass
class ColoringVerdict:
    x: int
    k: int
    multiplicity: list[int]
    undercovered: list[int] = field(default_factory=list)
    conflicts: list[tuple[int, int, int]] = field(default_factory=list)  # (color, u, v)

    @property
    def valid(self) -> bool:
        return not self.undercovered and not self.conflicts


def verify_coloring(g: GenericGraph, coloring: KFoldColoring, k: int) -> ColoringVerdict:
    """Check multiplicity ``>= k`` at every vertex and stability of every color class."""
    if coloring.vertex_count != g.vertex_count:
        raise MalformedColoringError(
            f"coloring covers {coloring.vertex_count} vertices, graph has {g.vertex_count}"
        )
    classes = coloring.classes  # validates color ids
    multiplicity = [len(s) for s in coloring.assignment]
    verdict = ColoringVerdict(coloring.x, k, multiplicity)
    verdict.undercovered = [v for v, m in enumerate(multiplicity) if m < k]
    for color, members in enumerate(classes, start=1):
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if g.adjacent(u, v):
                    verdict.conflicts.append((color, u, v))
    return verdict
