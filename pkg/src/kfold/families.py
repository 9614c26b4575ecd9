"""Webs, antiwebs and a small explicit graph type.

Vertices are labelled ``0..n-1`` in circular order.  The web ``W(n, p)``
joins ``i`` and ``j`` when their index distance ``|i - j|`` lies in
``[p, n - p]``; the antiweb is its complement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .numtheory import ceil_div, checked_mul


class Family(str, enum.Enum):
    WEB = "web"
    ANTIWEB = "antiweb"


class InvalidParamsError(ValueError):
    """Raised when family parameters violate ``p >= 1`` and ``n >= 2p``."""


class InstanceTooLargeError(ValueError):
    """An explicit graph computation was asked to exceed its size cap."""


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if self.p < 1:
            raise InvalidParamsError(f"p >= 1 violated (p={self.p})")
        if self.n < 2 * self.p:
            raise InvalidParamsError(f"n >= 2p violated (n={self.n}, p={self.p})")

    @property
    def is_web(self) -> bool:
        return self.family is Family.WEB

    def __str__(self) -> str:
        return f"{self.family.value}(n={self.n}, p={self.p})"


def web(n: int, p: int) -> FamilyParams:
    return FamilyParams(Family.WEB, n, p)


def antiweb(n: int, p: int) -> FamilyParams:
    return FamilyParams(Family.ANTIWEB, n, p)


def all_params(n_max: int, families: Iterable[Family] = tuple(Family), n_min: int = 2):
    """Every valid ``FamilyParams`` with ``n_min <= n <= n_max``, in (family, n, p) order."""
    for fam in families:
        for n in range(n_min, n_max + 1):
            for p in range(1, n // 2 + 1):
                yield FamilyParams(fam, n, p)


@dataclass(frozen=True)
class GenericGraph:
    """Simple undirected graph on ``0..vertex_count-1``.

    ``neighbors[v]`` is a bitmask of the vertices adjacent to ``v``.
    """

    vertex_count: int
    neighbors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.neighbors) != self.vertex_count:
            raise ValueError("one neighbour mask per vertex required")
        full = (1 << self.vertex_count) - 1
        for v, mask in enumerate(self.neighbors):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not self.neighbors[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "GenericGraph":
        masks = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise IndexError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(vertex_count, tuple(masks))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.neighbors[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted lexicographically."""
        return [(u, v) for u in range(self.vertex_count) for v in _bits(self.neighbors[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.neighbors) // 2

    def complement(self) -> "GenericGraph":
        full = (1 << self.vertex_count) - 1
        return GenericGraph(
            self.vertex_count,
            tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.neighbors)),
        )

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.neighbors[v] & mask) for v in _bits(mask))

    def is_subgraph_of(self, other: "GenericGraph") -> bool:
        """True if every edge of ``self`` is an edge of ``other`` (same labelling)."""
        if self.vertex_count > other.vertex_count:
            return False
        return all(m & ~other.neighbors[v] == 0 for v, m in enumerate(self.neighbors))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def adjacent(params: FamilyParams, i: int, j: int) -> bool:
    n, p = params.n, params.p
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex index out of range 0..{n - 1}: ({i}, {j})")
    d = abs(i - j)
    in_web = p <= d <= n - p
    if params.is_web:
        return in_web
    return i != j and not in_web


def alpha(params: FamilyParams) -> int:
    """Stability number: ``p`` for a web, ``n // p`` for an antiweb."""
    return params.p if params.is_web else params.n // params.p


def omega(params: FamilyParams) -> int:
    return params.n // params.p if params.is_web else params.p


def circ_add(i: int, j: int, n: int) -> int:
    # Python's % is already non-negative for n > 0, so negative offsets work.
    return (i + j) % n


def base_sequence(params: FamilyParams) -> tuple[int, ...]:
    """The rotation-zero maximum stable set.

    For a web this is the run ``0, 1, ..., p-1``.  For an antiweb it is
    ``ceil(t*n/alpha)`` for ``t = 0..alpha-1``, which spreads ``alpha``
    vertices as evenly as possible around the cycle.
    """
    if params.is_web:
        return tuple(range(params.p))
    a = alpha(params)
    return tuple(ceil_div(t * params.n, a) for t in range(a))


def stable_seq(params: FamilyParams, i: int) -> tuple[int, ...]:
    """The base sequence rotated by ``i`` (taken modulo ``n``)."""
    if i < 0:
        raise ValueError("rotation index must be non-negative")
    return tuple(circ_add(j, i, params.n) for j in base_sequence(params))


def is_web_subgraph(inner: tuple[int, int], outer: tuple[int, int]) -> bool:
    """Trotter's test: is ``W(n', p')`` an induced subgraph of ``W(n, p)``?

    Plain (non-induced) containment is weaker: ``W(4, 2)`` sits inside
    ``K_4 = W(4, 1)`` but is not induced there, and this returns False.
    """
    n_in, p_in = inner
    n_out, p_out = outer
    for n_, p_ in (inner, outer):
        if p_ < 1 or n_ < 2 * p_:
            raise InvalidParamsError(f"invalid web parameters (n={n_}, p={p_})")
    return n_out * p_in >= n_in * p_out and n_out * (p_in - 1) <= n_in * (p_out - 1)


def materialize(params: FamilyParams) -> GenericGraph:
    n = params.n
    masks = [0] * n
    for i, j in combinations(range(n), 2):
        if adjacent(params, i, j):
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return GenericGraph(n, tuple(masks))


def delete_vertex_with_map(g: GenericGraph, v: int) -> tuple[GenericGraph, tuple[int, ...]]:
    """Remove ``v``; return the re-packed graph and new-index -> old-index map."""
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range 0..{g.vertex_count - 1}")
    keep = tuple(u for u in range(g.vertex_count) if u != v)
    masks = []
    for u in keep:
        m = g.neighbors[u]
        low = m & ((1 << v) - 1)
        high = m >> (v + 1)
        masks.append(low | (high << v))
    return GenericGraph(len(keep), tuple(masks)), keep


def delete_vertex(g: GenericGraph, v: int) -> GenericGraph:
    return delete_vertex_with_map(g, v)[0]


LEX_PRODUCT_LIMIT = 4096


def lex_product_with_clique(g: GenericGraph, k: int) -> GenericGraph:
    """``G o K_k``: vertex ``(u, a)`` becomes index ``u*k + a``.

    ``(u, a) ~ (v, b)`` iff ``u ~ v`` in ``g``, or ``u == v`` and ``a != b``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    size = checked_mul(g.vertex_count, k)
    if size > LEX_PRODUCT_LIMIT:
        raise InstanceTooLargeError(f"product would have {size} vertices (limit {LEX_PRODUCT_LIMIT})")
    block = (1 << k) - 1
    masks = []
    for u in range(g.vertex_count):
        across = 0
        for v in _bits(g.neighbors[u]):
            across |= block << (v * k)
        for a in range(k):
            inside = (block << (u * k)) & ~(1 << (u * k + a))
            masks.append(across | inside)
    return GenericGraph(size, tuple(masks))
