"""Exact chi_k for small arbitrary graphs.

A k-fold x-coloring is the same thing as x stable sets (repeats allowed)
covering every vertex at least k times.  Every stable set extends to a
maximal one without breaking the cover, so the search only looks at the
maximal stable sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .families import GenericGraph, InstanceTooLargeError, _bits, lex_product_with_clique
from .numtheory import ceil_div

ENUM_VERTEX_LIMIT = 20
CHI_VERTEX_LIMIT = 16
CHI_K_LIMIT = 4
LIMIT_ENV = "KFOLD_ORACLE_LIMIT"

__all__ = [
    "InstanceTooLargeError",
    "StableSetCatalog",
    "enumerate_maximal_stable_sets",
    "all_stable_sets",
    "min_multicover",
    "exact_chi_k",
    "exact_chi_k_via_lex",
]


def _vertex_cap(default: int) -> int:
    """Built-in cap, lowered (never raised) by ``$KFOLD_ORACLE_LIMIT``."""
    raw = os.environ.get(LIMIT_ENV)
    if not raw:
        return default
    try:
        env = int(raw)
    except ValueError:
        raise ValueError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None
    return min(default, max(env, 0))


def _check_size(what: str, size: int, default: int) -> None:
    cap = _vertex_cap(default)
    if size > cap:
        raise InstanceTooLargeError(f"{what}: {size} vertices exceeds the oracle limit of {cap}")


@dataclass(frozen=True)
class StableSetCatalog:
    masks: tuple[int, ...]

    @property
    def sets(self) -> list[frozenset[int]]:
        return [frozenset(_bits(m)) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)


def _maximal_cliques(adj: tuple[int, ...]) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting over bitmask adjacency."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot maximising |P & N(u)| keeps the branching small
        pivot = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    n = len(adj)
    if n:
        expand(0, (1 << n) - 1, 0)
    return out


def _sort_key(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def enumerate_maximal_stable_sets(g: GenericGraph) -> StableSetCatalog:
    _check_size("stable set enumeration", g.vertex_count, ENUM_VERTEX_LIMIT)
    if g.vertex_count == 0:
        return StableSetCatalog(())
    masks = _maximal_cliques(g.complement().neighbors)
    return StableSetCatalog(tuple(sorted(masks, key=_sort_key)))


def all_stable_sets(g: GenericGraph) -> StableSetCatalog:
    """Every non-empty stable set; exponential, meant for tiny graphs."""
    _check_size("stable set enumeration", g.vertex_count, ENUM_VERTEX_LIMIT)
    found: list[int] = []

    def grow(mask: int, start: int) -> None:
        for v in range(start, g.vertex_count):
            if not g.neighbors[v] & mask:
                m = mask | 1 << v
                found.append(m)
                grow(m, v + 1)

    grow(0, 0)
    return StableSetCatalog(tuple(sorted(found, key=_sort_key)))


def _greedy_cover(demand: list[int], masks: tuple[int, ...]) -> int:
    d = list(demand)
    used = 0
    while any(d):
        active = sum(1 << v for v, x in enumerate(d) if x > 0)
        best = max(masks, key=lambda m: bin(m & active).count("1"))
        if not best & active:
            raise ValueError("some vertex lies in no listed set")
        for v in _bits(best & active):
            d[v] -= 1
        used += 1
    return used


def min_multicover(vertex_count: int, masks: tuple[int, ...], k: int) -> int:
    """Fewest sets from ``masks`` (with repetition) covering each vertex ``k`` times.

    Depth-first branch and bound.  At each node the uncovered vertex with
    fewest usable sets is branched on, lowest index first on ties.  Each child
    takes one set containing that vertex; later siblings are barred from the
    sets earlier siblings took, which splits the solution space without
    overlap.  The bound is ``max(largest residual demand,
    ceil(total residual demand / best coverage of one set))``.
    """
    if vertex_count == 0:
        return 0
    containing = [[i for i, m in enumerate(masks) if m >> v & 1] for v in range(vertex_count)]
    demand = [k] * vertex_count
    best = _greedy_cover(demand, masks)

    def bound(d: list[int], active: int, allowed: int) -> int:
        cover = max((bin(masks[i] & active).count("1") for i in _bits(allowed)), default=0)
        if cover == 0:
            return 1 << 30
        return max(max(d), ceil_div(sum(d), cover))

    all_allowed = (1 << len(masks)) - 1
    root_active = (1 << vertex_count) - 1
    root_lb = bound(demand, root_active, all_allowed)

    def search(d: list[int], allowed: int, used: int) -> None:
        nonlocal best
        active = 0
        for v, x in enumerate(d):
            if x > 0:
                active |= 1 << v
        if not active:
            best = min(best, used)
            return
        if used + bound(d, active, allowed) >= best:
            return
        pick, options = -1, None
        for v in _bits(active):
            opts = [i for i in containing[v] if allowed >> i & 1]
            if options is None or len(opts) < len(options):
                pick, options = v, opts
                if not opts:
                    return
        for i in options:
            nd = list(d)
            for u in _bits(masks[i] & active):
                nd[u] -= 1
            search(nd, allowed, used + 1)
            if best <= root_lb:
                return
            allowed &= ~(1 << i)

    if best > root_lb:
        search(demand, all_allowed, 0)
    return best


def exact_chi_k(g: GenericGraph, k: int, catalog: StableSetCatalog | None = None) -> int:
    """Smallest x admitting a k-fold x-coloring of ``g``.

    ``catalog`` defaults to the maximal stable sets of ``g``; pass
    ``all_stable_sets(g)`` to search without that restriction.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_size("exact chi_k", g.vertex_count, CHI_VERTEX_LIMIT)
    if k > CHI_K_LIMIT:
        raise InstanceTooLargeError(f"exact chi_k: k={k} exceeds the oracle limit of {CHI_K_LIMIT}")
    if catalog is None:
        catalog = enumerate_maximal_stable_sets(g)
    return min_multicover(g.vertex_count, catalog.masks, k)


def exact_chi_k_via_lex(g: GenericGraph, k: int) -> int:
    """chi_k(G) computed as chi(G o K_k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_size("lexicographic product", g.vertex_count * k, CHI_VERTEX_LIMIT)
    return exact_chi_k(lex_product_with_clique(g, k), 1)
