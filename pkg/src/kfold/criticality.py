"""Deleted-vertex chromatic numbers and chi_k / chi_*-criticality of webs and antiwebs.

Webs and antiwebs are vertex transitive, so ``chi_k(G - v)`` does not depend
on ``v`` and a single value is reported for every vertex.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional

from .coloring import chi_k
from .families import Family, FamilyParams, alpha
from .numtheory import ceil_div, checked_mul, gcd, t_star


class WitnessKind(str, enum.Enum):
    GCD = "gcd"  # gcd(n,p) != 1 for webs, p | n for antiwebs: never critical
    THRESHOLD = "threshold"  # k >= p*t* (web) or k >= alpha (antiweb)
    BEZOUT = "bezout"  # k = a*t* + b*q with the admissible (a, b) recorded
    NONE = "none"  # no disjunct holds


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    a: Optional[int] = None
    b: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is WitnessKind.BEZOUT:
            return f"bezout(a={self.a},b={self.b})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "Witness":
        m = re.fullmatch(r"bezout\(a=(-?\d+),b=(-?\d+)\)", text)
        if m:
            return cls(WitnessKind.BEZOUT, int(m.group(1)), int(m.group(2)))
        return cls(WitnessKind(text))


def chi_k_web_minus_v(params: FamilyParams, k: int) -> int:
    if not params.is_web:
        raise ValueError("web parameters required")
    n, p = params.n, params.p
    kn = checked_mul(k, n)
    if gcd(n, p) != 1:
        return ceil_div(kn, p)
    return ceil_div(kn - k // t_star(n, p), p)


def chi_k_antiweb_minus_v(params: FamilyParams, k: int) -> int:
    if params.is_web:
        raise ValueError("antiweb parameters required")
    n, p = params.n, params.p
    a = alpha(params)
    if n % p == 0:
        return ceil_div(checked_mul(k, n), a)
    return ceil_div(checked_mul(k, n - 1), a)


def chi_k_minus_v(params: FamilyParams, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    if params.is_web:
        return chi_k_web_minus_v(params, k)
    return chi_k_antiweb_minus_v(params, k)


def _web_condition(n: int, p: int, k: int) -> Witness:
    if gcd(n, p) != 1:
        return Witness(WitnessKind.GCD)
    t = t_star(n, p)
    if k >= p * t:
        return Witness(WitnessKind.THRESHOLD)
    for a in range(1, k // t + 1):
        rest = k - a * t
        if rest % p == 0:
            return Witness(WitnessKind.BEZOUT, a, rest // p)
    return Witness(WitnessKind.NONE)


def _antiweb_condition(n: int, p: int, k: int) -> Witness:
    if n % p == 0:
        return Witness(WitnessKind.GCD)
    al = n // p
    if k >= al:
        return Witness(WitnessKind.THRESHOLD)
    g = gcd(n, al)
    q = al // g
    t = t_star(n, al)
    # b may be negative here; b*q >= a*(g - t) forces k >= a*g, which bounds a.
    for a in range(1, k // g + 1):
        rest = k - a * t
        if rest % q == 0 and rest >= a * (g - t):
            return Witness(WitnessKind.BEZOUT, a, rest // q)
    return Witness(WitnessKind.NONE)


def theorem_witness(params: FamilyParams, k: int) -> Witness:
    """Decide criticality from the arithmetic characterisation alone."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if params.is_web:
        return _web_condition(params.n, params.p, k)
    return _antiweb_condition(params.n, params.p, k)


def fractional_condition(params: FamilyParams, k: int) -> bool:
    """Equivalent criterion phrased through ``r = k*n mod alpha``.

    Web: ``k >= p*t*`` or ``0 < r`` and ``r*t* <= k``.
    Antiweb (``p`` not dividing ``n``): ``k >= alpha`` or ``0 < r <= k``.
    """
    n, p = params.n, params.p
    if params.is_web:
        if gcd(n, p) != 1:
            return False
        t = t_star(n, p)
        r = (k * n) % p
        return k >= p * t or (r > 0 and r * t <= k)
    if n % p == 0:
        return False
    al = n // p
    r = (k * n) % al
    return k >= al or 0 < r <= k


def criticality_gap_bounds(params: FamilyParams, k: int) -> tuple[int, int]:
    """Bracket for ``chi_k(G) - chi_k(G - v)``; ``(0, 0)`` on the non-critical gcd branch."""
    n, p = params.n, params.p
    if params.is_web:
        if gcd(n, p) != 1:
            return (0, 0)
        d = p * t_star(n, p)
    else:
        if n % p == 0:
            return (0, 0)
        d = alpha(params)
    return (k // d, ceil_div(k, d))


@dataclass(frozen=True)
class CriticalityReport:
    params: FamilyParams
    k: int
    chi_k: int
    chi_k_minus_v: int
    is_critical: bool
    witness: Witness
    gap_bounds: tuple[int, int]

    @property
    def gap(self) -> int:
        return self.chi_k - self.chi_k_minus_v

    def describe(self) -> str:
        web = self.params.is_web
        kind = self.witness.kind
        if kind is WitnessKind.GCD:
            return "not critical (gcd(n,p)≠1)" if web else "not critical (gcd(n,p)=p)"
        if kind is WitnessKind.THRESHOLD:
            return "critical (k ≥ p·t*)" if web else "critical (k ≥ α)"
        if kind is WitnessKind.BEZOUT:
            mod = "p" if web else "q"
            return f"critical (k = a·t* + b·{mod} with a={self.witness.a}, b={self.witness.b})"
        return "not critical (no admissible decomposition of k)"

    def to_dict(self) -> dict:
        return {
            "family": self.params.family.value,
            "n": self.params.n,
            "p": self.params.p,
            "k": self.k,
            "chi_k": self.chi_k,
            "chi_k_minus_v": self.chi_k_minus_v,
            "critical": self.is_critical,
            "witness": str(self.witness),
            "gap_bounds": list(self.gap_bounds),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CriticalityReport":
        return cls(
            params=FamilyParams(Family(d["family"]), int(d["n"]), int(d["p"])),
            k=int(d["k"]),
            chi_k=int(d["chi_k"]),
            chi_k_minus_v=int(d["chi_k_minus_v"]),
            is_critical=bool(d["critical"]),
            witness=Witness.parse(d["witness"]),
            gap_bounds=(int(d["gap_bounds"][0]), int(d["gap_bounds"][1])),
        )


def is_chik_critical(params: FamilyParams, k: int) -> CriticalityReport:
    witness = theorem_witness(params, k)
    by_theorem = witness.kind in (WitnessKind.THRESHOLD, WitnessKind.BEZOUT)
    full = chi_k(params, k)
    minus = chi_k_minus_v(params, k)
    by_formula = minus < full
    if by_theorem != by_formula:
        raise AssertionError(
            f"criticality mismatch for {params}, k={k}: theorem={by_theorem}, formulas={by_formula}"
        )
    return CriticalityReport(params, k, full, minus, by_formula, witness, criticality_gap_bounds(params, k))


@dataclass(frozen=True)
class ChiStarVerdict:
    critical: bool
    alpha: int
    n_minus_1: int

    def describe(self) -> str:
        rel = "divides" if self.critical else "does not divide"
        verdict = "χ*-critical" if self.critical else "not χ*-critical"
        return f"{verdict} (α={self.alpha} {rel} n−1={self.n_minus_1})"


def is_chistar_critical(params: FamilyParams) -> ChiStarVerdict:
    """Critical for every k exactly when ``alpha`` divides ``n - 1``."""
    a = alpha(params)
    return ChiStarVerdict((params.n - 1) % a == 0, a, params.n - 1)
