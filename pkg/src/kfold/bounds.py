"""How chi_k of a web or antiweb sits against k*omega, k*chi and k*n/alpha."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import chi_k
from .families import Family, FamilyParams, alpha, omega
from .numtheory import ceil_div, checked_mul, gcd


@dataclass(frozen=True)
class BoundsReport:
    params: FamilyParams
    k: int
    k_omega: int
    chi_k: int
    k_chi: int
    frac_chi: Fraction  # n / alpha, reduced
    lex_lower: int
    tight_omega: bool
    tight_chi: bool
    tight_frac: bool

    def to_dict(self) -> dict:
        return {
            "family": self.params.family.value,
            "n": self.params.n,
            "p": self.params.p,
            "k": self.k,
            "k_omega": self.k_omega,
            "chi_k": self.chi_k,
            "k_chi": self.k_chi,
            "frac_chi": {"num": self.frac_chi.numerator, "den": self.frac_chi.denominator},
            "lex_lower": self.lex_lower,
            "tight": {"omega": self.tight_omega, "chi": self.tight_chi, "frac": self.tight_frac},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundsReport":
        return cls(
            params=FamilyParams(Family(d["family"]), int(d["n"]), int(d["p"])),
            k=int(d["k"]),
            k_omega=int(d["k_omega"]),
            chi_k=int(d["chi_k"]),
            k_chi=int(d["k_chi"]),
            frac_chi=Fraction(int(d["frac_chi"]["num"]), int(d["frac_chi"]["den"])),
            lex_lower=int(d["lex_lower"]),
            tight_omega=bool(d["tight"]["omega"]),
            tight_chi=bool(d["tight"]["chi"]),
            tight_frac=bool(d["tight"]["frac"]),
        )


def bounds_report(params: FamilyParams, k: int) -> BoundsReport:
    """All five quantities plus the three tightness flags.

    The flags are decided from divisibility alone, not by comparing the
    computed quantities, so tests can check one against the other.
    """
    n, p = params.n, params.p
    a = alpha(params)
    r = n % a
    ck = chi_k(params, k)
    chi1 = chi_k(params, 1)
    return BoundsReport(
        params=params,
        k=k,
        k_omega=checked_mul(k, omega(params)),
        chi_k=ck,
        k_chi=checked_mul(k, chi1),
        frac_chi=Fraction(n, a),
        lex_lower=ceil_div(checked_mul(k, n), a),
        tight_omega=n % p == 0,
        # k < a / (a - r), cross-multiplied
        tight_chi=r == 0 or k * (a - r) < a,
        tight_frac=(k * gcd(n, a)) % a == 0,
    )


@dataclass(frozen=True)
class StrictnessCheck:
    upper_hypothesis: bool  # alpha | n-1 and alpha > 1
    lower_hypothesis: bool  # p | n-1 and p > 1
    upper_strict: bool
    lower_strict: bool


def strictness_check(params: FamilyParams, k: int) -> StrictnessCheck:
    """Apply the strict-bounds corollary and confirm it against ``bounds_report``.

    ``upper_strict`` is true when the hypotheses give ``chi_k < k*chi`` (needs
    ``k > 1``); ``lower_strict`` likewise for ``k*omega < chi_k``.  Raises
    ``AssertionError`` if a concluded inequality fails on the actual numbers.
    """
    n, p = params.n, params.p
    a = alpha(params)
    upper_hyp = (n - 1) % a == 0 and a > 1
    lower_hyp = (n - 1) % p == 0 and p > 1
    upper = upper_hyp and k > 1
    lower = lower_hyp and k > 1
    rep = bounds_report(params, k)
    if upper and not rep.chi_k < rep.k_chi:
        raise AssertionError(f"expected chi_k < k*chi for {params}, k={k}")
    if lower and not rep.k_omega < rep.chi_k < rep.k_chi:
        raise AssertionError(f"expected k*omega < chi_k < k*chi for {params}, k={k}")
    return StrictnessCheck(upper_hyp, lower_hyp, upper, lower)
