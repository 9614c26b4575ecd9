"""Exit criteria.  Each test's first docstring line is its summary label."""

import json
import time
from math import gcd

from kfold.bounds import bounds_report
from kfold.cli import main
from kfold.coloring import KFoldColoring, chi_k, optimal_coloring, verify_coloring
from kfold.criticality import (
    chi_k_minus_v,
    criticality_gap_bounds,
    fractional_condition,
    is_chik_critical,
    is_chistar_critical,
    theorem_witness,
    WitnessKind,
)
from kfold.families import all_params, alpha, delete_vertex, materialize, web
from kfold.numtheory import ceil_div, t_star
from kfold.oracle import exact_chi_k, exact_chi_k_via_lex


def test_ac1_figure_reproduction(capsys):
    """AC1 antiweb(10,3) 2-fold 7-coloring via CLI, S_0={0,4,7}, verified, < 1 s"""
    start = time.perf_counter()
    assert main(["color", "--family", "antiweb", "-n", "10", "-p", "3", "-k", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    coloring = KFoldColoring.from_classes(doc["n"], doc["classes"])
    verdict = verify_coloring(materialize(web(10, 3)).complement(), coloring, 2)
    elapsed = time.perf_counter() - start
    assert doc["x"] == len(doc["classes"]) == 7
    assert set(doc["classes"][0]) == {0, 4, 7}
    assert verdict.valid
    assert elapsed < 1.0


def test_ac2_formula_vs_oracle():
    """AC2 exact oracle equals ceil(kn/alpha) for all n <= 12, k in {1,2,3}"""
    start = time.perf_counter()
    for params in all_params(12):
        g = materialize(params)
        for k in (1, 2, 3):
            assert exact_chi_k(g, k) == ceil_div(k * params.n, alpha(params)), (params, k)
    assert time.perf_counter() - start < 300


def test_ac3_construction_optimality():
    """AC3 constructed colorings valid with exactly chi_k colors, n <= 40, k <= 6"""
    start = time.perf_counter()
    for params in all_params(40):
        g = materialize(params)
        for k in range(1, 7):
            col = optimal_coloring(params, k)
            assert verify_coloring(g, col, k).valid, (params, k)
            assert col.x == chi_k(params, k), (params, k)
    assert time.perf_counter() - start < 60


def test_ac4_deleted_vertex_sweep():
    """AC4 oracle chi_k(G-v) equals deletion formulas for every v, n <= 10, k <= 3"""
    start = time.perf_counter()
    for params in all_params(10):
        g = materialize(params)
        n, p = params.n, params.p
        for k in (1, 2, 3):
            if params.is_web:
                expected = ceil_div(k * n, p) if gcd(n, p) != 1 else ceil_div(k * n - k // t_star(n, p), p)
            else:
                expected = ceil_div(k * n, alpha(params)) if n % p == 0 else ceil_div(k * (n - 1), alpha(params))
            assert chi_k_minus_v(params, k) == expected
            values = {exact_chi_k(delete_vertex(g, v), k) for v in range(n)}
            assert values == {expected}, (params, k, values)
    assert time.perf_counter() - start < 600


def test_ac5_criticality_characterisation():
    """AC5 theorem, formula and oracle criticality verdicts agree; chi*-critical iff alpha | n-1 iff chi_1-critical"""
    for params in all_params(30):
        for k in range(1, 9):
            by_theorem = theorem_witness(params, k).kind in (WitnessKind.THRESHOLD, WitnessKind.BEZOUT)
            by_formula = chi_k_minus_v(params, k) < chi_k(params, k)
            assert by_theorem == by_formula == fractional_condition(params, k), (params, k)
            assert is_chik_critical(params, k).is_critical == by_theorem
            if params.n <= 10 and k <= 3:
                g = materialize(params)
                full = exact_chi_k(g, k)
                by_oracle = all(exact_chi_k(delete_vertex(g, v), k) < full for v in range(params.n))
                assert by_oracle == by_theorem, (params, k)
        star = is_chistar_critical(params).critical
        assert star == ((params.n - 1) % alpha(params) == 0)
        assert star == is_chik_critical(params, 1).is_critical


def test_ac6_odd_cycle_sequence():
    """AC6 chi_k(C_5) = 3, 5, 8, 10, 13 for k = 1..5; oracle confirms k <= 3"""
    c5 = web(5, 2)
    assert [chi_k(c5, k) for k in range(1, 6)] == [3, 5, 8, 10, 13]
    g = materialize(c5)
    assert [exact_chi_k(g, k) for k in (1, 2, 3)] == [3, 5, 8]


def test_ac7_lexicographic_identity():
    """AC7 chi(G o K_k) equals exact chi_k for n <= 8, k <= 2, < 2 min"""
    start = time.perf_counter()
    for params in all_params(8):
        g = materialize(params)
        for k in (1, 2):
            assert exact_chi_k_via_lex(g, k) == exact_chi_k(g, k), (params, k)
    assert time.perf_counter() - start < 120


def test_ac8_bounds_propositions():
    """AC8 tightness flags and deletion gap bounds hold for n <= 40, k <= 10"""
    for params in all_params(40):
        n, p, a = params.n, params.p, alpha(params)
        r_mod = n % a
        for k in range(1, 11):
            rep = bounds_report(params, k)
            assert rep.tight_omega == (n % p == 0) == (rep.chi_k == rep.k_omega)
            assert rep.tight_chi == (r_mod == 0 or k * (a - r_mod) < a) == (rep.chi_k == rep.k_chi)
            assert rep.tight_frac == ((k * gcd(n, a)) % a == 0) == (rep.chi_k * a == k * n)
            lo, hi = criticality_gap_bounds(params, k)
            gap = chi_k(params, k) - chi_k_minus_v(params, k)
            assert lo <= gap <= hi, (params, k)
