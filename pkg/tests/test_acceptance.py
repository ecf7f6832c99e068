"""End-to-end verification gate.

Each test checks one exact, finite claim and prints a pass/fail line (run
with `pytest -s` to see them as they complete). Everything is zero-tolerance
integer arithmetic; the only budgets are wall-clock ceilings where stated.
"""

import json
import time

from stablecoh.cli import main
from stablecoh.conditions import (
    codimension,
    hilbert_function,
    ordinary_square_dim,
    symbolic_square_dim,
    verify_codim_lemma,
)
from stablecoh.e1 import (
    alexander_dual,
    assemble_e1,
    dual_classes,
    vanishing_band,
    verify_stable_match,
)
from stablecoh.params import ParameterTriple
from stablecoh.points import collinear_configuration, coordinate_configuration, random_configuration
from stablecoh.tables import gaussian_binomial

from oracles import count_subspaces_f2

import random

GRID = [(n, N) for n in (1, 2, 3) for N in (2, 3, 4, 5)]


def report_line(ok: bool, name: str, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f": {detail}" if detail else ""
    print(f"[{status}] {name}{suffix}")


def test_codimension_grid_random_configs():
    """50 random distinct configurations per grid cell at d = 2N-1 all give N(n+1)."""
    start = time.monotonic()
    failures = []
    for n, N in GRID:
        params = ParameterTriple(2 * N - 1, n, N)
        report = verify_codim_lemma(params, trials=50, seed=1000 * n + N, jobs=1)
        if not (set(report.codimensions) == {N * (n + 1)} and not report.counterexamples):
            failures.append((n, N, sorted(set(report.codimensions))))
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 300.0
    report_line(ok, "codimension grid", f"12 cells x 50 trials in {elapsed:.1f}s")
    assert not failures, failures
    assert elapsed < 300.0, f"grid took {elapsed:.1f}s, budget is 300s"


def test_sharpness_collinear_probe_grid():
    """At d = 2N-2 the collinear configuration drops below N(n+1) and obeys the line bound."""
    records = []
    failures = []
    for n, N in GRID:
        d = 2 * N - 2
        assert d >= 1
        value = codimension(d, collinear_configuration(n, N))
        ceiling = N * (n + 1) - 1
        line_bound = N * (n - 1) + d + 1
        records.append((n, N, d, value, line_bound))
        if not (value <= ceiling and value <= line_bound):
            failures.append((n, N, value, ceiling, line_bound))
    ok = not failures
    detail = "; ".join(f"(n={n},N={N},d={d}) codim {v} vs bound {b}" for n, N, d, v, b in records[:3])
    report_line(ok, "collinear sharpness grid", detail + "; ...")
    assert not failures, failures


def test_symbolic_versus_ordinary_probe():
    """Coordinate points in the plane: squares differ at d=3, agree at 9 from d=6 on."""
    cfg = coordinate_configuration(2, 3)
    sym3 = symbolic_square_dim(3, cfg)
    ord3 = ordinary_square_dim(3, cfg)
    codim3 = codimension(3, cfg)
    agree = {
        d: (hilbert_function(d, cfg, "symbolic"), hilbert_function(d, cfg, "ordinary"))
        for d in range(6, 11)
    }
    ok = (
        sym3 == 1
        and ord3 == 0
        and codim3 == 9
        and all(pair == (9, 9) for pair in agree.values())
    )
    report_line(ok, "square comparison probe",
                f"d=3 symbolic {sym3} / ordinary {ord3}, d=6..10 values {sorted(set(agree.values()))}")
    assert (sym3, ord3, codim3) == (1, 0, 9)
    for d, pair in agree.items():
        assert pair == (9, 9), (d, pair)


def test_regularity_grid_random_configs():
    """20 random configurations per cell: symbolic value is N(n+1) on [2N-1, 2N+3]."""
    failures = []
    for n, N in GRID:
        target = N * (n + 1)
        for trial in range(20):
            rng = random.Random(2000 * n + 100 * N + trial)
            cfg = random_configuration(n, N, rng)
            for d in range(2 * N - 1, 2 * N + 4):
                value = hilbert_function(d, cfg, "symbolic")
                if value != target:
                    failures.append((n, N, trial, d, value, target))
    ok = not failures
    report_line(ok, "regularity window grid", "12 cells x 20 configs x 5 degrees")
    assert not failures, failures[:5]


def test_subspace_count_oracle():
    """Gaussian binomials at q=2 equal brute-force subspace counts over F_2."""
    start = time.monotonic()
    checked = 0
    for n1 in range(1, 6):  # n+1
        for l in range(0, n1 + 1):
            table_value = sum(c * 2**i for i, c in enumerate(gaussian_binomial(n1, l)))
            brute = count_subspaces_f2(n1, l)
            assert table_value == brute, (n1, l, table_value, brute)
            checked += 1
    elapsed = time.monotonic() - start
    ok = elapsed < 10.0
    report_line(ok, "binary subspace oracle", f"{checked} pairs in {elapsed:.2f}s")
    assert elapsed < 10.0


def test_stable_match_small_dimensions():
    """Dual-degree multisets match the general-linear tables for n = 0..6."""
    results = {n: verify_stable_match(n) for n in range(0, 7)}
    ok = all(r.matched for r in results.values())
    report_line(ok, "stable multiset match", "n = 0..6")
    for n, r in results.items():
        assert r.matched, (n, r.missing, r.extra)
    assert dict(results[1].stratum_degrees) == {1: 1, 3: 1, 4: 1}
    assert dict(results[2].stratum_degrees) == {
        1: 1, 3: 1, 4: 1, 5: 1, 6: 1, 8: 1, 9: 1
    }


def test_weight_law_representative_pages():
    """weight - dual degree = column on every entry; top class has the exact twist."""
    failures = []
    for n in range(1, 7):
        N = n + 3
        page = assemble_e1(ParameterTriple(2 * N - 1, n, N))
        for cls in dual_classes(page):
            if cls.weight - cls.dual_degree != cls.column:
                failures.append((n, cls))
        dual = alexander_dual(page)
        top = (n + 1) ** 2
        if dual.components(top) != ((1, -(n + 1) * (n + 2) // 2),):
            failures.append((n, "top", dual.components(top)))
    ok = not failures
    report_line(ok, "weight law", "n = 1..6, N = n+3, d = 2N-1")
    assert not failures, failures


BAND_CASES = {
    (1, 10, 19): {
        "c": 20,
        "supports": (35, 36, 38),
        "window": (30, 34),
    },
    (2, 12, 23): {
        "c": 300,
        "supports": (590, 591, 593, 594, 595, 596, 598),
        "window": (588, 589),
    },
    (3, 18, 35): {
        "c": 8436,
        "supports": (16855, 16856, 16858, 16859, 16860, 16861, 16862,
                      16863, 16864, 16865, 16866, 16867, 16868, 16870),
        "window": (16854, 16854),
    },
}


def test_band_vanishing_windows():
    """Frozen support sets avoid the forbidden window; dual bound is zero in the band."""
    for (n, N, d), expect in BAND_CASES.items():
        report = vanishing_band(ParameterTriple(d, n, N))
        assert report.coefficient_dim == expect["c"], (n, N, d)
        assert report.supports == expect["supports"], (n, N, d, report.supports)
        assert report.bm_window == expect["window"]
        assert report.verified and report.guaranteed
        lo, hi = expect["window"]
        assert not any(lo <= s <= hi for s in report.supports)
        dual = alexander_dual(assemble_e1(ParameterTriple(d, n, N)))
        for k in range((n + 1) ** 2 + 1, N):
            assert dual.dimension(k) == 0, (n, N, d, k)
    # the first case spelled out: degrees 5..9 dual to BM degrees 34..30,
    # so in particular the narrower window [30, 33] is also untouched
    first = vanishing_band(ParameterTriple(19, 1, 10))
    assert not any(30 <= s <= 33 for s in first.supports)
    report_line(True, "band vanishing", "windows empty for (1,10,19), (2,12,23), (3,18,35)")


def test_json_determinism_across_jobs(tmp_path):
    """The codimension grid rerun with --jobs 1 and --jobs 8 emits identical bytes."""
    mismatches = []
    for n, N in GRID:
        outputs = []
        for jobs in (1, 8):
            target = tmp_path / f"grid_{n}_{N}_{jobs}.json"
            code = main([
                "verify-lemma",
                "--d", str(2 * N - 1),
                "--n", str(n),
                "--N", str(N),
                "--trials", "50",
                "--seed", str(1000 * n + N),
                "--jobs", str(jobs),
                "--format", "json",
                "--output", str(target),
            ])
            assert code == 0, (n, N, jobs)
            outputs.append(target.read_bytes())
        if outputs[0] != outputs[1]:
            mismatches.append((n, N))
        doc = json.loads(outputs[0])
        assert doc["report"]["verified"] is True
    ok = not mismatches
    report_line(ok, "byte determinism across jobs", "12 cells, --jobs 1 vs --jobs 8")
    assert not mismatches, mismatches
