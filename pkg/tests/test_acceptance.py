"""Exit criteria, one test per criterion, tolerances fixed here.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import time
from itertools import permutations

import numpy as np

from wordorder import cli
from wordorder.costs import (
    ConstituentLayout,
    Linearization,
    bundled_cost_functions,
    memory_cost_constituents,
    memory_cost_words,
    optimal_head_positions,
)
from wordorder.dynamics import (
    ChainSpec,
    boltzmann_distribution,
    build_ring,
    count_local_minima,
    detailed_balance_residual,
    simulate_trajectory,
    stationary_distribution,
    total_variation,
    transition_matrix,
)
from wordorder.optimizer import EnergyParams, energy_landscape, score_orders, three_element_layout, verb_position
from wordorder.predictability import dependent_predictability, head_predictability
from wordorder.typology import fixture_path, read_language_table, summarize
from wordorder.verify import check_atomicity_minimality

GS = bundled_cost_functions()
RING = build_ring()
ORDERS = RING.nodes


def report(number, title, passed, detail=""):
    print(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}: {title} {detail}".rstrip())
    assert passed, detail


def pi_of(lam, mu, beta, s=1, o=1):
    spec = ChainSpec(energy_landscape(three_element_layout(s, o), params=EnergyParams(lam, mu)), beta)
    return spec, stationary_distribution(transition_matrix(spec, RING))


def test_criterion_01_center_minimality():
    assert {g.label for g in GS} == {"linear", "power:0.5", "power:1", "power:2", "power:3", "logarithmic"}
    start = time.perf_counter()
    bad = []
    for g in GS:
        for n in range(1, 13):
            costs = {l: memory_cost_constituents(n, l, g) for l in range(1, n + 2)}
            argmin = {l for l, c in costs.items() if c == min(costs.values())}
            if argmin != optimal_head_positions(n, g):
                bad.append((g.label, n, sorted(argmin)))
    elapsed = time.perf_counter() - start
    report(1, "center minimality", not bad and elapsed < 1.0, f"counterexamples={bad} time={elapsed:.3f}s")


def test_criterion_02_head_last_cost():
    bad = []
    for g in GS:
        if memory_cost_constituents(2, 3, g) != g(1) + g(2):
            bad.append((g.label, "D_3"))
        last = {n: memory_cost_constituents(n, n + 1, g) for n in range(2, 13)}
        if min(last, key=last.get) != 2 or sorted(last.values())[1] <= last[2]:
            bad.append((g.label, "argmin n"))
    report(2, "head-last cost for n=2", not bad, f"counterexamples={bad}")


def test_criterion_03_atomic_reduction():
    worst = 0.0
    for n in range(1, 6):
        for root in range(n + 1):
            layout = ConstituentLayout.atomic(n, root)
            for perm in permutations(range(n + 1)):
                lin = Linearization(perm)
                for g in GS:
                    diff = abs(memory_cost_words(layout, lin, g) - memory_cost_constituents(n, lin.rank(root), g))
                    if g.kind == "linear" and diff != 0:
                        worst = float("inf")
                    worst = max(worst, diff)
    report(3, "atomic reduction", worst <= 1e-12, f"max |D'-D|={worst:.3g}")


def test_criterion_04_atomicity_minimality():
    start = time.perf_counter()
    counterexample = check_atomicity_minimality(3, GS, max_size=3)
    elapsed = time.perf_counter() - start
    report(
        4,
        "atomicity minimality",
        counterexample is None and elapsed < 10.0,
        f"counterexample={counterexample} time={elapsed:.2f}s",
    )


def test_criterion_05_edge_maximality():
    bad = []
    for g in GS:
        for n in range(2, 13):
            d = [memory_cost_constituents(n, l, g) for l in range(1, n + 2)]
            if d[0] != d[-1] or not all(d[0] > x for x in d[1:-1]):
                bad.append((g.label, n))
    report(5, "edge maximality", not bad, f"counterexamples={bad}")


def test_criterion_06_conflict_existence():
    bad = []
    for g in GS:
        for n in range(1, 13):
            ls = range(1, n + 2)
            mem = {l: memory_cost_constituents(n, l, g) for l in ls}
            hp = {l: head_predictability(n, l) for l in ls}
            dp = {l: dependent_predictability(n, l) for l in ls}
            optimal = [
                l
                for l in ls
                if mem[l] == min(mem.values()) and hp[l] == max(hp.values()) and dp[l] == max(dp.values())
            ]
            if n == 1 and not (mem[1] == min(mem.values()) and dp[1] == max(dp.values())):
                bad.append((g.label, 1))
            if n > 1 and optimal:
                bad.append((g.label, n, optimal))
    report(6, "conflict existence", not bad, f"counterexamples={bad}")


def test_criterion_07_typology():
    s = summarize(read_language_table(fixture_path()))
    ok = (s.n1, s.n2, s.n3, s.total) == (120, 499, 569, 1377) and 0.13 <= s.none_share <= 0.15
    report(7, "typology reproduction", ok, f"{s.to_dict()} none_share={s.none_share:.4f}")


def test_criterion_08_attractor_dichotomy():
    mu, beta = 0.5, 2.0
    final, medial, multi = [], [], []
    for i in range(101):
        lam = i / 100
        spec = ChainSpec(energy_landscape(three_element_layout(), params=EnergyParams(lam, mu)), beta)
        e = spec.energy
        best = min(e.values())
        kinds = {verb_position(u) for u in e if e[u] == best}
        if kinds == {"final"}:
            final.append(lam)
        if kinds == {"medial"}:
            medial.append(lam)
        if count_local_minima(e, RING) >= 2:
            multi.append(lam)
    between = [l for l in multi if final and medial and min(final) < l < max(medial)] if final else []
    report(
        8,
        "attractor dichotomy",
        bool(final and medial and between),
        f"verb-final minimum at {len(final)} points, verb-medial at {len(medial)}, "
        f">=2 minima at {len(multi)}, intermediate {len(between)}",
    )


def test_criterion_09_stationary_exactness():
    rng = np.random.default_rng(2024)
    worst_balance = worst_gap = 0.0
    for _ in range(100):
        lam, mu = rng.random(2)
        beta = float(rng.uniform(0, 20))
        spec = ChainSpec(energy_landscape(params=EnergyParams(float(lam), float(mu))), beta)
        P = transition_matrix(spec, RING)
        pi = stationary_distribution(P)
        worst_balance = max(worst_balance, detailed_balance_residual(pi, P))
        worst_gap = max(worst_gap, float(np.abs(pi - boltzmann_distribution(spec, RING)).max()))
    report(
        9,
        "stationary exactness",
        worst_balance < 1e-10 and worst_gap < 1e-10,
        f"balance={worst_balance:.3g} boltzmann={worst_gap:.3g}",
    )


def test_criterion_10_reversion_recurrence():
    start = time.perf_counter()
    spec, pi = pi_of(0.5, 0.5, 2.0)
    short = simulate_trajectory(spec, RING, steps=100_000, seed=42)
    long = simulate_trajectory(spec, RING, steps=1_000_000, seed=42)
    tv = total_variation(long.frequencies, pi)
    elapsed = time.perf_counter() - start
    report(
        10,
        "reversion recurrence",
        short.reversion_count > 0 and tv < 0.02 and elapsed < 5.0,
        f"reversions={short.reversion_count} tv={tv:.4f} time={elapsed:.2f}s",
    )


def test_criterion_11_size_effect():
    medial_mass, gaps = [], []
    for size in (1, 2, 3, 4):
        _, pi = pi_of(0.5, 0.5, 2.0, s=size, o=size)
        p = dict(zip(ORDERS, pi))
        medial_mass.append(float(p["SVO"] + p["OVS"]))
        scores = dict(zip(ORDERS, score_orders(list(ORDERS), three_element_layout(size, size))))
        gaps.append(scores["SOV"].memory - scores["SVO"].memory)
    mass_ok = all(b >= a for a, b in zip(medial_mass, medial_mass[1:]))
    gap_ok = all(b > a for a, b in zip(gaps, gaps[1:]))
    report(
        11,
        "size effect",
        mass_ok and gap_ok,
        f"pi(SVO)+pi(OVS)={[round(m, 4) for m in medial_mass]} gap={gaps}",
    )


def _run_cli(capsys, argv, outdir=None):
    code = cli.main(argv)
    out = capsys.readouterr().out
    files = {}
    if outdir is not None:
        files = {p.name: p.read_bytes() for p in sorted(outdir.iterdir())}
    return code, out, files


def test_criterion_12_determinism(capsys, tmp_path):
    commands = [
        ["costs", "--n", "4", "--g", "power", "--exponent", "2", "--sizes", "2,1,3,1,1"],
        ["pareto", "--sizes", "2,1,3", "--lambda", "0.3", "--mu", "0.7"],
        ["ingest", "--format", "json"],
        ["verify", "--max-n", "6"],
    ]
    mismatched = []
    for argv in commands:
        if _run_cli(capsys, argv) != _run_cli(capsys, argv):
            mismatched.append(argv[0])
    runs = []
    for tag in ("a", "b"):
        outdir = tmp_path / tag
        argv = ["dynamics", "--steps", "20000", "--seed", "42", "--sizes", "2,1,2", "--output-dir", str(outdir)]
        runs.append(_run_cli(capsys, argv, outdir))
    if runs[0] != runs[1] or runs[0][0] != 0:
        mismatched.append("dynamics")
    report(12, "determinism", not mismatched, f"mismatched={mismatched}")
