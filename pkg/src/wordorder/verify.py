"""Brute-force checks of the cost and dynamics claims on small instances.

Each check enumerates every case in its range and returns a
:class:`ClaimResult`; a failing result names the first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Sequence

import numpy as np

from . import costs
from .costs import (
    CostFunction,
    ConstituentLayout,
    Linearization,
    brute_force_optimal_positions,
    memory_cost_constituents,
    memory_cost_words,
    optimal_head_positions,
)
from .dynamics import (
    ChainSpec,
    boltzmann_distribution,
    build_ring,
    detailed_balance_residual,
    stationary_distribution,
    transition_matrix,
)
from .optimizer import EnergyParams, energy_landscape
from .predictability import dependent_predictability, head_predictability


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str = ""


def _guard(name: str, check: Callable[[], str | None]) -> ClaimResult:
    try:
        counterexample = check()
    except Exception as exc:  # a broken g surfaces as a failed claim, not a crash
        return ClaimResult(name, False, f"{type(exc).__name__}: {exc}")
    if counterexample:
        return ClaimResult(name, False, counterexample)
    return ClaimResult(name, True, "")


def check_center_minimality(max_n: int, gs: Sequence[CostFunction]) -> str | None:
    for g in gs:
        for n in range(1, max_n + 1):
            found = brute_force_optimal_positions(n, g)
            expected = optimal_head_positions(n, g)
            if found != expected:
                return f"g={g.label} n={n}: argmin {sorted(found)} != centre {sorted(expected)}"
    return None


def check_head_last_minimum(max_n: int, gs: Sequence[CostFunction]) -> str | None:
    for g in gs:
        d3 = memory_cost_constituents(2, 3, g)
        if d3 != g(1) + g(2):
            return f"g={g.label}: D_3={d3} != g(1)+g(2)={g(1) + g(2)}"
        last = {n: memory_cost_constituents(n, n + 1, g) for n in range(2, max(max_n, 2) + 1)}
        best = min(last.values())
        if [n for n, c in last.items() if c == best] != [2]:
            return f"g={g.label}: min of D_(n+1) not uniquely at n=2: {last}"
    return None


def check_edge_maximality(max_n: int, gs: Sequence[CostFunction]) -> str | None:
    for g in gs:
        for n in range(2, max_n + 1):
            d = {l: memory_cost_constituents(n, l, g) for l in range(1, n + 2)}
            if d[1] != d[n + 1]:
                return f"g={g.label} n={n}: D_1={d[1]} != D_(n+1)={d[n + 1]}"
            for l in range(2, n + 1):
                if not d[1] > d[l]:
                    return f"g={g.label} n={n} l={l}: D_l={d[l]} not below D_1={d[1]}"
    return None


def check_atomic_reduction(max_n: int, gs: Sequence[CostFunction], tol: float = 1e-12) -> str | None:
    for n in range(1, max_n + 1):
        for root in range(n + 1):
            layout = ConstituentLayout.atomic(n, root)
            for perm in permutations(range(n + 1)):
                lin = Linearization(perm)
                l = lin.rank(root)
                for g in gs:
                    words = memory_cost_words(layout, lin, g)
                    cons = memory_cost_constituents(n, l, g)
                    if abs(words - cons) > tol:
                        return f"g={g.label} n={n} order={perm}: D'={words} != D={cons}"
    return None


def _layouts(n: int, max_size: int, root: int):
    for sizes in product(range(1, max_size + 1), repeat=n + 1):
        for offsets in product(*(range(s) for s in sizes)):
            yield ConstituentLayout.from_sizes(sizes, root, offsets)


def check_atomicity_minimality(max_n: int, gs: Sequence[CostFunction], max_size: int = 3) -> str | None:
    for n in range(1, max_n + 1):
        root = 0
        atomic = ConstituentLayout.atomic(n, root)
        perms = [Linearization(p) for p in permutations(range(n + 1))]
        baseline = {(lin, g): memory_cost_words(atomic, lin, g) for lin in perms for g in gs}
        for layout in _layouts(n, max_size, root):
            for lin in perms:
                for g in gs:
                    value = memory_cost_words(layout, lin, g)
                    if value < baseline[lin, g]:
                        return (
                            f"g={g.label} sizes={[c.size_words for c in layout.constituents]} "
                            f"offsets={[c.head_word_offset for c in layout.constituents]} "
                            f"order={lin.order}: {value} < atomic {baseline[lin, g]}"
                        )
    return None


def check_conflict(max_n: int, gs: Sequence[CostFunction]) -> str | None:
    for g in gs:
        for n in range(1, max_n + 1):
            ls = range(1, n + 2)
            mem = {l: memory_cost_constituents(n, l, g) for l in ls}
            hp = {l: head_predictability(n, l) for l in ls}
            dp = {l: dependent_predictability(n, l) for l in ls}
            best = [
                l
                for l in ls
                if mem[l] == min(mem.values()) and hp[l] == max(hp.values()) and dp[l] == max(dp.values())
            ]
            if n == 1:
                if not (mem[1] == min(mem.values()) and dp[1] == max(dp.values())):
                    return f"g={g.label} n=1: l=1 does not attain min memory and max dependent predictability"
            elif best:
                return f"g={g.label} n={n}: l={best} attains all three optima"
    return None


def check_detailed_balance(samples: int = 100, seed: int = 0, tol: float = 1e-10) -> str | None:
    rng = np.random.default_rng(seed)
    ring = build_ring()
    for _ in range(samples):
        lam, mu = rng.random(2)
        beta = float(rng.uniform(0, 10))
        spec = ChainSpec(energy_landscape(params=EnergyParams(float(lam), float(mu))), beta)
        P = transition_matrix(spec, ring)
        pi = stationary_distribution(P)
        res = detailed_balance_residual(pi, P)
        gap = float(np.abs(pi - boltzmann_distribution(spec, ring)).max())
        if res >= tol or gap >= tol:
            return f"lambda={lam:.4f} mu={mu:.4f} beta={beta:.4f}: balance {res:.3g}, boltzmann gap {gap:.3g}"
    return None


def run_oracle_suite(max_n: int = 12, cost_functions: Sequence[CostFunction] | None = None) -> list[ClaimResult]:
    gs = list(cost_functions) if cost_functions is not None else costs.bundled_cost_functions()
    return [
        _guard("center_minimality", lambda: check_center_minimality(max_n, gs)),
        _guard("head_last_minimum", lambda: check_head_last_minimum(max_n, gs)),
        _guard("edge_maximality", lambda: check_edge_maximality(max_n, gs)),
        _guard("atomic_reduction", lambda: check_atomic_reduction(min(max_n, 5), gs)),
        _guard("atomicity_minimality", lambda: check_atomicity_minimality(min(max_n, 3), gs)),
        _guard("conflict_existence", lambda: check_conflict(max_n, gs)),
        _guard("detailed_balance", check_detailed_balance),
    ]
