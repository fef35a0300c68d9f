"""Metropolis dynamics of word order on the ring of adjacent transpositions.

The six orders of S, V and O form a single cycle when two orders are joined
whenever they differ by swapping two neighbouring elements. A lineage moves
along that cycle only: each step proposes one of the two neighbours with
probability 1/2 and accepts with ``min(1, exp(-beta * (E(v) - E(u))))``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Mapping, Sequence

import numpy as np

from .costs import DomainError
from .optimizer import EnergyParams

NO_DOMINANT = "NONE"
START_ORDER = "SOV"


class ChainError(RuntimeError):
    """The chain has no unique stationary distribution."""


@dataclass(frozen=True)
class RingGraph:
    nodes: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def neighbors(self, node: str) -> frozenset[str]:
        return frozenset(v for e in self.edges if node in e for v in e if v != node)

    def index(self, node: str) -> int:
        return self.nodes.index(node)

    def degree(self, node: str) -> int:
        return len(self.neighbors(node))

    def distances_from(self, source: str) -> dict[str, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in sorted(self.neighbors(u)):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def diameter(self) -> int:
        return max(max(self.distances_from(u).values()) for u in self.nodes)


def _adjacent_swaps(order: str) -> list[str]:
    out = []
    for i in range(len(order) - 1):
        chars = list(order)
        chars[i], chars[i + 1] = chars[i + 1], chars[i]
        out.append("".join(chars))
    return out


def build_ring(start: str = START_ORDER) -> RingGraph:
    """Cayley graph of the orders of S, V, O under adjacent transpositions.

    Nodes are listed by walking the cycle from ``start`` towards the
    neighbour obtained by swapping its last two elements (SOV, SVO, VSO, ...).
    """
    orders = {"".join(p) for p in permutations("SVO")}
    if start not in orders:
        raise DomainError(f"unknown order {start!r}")
    edges = frozenset(frozenset((u, v)) for u in orders for v in _adjacent_swaps(u))
    ring = RingGraph((), edges)
    walk = [start, _adjacent_swaps(start)[-1]]
    while len(walk) < len(orders):
        nxt = next(v for v in ring.neighbors(walk[-1]) if v != walk[-2])
        walk.append(nxt)
    return RingGraph(tuple(walk), edges)


@dataclass(frozen=True)
class ChainSpec:
    energy: Mapping[str, float]
    beta: float = 2.0
    params: EnergyParams | None = None

    def __post_init__(self):
        if not self.beta >= 0 or math.isinf(self.beta):
            raise DomainError(f"beta must be a finite nonnegative number, got {self.beta}")
        missing = {"".join(p) for p in permutations("SVO")} - set(self.energy)
        if missing:
            raise DomainError(f"energy undefined for {sorted(missing)}")

    def energy_vector(self, ring: RingGraph) -> np.ndarray:
        return np.array([self.energy[u] for u in ring.nodes], dtype=float)


def transition_matrix(spec: ChainSpec, ring: RingGraph) -> np.ndarray:
    """Row-stochastic Metropolis matrix in ``ring.nodes`` order."""
    k = len(ring.nodes)
    P = np.zeros((k, k))
    for i, u in enumerate(ring.nodes):
        nbrs = sorted(ring.neighbors(u))
        for v in nbrs:
            j = ring.index(v)
            rise = spec.energy[v] - spec.energy[u]
            P[i, j] = math.exp(-spec.beta * rise) / len(nbrs) if rise > 0 else 1.0 / len(nbrs)
        P[i, i] = 1.0 - P[i].sum()
    return P


def stationary_distribution(P: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Solve ``pi P = pi``, ``sum(pi) = 1`` by Grassmann-Taksar-Heyman elimination.

    GTH is Gaussian elimination rearranged so that it never subtracts, which
    keeps it accurate when the chain is nearly decoupled (large beta).
    Periodic chains are accepted: irreducibility alone makes ``pi`` unique.
    """
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise DomainError("transition matrix must be square")
    if (P < 0).any() or not np.allclose(P.sum(axis=1), 1.0, atol=1e-12):
        raise DomainError("transition matrix must be row-stochastic")
    k = P.shape[0]
    A = P.copy()
    for m in range(k - 1, 0, -1):
        out = A[m, :m].sum()
        if out <= 0:
            raise ChainError("chain is reducible; stationary distribution is not unique")
        A[:m, m] /= out
        A[:m, :m] += np.outer(A[:m, m], A[m, :m])
    pi = np.zeros(k)
    pi[0] = 1.0
    for m in range(1, k):
        pi[m] = pi[:m] @ A[:m, m]
    pi /= pi.sum()
    if not (pi > 0).all():
        raise ChainError("chain is reducible; stationary distribution is not unique")
    residual = np.abs(pi @ P - pi).max()
    if residual >= tol:
        raise ChainError(f"stationary solve residual {residual:.3g} exceeds {tol:g}")
    return pi


def boltzmann_distribution(spec: ChainSpec, ring: RingGraph) -> np.ndarray:
    """Analytic ``exp(-beta E) / Z`` in ``ring.nodes`` order."""
    e = spec.energy_vector(ring)
    w = np.exp(-spec.beta * (e - e.min()))
    return w / w.sum()


def detailed_balance_residual(pi: np.ndarray, P: np.ndarray) -> float:
    flow = pi[:, None] * P
    return float(np.abs(flow - flow.T).max())


def total_variation(p: Sequence[float], q: Sequence[float]) -> float:
    return 0.5 * float(np.abs(np.asarray(p, float) - np.asarray(q, float)).sum())


def local_minima(energy: Mapping[str, float], ring: RingGraph) -> list[frozenset[str]]:
    """Maximal constant plateaus on the ring whose two flanking nodes are strictly higher."""
    nodes = ring.nodes
    k = len(nodes)
    e = [energy[u] for u in nodes]
    if all(x == e[0] for x in e):
        return []
    # rotate so index 0 starts a plateau
    start = next(i for i in range(k) if e[i] != e[i - 1])
    minima = []
    i = 0
    while i < k:
        a = (start + i) % k
        j = i
        while j + 1 < k and e[(start + j + 1) % k] == e[a]:
            j += 1
        before = e[(start + i - 1) % k]
        after = e[(start + j + 1) % k]
        if before > e[a] and after > e[a]:
            minima.append(frozenset(nodes[(start + t) % k] for t in range(i, j + 1)))
        i = j + 1
    return minima


def count_local_minima(energy: Mapping[str, float], ring: RingGraph) -> int:
    return len(local_minima(energy, ring))


def classify_dominance(
    pi: Mapping[str, float] | Sequence[float],
    theta: float = 2 / 3,
    nodes: Sequence[str] | None = None,
) -> str:
    """The order holding at least ``theta`` of the mass, or ``"NONE"``.

    ``pi`` is either a mapping from order to probability or a vector in
    ``nodes`` order (ring order by default).
    """
    if not 0.5 < theta <= 1:
        raise DomainError(f"theta must lie in (0.5, 1], got {theta}")
    if not isinstance(pi, Mapping):
        nodes = nodes or build_ring().nodes
        if len(pi) != len(nodes):
            raise DomainError("probability vector does not match the node list")
        pi = dict(zip(nodes, pi))
    for order, p in pi.items():
        if p >= theta:
            return order
    return NO_DOMINANT


@dataclass
class TrajectoryStats:
    path: np.ndarray
    nodes: tuple[str, ...]
    visit_counts: dict[str, int]
    reversion_count: int
    dominance: list[str] = field(default_factory=list)

    @property
    def frequencies(self) -> np.ndarray:
        return np.array([self.visit_counts[u] for u in self.nodes], float) / len(self.path)

    def orders(self) -> list[str]:
        return [self.nodes[i] for i in self.path]

    def __eq__(self, other):
        if not isinstance(other, TrajectoryStats):
            return NotImplemented
        return (
            np.array_equal(self.path, other.path)
            and self.nodes == other.nodes
            and self.visit_counts == other.visit_counts
            and self.reversion_count == other.reversion_count
            and self.dominance == other.dominance
        )


def count_reversions(orders: Sequence[str], there: str = "SVO", back: str = "SOV") -> int:
    """Completed ``back -> there -> back`` round trips, detours allowed."""
    count = 0
    anchor = None
    for o in orders:
        if o == back:
            if anchor == there:
                count += 1
            anchor = back
        elif o == there and anchor == back:
            anchor = there
    return count


def simulate_trajectory(
    spec: ChainSpec,
    ring: RingGraph,
    steps: int,
    seed: int,
    theta: float = 2 / 3,
    window: int | None = None,
    start: str = START_ORDER,
) -> TrajectoryStats:
    """Run the chain for ``steps`` states (the start state included).

    Dominance is classified on the empirical frequencies of consecutive
    windows of ``window`` states; one window spans the whole run by default.
    """
    if int(steps) != steps or steps < 1:
        raise DomainError(f"steps must be a positive integer, got {steps}")
    window = steps if window is None else window
    if window < 1:
        raise DomainError(f"window must be positive, got {window}")
    P = transition_matrix(spec, ring)
    k = len(ring.nodes)
    # per node: (left neighbour, right neighbour, P to left, P to left + P to right)
    table = []
    for i in range(k):
        lft, rgt = (i - 1) % k, (i + 1) % k
        table.append((lft, rgt, P[i, lft], P[i, lft] + P[i, rgt]))
    rng = np.random.default_rng(seed)
    draws = rng.random(steps - 1).tolist()
    path = np.empty(steps, dtype=np.int8)
    cur = ring.index(start)
    path[0] = cur
    for t, u in enumerate(draws, start=1):
        lft, rgt, p_l, p_lr = table[cur]
        if u < p_l:
            cur = lft
        elif u < p_lr:
            cur = rgt
        path[t] = cur
    counts = np.bincount(path, minlength=k)
    visit_counts = {u: int(c) for u, c in zip(ring.nodes, counts)}
    orders = [ring.nodes[i] for i in path]
    dominance = []
    for lo in range(0, steps, window):
        chunk = np.bincount(path[lo : lo + window], minlength=k)
        dominance.append(classify_dominance(chunk / chunk.sum(), theta, ring.nodes))
    return TrajectoryStats(path, ring.nodes, visit_counts, count_reversions(orders), dominance)
