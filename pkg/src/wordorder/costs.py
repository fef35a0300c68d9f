"""Online memory cost of placing a head among its dependents.

Two measures are provided:

* :func:`memory_cost_constituents` counts distance in constituents, so the
  cost of putting the head at position ``l`` among ``n + 1`` elements is
  ``sum(g(d) for d in 1..l-1) + sum(g(d) for d in 1..n+1-l)``.
* :func:`memory_cost_words` counts distance in words between the head word of
  each dependent constituent and the head word of the root constituent.

Constituent indices are 0-based; head positions ``l`` are 1-based ranks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

COST_KINDS = ("linear", "power", "logarithmic", "custom")


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


@dataclass(frozen=True)
class CostFunction:
    """Dependency-length cost g(d), defined for integer d in [1, domain_max].

    ``kind="custom"`` wraps an arbitrary callable; it exists so that checks can
    be fed a deliberately broken g.
    """

    kind: str = "linear"
    exponent: float = 1.0
    domain_max: int = 64
    func: Callable[[int], float] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in COST_KINDS:
            raise DomainError(f"unknown cost kind {self.kind!r}; expected one of {COST_KINDS}")
        if self.kind == "power" and not self.exponent > 0:
            raise DomainError(f"power exponent must be positive, got {self.exponent}")
        if self.kind == "custom" and self.func is None:
            raise DomainError("custom cost function needs a callable")
        if int(self.domain_max) != self.domain_max or self.domain_max < 1:
            raise DomainError(f"domain_max must be a positive integer, got {self.domain_max}")

    @property
    def label(self) -> str:
        if self.kind == "power":
            return f"power:{self.exponent:g}"
        return self.kind

    def __call__(self, d: int) -> float:
        if int(d) != d or not 1 <= d <= self.domain_max:
            raise DomainError(f"g is defined on [1, {self.domain_max}], got d={d}")
        d = int(d)
        if self.kind == "linear":
            return float(d)
        if self.kind == "power":
            return float(d) ** self.exponent
        if self.kind == "logarithmic":
            return math.log1p(d)
        return float(self.func(d))

    def with_domain(self, domain_max: int) -> "CostFunction":
        return CostFunction(self.kind, self.exponent, domain_max, self.func)


def linear(domain_max: int = 64) -> CostFunction:
    return CostFunction("linear", 1.0, domain_max)


def power(exponent: float, domain_max: int = 64) -> CostFunction:
    return CostFunction("power", exponent, domain_max)


def logarithmic(domain_max: int = 64) -> CostFunction:
    return CostFunction("logarithmic", 1.0, domain_max)


def bundled_cost_functions(domain_max: int = 64) -> list[CostFunction]:
    """Linear, power with exponents 0.5, 1, 2, 3, and logarithmic."""
    return [
        linear(domain_max),
        *(power(a, domain_max) for a in (0.5, 1.0, 2.0, 3.0)),
        logarithmic(domain_max),
    ]


def make_cost_function(kind: str = "linear", exponent: float = 1.0, domain_max: int = 64) -> CostFunction:
    return CostFunction(kind, exponent if kind == "power" else 1.0, domain_max)


def validate_cost_function(g: CostFunction) -> bool:
    """True iff g is positive and strictly increasing on its whole domain."""
    try:
        values = [g(d) for d in range(1, g.domain_max + 1)]
    except (DomainError, ArithmeticError, ValueError, TypeError):
        return False
    if any(not v > 0 for v in values):
        return False
    return all(b > a for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class Constituent:
    size_words: int = 1
    head_word_offset: int = 0

    def __post_init__(self):
        if int(self.size_words) != self.size_words or self.size_words < 1:
            raise DomainError(f"size_words must be an integer >= 1, got {self.size_words}")
        if not 0 <= self.head_word_offset < self.size_words:
            raise DomainError(
                f"head_word_offset must lie in [0, {self.size_words - 1}], got {self.head_word_offset}"
            )

    @property
    def atomic(self) -> bool:
        return self.size_words == 1


@dataclass(frozen=True)
class ConstituentLayout:
    """A root (head) constituent plus ``n >= 1`` dependent constituents."""

    constituents: tuple[Constituent, ...]
    root_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if len(self.constituents) < 2:
            raise DomainError("a layout needs a root and at least one dependent")
        if not 0 <= self.root_index < len(self.constituents):
            raise DomainError(f"root_index {self.root_index} out of range")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int], root_index: int = 0, offsets: Sequence[int] | None = None):
        offsets = [0] * len(sizes) if offsets is None else offsets
        if len(offsets) != len(sizes):
            raise DomainError("sizes and offsets must have the same length")
        return cls(tuple(Constituent(s, o) for s, o in zip(sizes, offsets)), root_index)

    @classmethod
    def atomic(cls, n: int, root_index: int = 0) -> "ConstituentLayout":
        return cls.from_sizes([1] * (n + 1), root_index)

    @property
    def n(self) -> int:
        return len(self.constituents) - 1

    @property
    def total_words(self) -> int:
        return sum(c.size_words for c in self.constituents)

    def head_position(self, lin: "Linearization") -> int:
        return lin.rank(self.root_index)


@dataclass(frozen=True)
class Linearization:
    """An ordering of constituent indices, first element first."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        if sorted(order) != list(range(len(order))):
            raise DomainError(f"order {order} is not a permutation of 0..{len(order) - 1}")
        object.__setattr__(self, "order", order)

    def rank(self, index: int) -> int:
        """1-based position of constituent ``index`` in the order."""
        return self.order.index(index) + 1

    def check(self, layout: ConstituentLayout) -> None:
        if len(self.order) != len(layout.constituents):
            raise DomainError(
                f"linearization covers {len(self.order)} constituents, layout has {len(layout.constituents)}"
            )


def _check_position(n: int, l: int) -> None:
    if int(n) != n or n < 1:
        raise DomainError(f"need at least one dependent, got n={n}")
    if int(l) != l or not 1 <= l <= n + 1:
        raise DomainError(f"head position must lie in [1, {n + 1}], got l={l}")


def memory_cost_constituents(n: int, l: int, g: CostFunction) -> float:
    """Cost of the head at position ``l`` with distances counted in constituents."""
    _check_position(n, l)
    left = sum(g(d) for d in range(1, l))
    right = sum(g(d) for d in range(1, n + 2 - l))
    return left + right


def head_word_positions(layout: ConstituentLayout, lin: Linearization) -> list[int]:
    """1-based word position of each constituent's head word, indexed by constituent."""
    lin.check(layout)
    positions = [0] * len(layout.constituents)
    start = 1
    for i in lin.order:
        c = layout.constituents[i]
        positions[i] = start + c.head_word_offset
        start += c.size_words
    return positions


def word_distance_matrix(layout: ConstituentLayout, lin: Linearization) -> np.ndarray:
    """Word distances between head words; entry [i, j] is indexed by constituent."""
    pos = np.asarray(head_word_positions(layout, lin), dtype=np.int64)
    return np.abs(pos[:, None] - pos[None, :])


def memory_cost_words(layout: ConstituentLayout, lin: Linearization, g: CostFunction) -> float:
    """Cost of the root with distances counted in words between head words."""
    m = layout.total_words
    if g.domain_max < m - 1:
        raise DomainError(f"g is defined up to d={g.domain_max} but the sequence has {m} words")
    pos = head_word_positions(layout, lin)
    root = pos[layout.root_index]
    # sum in linear order so the atomic case adds terms exactly like the constituent measure
    left = [root - pos[i] for i in lin.order if pos[i] < root]
    right = [pos[i] - root for i in lin.order if pos[i] > root]
    return sum(g(d) for d in sorted(left)) + sum(g(d) for d in sorted(right))


def optimal_head_positions(n: int, g: CostFunction | None = None) -> frozenset[int]:
    """Head positions minimising :func:`memory_cost_constituents` for a strictly increasing g.

    The minimiser is the centre: ``floor((n+2)/2)`` and ``ceil((n+2)/2)``,
    which coincide when ``n`` is even. ``g`` only has to cover distances up to
    ``n``; its shape does not matter as long as it is strictly increasing.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"need at least one dependent, got n={n}")
    if g is not None and g.domain_max < n:
        raise DomainError(f"g must be defined up to d={n}")
    return frozenset({(n + 2) // 2, (n + 3) // 2})


def brute_force_optimal_positions(n: int, g: CostFunction) -> frozenset[int]:
    costs = {l: memory_cost_constituents(n, l, g) for l in range(1, n + 2)}
    best = min(costs.values())
    return frozenset(l for l, c in costs.items() if c == best)


def cost_table(ns: Iterable[int], gs: Iterable[CostFunction]) -> list[tuple[int, int, str, float]]:
    """Rows ``(n, l, g_kind, cost)`` for every head position of every n."""
    gs = list(gs)
    return [
        (n, l, g.label, memory_cost_constituents(n, l, g))
        for g in gs
        for n in ns
        for l in range(1, n + 2)
    ]
