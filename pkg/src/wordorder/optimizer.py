"""Scoring, Pareto fronts and scalarised energy over linearizations.

The three-element case labels orders by strings over ``{"S", "V", "O"}``
with V as the root. Generic layouts are scored through
:class:`~wordorder.costs.Linearization` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

from .costs import (
    CostFunction,
    ConstituentLayout,
    DomainError,
    Linearization,
    linear,
    memory_cost_words,
)
from .predictability import dependent_predictability, head_predictability

ROLES = ("S", "V", "O")
ROLE_INDEX = {r: i for i, r in enumerate(ROLES)}
VERB_POSITIONS = {1: "initial", 2: "medial", 3: "final"}

Order = Union[str, Linearization]


def enumerate_three_element_orders() -> dict[str, str]:
    """All six orders of S, V and O mapped to the position class of the verb."""
    return {"".join(p): VERB_POSITIONS[p.index("V") + 1] for p in permutations("SOV")}


def verb_position(order: str) -> str:
    """``initial``, ``medial`` or ``final`` for a labelled three-element order."""
    _check_label(order)
    return VERB_POSITIONS[order.index("V") + 1]


def _check_label(order: str) -> None:
    if not isinstance(order, str) or sorted(order) != sorted(ROLES):
        raise DomainError(f"not an order of S, V and O: {order!r}")


def three_element_layout(
    s_size: int = 1,
    o_size: int = 1,
    v_size: int = 1,
    offsets: Mapping[str, int] | None = None,
) -> ConstituentLayout:
    """Layout with constituents indexed S=0, V=1, O=2 and V as root."""
    offsets = offsets or {}
    sizes = {"S": s_size, "V": v_size, "O": o_size}
    return ConstituentLayout.from_sizes(
        [sizes[r] for r in ROLES],
        root_index=ROLE_INDEX["V"],
        offsets=[offsets.get(r, 0) for r in ROLES],
    )


def to_linearization(order: Order) -> Linearization:
    if isinstance(order, Linearization):
        return order
    _check_label(order)
    return Linearization(tuple(ROLE_INDEX[c] for c in order))


@dataclass(frozen=True)
class ObjectiveScores:
    memory: float
    memory_normalized: float
    head_pred: float
    dep_pred: float

    def vector(self) -> tuple[float, float, float]:
        """Objectives oriented so that larger is better everywhere."""
        return (-self.memory, self.head_pred, self.dep_pred)


@dataclass(frozen=True)
class EnergyParams:
    """``lam`` weighs memory against predictability; ``mu`` weighs head against dependents."""

    lam: float = 0.5
    mu: float = 0.5

    def __post_init__(self):
        for name in ("lam", "mu"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {value}")


def _raw_scores(order: Order, layout: ConstituentLayout, g: CostFunction) -> tuple[float, float, float]:
    lin = to_linearization(order)
    lin.check(layout)
    n, l = layout.n, layout.head_position(lin)
    return memory_cost_words(layout, lin, g), head_predictability(n, l), dependent_predictability(n, l)


def _default_candidates(layout: ConstituentLayout) -> list[Order]:
    if layout.n == 2 and layout.root_index == ROLE_INDEX["V"]:
        return list(enumerate_three_element_orders())
    return [Linearization(p) for p in permutations(range(layout.n + 1))]


def score_orders(
    candidates: Sequence[Order],
    layout: ConstituentLayout,
    g: CostFunction | None = None,
) -> list[ObjectiveScores]:
    """Score every candidate, normalising memory by min-max over the candidates."""
    if not candidates:
        raise DomainError("need at least one candidate")
    g = g or linear()
    raw = [_raw_scores(c, layout, g) for c in candidates]
    lo = min(r[0] for r in raw)
    hi = max(r[0] for r in raw)
    span = hi - lo
    return [
        ObjectiveScores(m, (m - lo) / span if span > 0 else 0.0, hp, dp)
        for m, hp, dp in raw
    ]


def score_order(
    order: Order,
    layout: ConstituentLayout,
    g: CostFunction | None = None,
    reference: Sequence[Order] | None = None,
) -> ObjectiveScores:
    """Score one order; memory is normalised over ``reference``.

    ``reference`` defaults to the six labelled orders for an S/V/O layout and
    to every permutation of the constituents otherwise.
    """
    reference = list(reference) if reference is not None else _default_candidates(layout)
    if order not in reference:
        reference.append(order)
    scores = score_orders(reference, layout, g)
    return scores[reference.index(order)]


def dominates(a: ObjectiveScores, b: ObjectiveScores) -> bool:
    va, vb = a.vector(), b.vector()
    return all(x >= y for x, y in zip(va, vb)) and any(x > y for x, y in zip(va, vb))


def pareto_front(
    candidates: Sequence[Order],
    layout: ConstituentLayout,
    g: CostFunction | None = None,
) -> list[Order]:
    """Candidates that no other candidate strictly dominates, in input order."""
    scores = score_orders(candidates, layout, g)
    return [
        c
        for c, s in zip(candidates, scores)
        if not any(dominates(other, s) for other in scores)
    ]


def scalarized_energy(scores: ObjectiveScores, params: EnergyParams) -> float:
    """Lower is better."""
    pred = params.mu * scores.head_pred + (1 - params.mu) * scores.dep_pred
    return params.lam * scores.memory_normalized - (1 - params.lam) * pred


def energy_landscape(
    layout: ConstituentLayout | None = None,
    g: CostFunction | None = None,
    params: EnergyParams | None = None,
    orders: Iterable[str] | None = None,
) -> dict[str, float]:
    """Energy of each labelled order, normalising memory over the same orders."""
    layout = layout or three_element_layout()
    params = params or EnergyParams()
    orders = list(orders) if orders is not None else list(enumerate_three_element_orders())
    scores = score_orders(orders, layout, g)
    return {o: scalarized_energy(s, params) for o, s in zip(orders, scores)}
