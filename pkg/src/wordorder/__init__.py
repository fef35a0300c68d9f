"""Word order as a trade-off between online memory cost and predictability."""

from .costs import (
    Constituent,
    ConstituentLayout,
    CostFunction,
    DomainError,
    Linearization,
    bundled_cost_functions,
    memory_cost_constituents,
    memory_cost_words,
    optimal_head_positions,
    validate_cost_function,
    word_distance_matrix,
)
from .dynamics import (
    ChainSpec,
    RingGraph,
    TrajectoryStats,
    build_ring,
    classify_dominance,
    count_local_minima,
    simulate_trajectory,
    stationary_distribution,
    transition_matrix,
)
from .optimizer import (
    EnergyParams,
    ObjectiveScores,
    energy_landscape,
    enumerate_three_element_orders,
    pareto_front,
    scalarized_energy,
    score_order,
    three_element_layout,
)
from .predictability import dependent_predictability, head_predictability
from .typology import LanguageRecord, TypologySummary, parse_language_table, summarize

__version__ = "0.1.0"
