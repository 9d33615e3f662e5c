from .engine import (
    ScenarioComparison,
    characterize,
    compare,
    comparison_chart_data,
    scenario_from_spec,
    write_comparison_json,
    write_impacts_csv,
)
from .model import (
    Assumption,
    FactorTable,
    FlowAmount,
    FunctionalUnit,
    ImpactResult,
    INDICATOR_IDS,
    INDICATOR_UNITS,
    MIDPOINT_INDICATORS,
    Process,
    Scenario,
    load_factor_table,
)
from .scenarios import (
    NAMED_SCENARIOS,
    anode_scenario,
    lifespan_tradeoff,
    machining_scenario,
    named_scenario,
)

__all__ = [
    "Assumption",
    "FactorTable",
    "FlowAmount",
    "FunctionalUnit",
    "ImpactResult",
    "INDICATOR_IDS",
    "INDICATOR_UNITS",
    "MIDPOINT_INDICATORS",
    "NAMED_SCENARIOS",
    "Process",
    "Scenario",
    "ScenarioComparison",
    "anode_scenario",
    "characterize",
    "compare",
    "comparison_chart_data",
    "lifespan_tradeoff",
    "load_factor_table",
    "machining_scenario",
    "named_scenario",
    "scenario_from_spec",
    "write_comparison_json",
    "write_impacts_csv",
]
