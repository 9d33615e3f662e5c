"""Inventory and impact data model for the LCA engine."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..errors import IndicatorMismatch, UnknownFlow

#: The 18 midpoint impact categories used throughout, with display units.
MIDPOINT_INDICATORS: tuple[tuple[str, str], ...] = (
    ("global_warming", "kg CO2 eq"),
    ("stratospheric_ozone_depletion", "kg CFC11 eq"),
    ("ionizing_radiation", "kBq Co-60 eq"),
    ("ozone_formation_human_health", "kg NOx eq"),
    ("fine_particulate_matter_formation", "kg PM2.5 eq"),
    ("ozone_formation_terrestrial_ecosystems", "kg NOx eq"),
    ("terrestrial_acidification", "kg SO2 eq"),
    ("freshwater_eutrophication", "kg P eq"),
    ("marine_eutrophication", "kg N eq"),
    ("terrestrial_ecotoxicity", "kg 1,4-DCB"),
    ("freshwater_ecotoxicity", "kg 1,4-DCB"),
    ("marine_ecotoxicity", "kg 1,4-DCB"),
    ("human_carcinogenic_toxicity", "kg 1,4-DCB"),
    ("human_noncarcinogenic_toxicity", "kg 1,4-DCB"),
    ("land_use", "m2a crop eq"),
    ("mineral_resource_scarcity", "kg Cu eq"),
    ("fossil_resource_scarcity", "kg oil eq"),
    ("water_consumption", "m3"),
)

INDICATOR_IDS: tuple[str, ...] = tuple(i for i, _ in MIDPOINT_INDICATORS)
INDICATOR_UNITS: dict[str, str] = dict(MIDPOINT_INDICATORS)

ALLOWED_FLOW_UNITS = {"kWh", "kg", "L", "tkm", "item"}


@dataclass(frozen=True)
class FunctionalUnit:
    description: str
    magnitude: float
    unit: str

    def __post_init__(self):
        if not self.magnitude > 0:
            raise ValueError("functional unit magnitude must be positive")


@dataclass(frozen=True)
class FlowAmount:
    flow_id: str
    amount: float
    unit: str

    def __post_init__(self):
        if not math.isfinite(self.amount):
            raise ValueError(f"{self.flow_id}: amount must be finite")
        if self.unit not in ALLOWED_FLOW_UNITS:
            raise ValueError(f"{self.flow_id}: unsupported unit {self.unit!r}")


@dataclass(frozen=True)
class Process:
    """A named group of flows per one reference output."""

    process_id: str
    name: str
    flows: tuple[FlowAmount, ...]

    def __post_init__(self):
        if not self.flows:
            raise ValueError(f"process {self.process_id}: flow list is empty")
        ids = [f.flow_id for f in self.flows]
        if len(ids) != len(set(ids)):
            raise ValueError(f"process {self.process_id}: duplicate flow ids")


@dataclass(frozen=True)
class Assumption:
    key: str
    value: str
    provenance: str


@dataclass(frozen=True)
class Scenario:
    scenario_id: str
    functional_unit: FunctionalUnit
    inventory: tuple[FlowAmount, ...]
    assumptions: tuple[Assumption, ...] = ()
    credited_flow_ids: frozenset[str] = frozenset()

    def __post_init__(self):
        for f in self.inventory:
            if f.amount < 0 and f.flow_id not in self.credited_flow_ids:
                raise ValueError(
                    f"{self.scenario_id}: negative amount for uncredited flow "
                    f"{f.flow_id}"
                )


@dataclass(frozen=True)
class FactorTable:
    """Flow registry plus characterization factors over the 18 indicators.

    Factor keys are (flow_id, indicator_id). A registered flow with no
    factor row for some indicator contributes 0 there; such gaps are
    listed by :meth:`coverage_gaps`.
    """

    flow_units: dict[str, str]  # registry: flow_id -> unit
    flow_names: dict[str, str]
    factors: dict[tuple[str, str], float]
    provenance: dict[tuple[str, str], str] = field(default_factory=dict)
    indicators: tuple[str, ...] = INDICATOR_IDS

    def __post_init__(self):
        if len(self.indicators) != 18:
            raise IndicatorMismatch(
                f"expected 18 indicators, got {len(self.indicators)}"
            )
        for (flow, ind), _ in self.factors.items():
            if flow not in self.flow_units:
                raise UnknownFlow(flow)
            if ind not in self.indicators:
                raise IndicatorMismatch(f"unknown indicator {ind!r}")

    def factor(self, flow_id: str, indicator: str) -> float:
        return self.factors.get((flow_id, indicator), 0.0)

    def coverage_gaps(self) -> list[tuple[str, str]]:
        return sorted(
            (flow, ind)
            for flow in self.flow_units
            for ind in self.indicators
            if (flow, ind) not in self.factors
        )


@dataclass(frozen=True)
class ImpactResult:
    scenario_id: str
    impacts: dict[str, float]  # indicator -> value (INDICATOR_UNITS units)
    contributions: dict[str, dict[str, float]]  # indicator -> flow -> value
    assumptions: tuple[Assumption, ...] = ()


def load_factor_table(factors_csv=None, flows_csv=None) -> FactorTable:
    """Load the flow registry and factor table from CSV.

    With no arguments the bundled calibrated example data set is used
    (``data/flows.csv`` and ``data/example-factors.csv``).
    """
    data_dir = resources.files("wearlca.lca") / "data"
    flows_path = Path(flows_csv) if flows_csv else data_dir / "flows.csv"
    factors_path = Path(factors_csv) if factors_csv else data_dir / "example-factors.csv"

    flow_units: dict[str, str] = {}
    flow_names: dict[str, str] = {}
    with flows_path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            flow_units[row["flow_id"]] = row["unit"]
            flow_names[row["flow_id"]] = row["name"]

    factors: dict[tuple[str, str], float] = {}
    provenance: dict[tuple[str, str], str] = {}
    with factors_path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["flow_id"], row["indicator"])
            factors[key] = float(row["factor"])
            provenance[key] = row.get("provenance", "")
    return FactorTable(
        flow_units=flow_units,
        flow_names=flow_names,
        factors=factors,
        provenance=provenance,
    )
