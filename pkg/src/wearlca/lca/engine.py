"""Characterization and scenario comparison."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import IndicatorMismatch, MissingBaseline, UnknownFlow
from .model import (
    Assumption,
    FactorTable,
    FlowAmount,
    ImpactResult,
    INDICATOR_UNITS,
    Scenario,
)


def characterize(scenario: Scenario, table: FactorTable) -> ImpactResult:
    """Linear impact calculation: per indicator, sum of amount x factor.

    Raises UnknownFlow for inventory flows absent from the registry; flows
    that are registered but carry a zero factor contribute zero silently.
    """
    impacts: dict[str, float] = {}
    contributions: dict[str, dict[str, float]] = {}
    for flow in scenario.inventory:
        if flow.flow_id not in table.flow_units:
            raise UnknownFlow(flow.flow_id)
        if table.flow_units[flow.flow_id] != flow.unit:
            raise ValueError(
                f"{flow.flow_id}: unit {flow.unit} does not match registry "
                f"unit {table.flow_units[flow.flow_id]}"
            )
    for indicator in table.indicators:
        contrib: dict[str, float] = {}
        for flow in scenario.inventory:
            value = flow.amount * table.factor(flow.flow_id, indicator)
            contrib[flow.flow_id] = contrib.get(flow.flow_id, 0.0) + value
        impacts[indicator] = sum(contrib.values())
        contributions[indicator] = contrib
    return ImpactResult(
        scenario_id=scenario.scenario_id,
        impacts=impacts,
        contributions=contributions,
        assumptions=scenario.assumptions,
    )


@dataclass(frozen=True)
class ScenarioComparison:
    baseline_id: str
    indicators: tuple[str, ...]
    absolute_delta: dict[str, dict[str, float]]  # scenario -> indicator -> value
    percent_delta: dict[str, dict[str, float | None]]
    impact_transfer: dict[str, bool]
    ranking: dict[str, tuple[str, ...]]  # indicator -> scenario ids, best first


def compare(results: list[ImpactResult], baseline_id: str) -> ScenarioComparison:
    """Per-indicator deltas vs a baseline plus impact-transfer detection.

    A scenario flags impact transfer iff its global warming impact drops
    while some other indicator rises. Percentage deltas are None where the
    baseline value is zero.
    """
    if len(results) < 2:
        raise MissingBaseline("need a baseline and at least one other result")
    by_id = {r.scenario_id: r for r in results}
    if baseline_id not in by_id:
        raise MissingBaseline(f"baseline {baseline_id!r} not among results")
    indicators = tuple(results[0].impacts)
    for r in results:
        if tuple(r.impacts) != indicators:
            raise IndicatorMismatch(
                f"{r.scenario_id} does not cover the same indicator set"
            )
    base = by_id[baseline_id]
    absolute: dict[str, dict[str, float]] = {}
    percent: dict[str, dict[str, float | None]] = {}
    transfer: dict[str, bool] = {}
    for r in results:
        if r.scenario_id == baseline_id:
            continue
        abs_d = {i: r.impacts[i] - base.impacts[i] for i in indicators}
        pct_d = {
            i: (100.0 * abs_d[i] / base.impacts[i]) if base.impacts[i] != 0 else None
            for i in indicators
        }
        gwp_down = abs_d["global_warming"] < 0
        any_up = any(abs_d[i] > 0 for i in indicators if i != "global_warming")
        absolute[r.scenario_id] = abs_d
        percent[r.scenario_id] = pct_d
        transfer[r.scenario_id] = gwp_down and any_up
    ranking = {
        i: tuple(
            sorted(by_id, key=lambda sid: (by_id[sid].impacts[i], sid))
        )
        for i in indicators
    }
    return ScenarioComparison(
        baseline_id=baseline_id,
        indicators=indicators,
        absolute_delta=absolute,
        percent_delta=percent,
        impact_transfer=transfer,
        ranking=ranking,
    )


# ---------------------------------------------------------------------------
# report files


def write_impacts_csv(results: list[ImpactResult], path) -> None:
    """scenario x indicator matrix, one row per scenario."""
    if not results:
        raise MissingBaseline("no results to write")
    indicators = tuple(results[0].impacts)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["scenario"] + [f"{i} [{INDICATOR_UNITS[i]}]" for i in indicators])
        for r in results:
            writer.writerow(
                [r.scenario_id] + [repr(r.impacts[i]) for i in indicators]
            )


def comparison_chart_data(
    results: list[ImpactResult], comparison: ScenarioComparison
) -> dict:
    """Chart payload: per indicator, scenario values normalized to baseline=100."""
    by_id = {r.scenario_id: r for r in results}
    base = by_id[comparison.baseline_id]
    series = []
    for indicator in comparison.indicators:
        base_value = base.impacts[indicator]
        entries = []
        for r in results:
            value = r.impacts[indicator]
            entries.append(
                {
                    "scenario": r.scenario_id,
                    "value": value,
                    "normalized": (100.0 * value / base_value)
                    if base_value != 0
                    else None,
                }
            )
        series.append(
            {
                "indicator": indicator,
                "unit": INDICATOR_UNITS[indicator],
                "entries": entries,
            }
        )
    return {
        "baseline": comparison.baseline_id,
        "impact_transfer": comparison.impact_transfer,
        "absolute_delta": comparison.absolute_delta,
        "percent_delta": comparison.percent_delta,
        "ranking": comparison.ranking,
        "series": series,
    }


def write_comparison_json(
    results: list[ImpactResult], comparison: ScenarioComparison, path
) -> None:
    Path(path).write_text(
        json.dumps(comparison_chart_data(results, comparison), indent=2, sort_keys=True)
        + "\n"
    )


def scenario_from_spec(doc: dict) -> Scenario:
    """Build an arbitrary scenario from a ``scenario.json`` document.

    Schema: {"scenario_id", "functional_unit": {"description", "magnitude",
    "unit"}, "inventory": [{"flow_id", "amount", "unit"}], "assumptions":
    [{"key", "value", "provenance"}]}.
    """
    from .model import FunctionalUnit

    fu = doc["functional_unit"]
    return Scenario(
        scenario_id=doc["scenario_id"],
        functional_unit=FunctionalUnit(fu["description"], fu["magnitude"], fu["unit"]),
        inventory=tuple(
            FlowAmount(f["flow_id"], f["amount"], f["unit"]) for f in doc["inventory"]
        ),
        assumptions=tuple(
            Assumption(a["key"], str(a["value"]), a.get("provenance", ""))
            for a in doc.get("assumptions", [])
        ),
        credited_flow_ids=frozenset(doc.get("credited_flow_ids", [])),
    )
