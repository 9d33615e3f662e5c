"""Compare life-cycle scenarios with the bundled factor table.

Characterizes the machining baseline against combined lifespan/speed
improvements, then the rotating-anode remanufacturing option in both
markets, printing GWP deltas and checking for impact transfers.
"""

from wearlca.lca import (
    characterize,
    compare,
    load_factor_table,
    named_scenario,
)

table = load_factor_table()

names = [
    "machining:baseline",
    "machining:l20",
    "machining:s50",
    "machining:l20s50",
]
results = [characterize(named_scenario(n), table) for n in names]
comparison = compare(results, "machining:baseline")

base_gwp = results[0].impacts["global_warming"]
print(f"machining baseline: {base_gwp:.3f} kg CO2 eq per hour")
for r in results[1:]:
    delta = comparison.absolute_delta[r.scenario_id]["global_warming"]
    transfer = comparison.impact_transfer[r.scenario_id]
    print(
        f"  {r.scenario_id:<20} GWP {delta:+.3f} kg "
        f"({'impact transfer elsewhere' if transfer else 'no transfer'})"
    )

print()
for market in ("eu", "noneu"):
    base = characterize(named_scenario(f"anode:{market}:base"), table)
    reman = characterize(named_scenario(f"anode:{market}:reman"), table)
    comp = compare([base, reman], base.scenario_id)
    pct = comp.percent_delta[reman.scenario_id]["global_warming"]
    print(f"anode remanufacture ({market}): GWP {pct:+.2f}%")

# every scenario carries its assumption ledger
print("\nassumptions behind machining:l20s50:")
for a in named_scenario("machining:l20s50").assumptions:
    print(f"  {a.key}: {a.value}")
