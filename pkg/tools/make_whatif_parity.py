"""Generate the what-if parity fixture consumed by the frontend tests.

For 10 seeded parameter sets this records the exact JSON payload the
service's /api/lca/whatif endpoint returns, plus the fixed 3-decimal
strings the UI is expected to render for the global-warming row.  The
frontend test string-compares its formatting pipeline against these, so
any drift between client rendering and server numbers fails loudly.

Run from the repository root:

    python3 tools/make_whatif_parity.py
"""

import json
import random
from pathlib import Path

from fastapi.testclient import TestClient

from wearlca.service import create_app

OUT = Path(__file__).parents[1] / "frontend" / "tests" / "fixtures" / "whatif_parity.json"


def parameter_sets(seed=20260826):
    rng = random.Random(seed)
    cases = []
    for _ in range(7):
        cases.append(
            {
                "case": "machining",
                "parameters": {
                    "lifespan_factor": round(rng.uniform(1.0, 2.0), 2),
                    "speed_factor": round(rng.uniform(1.0, 1.5), 2),
                    "cv_assisted": rng.random() < 0.5,
                },
            }
        )
    for market in ("eu", "noneu"):
        cases.append(
            {
                "case": "anode",
                "parameters": {"market": market, "remanufacture": True},
            }
        )
    cases.append(
        {
            "case": "machining",
            "parameters": {
                "lifespan_factor": 1.0,
                "speed_factor": 1.0,
                "cv_assisted": False,
            },
        }
    )
    return cases


def three_decimals(x):
    """Fixed 3-decimal rendering; must match frontend formatValue()."""
    return f"{x:.3f}"


def main():
    client = TestClient(create_app(OUT.parent))  # workspace content irrelevant here
    entries = []
    for request in parameter_sets():
        response = client.post("/api/lca/whatif", json=request)
        response.raise_for_status()
        body = response.json()
        entries.append(
            {
                "request": request,
                "response": body,
                "rendered": {
                    "gwp_value": three_decimals(body["impacts"]["global_warming"]),
                    "gwp_baseline": three_decimals(
                        body["baseline_impacts"]["global_warming"]
                    ),
                    "gwp_delta": three_decimals(
                        body["absolute_delta"]["global_warming"]
                    ),
                    "gwp_percent": (
                        three_decimals(body["percent_delta"]["global_warming"])
                        if body["percent_delta"]["global_warming"] is not None
                        else "n/a"
                    ),
                },
            }
        )
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"entries": entries}, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT} ({len(entries)} parameter sets)")


if __name__ == "__main__":
    main()
