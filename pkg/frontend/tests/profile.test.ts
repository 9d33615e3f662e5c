import { describe, expect, it } from "vitest";

import type { ProfilePayload } from "../src/api.js";
import { filterSummaries, histogramBars, incidenceBars } from "../src/profile.js";

const payload: ProfilePayload = {
  profile: {
    n_tools: 2,
    per_class: {
      flank_wear: {
        min: 0.1,
        max: 0.3,
        mean: 0.2,
        median: 0.1,
        std: 0.1,
        incidence: 1.0,
        histogram: [0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
      },
      chipping: {
        min: 0,
        max: 0,
        mean: 0,
        median: 0,
        std: 0,
        incidence: 0.5,
        histogram: [2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
      },
    },
  },
  summaries: [
    { image_id: "a", fractions: { flank_wear: 0.1 } },
    { image_id: "b", fractions: { flank_wear: 0.3 } },
  ],
  class_map: { family: "machining_tool", classes: [] },
};

describe("histogramBars", () => {
  it("maps counts straight from the payload without recomputation", () => {
    const bars = histogramBars(payload, "flank_wear");
    expect(bars).toHaveLength(10);
    expect(bars[1]!.value).toBe(2);
    expect(bars[1]!.height).toBe(1);
    expect(bars[0]!.value).toBe(0);
    expect(bars[0]!.label).toBe("0–10%");
  });

  it("rejects an unknown class", () => {
    expect(() => histogramBars(payload, "nope")).toThrow(/unknown class/);
  });
});

describe("incidenceBars", () => {
  it("one bar per class, height equal to served incidence", () => {
    const bars = incidenceBars(payload);
    expect(bars.map((b) => b.label).sort()).toEqual(["chipping", "flank_wear"]);
    expect(bars.find((b) => b.label === "chipping")!.height).toBe(0.5);
  });
});

describe("filterSummaries", () => {
  it("filters by class fraction range", () => {
    const kept = filterSummaries(payload.summaries, {
      className: "flank_wear",
      minFraction: 0.2,
    });
    expect(kept.map((s) => s["image_id"])).toEqual(["b"]);
  });

  it("passes everything through without a class filter", () => {
    expect(filterSummaries(payload.summaries, {})).toHaveLength(2);
  });
});
