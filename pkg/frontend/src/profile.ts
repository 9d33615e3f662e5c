/** Profile view: charts drawn from the server's profile payload.
 *
 * The endpoint ships the aggregated statistics ready to plot; this module
 * only maps them to bar geometries and never re-derives a statistic from
 * the per-image summaries.
 */

import type { ProfilePayload } from "./api.js";

export interface Bar {
  label: string;
  value: number;
  /** 0..1, relative to the tallest bar in the chart. */
  height: number;
}

export function histogramBars(payload: ProfilePayload, className: string): Bar[] {
  const stats = payload.profile.per_class[className];
  if (stats === undefined) {
    throw new Error(`unknown class ${className}`);
  }
  const peak = Math.max(1, ...stats.histogram);
  const n = stats.histogram.length;
  return stats.histogram.map((count, i) => ({
    label: `${((100 * i) / n).toFixed(0)}–${((100 * (i + 1)) / n).toFixed(0)}%`,
    value: count,
    height: count / peak,
  }));
}

export function incidenceBars(payload: ProfilePayload): Bar[] {
  const entries = Object.entries(payload.profile.per_class);
  return entries.map(([name, stats]) => ({
    label: name,
    value: stats.incidence,
    height: stats.incidence,
  }));
}

export interface SummaryFilter {
  className?: string;
  minFraction?: number;
  maxFraction?: number;
}

/** Filter per-image summary rows by a class fraction range (shared with the gallery). */
export function filterSummaries(
  summaries: Array<Record<string, unknown>>,
  filter: SummaryFilter,
): Array<Record<string, unknown>> {
  if (!filter.className) {
    return summaries;
  }
  const lo = filter.minFraction ?? 0;
  const hi = filter.maxFraction ?? 1;
  return summaries.filter((s) => {
    const fractions = s["fractions"] as Record<string, number> | undefined;
    const f = fractions?.[filter.className!];
    return f !== undefined && f >= lo && f <= hi;
  });
}
