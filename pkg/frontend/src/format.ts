/** Display formatting. Pure string transforms of server-sent numbers. */

/** Fixed 3-decimal rendering used everywhere an impact value is shown. */
export function formatValue(x: number): string {
  return x.toFixed(3);
}

/** Percent delta with sign; null baseline percent renders as "n/a". */
export function formatPercent(x: number | null): string {
  if (x === null) {
    return "n/a";
  }
  const s = formatValue(x);
  return x > 0 ? `+${s}%` : `${s}%`;
}

/** Signed absolute delta. */
export function formatDelta(x: number): string {
  const s = formatValue(x);
  return x > 0 ? `+${s}` : s;
}

export function formatIndicatorName(id: string): string {
  return id.replace(/_/g, " ");
}
