/** Mask overlays for the image gallery.
 *
 * Builds RGBA buffers from the class-id grids the image endpoint returns.
 * Overlay colors come straight from the server's class map; the diff layer
 * marks pixels where prediction and ground truth disagree, in a reserved
 * highlight color that belongs to no class map.
 */

import type { ClassMapPayload } from "./api.js";

/** Reserved diff highlight (magenta); deliberately outside every class map. */
export const DIFF_COLOR: [number, number, number, number] = [255, 0, 200, 255];

export type Overlay = "gt" | "pred" | "diff";

export interface OverlayImage {
  width: number;
  height: number;
  /** RGBA, row-major, 4 bytes per pixel. */
  data: Uint8ClampedArray;
}

function colorTable(classMap: ClassMapPayload): Map<number, [number, number, number]> {
  const table = new Map<number, [number, number, number]>();
  for (const c of classMap.classes) {
    table.set(c.class_id, c.display_color);
  }
  return table;
}

export function renderMask(
  grid: number[][],
  classMap: ClassMapPayload,
  alpha = 255,
): OverlayImage {
  const height = grid.length;
  const width = height > 0 ? grid[0]!.length : 0;
  const colors = colorTable(classMap);
  const data = new Uint8ClampedArray(width * height * 4);
  for (let r = 0; r < height; r++) {
    const row = grid[r]!;
    for (let c = 0; c < width; c++) {
      const color = colors.get(row[c]!);
      if (color === undefined) {
        throw new Error(`class id ${row[c]} missing from class map`);
      }
      const o = (r * width + c) * 4;
      data[o] = color[0];
      data[o + 1] = color[1];
      data[o + 2] = color[2];
      data[o + 3] = alpha;
    }
  }
  return { width, height, data };
}

/** Transparent except where pred differs from gt. */
export function renderDiff(gt: number[][], pred: number[][]): OverlayImage {
  const height = gt.length;
  const width = height > 0 ? gt[0]!.length : 0;
  if (pred.length !== height || (height > 0 && pred[0]!.length !== width)) {
    throw new Error("gt/pred dimension mismatch");
  }
  const data = new Uint8ClampedArray(width * height * 4);
  for (let r = 0; r < height; r++) {
    for (let c = 0; c < width; c++) {
      if (gt[r]![c] !== pred[r]![c]) {
        const o = (r * width + c) * 4;
        data[o] = DIFF_COLOR[0];
        data[o + 1] = DIFF_COLOR[1];
        data[o + 2] = DIFF_COLOR[2];
        data[o + 3] = DIFF_COLOR[3];
      }
    }
  }
  return { width, height, data };
}

export function countDiffPixels(overlay: OverlayImage): number {
  let n = 0;
  for (let i = 3; i < overlay.data.length; i += 4) {
    if (overlay.data[i]! > 0) {
      n++;
    }
  }
  return n;
}

export const PAGE_SIZE = 24;

export function paginate<T>(items: T[], page: number): T[] {
  return items.slice(page * PAGE_SIZE, (page + 1) * PAGE_SIZE);
}
