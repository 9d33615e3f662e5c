/** Dashboard entry point: dataset picker, gallery, profile charts, what-if panel. */

import { ApiClient } from "./api.js";
import type {
  DatasetDescriptor,
  ImagePayload,
  ProfilePayload,
  WhatIfRequest,
  WhatIfResponse,
} from "./api.js";
import { formatDelta, formatIndicatorName, formatPercent, formatValue } from "./format.js";
import { countDiffPixels, paginate, renderDiff, renderMask } from "./gallery.js";
import type { Overlay } from "./gallery.js";
import { histogramBars, incidenceBars } from "./profile.js";
import { PINBOARD_CAP, WhatIfController } from "./whatif.js";
import type { WhatIfState } from "./whatif.js";

const api = new ApiClient();

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

// ---------------------------------------------------------------------------
// dataset list + gallery

interface GalleryState {
  datasetId: string | null;
  imageIds: string[];
  page: number;
  overlay: Overlay;
}

const gallery: GalleryState = { datasetId: null, imageIds: [], page: 0, overlay: "gt" };

async function loadDatasets(): Promise<void> {
  const list = byId("dataset-list");
  list.textContent = "";
  let datasets: DatasetDescriptor[];
  try {
    datasets = await api.listDatasets();
  } catch (err) {
    list.appendChild(el("p", "error", `failed to load datasets: ${err}`));
    return;
  }
  if (datasets.length === 0) {
    list.appendChild(el("p", "empty-state", "no datasets in the workspace"));
    return;
  }
  for (const d of datasets) {
    const button = el("button", "dataset");
    if (d.error) {
      button.textContent = `${d.id} — unreadable`;
      button.title = d.error;
      button.disabled = true;
    } else {
      const counts = d.split_counts!;
      button.textContent = `${d.id} (${d.family}, ${counts.train}/${counts.validation}/${counts.test})`;
      button.addEventListener("click", () => void selectDataset(d.id));
    }
    list.appendChild(button);
  }
}

async function selectDataset(datasetId: string): Promise<void> {
  gallery.datasetId = datasetId;
  gallery.page = 0;
  let profile: ProfilePayload;
  try {
    profile = await api.getProfile(datasetId);
  } catch (err) {
    byId("gallery").textContent = `failed to load ${datasetId}: ${err}`;
    return;
  }
  gallery.imageIds = profile.summaries.map((s) => String(s["image_id"]));
  renderProfile(profile);
  await renderGallery();
}

function drawOverlay(canvas: HTMLCanvasElement, image: ImagePayload, overlay: Overlay): void {
  const source =
    overlay === "pred" && image.pred_mask !== null ? image.pred_mask : image.gt_mask;
  let rendered;
  if (overlay === "diff") {
    if (image.pred_mask === null) return;
    rendered = renderDiff(image.gt_mask, image.pred_mask);
  } else {
    rendered = renderMask(source, image.class_map);
  }
  canvas.width = rendered.width;
  canvas.height = rendered.height;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const pixels = rendered.data as Uint8ClampedArray<ArrayBuffer>;
  ctx.putImageData(new ImageData(pixels, rendered.width, rendered.height), 0, 0);
}

async function renderGallery(): Promise<void> {
  const container = byId("gallery");
  container.textContent = "";
  if (!gallery.datasetId) return;
  const pageIds = paginate(gallery.imageIds, gallery.page);
  for (const imageId of pageIds) {
    const card = el("div", "card");
    card.appendChild(el("h4", undefined, imageId));
    const canvas = el("canvas");
    card.appendChild(canvas);
    try {
      const image = await api.getImage(gallery.datasetId, imageId);
      drawOverlay(canvas, image, gallery.overlay);
      if (gallery.overlay === "diff" && image.pred_mask !== null) {
        const diff = renderDiff(image.gt_mask, image.pred_mask);
        card.appendChild(
          el("p", "caption", `${countDiffPixels(diff)} differing pixels`),
        );
      }
    } catch (err) {
      card.appendChild(el("p", "error", String(err)));
    }
    container.appendChild(card);
  }
  byId("page-label").textContent = `page ${gallery.page + 1} / ${Math.max(
    1,
    Math.ceil(gallery.imageIds.length / 24),
  )}`;
}

// ---------------------------------------------------------------------------
// profile charts

function barChart(target: HTMLElement, bars: { label: string; value: number; height: number }[]): void {
  target.textContent = "";
  for (const bar of bars) {
    const wrap = el("div", "bar-wrap");
    const column = el("div", "bar");
    column.style.height = `${Math.round(100 * bar.height)}%`;
    column.title = String(bar.value);
    wrap.appendChild(column);
    wrap.appendChild(el("span", "bar-label", bar.label));
    target.appendChild(wrap);
  }
}

function renderProfile(profile: ProfilePayload): void {
  barChart(byId("incidence-chart"), incidenceBars(profile));
  const select = byId("histogram-class") as HTMLSelectElement;
  select.textContent = "";
  for (const name of Object.keys(profile.profile.per_class)) {
    const option = el("option", undefined, name);
    option.value = name;
    select.appendChild(option);
  }
  const draw = () =>
    barChart(byId("histogram-chart"), histogramBars(profile, select.value));
  select.onchange = draw;
  if (select.options.length > 0) draw();
}

// ---------------------------------------------------------------------------
// what-if panel

function currentRequest(): WhatIfRequest {
  const caseSelect = byId("whatif-case") as HTMLSelectElement;
  if (caseSelect.value === "anode") {
    return {
      case: "anode",
      parameters: {
        market: (byId("market") as HTMLSelectElement).value as "eu" | "noneu",
        remanufacture: (byId("remanufacture") as HTMLInputElement).checked,
      },
    };
  }
  return {
    case: "machining",
    parameters: {
      lifespan_factor: Number((byId("lifespan") as HTMLInputElement).value) / 100,
      speed_factor: Number((byId("speed") as HTMLInputElement).value) / 100,
      cv_assisted: (byId("cv-assisted") as HTMLInputElement).checked,
    },
  };
}

function renderImpacts(state: WhatIfState): void {
  const table = byId("impact-table");
  table.textContent = "";
  const latest = state.latest;
  if (state.error) {
    table.appendChild(el("p", "error", state.error));
    return;
  }
  if (!latest) return;
  const badge = byId("transfer-badge");
  badge.textContent = latest.impact_transfer ? "impact transfer" : "no transfer";
  badge.className = latest.impact_transfer ? "badge warn" : "badge ok";
  for (const indicator of Object.keys(latest.impacts)) {
    const row = el("div", "impact-row");
    row.appendChild(el("span", "indicator", formatIndicatorName(indicator)));
    row.appendChild(el("span", "value", formatValue(latest.impacts[indicator]!)));
    row.appendChild(el("span", "delta", formatDelta(latest.absolute_delta[indicator]!)));
    row.appendChild(
      el("span", "percent", formatPercent(latest.percent_delta[indicator] ?? null)),
    );
    row.title = `baseline ${latest.baseline_id}: ${formatValue(
      latest.baseline_impacts[indicator]!,
    )}`;
    table.appendChild(row);
  }
}

function renderPinboard(state: WhatIfState): void {
  const board = byId("pinboard");
  board.textContent = "";
  state.pinboard.forEach((pin, i) => {
    const chip = el("div", "pin");
    chip.appendChild(el("strong", undefined, pin.label));
    chip.appendChild(
      el(
        "span",
        undefined,
        ` GWP ${formatValue(pin.response.impacts["global_warming"]!)} (${formatPercent(
          pin.response.percent_delta["global_warming"] ?? null,
        )})`,
      ),
    );
    const remove = el("button", undefined, "unpin");
    remove.addEventListener("click", () => controller.unpin(i));
    chip.appendChild(remove);
    board.appendChild(chip);
  });
  (byId("pin-button") as HTMLButtonElement).disabled =
    state.pinboard.length >= PINBOARD_CAP || state.latest === null;
}

const controller = new WhatIfController(api, (state) => {
  renderImpacts(state);
  renderPinboard(state);
});

function wireWhatIf(): void {
  const inputs = ["whatif-case", "lifespan", "speed", "cv-assisted", "market", "remanufacture"];
  for (const id of inputs) {
    byId(id).addEventListener("input", () => void controller.update(currentRequest()));
  }
  byId("whatif-case").addEventListener("input", () => {
    const isAnode = (byId("whatif-case") as HTMLSelectElement).value === "anode";
    byId("machining-controls").hidden = isAnode;
    byId("anode-controls").hidden = !isAnode;
  });
  byId("pin-button").addEventListener("click", () => {
    const request = currentRequest();
    const label =
      request.case === "machining"
        ? `l${Math.round(request.parameters.lifespan_factor * 100)} s${Math.round(
            request.parameters.speed_factor * 100,
          )}${request.parameters.cv_assisted ? " cv" : ""}`
        : `${request.parameters.market}${request.parameters.remanufacture ? " reman" : ""}`;
    controller.pin(label, request);
  });
  byId("prev-page").addEventListener("click", () => {
    if (gallery.page > 0) {
      gallery.page--;
      void renderGallery();
    }
  });
  byId("next-page").addEventListener("click", () => {
    if ((gallery.page + 1) * 24 < gallery.imageIds.length) {
      gallery.page++;
      void renderGallery();
    }
  });
  for (const overlay of ["gt", "pred", "diff"] as const) {
    byId(`overlay-${overlay}`).addEventListener("click", () => {
      gallery.overlay = overlay;
      void renderGallery();
    });
  }
}

void (async () => {
  wireWhatIf();
  await loadDatasets();
  await controller.update(currentRequest());
})();
