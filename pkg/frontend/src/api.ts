/** Typed client for the wearlca service API.
 *
 * All numbers displayed anywhere in the UI come out of these payloads;
 * the client never recomputes impacts, statistics, or metrics.
 */

export interface ClassDef {
  class_id: number;
  name: string;
  display_color: [number, number, number];
}

export interface ClassMapPayload {
  family: string;
  classes: ClassDef[];
}

export interface DatasetDescriptor {
  id: string;
  family?: string;
  split_counts?: { train: number; validation: number; test: number };
  error?: string;
}

export interface ImagePayload {
  image_id: string;
  role: string;
  gt_mask: number[][];
  pred_mask: number[][] | null;
  summary: Record<string, unknown>;
  class_map: ClassMapPayload;
  patch_offset?: [number, number];
  track_id?: string;
}

export interface ProfilePayload {
  profile: {
    n_tools: number;
    per_class: Record<
      string,
      {
        min: number;
        max: number;
        mean: number;
        median: number;
        std: number;
        incidence: number;
        histogram: number[];
      }
    >;
  };
  summaries: Array<Record<string, unknown>>;
  class_map: ClassMapPayload;
}

export type MachiningParameters = {
  lifespan_factor: number;
  speed_factor: number;
  cv_assisted: boolean;
};

export type AnodeParameters = {
  market: "eu" | "noneu";
  remanufacture: boolean;
};

export type WhatIfRequest =
  | { case: "machining"; parameters: MachiningParameters }
  | { case: "anode"; parameters: AnodeParameters };

export interface WhatIfResponse {
  scenario_id: string;
  baseline_id: string;
  impacts: Record<string, number>;
  baseline_impacts: Record<string, number>;
  absolute_delta: Record<string, number>;
  percent_delta: Record<string, number | null>;
  impact_transfer: boolean;
  assumptions: Array<{ key: string; value: string; provenance: string }>;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(fetcher: typeof fetch, url: string): Promise<T> {
  const res = await fetcher(url);
  if (!res.ok) {
    throw new ApiError(res.status, `${url}: ${res.status}`);
  }
  return res.json() as Promise<T>;
}

export class ApiClient {
  constructor(private fetcher: typeof fetch = fetch.bind(globalThis)) {}

  listDatasets(): Promise<DatasetDescriptor[]> {
    return getJson(this.fetcher, "/api/datasets");
  }

  getImage(datasetId: string, imageId: string): Promise<ImagePayload> {
    return getJson(
      this.fetcher,
      `/api/datasets/${encodeURIComponent(datasetId)}/images/${encodeURIComponent(imageId)}`,
    );
  }

  getProfile(datasetId: string): Promise<ProfilePayload> {
    return getJson(
      this.fetcher,
      `/api/datasets/${encodeURIComponent(datasetId)}/profile`,
    );
  }

  async whatIf(request: WhatIfRequest): Promise<WhatIfResponse> {
    const res = await this.fetcher("/api/lca/whatif", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!res.ok) {
      throw new ApiError(res.status, `whatif: ${res.status}`);
    }
    return res.json() as Promise<WhatIfResponse>;
  }
}
