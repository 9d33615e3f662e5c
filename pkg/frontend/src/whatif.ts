/** What-if panel state: slider params in, server impacts out.
 *
 * Every parameter change issues a POST and tags it with a monotonically
 * increasing sequence number. A response is applied only if its sequence
 * number is newer than the last applied one, so slow responses for stale
 * slider positions can never overwrite the numbers for the current
 * position. No impact arithmetic happens here.
 */

import type { ApiClient, WhatIfRequest, WhatIfResponse } from "./api.js";

export const PINBOARD_CAP = 6;

export interface PinnedScenario {
  label: string;
  request: WhatIfRequest;
  response: WhatIfResponse;
}

export interface WhatIfState {
  latest: WhatIfResponse | null;
  pending: boolean;
  error: string | null;
  pinboard: PinnedScenario[];
}

export class WhatIfController {
  private nextSeq = 0;
  private appliedSeq = -1;
  private state: WhatIfState = {
    latest: null,
    pending: false,
    error: null,
    pinboard: [],
  };

  constructor(
    private api: ApiClient,
    private onChange: (state: WhatIfState) => void = () => {},
  ) {}

  getState(): WhatIfState {
    return this.state;
  }

  private emit(patch: Partial<WhatIfState>): void {
    this.state = { ...this.state, ...patch };
    this.onChange(this.state);
  }

  /** Issue a request for the current slider position. */
  async update(request: WhatIfRequest): Promise<void> {
    const seq = this.nextSeq++;
    this.emit({ pending: true, error: null });
    let response: WhatIfResponse;
    try {
      response = await this.api.whatIf(request);
    } catch (err) {
      if (seq > this.appliedSeq) {
        this.appliedSeq = seq;
        this.emit({ pending: false, error: String(err) });
      }
      return;
    }
    if (seq <= this.appliedSeq) {
      return; // stale: a newer slider position already resolved
    }
    this.appliedSeq = seq;
    this.emit({ latest: response, pending: false, error: null });
  }

  /** Pin the currently displayed scenario for side-by-side comparison. */
  pin(label: string, request: WhatIfRequest): boolean {
    const latest = this.state.latest;
    if (latest === null || this.state.pinboard.length >= PINBOARD_CAP) {
      return false;
    }
    this.emit({
      pinboard: [...this.state.pinboard, { label, request, response: latest }],
    });
    return true;
  }

  unpin(index: number): void {
    this.emit({
      pinboard: this.state.pinboard.filter((_, i) => i !== index),
    });
  }
}
