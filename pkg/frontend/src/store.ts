import { formatPercent } from "./format.js";
import type { Distribution, QueryResponse } from "./types.js";

// View model between the service responses and the DOM. Rendering code
// reads prepared display strings; the only transformation applied to a
// served probability is two-decimal percent formatting. The infection
// rate mean is a presentation aggregate of the served distribution over
// its numeric state labels.

export interface DistributionView {
  /** state label -> "12.34%" plus the raw probability for bar widths */
  rows: { state: string; display: string; probability: number }[];
}

export interface PosteriorsView {
  targets: Record<string, DistributionView>;
  rateMeanDisplay: string | null;
  /** true while displayed values predate the latest panel change */
  stale: boolean;
  banner: string | null;
}

export const INITIAL_VIEW: PosteriorsView = {
  targets: {},
  rateMeanDisplay: null,
  stale: false,
  banner: null,
};

function toView(distribution: Distribution): DistributionView {
  return {
    rows: Object.entries(distribution).map(([state, probability]) => ({
      state,
      display: formatPercent(probability),
      probability,
    })),
  };
}

function rateMean(distribution: Distribution): number {
  let mean = 0;
  for (const [state, probability] of Object.entries(distribution)) {
    mean += Number(state) * probability;
  }
  return mean;
}

/** A panel change happened: keep values but grey them until the reply. */
export function markPending(view: PosteriorsView): PosteriorsView {
  return { ...view, stale: true };
}

export function applyResult(view: PosteriorsView, response: QueryResponse): PosteriorsView {
  const targets: Record<string, DistributionView> = {};
  for (const [target, distribution] of Object.entries(response.posteriors)) {
    targets[target] = toView(distribution);
  }
  const rate = response.posteriors["InfectionRate"];
  return {
    targets,
    rateMeanDisplay: rate ? `${rateMean(rate).toFixed(2)}%` : null,
    stale: false,
    banner: null,
  };
}

/** Failure: keep the previous values greyed and show what went wrong. */
export function applyFailure(view: PosteriorsView, message: string): PosteriorsView {
  return { ...view, stale: true, banner: message };
}
