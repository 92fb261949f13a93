import { ApiClient, ApiError } from "./api.js";
import { formatIndex, formatRisk } from "./format.js";
import {
  emptyPanel,
  panelEvidence,
  setSelection,
  splitTargets,
  type PanelState,
} from "./panel.js";
import { piReadout } from "./pi.js";
import { buildControls, renderPiReadout, renderPosteriors } from "./render.js";
import { QueryScheduler } from "./scheduler.js";
import {
  INITIAL_VIEW,
  applyFailure,
  applyResult,
  markPending,
  type PosteriorsView,
} from "./store.js";
import type { ImpactWeights } from "./types.js";

const TARGETS = ["HasCovid", "Vulnerable", "InfectionRate"];
const DEFAULT_IMPACTS: ImpactWeights = {
  undetected: 4,
  detected: 3,
  quarantined: 2,
  cleared: 1,
};

function describeError(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.message}`;
  if (error instanceof Error) return `service unreachable: ${error.message}`;
  return "service unreachable";
}

async function start(): Promise<void> {
  const api = new ApiClient("");
  const controls = document.getElementById("controls") as HTMLElement;
  const results = document.getElementById("results") as HTMLElement;
  const pi = document.getElementById("pi-readout") as HTMLElement;
  const riskForm = document.getElementById("risk-form") as HTMLFormElement;
  const riskOut = document.getElementById("risk-out") as HTMLElement;

  const model = await api.getModel();
  let panel: PanelState = emptyPanel(model);
  let view: PosteriorsView = INITIAL_VIEW;
  let observed: Record<string, string> = {};

  const redraw = () => renderPosteriors(results, view, observed);
  const scheduler = new QueryScheduler(
    (evidence, targets) => api.query(evidence, targets),
    {
      onResult: (response) => {
        view = applyResult(view, response);
        redraw();
      },
      onError: (error) => {
        view = applyFailure(view, describeError(error));
        redraw();
      },
    },
  );

  const refresh = () => {
    renderPiReadout(pi, formatIndex(piReadout(model.prevention, panel.selections)));
    const evidence = panelEvidence(panel);
    const split = splitTargets(evidence, TARGETS);
    observed = split.observed;
    view = markPending(view);
    redraw();
    scheduler.schedule(evidence, split.queried);
  };

  buildControls(controls, model.variables, {
    onSelect: (variable, state) => {
      panel = setSelection(panel, variable, state);
      refresh();
    },
  });

  riskForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(riskForm);
    const num = (field: string, fallback: number) => {
      const raw = data.get(field);
      const parsed = raw === null ? NaN : Number(raw);
      return Number.isFinite(parsed) ? parsed : fallback;
    };
    const impacts: ImpactWeights = {
      undetected: num("undetected", DEFAULT_IMPACTS.undetected),
      detected: num("detected", DEFAULT_IMPACTS.detected),
      quarantined: num("quarantined", DEFAULT_IMPACTS.quarantined),
      cleared: num("cleared", DEFAULT_IMPACTS.cleared),
    };
    api.risk(num("fpr", 0), num("fnr", 0), impacts).then(
      (scores) => {
        riskOut.textContent =
          `risk_p=${formatRisk(scores.risk_p)} risk_n=${formatRisk(scores.risk_n)}`;
        riskOut.classList.remove("error");
      },
      (error) => {
        riskOut.textContent = describeError(error);
        riskOut.classList.add("error");
      },
    );
  });

  refresh();
}

start().catch((error) => {
  const banner = document.querySelector<HTMLElement>(".banner");
  if (banner) {
    banner.hidden = false;
    banner.textContent = describeError(error);
  }
});
