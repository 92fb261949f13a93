import type { Evidence, ModelDescriptor } from "./types.js";

export const UNSET = null;

/** One selection per variable: a legal state label, or null for unset. */
export type Selections = Record<string, string | null>;

export interface PanelState {
  model: ModelDescriptor;
  selections: Selections;
}

export function emptyPanel(model: ModelDescriptor): PanelState {
  const selections: Selections = {};
  for (const variable of model.variables) selections[variable.name] = UNSET;
  return { model, selections };
}

/**
 * Set one control. States come from the model descriptor; anything else
 * is rejected here so an illegal label can never reach the service.
 */
export function setSelection(
  panel: PanelState,
  variable: string,
  state: string | null,
): PanelState {
  const descriptor = panel.model.variables.find((v) => v.name === variable);
  if (!descriptor) throw new Error(`unknown variable ${variable}`);
  if (state !== UNSET && !descriptor.states.includes(state)) {
    throw new Error(`variable ${variable} has no state ${state}`);
  }
  return { model: panel.model, selections: { ...panel.selections, [variable]: state } };
}

/** Evidence for POST /query: unset controls are simply absent. */
export function panelEvidence(panel: PanelState): Evidence {
  const evidence: Evidence = {};
  for (const [name, state] of Object.entries(panel.selections)) {
    if (state !== UNSET) evidence[name] = state;
  }
  return evidence;
}

/**
 * Split the configured query targets against the current evidence: a
 * variable set as evidence cannot also be queried, so it is reported
 * as observed (with its set state) rather than sent as a target.
 */
export function splitTargets(
  evidence: Evidence,
  targets: string[],
): { observed: Record<string, string>; queried: string[] } {
  const observed: Record<string, string> = {};
  for (const target of targets) {
    const state = evidence[target];
    if (state !== undefined) observed[target] = state;
  }
  return { observed, queried: targets.filter((t) => observed[t] === undefined) };
}
