import type { PosteriorsView } from "./store.js";
import type { VariableDescriptor } from "./types.js";

// Thin DOM layer: builds the static control skeleton once and then only
// swaps text and classes on updates. No probability values are computed
// here; everything displayed comes from the store's view model.

export interface ControlHandlers {
  onSelect(variable: string, state: string | null): void;
}

const GROUP_TITLES: [string, string][] = [
  ["prior", "Observed evidence"],
  ["computed", "Derived nodes"],
  ["inferred", "Diagnosis"],
];

export function buildControls(
  root: HTMLElement,
  variables: VariableDescriptor[],
  handlers: ControlHandlers,
): void {
  for (const [group, title] of GROUP_TITLES) {
    const members = variables.filter((v) => v.group === group);
    if (!members.length) continue;
    const section = document.createElement("section");
    const heading = document.createElement("h3");
    heading.textContent = title;
    section.appendChild(heading);
    for (const variable of members) {
      section.appendChild(controlRow(variable, handlers));
    }
    root.appendChild(section);
  }
}

function controlRow(variable: VariableDescriptor, handlers: ControlHandlers): HTMLElement {
  const row = document.createElement("label");
  row.className = "control";
  const caption = document.createElement("span");
  caption.textContent = variable.name;
  const select = document.createElement("select");
  select.dataset["variable"] = variable.name;
  const unset = document.createElement("option");
  unset.value = "";
  unset.textContent = "unset";
  select.appendChild(unset);
  for (const state of variable.states) {
    const option = document.createElement("option");
    option.value = state;
    option.textContent = state;
    select.appendChild(option);
  }
  select.addEventListener("change", () => {
    handlers.onSelect(variable.name, select.value === "" ? null : select.value);
  });
  row.appendChild(caption);
  row.appendChild(select);
  return row;
}

export function renderPosteriors(
  root: HTMLElement,
  view: PosteriorsView,
  observed: Record<string, string> = {},
): void {
  root.classList.toggle("stale", view.stale);
  const banner = root.querySelector<HTMLElement>(".banner");
  if (banner) {
    banner.textContent = view.banner ?? "";
    banner.hidden = view.banner === null;
  }
  // a target set as evidence is not queried; show the set state instead
  for (const host of root.querySelectorAll<HTMLElement>("[data-target]")) {
    const name = host.dataset["target"];
    if (name !== undefined && observed[name] !== undefined) {
      const note = document.createElement("div");
      note.className = "note";
      note.textContent = `observed: ${observed[name]}`;
      host.replaceChildren(note);
    }
  }
  for (const [target, distribution] of Object.entries(view.targets)) {
    if (observed[target] !== undefined) continue;
    const host = root.querySelector<HTMLElement>(`[data-target="${target}"]`);
    if (!host) continue;
    host.replaceChildren();
    for (const row of distribution.rows) {
      const line = document.createElement("div");
      line.className = "dist-row";
      const label = document.createElement("span");
      label.textContent = row.state;
      const bar = document.createElement("span");
      bar.className = "bar";
      bar.style.width = `${(row.probability * 100).toFixed(2)}%`;
      const value = document.createElement("span");
      value.className = "value";
      value.textContent = row.display;
      line.appendChild(label);
      line.appendChild(bar);
      line.appendChild(value);
      host.appendChild(line);
    }
  }
  const mean = root.querySelector<HTMLElement>("[data-rate-mean]");
  if (mean) mean.textContent = view.rateMeanDisplay ?? "";
}

export function renderPiReadout(element: HTMLElement, display: string): void {
  element.textContent = display;
}
