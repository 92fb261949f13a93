import { describe, expect, it } from "vitest";

import { emptyPanel, panelEvidence, setSelection, splitTargets } from "../src/panel.js";
import type { ModelDescriptor } from "../src/types.js";

const MODEL: ModelDescriptor = {
  name: "test-model",
  variables: [
    { name: "HandWash", states: ["No", "Yes"], parents: [], group: "prior" },
    { name: "Symptoms", states: ["0", "1-3", ">8"], parents: ["HasCovid"], group: "prior" },
    { name: "HasCovid", states: ["No", "Yes"], parents: [], group: "inferred" },
  ],
  prevention: { order: [], indices: {}, cumulative: [1.0] },
};

describe("panel state", () => {
  it("starts with every control unset and empty evidence", () => {
    const panel = emptyPanel(MODEL);
    expect(Object.values(panel.selections).every((s) => s === null)).toBe(true);
    expect(panelEvidence(panel)).toEqual({});
  });

  it("collects only set controls as evidence", () => {
    let panel = emptyPanel(MODEL);
    panel = setSelection(panel, "Symptoms", ">8");
    panel = setSelection(panel, "HandWash", "Yes");
    expect(panelEvidence(panel)).toEqual({ Symptoms: ">8", HandWash: "Yes" });
    panel = setSelection(panel, "HandWash", null);
    expect(panelEvidence(panel)).toEqual({ Symptoms: ">8" });
  });

  it("only accepts states served by the model", () => {
    const panel = emptyPanel(MODEL);
    expect(() => setSelection(panel, "Symptoms", "lots")).toThrow(/no state/);
    expect(() => setSelection(panel, "Weather", "bad")).toThrow(/unknown variable/);
  });

  it("does not mutate the previous panel state", () => {
    const panel = emptyPanel(MODEL);
    const next = setSelection(panel, "HandWash", "Yes");
    expect(panel.selections["HandWash"]).toBeNull();
    expect(next.selections["HandWash"]).toBe("Yes");
  });
});

describe("target splitting", () => {
  it("queries all targets when none are observed", () => {
    expect(splitTargets({ HandWash: "Yes" }, ["HasCovid", "Vulnerable"])).toEqual({
      observed: {},
      queried: ["HasCovid", "Vulnerable"],
    });
  });

  it("moves a target set as evidence into the observed map", () => {
    const split = splitTargets(
      { HasCovid: "Yes", Symptoms: ">8" },
      ["HasCovid", "Vulnerable", "InfectionRate"],
    );
    expect(split.observed).toEqual({ HasCovid: "Yes" });
    expect(split.queried).toEqual(["Vulnerable", "InfectionRate"]);
  });

  it("can leave nothing to query", () => {
    const split = splitTargets({ HasCovid: "No", Vulnerable: "Yes" }, ["HasCovid", "Vulnerable"]);
    expect(split.observed).toEqual({ HasCovid: "No", Vulnerable: "Yes" });
    expect(split.queried).toEqual([]);
  });
});
