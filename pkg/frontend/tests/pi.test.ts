import { describe, expect, it } from "vitest";

import { profileMask, piReadout } from "../src/pi.js";
import type { Selections } from "../src/panel.js";
import type { PreventionTable } from "../src/types.js";

const ORDER = ["Alpha", "Beta", "Gamma"];
const INDICES: Record<string, number> = { Alpha: 1.1, Beta: 0.9, Gamma: 1.3 };

function product(mask: number): number {
  let value = 1.0;
  ORDER.forEach((name, bit) => {
    if (mask & (1 << bit)) value *= INDICES[name]!;
  });
  return value;
}

const TABLE: PreventionTable = {
  order: ORDER,
  indices: INDICES,
  cumulative: Array.from({ length: 8 }, (_, mask) => product(mask)),
};

function selectionsFor(mask: number): Selections {
  const selections: Selections = {};
  ORDER.forEach((name, bit) => {
    selections[name] = mask & (1 << bit) ? "Yes" : "No";
  });
  return selections;
}

describe("profileMask", () => {
  it("sets bit b for measure order[b]", () => {
    expect(profileMask(ORDER, { Alpha: "Yes", Beta: "No", Gamma: "No" })).toBe(1);
    expect(profileMask(ORDER, { Alpha: "No", Beta: "Yes", Gamma: "No" })).toBe(2);
    expect(profileMask(ORDER, { Alpha: "No", Beta: "No", Gamma: "Yes" })).toBe(4);
    expect(profileMask(ORDER, { Alpha: "Yes", Beta: "Yes", Gamma: "Yes" })).toBe(7);
  });

  it("treats unset and No alike", () => {
    expect(profileMask(ORDER, { Alpha: null, Beta: "No", Gamma: null })).toBe(0);
    expect(profileMask(ORDER, { Alpha: "Yes", Beta: null, Gamma: "No" })).toBe(1);
  });
});

describe("piReadout", () => {
  it("matches the cumulative product for every profile", () => {
    for (let mask = 0; mask < 8; mask++) {
      const readout = piReadout(TABLE, selectionsFor(mask));
      expect(Math.abs(readout - product(mask))).toBeLessThan(1e-12);
    }
  });

  it("is 1.0 for an empty profile", () => {
    expect(piReadout(TABLE, { Alpha: null, Beta: null, Gamma: null })).toBe(1.0);
  });

  it("rejects a truncated table instead of showing nothing", () => {
    const broken: PreventionTable = { ...TABLE, cumulative: [1.0] };
    expect(() => piReadout(broken, selectionsFor(3))).toThrow(/no entry/);
  });
});
