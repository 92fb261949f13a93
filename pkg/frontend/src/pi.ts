import type { PreventionTable } from "./types.js";
import type { Selections } from "./panel.js";

// The service ships the exact cumulative index for every behavior
// profile, so the client displays full precision without repeating the
// calibration math: the readout is a table lookup keyed by a bitmask.

/** Profile mask: bit b is set when measure order[b] is selected "Yes". */
export function profileMask(order: string[], selections: Selections): number {
  let mask = 0;
  order.forEach((name, bit) => {
    if (selections[name] === "Yes") mask |= 1 << bit;
  });
  return mask;
}

/**
 * Cumulative prevention index for the current behavior selections.
 * Unset behaviors count as not taken, mirroring how the sweep reports
 * treat missing evidence for a behavior.
 */
export function piReadout(table: PreventionTable, selections: Selections): number {
  const mask = profileMask(table.order, selections);
  const value = table.cumulative[mask];
  if (value === undefined) {
    throw new Error(`prevention table has no entry for profile ${mask}`);
  }
  return value;
}
