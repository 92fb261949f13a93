// Shapes served by the decision-support HTTP API. The client never
// invents states or probabilities; everything displayed originates in
// these payloads (the prevention readout is a table lookup, see pi.ts).

export interface VariableDescriptor {
  name: string;
  states: string[];
  parents: string[];
  group: string;
}

export interface PreventionTable {
  /** measure names; bit b of a profile mask refers to order[b] */
  order: string[];
  /** exact per-measure index, keyed by measure name */
  indices: Record<string, number>;
  /** exact cumulative index for all 1 << order.length profiles */
  cumulative: number[];
}

export interface ModelDescriptor {
  name: string;
  variables: VariableDescriptor[];
  prevention: PreventionTable;
}

/** state label -> posterior probability, as returned per target */
export type Distribution = Record<string, number>;

export interface QueryResponse {
  posteriors: Record<string, Distribution>;
}

export interface RiskResponse {
  risk_p: number;
  risk_n: number;
}

export interface ImpactWeights {
  undetected: number;
  detected: number;
  quarantined: number;
  cleared: number;
}

export interface ApiFailure {
  code: string;
  message: string;
}

/** evidence map sent to POST /query: variable name -> state label */
export type Evidence = Record<string, string>;
