import type {
  Evidence,
  ImpactWeights,
  ModelDescriptor,
  QueryResponse,
  RiskResponse,
} from "./types.js";

/** Expected service failure: carries the machine-readable code. */
export class ApiError extends Error {
  constructor(readonly code: string, message: string, readonly status: number) {
    super(message);
  }
}

async function parseFailure(response: Response): Promise<ApiError> {
  let code = "UNEXPECTED_RESPONSE";
  let message = `service returned status ${response.status}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON failure body; keep the status-based message
  }
  return new ApiError(code, message, response.status);
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) throw await parseFailure(response);
    return (await response.json()) as T;
  }

  getModel(): Promise<ModelDescriptor> {
    return this.request<ModelDescriptor>("/model");
  }

  query(evidence: Evidence, targets: string[]): Promise<QueryResponse> {
    return this.request<QueryResponse>("/query", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ evidence, targets }),
    });
  }

  risk(fpr: number, fnr: number, impacts: ImpactWeights): Promise<RiskResponse> {
    return this.request<RiskResponse>("/risk", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ fpr, fnr, impacts }),
    });
  }
}
