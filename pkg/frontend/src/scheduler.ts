import type { Evidence, QueryResponse } from "./types.js";

export type QueryFn = (evidence: Evidence, targets: string[]) => Promise<QueryResponse>;

export interface SchedulerHandlers {
  /** called with the response of the newest request, in request order */
  onResult(response: QueryResponse): void;
  onError(error: unknown): void;
}

interface PendingRequest {
  evidence: Evidence;
  targets: string[];
}

/**
 * Debounced, single-in-flight query pump.
 *
 * Rapid control changes collapse into one request per quiet period; at
 * most one request is outstanding at any time. While one is in flight,
 * the newest change waits as the single pending slot and is issued as
 * soon as the current request settles. Responses older than the newest
 * issued request are dropped, so displayed values never move backwards.
 */
export class QueryScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: PendingRequest | null = null;
  private inFlight = false;
  private issued = 0;
  private applied = 0;

  constructor(
    private readonly run: QueryFn,
    private readonly handlers: SchedulerHandlers,
    private readonly delayMs: number = 150,
  ) {}

  schedule(evidence: Evidence, targets: string[]): void {
    this.pending = { evidence, targets };
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.pump();
    }, this.delayMs);
  }

  /** Issue the pending request unless one is already on the wire. */
  private pump(): void {
    if (this.inFlight || this.pending === null) return;
    const request = this.pending;
    this.pending = null;
    const ticket = ++this.issued;
    this.inFlight = true;
    this.run(request.evidence, request.targets).then(
      (response) => this.settle(ticket, () => this.handlers.onResult(response)),
      (error) => this.settle(ticket, () => this.handlers.onError(error)),
    );
  }

  private settle(ticket: number, deliver: () => void): void {
    this.inFlight = false;
    if (ticket > this.applied) {
      this.applied = ticket;
      // deliver only if nothing newer is waiting; a queued change is
      // about to supersede this response anyway
      if (this.pending === null) deliver();
    }
    this.pump();
  }
}
