/**
 * Debounced analysis client.
 *
 * Keystrokes schedule a whole-poem request 250 ms out; a newer
 * keystroke cancels both the pending timer and any request already in
 * flight, so at most one request is ever outstanding and only the
 * newest text reaches the server.
 */
import type { AnalysisResponse } from "./types.js";

export const DEBOUNCE_MS = 250;

export interface AnalyzeRequest {
  text: string;
  measures?: number[];
  mode?: string;
  window?: number;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface ClientOptions {
  baseUrl?: string;
  debounceMs?: number;
  fetchFn?: FetchLike;
}

export class DebouncedAnalyzer {
  readonly baseUrl: string;
  readonly debounceMs: number;
  private readonly fetchFn: FetchLike;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;

  onResult: (analysis: AnalysisResponse) => void = () => {};
  onError: (error: Error) => void = () => {};

  constructor(options: ClientOptions = {}) {
    this.baseUrl = (options.baseUrl ?? "http://127.0.0.1:8176").replace(/\/$/, "");
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.fetchFn = options.fetchFn ?? ((input, init) => fetch(input, init));
  }

  /** Schedule an analysis of the full poem, superseding older ones. */
  schedule(request: AnalyzeRequest): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.send(request);
    }, this.debounceMs);
  }

  /** True while a timer or a request is pending. */
  get busy(): boolean {
    return this.timer !== null || this.inflight !== null;
  }

  private async send(request: AnalyzeRequest): Promise<void> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    const body: Record<string, unknown> = { text: request.text };
    if (request.measures && request.measures.length > 0) {
      body.measures = request.measures;
    }
    if (request.mode) {
      body.mode = request.mode;
    }
    if (request.window) {
      body.window = request.window;
    }

    try {
      const response = await this.fetchFn(`${this.baseUrl}/analyze`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
      if (!response.ok) {
        const detail = await response.text();
        throw new Error(`analyze failed (${response.status}): ${detail}`);
      }
      const analysis = (await response.json()) as AnalysisResponse;
      if (!controller.signal.aborted) {
        this.onResult(analysis);
      }
    } catch (err) {
      // a superseded request going down is not an error the UI reports
      if (controller.signal.aborted) {
        return;
      }
      this.onError(err instanceof Error ? err : new Error(String(err)));
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchFn(`${this.baseUrl}/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
