import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DebouncedAnalyzer } from "../src/client.js";
import type { AnalysisResponse } from "../src/types.js";

function okResponse(payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}

const EMPTY: AnalysisResponse = {
  rows: [],
  tendency: [],
  is_fixed: false,
  mode: "auto",
  window: 14,
};

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("debouncing", () => {
  it("collapses rapid keystrokes into one request with the newest text", async () => {
    const calls: string[] = [];
    const client = new DebouncedAnalyzer({
      fetchFn: async (_url, init) => {
        calls.push(JSON.parse(String(init?.body)).text);
        return okResponse(EMPTY);
      },
    });
    client.schedule({ text: "amig" });
    vi.advanceTimersByTime(100);
    client.schedule({ text: "amigo" });
    vi.advanceTimersByTime(100);
    client.schedule({ text: "amigos" });
    await vi.advanceTimersByTimeAsync(250);
    expect(calls).toEqual(["amigos"]);
  });

  it("waits the full debounce interval", async () => {
    let fired = 0;
    const client = new DebouncedAnalyzer({
      fetchFn: async () => {
        fired++;
        return okResponse(EMPTY);
      },
    });
    client.schedule({ text: "x" });
    await vi.advanceTimersByTimeAsync(249);
    expect(fired).toBe(0);
    expect(client.busy).toBe(true);
    await vi.advanceTimersByTimeAsync(1);
    expect(fired).toBe(1);
  });
});

describe("single in-flight request", () => {
  it("aborts the slow older request when a newer one fires", async () => {
    const seen: string[] = [];
    const aborted: string[] = [];
    const client = new DebouncedAnalyzer({
      debounceMs: 10,
      fetchFn: (_url, init) => {
        const text = JSON.parse(String(init?.body)).text;
        seen.push(text);
        return new Promise((resolve, reject) => {
          init?.signal?.addEventListener("abort", () => {
            aborted.push(text);
            reject(new DOMException("aborted", "AbortError"));
          });
          // the first request hangs until aborted; later ones resolve
          if (text !== "slow") {
            setTimeout(() => resolve(okResponse(EMPTY)), 5);
          }
        });
      },
    });
    const results: AnalysisResponse[] = [];
    const errors: Error[] = [];
    client.onResult = (a) => results.push(a);
    client.onError = (e) => errors.push(e);

    client.schedule({ text: "slow" });
    await vi.advanceTimersByTimeAsync(10);
    client.schedule({ text: "fast" });
    await vi.advanceTimersByTimeAsync(20);

    expect(seen).toEqual(["slow", "fast"]);
    expect(aborted).toEqual(["slow"]);
    expect(results).toHaveLength(1);
    // the superseded request is silent, not an error banner
    expect(errors).toHaveLength(0);
  });

  it("sends the declared measures", async () => {
    let body: Record<string, unknown> = {};
    const client = new DebouncedAnalyzer({
      debounceMs: 1,
      fetchFn: async (_url, init) => {
        body = JSON.parse(String(init?.body));
        return okResponse(EMPTY);
      },
    });
    client.schedule({ text: "hola", measures: [7, 11] });
    await vi.advanceTimersByTimeAsync(5);
    expect(body).toEqual({ text: "hola", measures: [7, 11] });
  });
});

describe("endpoint failures", () => {
  it("reports unreachable endpoints", async () => {
    const client = new DebouncedAnalyzer({
      debounceMs: 1,
      fetchFn: async () => {
        throw new TypeError("fetch failed");
      },
    });
    const errors: Error[] = [];
    client.onError = (e) => errors.push(e);
    client.schedule({ text: "hola" });
    await vi.advanceTimersByTimeAsync(5);
    expect(errors).toHaveLength(1);
    expect(errors[0]!.message).toContain("fetch failed");
  });

  it("reports non-200 answers with the status", async () => {
    const client = new DebouncedAnalyzer({
      debounceMs: 1,
      fetchFn: async () =>
        new Response(JSON.stringify({ error: "window must be a positive integer" }), {
          status: 400,
        }),
    });
    const errors: Error[] = [];
    client.onError = (e) => errors.push(e);
    client.schedule({ text: "hola" });
    await vi.advanceTimersByTimeAsync(5);
    expect(errors[0]!.message).toContain("400");
  });

  it("health check answers false when down", async () => {
    const down = new DebouncedAnalyzer({
      fetchFn: async () => {
        throw new TypeError("fetch failed");
      },
    });
    expect(await down.health()).toBe(false);
    const up = new DebouncedAnalyzer({
      fetchFn: async () => okResponse({ status: "ok" }),
    });
    expect(await up.health()).toBe(true);
  });
});
