/**
 * View state as a pure reducer so the degraded states are testable:
 * while the endpoint is unreachable the banner shows and the last
 * good rows stay on screen, greyed as stale.
 */
import type { RowView } from "./types.js";

export interface AppState {
  rows: RowView[];
  tendency: number[];
  stale: boolean;
  bannerVisible: boolean;
  lastError: string | null;
}

export type AppEvent =
  | { kind: "request_started" }
  | { kind: "result"; rows: RowView[]; tendency: number[] }
  | { kind: "failure"; message: string };

export function initialState(): AppState {
  return {
    rows: [],
    tendency: [],
    stale: false,
    bannerVisible: false,
    lastError: null,
  };
}

export function apply(state: AppState, event: AppEvent): AppState {
  switch (event.kind) {
    case "request_started":
      return state;
    case "result":
      return {
        rows: event.rows,
        tendency: event.tendency,
        stale: false,
        bannerVisible: false,
        lastError: null,
      };
    case "failure":
      return {
        ...state,
        stale: state.rows.length > 0,
        bannerVisible: true,
        lastError: event.message,
      };
  }
}
