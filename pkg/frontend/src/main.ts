/**
 * Editor wiring: textarea in, colored verse rows out.
 */
import { DebouncedAnalyzer } from "./client.js";
import { diffRows } from "./diff.js";
import { parseTendencyField, toRowViews } from "./rules.js";
import { apply, initialState, type AppState } from "./state.js";
import type { RowView } from "./types.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing #${id}`);
  }
  return el as T;
}

function applyPatches(list: HTMLOListElement, prev: RowView[], next: RowView[]): void {
  for (const patch of diffRows(prev, next)) {
    if (patch.op === "remove") {
      list.children[patch.index]?.remove();
      continue;
    }
    let li = list.children[patch.index] as HTMLLIElement | undefined;
    if (!li) {
      li = document.createElement("li");
      list.appendChild(li);
    }
    li.textContent = patch.row.tagged || " ";
    li.className = patch.row.color;
    li.title = patch.row.tooltip;
  }
}

export function start(): void {
  const poem = byId<HTMLTextAreaElement>("poem");
  const tendencyField = byId<HTMLInputElement>("tendency");
  const banner = byId<HTMLElement>("banner");
  const rowList = byId<HTMLOListElement>("rows");
  const tendencyLabel = byId<HTMLElement>("tendency-label");

  const params = new URLSearchParams(window.location.search);
  const client = new DebouncedAnalyzer({
    baseUrl: params.get("api") ?? `http://${window.location.hostname || "127.0.0.1"}:8176`,
  });

  let state: AppState = initialState();
  let lastOverride: number[] = [];

  function render(nextState: AppState): void {
    applyPatches(rowList, state.rows, nextState.rows);
    rowList.classList.toggle("stale", nextState.stale);
    banner.hidden = !nextState.bannerVisible;
    if (nextState.lastError) {
      banner.textContent = `analysis endpoint unreachable: ${nextState.lastError}`;
    }
    tendencyLabel.textContent = nextState.tendency.join(".") || "?";
    state = nextState;
  }

  client.onResult = (analysis) => {
    const rows = toRowViews(analysis, lastOverride);
    const tendency =
      lastOverride.length > 0 ? lastOverride : analysis.tendency;
    render(apply(state, { kind: "result", rows, tendency }));
  };
  client.onError = (error) => {
    render(apply(state, { kind: "failure", message: error.message }));
  };

  function requestAnalysis(): void {
    lastOverride = parseTendencyField(tendencyField.value);
    client.schedule({
      text: poem.value,
      measures: lastOverride.length > 0 ? lastOverride : undefined,
    });
  }

  poem.addEventListener("input", requestAnalysis);
  tendencyField.addEventListener("input", requestAnalysis);
  if (poem.value.trim()) {
    requestAnalysis();
  }
}

if (typeof document !== "undefined" && document.getElementById("poem")) {
  start();
}
