/**
 * Row diffing: the whole poem is re-analyzed on every edit, but only
 * rows whose rendering actually changed get repainted.
 */
import type { RowView } from "./types.js";

export type RowPatch =
  | { op: "set"; index: number; row: RowView }
  | { op: "remove"; index: number };

function sameView(a: RowView, b: RowView): boolean {
  return (
    a.color === b.color && a.tooltip === b.tooltip && a.tagged === b.tagged
  );
}

export function diffRows(prev: RowView[], next: RowView[]): RowPatch[] {
  const patches: RowPatch[] = [];
  for (let i = 0; i < next.length; i++) {
    const before = prev[i];
    const after = next[i]!;
    if (before === undefined || !sameView(before, after)) {
      patches.push({ op: "set", index: i, row: after });
    }
  }
  // trailing removals come highest-index first so they apply cleanly
  for (let i = prev.length - 1; i >= next.length; i--) {
    patches.push({ op: "remove", index: i });
  }
  return patches;
}
