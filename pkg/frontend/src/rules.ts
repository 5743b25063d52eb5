/**
 * The coloring rule and the mapping from analysis JSON to row views.
 *
 * A verse is red when it breaks the versal tendency (or failed to
 * scan), green when its pattern coincides fully with a catalog type,
 * black when it matches with extrarrhythmic stresses. Red takes
 * precedence: a perfect verse of the wrong measure is still red.
 */
import type { AnalysisResponse, AnalysisRow, RowColor, RowView } from "./types.js";

export function colorFor(row: AnalysisRow, tendency: number[]): RowColor {
  if (row.syllables === null) {
    return "red";
  }
  if (tendency.length > 0 && !tendency.includes(row.syllables)) {
    return "red";
  }
  if (row.ratio === 1) {
    return "green";
  }
  return "black";
}

/** The user's declared measures win over the server-inferred tendency. */
export function effectiveTendency(
  analysis: AnalysisResponse,
  override: number[],
): number[] {
  return override.length > 0 ? override : analysis.tendency;
}

export function tooltipFor(row: AnalysisRow): string {
  if (row.syllables === null) {
    return `${row.verse}\nno scansion: ${row.error ?? "unknown error"}`;
  }
  const resources =
    row.resources.map((t) => `${t.kind}@${t.word}`).join(", ") || "none";
  return [
    row.tagged,
    `syllables: ${row.syllables}`,
    `pattern: ${row.pattern ?? ""}`,
    `type: ${row.type_name ?? ""} (${row.canonical_pattern ?? ""})`,
    `coincidence: ${row.ratio ?? ""}`,
    `resources: ${resources}`,
  ].join("\n");
}

export function toRowViews(
  analysis: AnalysisResponse,
  override: number[] = [],
): RowView[] {
  const tendency = effectiveTendency(analysis, override);
  return analysis.rows.map((row, i) => ({
    verseIndex: i,
    color: colorFor(row, tendency),
    tooltip: tooltipFor(row),
    tagged: row.tagged,
  }));
}

/** "11", "7.11" or "7,11" into measures; junk yields []. */
export function parseTendencyField(value: string): number[] {
  const parts = value.replace(/,/g, ".").split(".");
  const measures: number[] = [];
  for (const part of parts) {
    if (!part.trim()) {
      continue;
    }
    const n = Number(part.trim());
    if (!Number.isInteger(n) || n < 1) {
      return [];
    }
    measures.push(n);
  }
  return measures;
}
