/**
 * JSON schema of the analysis endpoint, consumed verbatim.
 *
 * POST /analyze with {"text": "...", "measures"?: number[],
 * "mode"?: string, "window"?: number} answers an AnalysisResponse.
 */

export interface ResourceTag {
  kind: string;
  word: number;
  nucleus: number | null;
}

export interface AnalysisRow {
  verse: string;
  tagged: string;
  /** metric syllable count; null when the line could not be scanned */
  syllables: number | null;
  pattern: string | null;
  canonical_pattern: string | null;
  type_name: string | null;
  ratio: number | null;
  resources: ResourceTag[];
  flags: string[];
  line: number;
  color?: string;
  error?: string;
}

export interface AnalysisResponse {
  rows: AnalysisRow[];
  tendency: number[];
  is_fixed: boolean;
  mode: string;
  window: number;
}

export type RowColor = "green" | "black" | "red";

/** One rendered line of the editor gutter. */
export interface RowView {
  verseIndex: number;
  color: RowColor;
  /** tagged text plus the scansion columns, shown on hover */
  tooltip: string;
  tagged: string;
}
