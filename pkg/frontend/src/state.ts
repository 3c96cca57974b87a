/** Pure state derivations shared by the renderer and the app shell. */

import type { CognatesPayload, Row, Suggestion, ValidationPayload, Violation } from "./api.js";

/** One side of a sound token; null is a gap. */
export interface TokenSides {
  surface: string | null;
  underlying: string | null;
}

/** Per-row UI state layered over the server rows. */
export interface RowUi {
  fields: { segments: string; cognates: string; morphemes: string };
  badge: Badge | null;
  suggestion: Suggestion | null;
}

export interface Badge {
  tone: "error" | "ok" | "info";
  text: string;
}

/**
 * Split one serialized token for display: at most one "/" separates the
 * surface and underlying sides, "-" is a gap and "\-" a literal hyphen.
 * Interpretation stays with the server; this only mirrors its spelling.
 */
export const splitToken = (text: string): TokenSides => {
  const side = (part: string): string | null => (part === "-" ? null : part === "\\-" ? "-" : part);
  const slash = text.indexOf("/");
  if (slash === -1) {
    const both = side(text);
    return { surface: both, underlying: both };
  }
  return { surface: side(text.slice(0, slash)), underlying: side(text.slice(slash + 1)) };
};

/** Token texts of a SEGMENTS string, grouped into morphs at "+" marks. */
export const morphTokens = (segments: string): string[][] => {
  const morphs: string[][] = [];
  let current: string[] = [];
  for (const piece of segments.split(/\s+/).filter((p) => p.length > 0)) {
    if (piece === "+") {
      if (current.length > 0) morphs.push(current);
      current = [];
    } else {
      current.push(piece);
    }
  }
  if (current.length > 0) morphs.push(current);
  return morphs;
};

/** Half-open token-index span of each morph in a SEGMENTS string. */
export const morphSpans = (segments: string): [number, number][] => {
  const spans: [number, number][] = [];
  let start = 0;
  for (const morph of morphTokens(segments)) {
    spans.push([start, start + morph.length]);
    start += morph.length;
  }
  return spans;
};

export interface AcceptEdit {
  segments: string;
  cognates: string;
  morphemes: string;
  /** How many pieces received placeholder annotations. */
  placeholders: number;
}

export const PLACEHOLDER_GLOSS = "?";

/**
 * Build the row edit that applies a suggested segmentation.
 *
 * Pieces whose token span is unchanged keep their cognate ID and gloss;
 * pieces created by new cuts get a fresh language-local cognate ID and a
 * placeholder gloss for the annotator to refine. The server still
 * re-validates the result.
 */
export const buildAcceptEdit = (row: Row, suggestion: Suggestion, allRows: Row[]): AcceptEdit => {
  const oldSpans = morphSpans(row.segments);
  const byOldSpan = new Map<string, number>();
  oldSpans.forEach(([start, end], index) => byOldSpan.set(`${start}:${end}`, index));

  let freshId =
    Math.max(
      0,
      ...allRows.filter((r) => r.language === row.language).flatMap((r) => r.cognates),
    ) + 1;

  const cognates: number[] = [];
  const glosses: string[] = [];
  let placeholders = 0;
  for (const [start, end] of morphSpans(suggestion.segments)) {
    const oldIndex = byOldSpan.get(`${start}:${end}`);
    if (oldIndex !== undefined) {
      cognates.push(row.cognates[oldIndex]!);
      glosses.push(row.morphemes[oldIndex]!);
    } else {
      cognates.push(freshId);
      freshId += 1;
      glosses.push(PLACEHOLDER_GLOSS);
      placeholders += 1;
    }
  }
  return {
    segments: suggestion.segments,
    cognates: cognates.join(" "),
    morphemes: glosses.join(" "),
    placeholders,
  };
};

/** Violations that name each row, keyed by row ID. */
export const violationsByRow = (validation: ValidationPayload): Map<string, Violation[]> => {
  const byRow = new Map<string, Violation[]>();
  for (const violation of validation.violations) {
    for (const rowId of violation.rows) {
      const bucket = byRow.get(rowId) ?? [];
      bucket.push(violation);
      byRow.set(rowId, bucket);
    }
  }
  return byRow;
};

export const classKey = (language: string, cognateId: number): string =>
  `${language}#${cognateId}`;

/** Row IDs highlighted when a cognate class is selected in the panel. */
export const highlightedRows = (
  cognates: CognatesPayload | null,
  selected: string | null,
): Set<string> => {
  const rows = new Set<string>();
  if (cognates === null || selected === null) return rows;
  for (const cls of cognates.classes) {
    if (classKey(cls.language, cls.cognate_id) === selected) {
      for (const occurrence of cls.occurrences) rows.add(occurrence.row_id);
    }
  }
  return rows;
};

/** Fresh per-row UI state mirroring the row's current server fields. */
export const rowUiFor = (row: Row): RowUi => ({
  fields: {
    segments: row.segments,
    cognates: row.cognates.join(" "),
    morphemes: row.morphemes.join(" "),
  },
  badge: null,
  suggestion: null,
});
