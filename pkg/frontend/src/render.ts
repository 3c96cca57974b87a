/** HTML-string renderers: data in, markup out, no DOM access. */

import type {
  CognateClassView,
  CognatesPayload,
  LanguageStatsView,
  Row,
  StatsPayload,
  Suggestion,
  ValidationPayload,
  Violation,
} from "./api.js";
import { classKey, splitToken, morphTokens, type Badge, type RowUi } from "./state.js";

export const MODEL_CHOICES = [
  "affix",
  "mdl",
  "lsv",
  "lpv",
  "lse",
  "lpe",
  "lspe",
  "maxdrop",
  "bpe",
  "wordpiece",
  "unigram",
] as const;

export const LEVEL_CHOICES = ["surface", "underlying"] as const;

export const escapeHtml = (text: string): string =>
  text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");

const side = (value: string | null): string =>
  value === null ? '<span class="gap">-</span>' : escapeHtml(value);

/** One sound token as a chip; pairs stack surface over underlying. */
export const tokenChip = (token: string): string => {
  const { surface, underlying } = splitToken(token);
  if (surface !== null && surface === underlying) {
    return `<span class="tok plain">${escapeHtml(surface)}</span>`;
  }
  return `<span class="tok pair"><span class="sf">${side(surface)}</span><span class="ul">${side(underlying)}</span></span>`;
};

/** A morph as a chip of token chips. */
export const morphChip = (tokens: string[]): string =>
  `<span class="morph">${tokens.map(tokenChip).join("")}</span>`;

/**
 * A whole SEGMENTS string as morph chips. Cut marks between morphs are
 * dashed when the rendering previews a proposal.
 */
export const segmentChips = (segments: string, proposal = false): string => {
  const cut = `<span class="chip-cut${proposal ? " proposed" : ""}"></span>`;
  return `<span class="chips${proposal ? " proposal" : ""}">${morphTokens(segments)
    .map(morphChip)
    .join(cut)}</span>`;
};

export const badgeHtml = (badge: Badge | null): string =>
  badge === null
    ? ""
    : `<span class="badge ${badge.tone}" role="status">${escapeHtml(badge.text)}</span>`;

export const violationBadges = (violations: Violation[]): string =>
  violations
    .map(
      (v) =>
        `<span class="badge ${v.severity === "error" ? "error" : "warn"}" title="${escapeHtml(v.message)}">${escapeHtml(v.kind)}</span>`,
    )
    .join("");

const suggestionBlock = (suggestion: Suggestion): string => `
  <div class="suggestion" data-testid="suggestion">
    <span class="suggestion-label">${escapeHtml(suggestion.model)}/${escapeHtml(suggestion.level)} proposes</span>
    ${segmentChips(suggestion.segments, true)}
    <button type="button" data-action="accept-suggestion">Accept</button>
    <button type="button" data-action="dismiss-suggestion">Dismiss</button>
  </div>`;

export const rowHtml = (
  row: Row,
  ui: RowUi,
  violations: Violation[],
  highlighted: boolean,
): string => {
  const fields = ui.fields;
  return `
  <tr data-row-id="${escapeHtml(row.id)}" class="${highlighted ? "highlighted" : ""}">
    <td class="row-id">${escapeHtml(row.id)}</td>
    <td>${escapeHtml(row.language)}</td>
    <td>${escapeHtml(row.concept)}</td>
    <td class="num">${row.value}</td>
    <td class="form">${escapeHtml(row.form)}</td>
    <td class="segments-cell">
      ${segmentChips(row.segments)}
      <div class="glosses">${row.morphemes.map((g) => `<span class="gloss">${escapeHtml(g)}</span>`).join(" ")}</div>
      ${ui.suggestion ? suggestionBlock(ui.suggestion) : ""}
    </td>
    <td class="edit-cell">
      <label>SEGMENTS <input name="segments" value="${escapeHtml(fields.segments)}"></label>
      <label>COGNATES <input name="cognates" value="${escapeHtml(fields.cognates)}"></label>
      <label>MORPHEMES <input name="morphemes" value="${escapeHtml(fields.morphemes)}"></label>
      <div class="row-actions">
        <button type="button" data-action="save-row">Save</button>
        <button type="button" data-action="suggest-row">Suggest</button>
      </div>
    </td>
    <td class="badges">${badgeHtml(ui.badge)}${violationBadges(violations)}</td>
  </tr>`;
};

export const tableHtml = (
  rows: Row[],
  uiByRow: Map<string, RowUi>,
  byRow: Map<string, Violation[]>,
  highlighted: Set<string>,
): string => `
  <table class="wordlist">
    <thead>
      <tr><th>ID</th><th>Language</th><th>Concept</th><th>Value</th><th>Form</th>
          <th>Analysis</th><th>Edit</th><th>Status</th></tr>
    </thead>
    <tbody>
      ${rows
        .map((row) => {
          const ui = uiByRow.get(row.id);
          if (ui === undefined) return "";
          return rowHtml(row, ui, byRow.get(row.id) ?? [], highlighted.has(row.id));
        })
        .join("")}
    </tbody>
  </table>`;

const matrixHtml = (cls: CognateClassView): string => {
  const heads = cls.columns
    .map((c) => `<th class="${c.kind}">${c.kind === "anchor" ? c.position : "."}</th>`)
    .join("");
  const body = cls.rows
    .map((cells, i) => {
      const occurrence = cls.occurrences[i];
      const label = occurrence ? `${occurrence.row_id}:${occurrence.morph_index}` : "";
      const tds = cells
        .map((cell) => `<td>${cell === null ? '<span class="gap">-</span>' : escapeHtml(cell)}</td>`)
        .join("");
      return `<tr><th class="occ">${escapeHtml(label)}</th>${tds}</tr>`;
    })
    .join("");
  return `<table class="matrix"><thead><tr><th></th>${heads}</tr></thead><tbody>${body}</tbody></table>`;
};

export const cognatePanelHtml = (
  cognates: CognatesPayload | null,
  selected: string | null,
): string => {
  if (cognates === null) return '<p class="muted">No cognate classes to show.</p>';
  return cognates.classes
    .map((cls) => {
      const key = classKey(cls.language, cls.cognate_id);
      return `
      <details class="cognate-class ${selected === key ? "selected" : ""}" data-class-key="${escapeHtml(key)}" ${selected === key ? "open" : ""}>
        <summary data-action="select-class">
          ${escapeHtml(cls.language)} ${cls.cognate_id} <span class="gloss">${escapeHtml(cls.gloss)}</span>
          <span class="muted">${escapeHtml(cls.underlying.join(" "))}</span>
        </summary>
        ${matrixHtml(cls)}
      </details>`;
    })
    .join("");
};

const num = (x: number): string => x.toFixed(2);

export const statsHtml = (stats: StatsPayload | null): string => {
  if (stats === null) return '<p class="muted">No stats yet.</p>';
  const rows = stats.languages
    .map((entry) => {
      if ("error" in entry) {
        return `<tr><th>${escapeHtml(entry.language)}</th><td colspan="7" class="muted">${escapeHtml(entry.error)}</td></tr>`;
      }
      const s: LanguageStatsView = entry;
      return `<tr data-stats-language="${escapeHtml(s.language)}">
        <th>${escapeHtml(s.language)}</th>
        <td class="num">${s.morphs_surface}</td>
        <td class="num">${s.morphemes_underlying}</td>
        <td class="num">${num(s.expressivity_surface)}</td>
        <td class="num">${num(s.expressivity_underlying)}</td>
        <td class="num" data-stat="opacity">${num(s.opacity)}</td>
        <td class="num">${num(s.avg_code_length)}</td>
        <td class="num">${num(s.entropy)}</td>
      </tr>`;
    })
    .join("");
  return `
  <table class="stats">
    <thead><tr><th></th><th>morphs</th><th>morphemes</th><th>expr S</th><th>expr U</th>
               <th>opacity</th><th>length</th><th>entropy</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
};

export const validationHtml = (validation: ValidationPayload | null): string => {
  if (validation === null) return "";
  const items = validation.violations
    .map(
      (v) =>
        `<li class="${v.severity}"><strong>${escapeHtml(v.kind)}</strong> ${escapeHtml(v.message)}</li>`,
    )
    .join("");
  return `
  <div class="validation">
    <span class="${validation.errors > 0 ? "error" : "ok"}">${validation.errors} errors</span>,
    <span class="warn">${validation.warnings} warnings</span>
    <ul>${items}</ul>
  </div>`;
};

export interface HeaderView {
  languages: string[];
  language: string;
  model: string;
  level: string;
  dirty: boolean;
  offline: boolean;
  notice: Badge | null;
}

export const headerHtml = (view: HeaderView): string => {
  const languageOptions = ['<option value="">all languages</option>']
    .concat(
      view.languages.map(
        (lang) =>
          `<option value="${escapeHtml(lang)}" ${lang === view.language ? "selected" : ""}>${escapeHtml(lang)}</option>`,
      ),
    )
    .join("");
  const modelOptions = MODEL_CHOICES.map(
    (m) => `<option value="${m}" ${m === view.model ? "selected" : ""}>${m}</option>`,
  ).join("");
  const levelOptions = LEVEL_CHOICES.map(
    (l) => `<option value="${l}" ${l === view.level ? "selected" : ""}>${l}</option>`,
  ).join("");
  return `
  <header>
    <h1>Numeral annotation</h1>
    ${view.offline ? '<div class="offline-banner" role="alert">Server unreachable — showing the last loaded state.</div>' : ""}
    <div class="controls">
      <label>Language <select name="language">${languageOptions}</select></label>
      <label>Model <select name="model">${modelOptions}</select></label>
      <label>Level <select name="level">${levelOptions}</select></label>
      <button type="button" data-action="reload">Reload</button>
      <button type="button" data-action="undo">Undo</button>
      <button type="button" data-action="save-file">Write file</button>
      <span class="dirty ${view.dirty ? "on" : ""}" title="unsaved edits">●</span>
      ${badgeHtml(view.notice)}
    </div>
  </header>`;
};

export interface AppView {
  header: HeaderView;
  rows: Row[];
  uiByRow: Map<string, RowUi>;
  validation: ValidationPayload | null;
  byRow: Map<string, Violation[]>;
  highlighted: Set<string>;
  cognates: CognatesPayload | null;
  selectedClass: string | null;
  stats: StatsPayload | null;
}

export const appHtml = (view: AppView): string => `
  ${headerHtml(view.header)}
  <main>
    <section class="table-pane">
      ${validationHtml(view.validation)}
      ${tableHtml(view.rows, view.uiByRow, view.byRow, view.highlighted)}
    </section>
    <aside class="side-pane">
      <h2>Economy</h2>
      ${statsHtml(view.stats)}
      <h2>Cognate classes</h2>
      <div class="cognates">${cognatePanelHtml(view.cognates, view.selectedClass)}</div>
    </aside>
  </main>`;
