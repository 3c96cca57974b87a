/** DOM shell: owns the state, delegates events, re-renders wholesale. */

import {
  ApiClient,
  ApiError,
  type CognatesPayload,
  type Row,
  type StatsPayload,
  type ValidationPayload,
} from "./api.js";
import { appHtml } from "./render.js";
import {
  buildAcceptEdit,
  highlightedRows,
  rowUiFor,
  violationsByRow,
  type Badge,
  type RowUi,
} from "./state.js";

export interface AppState {
  rows: Row[];
  languages: string[];
  dirty: boolean;
  language: string;
  model: string;
  level: string;
  uiByRow: Map<string, RowUi>;
  validation: ValidationPayload | null;
  cognates: CognatesPayload | null;
  stats: StatsPayload | null;
  selectedClass: string | null;
  offline: boolean;
  notice: Badge | null;
}

export interface App {
  state: AppState;
  load(): Promise<void>;
  /** Resolves once every in-flight action (and what it spawned) settled. */
  idle(): Promise<void>;
}

export const createApp = (root: HTMLElement, api: ApiClient): App => {
  const state: AppState = {
    rows: [],
    languages: [],
    dirty: false,
    language: "",
    model: "affix",
    level: "surface",
    uiByRow: new Map(),
    validation: null,
    cognates: null,
    stats: null,
    selectedClass: null,
    offline: false,
    notice: null,
  };

  const pending: Promise<void>[] = [];
  const track = (work: Promise<void>): void => {
    pending.push(work.catch(() => undefined));
  };
  const idle = async (): Promise<void> => {
    while (pending.length > 0) {
      const batch = pending.splice(0, pending.length);
      await Promise.allSettled(batch);
    }
  };

  const visibleRows = (): Row[] =>
    state.language === "" ? state.rows : state.rows.filter((r) => r.language === state.language);

  const render = (): void => {
    root.innerHTML = appHtml({
      header: {
        languages: state.languages,
        language: state.language,
        model: state.model,
        level: state.level,
        dirty: state.dirty,
        offline: state.offline,
        notice: state.notice,
      },
      rows: visibleRows(),
      uiByRow: state.uiByRow,
      validation: state.validation,
      byRow: state.validation ? violationsByRow(state.validation) : new Map(),
      highlighted: highlightedRows(state.cognates, state.selectedClass),
      cognates: state.cognates,
      selectedClass: state.selectedClass,
      stats: state.stats,
    });
  };

  const isNetworkFailure = (err: unknown): boolean => !(err instanceof ApiError);

  /** Run a server call; network failures flip the offline banner. */
  const guard = async (work: () => Promise<void>): Promise<void> => {
    try {
      await work();
      state.offline = false;
    } catch (err) {
      if (isNetworkFailure(err)) {
        state.offline = true;
      } else {
        throw err;
      }
    }
  };

  const refreshMeta = async (): Promise<void> => {
    await guard(async () => {
      const [validation, stats, cognates] = await Promise.all([
        api.validate(),
        api.stats(),
        api.cognates(state.language === "" ? undefined : state.language).catch((err: unknown) => {
          // 409 while the data has hard errors: keep the previous panel.
          if (err instanceof ApiError && err.status === 409) return state.cognates;
          throw err;
        }),
      ]);
      state.validation = validation;
      state.stats = stats;
      state.cognates = cognates;
    });
  };

  const load = async (): Promise<void> => {
    await guard(async () => {
      const payload = await api.rows();
      state.rows = payload.rows;
      state.languages = payload.languages;
      state.dirty = payload.dirty;
      state.uiByRow = new Map(payload.rows.map((row) => [row.id, rowUiFor(row)]));
    });
    await refreshMeta();
    render();
  };

  const attr = (value: string): string => value.replace(/\\/g, "\\\\").replace(/"/g, '\\"');

  const rowElement = (id: string): HTMLElement | null =>
    root.querySelector(`tr[data-row-id="${attr(id)}"]`);

  const fieldValue = (rowEl: HTMLElement, name: string): string => {
    const input = rowEl.querySelector<HTMLInputElement>(`input[name="${name}"]`);
    return input ? input.value : "";
  };

  const applyUpdatedRow = (updated: Row, badge: Badge): void => {
    state.rows = state.rows.map((r) => (r.id === updated.id ? updated : r));
    const ui = rowUiFor(updated);
    ui.badge = badge;
    state.uiByRow.set(updated.id, ui);
    state.dirty = true;
  };

  const editFailureBadge = (id: string, err: unknown): void => {
    if (err instanceof ApiError) {
      const ui = state.uiByRow.get(id);
      if (ui) ui.badge = { tone: "error", text: `rejected: ${err.message}` };
    } else {
      state.offline = true;
    }
  };

  const saveRow = async (id: string): Promise<void> => {
    const rowEl = rowElement(id);
    const ui = state.uiByRow.get(id);
    if (rowEl === null || ui === undefined) return;
    ui.fields = {
      segments: fieldValue(rowEl, "segments"),
      cognates: fieldValue(rowEl, "cognates"),
      morphemes: fieldValue(rowEl, "morphemes"),
    };
    try {
      const updated = await api.editRow(id, { ...ui.fields });
      applyUpdatedRow(updated, { tone: "ok", text: "saved" });
      await refreshMeta();
    } catch (err) {
      editFailureBadge(id, err);
    }
    render();
  };

  const suggestRow = async (id: string): Promise<void> => {
    const ui = state.uiByRow.get(id);
    if (ui === undefined) return;
    try {
      ui.suggestion = await api.suggest({ row_id: id, model: state.model, level: state.level });
      ui.badge = null;
    } catch (err) {
      editFailureBadge(id, err);
    }
    render();
  };

  const acceptSuggestion = async (id: string): Promise<void> => {
    const row = state.rows.find((r) => r.id === id);
    const ui = state.uiByRow.get(id);
    if (row === undefined || ui === undefined || ui.suggestion === null) return;
    const edit = buildAcceptEdit(row, ui.suggestion, state.rows);
    try {
      const updated = await api.editRow(id, {
        segments: edit.segments,
        cognates: edit.cognates,
        morphemes: edit.morphemes,
      });
      const badge: Badge =
        edit.placeholders > 0
          ? { tone: "info", text: `accepted — refine ${edit.placeholders} placeholder gloss(es)` }
          : { tone: "ok", text: "accepted" };
      applyUpdatedRow(updated, badge);
      await refreshMeta();
    } catch (err) {
      editFailureBadge(id, err);
    }
    render();
  };

  const dismissSuggestion = (id: string): void => {
    const ui = state.uiByRow.get(id);
    if (ui) ui.suggestion = null;
    render();
  };

  const globalAction = async (work: () => Promise<Badge>): Promise<void> => {
    try {
      state.notice = await work();
      state.offline = false;
    } catch (err) {
      if (err instanceof ApiError) {
        state.notice = { tone: "error", text: err.message };
      } else {
        state.offline = true;
      }
    }
    render();
  };

  const undo = (): Promise<void> =>
    globalAction(async () => {
      await api.undo();
      const payload = await api.rows();
      state.rows = payload.rows;
      state.dirty = payload.dirty;
      state.uiByRow = new Map(payload.rows.map((row) => [row.id, rowUiFor(row)]));
      await refreshMeta();
      return { tone: "ok", text: "undone" };
    });

  const saveFile = (): Promise<void> =>
    globalAction(async () => {
      const result = await api.save();
      state.dirty = false;
      return { tone: "ok", text: `wrote ${result.rows} rows` };
    });

  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const actionEl = target.closest<HTMLElement>("[data-action]");
    if (actionEl === null || !root.contains(actionEl)) return;
    const action = actionEl.dataset["action"];
    const rowId = actionEl.closest<HTMLElement>("[data-row-id]")?.dataset["rowId"];
    if (action === "save-row" && rowId !== undefined) track(saveRow(rowId));
    else if (action === "suggest-row" && rowId !== undefined) track(suggestRow(rowId));
    else if (action === "accept-suggestion" && rowId !== undefined) track(acceptSuggestion(rowId));
    else if (action === "dismiss-suggestion" && rowId !== undefined) dismissSuggestion(rowId);
    else if (action === "reload") track(load());
    else if (action === "undo") track(undo());
    else if (action === "save-file") track(saveFile());
    else if (action === "select-class") {
      event.preventDefault();
      const key = actionEl.closest<HTMLElement>("[data-class-key]")?.dataset["classKey"];
      state.selectedClass = key === undefined || key === state.selectedClass ? null : key;
      render();
    }
  });

  root.addEventListener("change", (event) => {
    const target = event.target as HTMLSelectElement;
    if (target.name === "language") {
      state.language = target.value;
      track(refreshMeta().then(render));
    } else if (target.name === "model") {
      state.model = target.value;
    } else if (target.name === "level") {
      state.level = target.value;
    }
  });

  root.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    const rowId = target.closest<HTMLElement>("[data-row-id]")?.dataset["rowId"];
    if (rowId === undefined) return;
    const ui = state.uiByRow.get(rowId);
    if (ui === undefined) return;
    if (target.name === "segments") ui.fields.segments = target.value;
    else if (target.name === "cognates") ui.fields.cognates = target.value;
    else if (target.name === "morphemes") ui.fields.morphemes = target.value;
  });

  return { state, load, idle };
};
