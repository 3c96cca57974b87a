/** Typed fetch client for the annotation service JSON API. */

export interface Row {
  id: string;
  language: string;
  concept: string;
  value: number;
  form: string;
  segments: string;
  cognates: number[];
  morphemes: string[];
  n_morphs: number;
  surface: string[];
  underlying: string[];
}

export interface RowsPayload {
  rows: Row[];
  languages: string[];
  dirty: boolean;
}

export interface Violation {
  kind: string;
  severity: "error" | "warning";
  rows: string[];
  message: string;
}

export interface ValidationPayload {
  violations: Violation[];
  errors: number;
  warnings: number;
}

export interface MatrixColumn {
  kind: "anchor" | "insertion";
  position: number;
}

export interface CognateClassView {
  language: string;
  cognate_id: number;
  gloss: string;
  underlying: string[];
  allomorphs: string[][];
  occurrences: { row_id: string; morph_index: number }[];
  columns: MatrixColumn[];
  rows: (string | null)[][];
}

export interface CognatesPayload {
  classes: CognateClassView[];
}

export interface LanguageStatsView {
  language: string;
  n_rows: number;
  n_values: number;
  morphs_surface: number;
  morphemes_underlying: number;
  weighted_tokens: number;
  expressivity_surface: number;
  expressivity_underlying: number;
  opacity: number;
  avg_code_length: number;
  ttr: number;
  entropy: number;
}

export interface LanguageStatsError {
  language: string;
  error: string;
}

export interface StatsPayload {
  languages: (LanguageStatsView | LanguageStatsError)[];
}

export interface Suggestion {
  row_id: string;
  model: string;
  level: string;
  boundaries: number[];
  segments: string;
  n_morphs: number;
  current_segments: string;
}

export interface SuggestRequest {
  row_id: string;
  model?: string;
  level?: string;
  target_size?: number | string;
  params?: Record<string, unknown>;
}

/** Fields accepted by PUT /api/row/{id}; string fields are re-parsed server-side. */
export interface RowEdit {
  segments?: string;
  cognates?: string;
  morphemes?: string;
  form?: string;
  concept?: string;
  value?: number | string;
}

export interface SaveResult {
  path: string;
  rows: number;
}

export interface UndoResult {
  rows: number;
  undo_depth: number;
}

/** Non-2xx response, with the server's detail message when present. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

const asQuery = (language?: string): string =>
  language ? `?language=${encodeURIComponent(language)}` : "";

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await globalThis.fetch(this.base + path, init);
    if (!response.ok) {
      let detail = `HTTP ${response.status}`;
      try {
        const body: unknown = await response.json();
        if (
          typeof body === "object" &&
          body !== null &&
          typeof (body as { detail?: unknown }).detail === "string"
        ) {
          detail = (body as { detail: string }).detail;
        }
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
  }

  rows(language?: string): Promise<RowsPayload> {
    return this.request(`/api/rows${asQuery(language)}`);
  }

  row(id: string): Promise<Row> {
    return this.request(`/api/row/${encodeURIComponent(id)}`);
  }

  editRow(id: string, fields: RowEdit): Promise<Row> {
    return this.request(`/api/row/${encodeURIComponent(id)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(fields),
    });
  }

  validate(): Promise<ValidationPayload> {
    return this.request("/api/validate");
  }

  cognates(language?: string): Promise<CognatesPayload> {
    return this.request(`/api/cognates${asQuery(language)}`);
  }

  stats(): Promise<StatsPayload> {
    return this.request("/api/stats");
  }

  suggest(req: SuggestRequest): Promise<Suggestion> {
    return this.post("/api/suggest", req);
  }

  undo(): Promise<UndoResult> {
    return this.post("/api/undo");
  }

  save(): Promise<SaveResult> {
    return this.post("/api/save");
  }
}
