/** In-memory stand-in for the annotation service, built on responses
 * captured from the real server (test/fixtures/). Edit semantics mirror
 * the server: re-parse the field strings, reject count mismatches with
 * 409, malformed text with 422. */

import type { CognatesPayload, Row, StatsPayload, Suggestion, ValidationPayload } from "../src/api.js";
import { morphTokens, splitToken } from "../src/state.js";
import rowsFixture from "./fixtures/rows.json";
import validateFixture from "./fixtures/validate.json";
import statsFixture from "./fixtures/stats.json";
import cognatesGerman from "./fixtures/cognates_german.json";
import cognatesFrench from "./fixtures/cognates_french.json";
import suggestAffix4 from "./fixtures/suggest_affix_4.json";

export interface FakeServer {
  fetch: typeof fetch;
  rows: Row[];
  /** Log of PUT bodies, oldest first. */
  puts: { id: string; body: Record<string, unknown> }[];
  saves: number;
  /** When true every request rejects like a dropped connection. */
  failNetwork: boolean;
  rowById(id: string): Row | undefined;
}

const clone = <T>(value: T): T => JSON.parse(JSON.stringify(value)) as T;

const json = (status: number, body: unknown): Response =>
  new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });

class HttpReject {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {}
}

const parseCognates = (value: unknown): number[] => {
  const parts = typeof value === "string" ? value.split(/\s+/).filter((p) => p) : (value as unknown[]);
  const ids = parts.map((p) => Number(p));
  if (ids.some((n) => !Number.isInteger(n))) {
    throw new HttpReject(422, `cognate IDs must be integers, got ${JSON.stringify(value)}`);
  }
  return ids;
};

const parseGlosses = (value: unknown): string[] => {
  const parts = typeof value === "string" ? value.split(/\s+/).filter((p) => p) : (value as unknown[]);
  const glosses = parts.map((p) => String(p));
  if (glosses.length === 0 || glosses.some((g) => g === "")) {
    throw new HttpReject(422, "glosses must be non-empty");
  }
  return glosses;
};

const sidesOf = (segments: string): { surface: string[]; underlying: string[] } => {
  const surface: string[] = [];
  const underlying: string[] = [];
  for (const tokens of morphTokens(segments)) {
    const sides = tokens.map(splitToken);
    surface.push(
      sides
        .map((s) => s.surface)
        .filter((s): s is string => s !== null)
        .join(" "),
    );
    underlying.push(
      sides
        .map((s) => s.underlying)
        .filter((s): s is string => s !== null)
        .join(" "),
    );
  }
  return { surface, underlying };
};

export const makeFakeServer = (): FakeServer => {
  const rows: Row[] = clone(rowsFixture as { rows: Row[] }).rows;
  const undoStack: Row[][] = [];
  const languages = (rowsFixture as { languages: string[] }).languages;
  let dirty = false;

  const server: FakeServer = {
    rows,
    puts: [],
    saves: 0,
    failNetwork: false,
    rowById: (id) => rows.find((r) => r.id === id),
    fetch: (async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
      if (server.failNetwork) throw new TypeError("fetch failed");
      const url = new URL(String(input), "http://fake");
      const method = init?.method ?? "GET";
      const path = url.pathname;
      const body: unknown = init?.body ? JSON.parse(String(init.body)) : undefined;
      try {
        return route(path, method, url, body);
      } catch (err) {
        if (err instanceof HttpReject) return json(err.status, { detail: err.detail });
        throw err;
      }
    }) as typeof fetch,
  };

  const editRow = (id: string, fields: Record<string, unknown>): Response => {
    const row = rows.find((r) => r.id === id);
    if (row === undefined) throw new HttpReject(404, `unknown row '${id}'`);
    const updated: Row = { ...row };
    let touched = false;
    if ("segments" in fields) {
      const text = String(fields["segments"]);
      const morphs = morphTokens(text);
      if (morphs.length === 0) throw new HttpReject(422, "no segments");
      updated.segments = morphs.map((tokens) => tokens.join(" ")).join(" + ");
      const sides = sidesOf(text);
      updated.surface = sides.surface;
      updated.underlying = sides.underlying;
      updated.n_morphs = morphs.length;
      touched = true;
    }
    if ("cognates" in fields) {
      updated.cognates = parseCognates(fields["cognates"]);
      touched = true;
    }
    if ("morphemes" in fields) {
      updated.morphemes = parseGlosses(fields["morphemes"]);
      touched = true;
    }
    if ("form" in fields) {
      updated.form = String(fields["form"]);
      touched = true;
    }
    if (!touched) throw new HttpReject(422, "no editable fields in payload");
    if (updated.cognates.length !== updated.n_morphs) {
      throw new HttpReject(
        409,
        `row ${id}: ${updated.cognates.length} cognate IDs for ${updated.n_morphs} morphs`,
      );
    }
    if (updated.morphemes.length !== updated.n_morphs) {
      throw new HttpReject(
        409,
        `row ${id}: ${updated.morphemes.length} glosses for ${updated.n_morphs} morphs`,
      );
    }
    undoStack.push(clone(rows));
    rows[rows.indexOf(row)] = updated;
    dirty = true;
    server.puts.push({ id, body: fields });
    return json(200, updated);
  };

  const suggest = (body: Record<string, unknown>): Response => {
    const rowId = body["row_id"];
    if (!rowId) throw new HttpReject(422, "payload needs a row_id");
    const row = rows.find((r) => r.id === String(rowId));
    if (row === undefined) throw new HttpReject(404, `unknown row '${String(rowId)}'`);
    const model = String(body["model"] ?? "mdl");
    const level = String(body["level"] ?? "surface");
    const canned = suggestAffix4 as Suggestion;
    if (String(rowId) === canned.row_id && model === canned.model && level === canned.level) {
      return json(200, clone(canned));
    }
    return json(200, {
      row_id: row.id,
      model,
      level,
      boundaries: [],
      segments: row.segments,
      n_morphs: row.n_morphs,
      current_segments: row.segments,
    } satisfies Suggestion);
  };

  const route = (path: string, method: string, url: URL, body: unknown): Response => {
    if (path === "/api/rows" && method === "GET") {
      const language = url.searchParams.get("language");
      const listed = language === null ? rows : rows.filter((r) => r.language === language);
      return json(200, { rows: clone(listed), languages, dirty });
    }
    const rowMatch = /^\/api\/row\/([^/]+)$/.exec(path);
    if (rowMatch !== null) {
      const id = decodeURIComponent(rowMatch[1]!);
      if (method === "GET") {
        const row = rows.find((r) => r.id === id);
        if (row === undefined) throw new HttpReject(404, `unknown row '${id}'`);
        return json(200, clone(row));
      }
      if (method === "PUT") return editRow(id, body as Record<string, unknown>);
    }
    if (path === "/api/validate" && method === "GET") {
      return json(200, clone(validateFixture as ValidationPayload));
    }
    if (path === "/api/stats" && method === "GET") {
      return json(200, clone(statsFixture as StatsPayload));
    }
    if (path === "/api/cognates" && method === "GET") {
      const language = url.searchParams.get("language");
      const german = (cognatesGerman as CognatesPayload).classes;
      const french = (cognatesFrench as CognatesPayload).classes;
      const classes =
        language === "German" ? german : language === "French" ? french : [...german, ...french];
      return json(200, { classes: clone(classes) });
    }
    if (path === "/api/suggest" && method === "POST") {
      return suggest((body ?? {}) as Record<string, unknown>);
    }
    if (path === "/api/undo" && method === "POST") {
      const previous = undoStack.pop();
      if (previous === undefined) throw new HttpReject(409, "nothing to undo");
      rows.splice(0, rows.length, ...previous);
      dirty = true;
      return json(200, { rows: rows.length, undo_depth: undoStack.length });
    }
    if (path === "/api/save" && method === "POST") {
      server.saves += 1;
      dirty = false;
      return json(200, { path: "fake.tsv", rows: rows.length });
    }
    throw new HttpReject(404, `no route for ${method} ${path}`);
  };

  return server;
};
