"""Annotation service: a lock-guarded editing session and its JSON HTTP API.

A Session owns one wordlist and serializes every mutation behind a
re-entrant lock, while reads hand out immutable snapshots, so any number
of concurrent readers and writers observe whole edits or nothing.
"""

import dataclasses
import threading
import warnings
from collections import deque
from pathlib import Path

from .alignment import align_class, build_cognate_classes
from .corpus import extract_corpus, level_token_indices, project_word
from .evaluation import _resolve_target
from .metrics import compute_stats
from .segmenters import SUBWORD_MODELS, make_segmenter
from .wordlist import (
    LEVELS,
    Morph,
    ParseError,
    WordForm,
    Wordlist,
    WordlistError,
    errors,
    parse_segments,
    parse_wordlist,
    serialize_segments,
    serialize_wordlist,
    validate,
)

UNDO_DEPTH = 100


class EditConflictError(WordlistError):
    """An edit that would leave the row internally inconsistent."""


def row_to_dict(row: WordForm) -> dict:
    """JSON-friendly view of one row, segments in wordlist text form."""
    return {
        "id": row.id,
        "language": row.language,
        "concept": row.concept,
        "value": row.value,
        "form": row.form,
        "segments": serialize_segments(row.morphs),
        "cognates": list(row.cognates),
        "morphemes": list(row.glosses),
        "n_morphs": len(row.morphs),
        "surface": [" ".join(m.surface) for m in row.morphs],
        "underlying": [" ".join(m.underlying) for m in row.morphs],
    }


def _parse_cognates(value) -> tuple[int, ...]:
    if isinstance(value, str):
        value = value.split()
    try:
        ids = tuple(int(v) for v in value)
    except (TypeError, ValueError):
        raise ParseError(f"cognate IDs must be integers, got {value!r}") from None
    return ids


def _parse_glosses(value) -> tuple[str, ...]:
    if isinstance(value, str):
        value = value.split()
    glosses = tuple(str(v) for v in value)
    if any(not g for g in glosses):
        raise ParseError("glosses must be non-empty")
    return glosses


class Session:
    """One editable wordlist with undo history and a dirty flag.

    All mutations run under a single lock; reads work on the immutable
    snapshot current at call time.
    """

    def __init__(self, path=None, wordlist: Wordlist | None = None, delimiter: str = "\t"):
        if wordlist is None:
            if path is None:
                raise ValueError("Session needs a path or a wordlist")
            wordlist = parse_wordlist(path, delimiter=delimiter)
        self._path = Path(path) if path is not None else None
        self._delimiter = delimiter
        self._wordlist = wordlist
        self._lock = threading.RLock()
        self._undo: deque[Wordlist] = deque(maxlen=UNDO_DEPTH)
        self._dirty = False

    @property
    def wordlist(self) -> Wordlist:
        return self._wordlist

    @property
    def dirty(self) -> bool:
        return self._dirty

    # -- reads ---------------------------------------------------------

    def rows(self, language: str | None = None) -> dict:
        snapshot = self._wordlist
        rows = snapshot.rows
        if language is not None:
            rows = tuple(snapshot.by_language.get(language, ()))
        return {
            "rows": [row_to_dict(r) for r in rows],
            "languages": list(snapshot.languages),
            "dirty": self._dirty,
        }

    def row(self, row_id: str) -> dict:
        row = self._wordlist.by_id.get(row_id)
        if row is None:
            raise KeyError(row_id)
        return row_to_dict(row)

    def validation(self) -> dict:
        found = validate(self._wordlist)
        return {
            "violations": [
                {
                    "kind": v.kind,
                    "severity": v.severity,
                    "rows": list(v.rows),
                    "message": v.message,
                }
                for v in found
            ],
            "errors": len(errors(found)),
            "warnings": len(found) - len(errors(found)),
        }

    def cognates(self, language: str | None = None) -> dict:
        snapshot = self._wordlist
        classes = build_cognate_classes(snapshot, language)
        out = []
        for cls in classes:
            matrix = align_class(cls)
            out.append(
                {
                    "language": cls.language,
                    "cognate_id": cls.cognate_id,
                    "gloss": cls.gloss,
                    "underlying": list(cls.underlying),
                    "allomorphs": [list(a) for a in cls.allomorphs],
                    "occurrences": [
                        {"row_id": o.row_id, "morph_index": o.morph_index}
                        for o in cls.occurrences
                    ],
                    "columns": [
                        {"kind": c.kind, "position": c.position} for c in matrix.columns
                    ],
                    "rows": [list(r) for r in matrix.rows],
                }
            )
        return {"classes": out}

    def stats(self) -> dict:
        snapshot = self._wordlist
        per_language = []
        for language in snapshot.languages:
            try:
                stats = compute_stats(snapshot, language)
            except ValueError as exc:
                per_language.append({"language": language, "error": str(exc)})
            else:
                per_language.append(dataclasses.asdict(stats))
        return {"languages": per_language}

    def suggest(
        self,
        row_id: str,
        model: str = "mdl",
        level: str = "surface",
        target_size=None,
        params: dict | None = None,
    ) -> dict:
        """Segment one row with a freshly fitted model; never applies it."""
        snapshot = self._wordlist
        row = snapshot.by_id.get(row_id)
        if row is None:
            raise KeyError(row_id)
        if level not in LEVELS:
            raise ValueError(f"unknown level {level!r}")
        corpus = extract_corpus(snapshot, row.language, level)
        estimator = make_segmenter(model, **(params or {}))
        if model in SUBWORD_MODELS and estimator.get_params().get("target_size") is None:
            if target_size in (None, "gold"):
                resolved = _resolve_target(snapshot, row.language, level)
            else:
                resolved = int(target_size)
            estimator.set_params(target_size=resolved)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            estimator.fit(corpus.words)
            word = project_word(row, level)
            boundaries = estimator.predict([word])[0]
        raw_indices = level_token_indices(row, level)
        cuts = sorted(raw_indices[p] for p in boundaries)
        tokens = row.tokens
        morphs = []
        start = 0
        for cut in [*cuts, len(tokens)]:
            morphs.append(Morph(tuple(tokens[start:cut])))
            start = cut
        return {
            "row_id": row_id,
            "model": model,
            "level": level,
            "boundaries": [int(c) for c in cuts],
            "segments": serialize_segments(morphs),
            "n_morphs": len(morphs),
            "current_segments": serialize_segments(row.morphs),
        }

    # -- mutations -----------------------------------------------------

    def edit_row(self, row_id: str, fields: dict) -> dict:
        """Apply one row edit atomically.

        Raises KeyError for an unknown row, ParseError for malformed
        field text, and EditConflictError when the edited cognate or
        gloss count no longer matches the morph count.
        """
        with self._lock:
            current = self._wordlist
            row = current.by_id.get(row_id)
            if row is None:
                raise KeyError(row_id)
            updates: dict = {}
            if "segments" in fields:
                updates["morphs"] = parse_segments(str(fields["segments"]))
            if "cognates" in fields:
                updates["cognates"] = _parse_cognates(fields["cognates"])
            if "morphemes" in fields:
                updates["glosses"] = _parse_glosses(fields["morphemes"])
            if "form" in fields:
                updates["form"] = str(fields["form"])
            if "concept" in fields:
                updates["concept"] = str(fields["concept"])
            if "value" in fields:
                try:
                    updates["value"] = int(fields["value"])
                except (TypeError, ValueError):
                    raise ParseError(f"VALUE must be an integer, got {fields['value']!r}") from None
            if not updates:
                raise ParseError("no editable fields in payload")
            candidate = dataclasses.replace(row, **updates)
            n = len(candidate.morphs)
            if len(candidate.cognates) != n:
                raise EditConflictError(
                    f"row {row_id}: {len(candidate.cognates)} cognate IDs for {n} morphs"
                )
            if len(candidate.glosses) != n:
                raise EditConflictError(
                    f"row {row_id}: {len(candidate.glosses)} glosses for {n} morphs"
                )
            self._undo.append(current)
            self._wordlist = current.replace_row(candidate)
            self._dirty = True
            return row_to_dict(candidate)

    def undo(self) -> dict:
        """Restore the wordlist snapshot preceding the last edit."""
        with self._lock:
            if not self._undo:
                raise EditConflictError("nothing to undo")
            self._wordlist = self._undo.pop()
            self._dirty = True
            return {"rows": len(self._wordlist.rows), "undo_depth": len(self._undo)}

    def save(self) -> dict:
        """Write the current wordlist back to the session's file."""
        with self._lock:
            if self._path is None:
                raise ValueError("session has no backing file")
            serialize_wordlist(self._wordlist, dest=self._path, delimiter=self._delimiter)
            self._dirty = False
            return {"path": str(self._path), "rows": len(self._wordlist.rows)}


def create_app(session: Session, ui_dir=None):
    """Build the FastAPI app for one session.

    Endpoints are plain sync functions so the server runs them on a
    thread pool and the session lock is exercised for real. When ui_dir
    is given its static files are mounted at the web root.
    """
    from fastapi import Body, FastAPI, HTTPException

    app = FastAPI(title="nummorph annotation service")

    def guarded(call, *args, **kwargs):
        try:
            return call(*args, **kwargs)
        except KeyError as exc:
            raise HTTPException(404, f"unknown row {exc.args[0]!r}") from exc
        except EditConflictError as exc:
            raise HTTPException(409, str(exc)) from exc
        except ParseError as exc:
            raise HTTPException(422, str(exc)) from exc
        except (WordlistError, ValueError) as exc:
            raise HTTPException(422, str(exc)) from exc

    @app.get("/api/rows")
    def get_rows(language: str | None = None):
        return guarded(session.rows, language)

    @app.get("/api/row/{row_id}")
    def get_row(row_id: str):
        return guarded(session.row, row_id)

    @app.put("/api/row/{row_id}")
    def put_row(row_id: str, payload: dict = Body(...)):
        return guarded(session.edit_row, row_id, payload)

    @app.get("/api/validate")
    def get_validate():
        return guarded(session.validation)

    @app.get("/api/cognates")
    def get_cognates(language: str | None = None):
        try:
            return session.cognates(language)
        except ValueError as exc:
            # Classes are undefined while the data has hard errors.
            raise HTTPException(409, str(exc)) from exc

    @app.get("/api/stats")
    def get_stats():
        return guarded(session.stats)

    @app.post("/api/suggest")
    def post_suggest(payload: dict = Body(...)):
        row_id = payload.get("row_id")
        if not row_id:
            raise HTTPException(422, "payload needs a row_id")
        return guarded(
            session.suggest,
            str(row_id),
            model=str(payload.get("model", "mdl")),
            level=str(payload.get("level", "surface")),
            target_size=payload.get("target_size"),
            params=payload.get("params"),
        )

    @app.post("/api/save")
    def post_save():
        return guarded(session.save)

    @app.post("/api/undo")
    def post_undo():
        return guarded(session.undo)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
