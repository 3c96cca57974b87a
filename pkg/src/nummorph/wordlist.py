"""Annotated wordlists for numeral systems.

A wordlist row holds one numeral form segmented into morphs. Each sound
token carries a surface and an underlying segment; the two sides may
differ, and either side may be a gap. Tokens are written ``a`` (both
sides equal), ``a/b`` (surface a, underlying b), ``a/-`` (surface only),
or ``-/b`` (underlying only). Morphs are separated by ``+`` and every
morph is paired with a language-internal cognate ID and a gloss.
"""

from __future__ import annotations

import csv
import io
import unicodedata
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Iterator

GAP = "-"
GAP_ESCAPE = "\\-"

COLUMNS = (
    "ID",
    "LANGUAGE",
    "CONCEPT",
    "VALUE",
    "FORM",
    "SEGMENTS",
    "COGNATES",
    "MORPHEMES",
)

SURFACE = "surface"
UNDERLYING = "underlying"
LEVELS = (SURFACE, UNDERLYING)

_FORBIDDEN = set("+/")


class WordlistError(Exception):
    """Base class for wordlist data errors."""


class ParseError(WordlistError):
    """Malformed wordlist text. Carries the row and token position."""

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"token {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


def _check_segment(segment: str, column: int | None) -> str:
    if not segment:
        raise ParseError("empty segment", column=column)
    if any(ch.isspace() for ch in segment) or _FORBIDDEN & set(segment):
        raise ParseError(f"segment {segment!r} contains whitespace, '+' or '/'", column=column)
    return unicodedata.normalize("NFC", segment)


@dataclass(frozen=True)
class SoundToken:
    """One aligned sound position: a surface and an underlying segment.

    Either side may be None (a gap), but not both. A plain token has
    identical sides.
    """

    surface: str | None
    underlying: str | None

    def __post_init__(self):
        if self.surface is None and self.underlying is None:
            raise ValueError("token is a gap on both sides")
        for side, value in ((SURFACE, self.surface), (UNDERLYING, self.underlying)):
            if value is None:
                continue
            object.__setattr__(self, side, _check_segment(value, None))

    @property
    def is_plain(self) -> bool:
        return self.surface == self.underlying


@dataclass(frozen=True)
class Morph:
    """A morph: a non-empty token sequence with at least one non-gap side."""

    tokens: tuple[SoundToken, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError("morph has no tokens")
        if not self.surface and not self.underlying:
            raise ValueError("morph is empty on both levels")

    @property
    def surface(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens if t.surface is not None)

    @property
    def underlying(self) -> tuple[str, ...]:
        return tuple(t.underlying for t in self.tokens if t.underlying is not None)

    def projection(self, level: str) -> tuple[str, ...]:
        if level not in LEVELS:
            raise ValueError(f"unknown level {level!r}, expected one of {LEVELS}")
        return self.surface if level == SURFACE else self.underlying


def surface_form(morph: Morph) -> tuple[str, ...]:
    """Gap-stripped surface segments of a morph."""
    return morph.surface


def underlying_form(morph: Morph) -> tuple[str, ...]:
    """Gap-stripped underlying segments of a morph."""
    return morph.underlying


@dataclass(frozen=True)
class WordForm:
    """One wordlist row: a numeral form with its morphological analysis.

    morphs, cognates, and glosses are parallel sequences; validate()
    reports rows where the lengths disagree.
    """

    id: str
    language: str
    concept: str
    value: int
    form: str
    morphs: tuple[Morph, ...]
    cognates: tuple[int, ...]
    glosses: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "morphs", tuple(self.morphs))
        object.__setattr__(self, "cognates", tuple(self.cognates))
        object.__setattr__(self, "glosses", tuple(self.glosses))

    @property
    def tokens(self) -> tuple[SoundToken, ...]:
        return tuple(t for m in self.morphs for t in m.tokens)


@dataclass(frozen=True)
class Wordlist:
    """An immutable collection of rows with per-language access."""

    rows: tuple[WordForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    def __iter__(self) -> Iterator[WordForm]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @cached_property
    def languages(self) -> tuple[str, ...]:
        seen = dict.fromkeys(row.language for row in self.rows)
        return tuple(seen)

    @cached_property
    def by_language(self) -> dict[str, tuple[WordForm, ...]]:
        grouped: dict[str, list[WordForm]] = {}
        for row in self.rows:
            grouped.setdefault(row.language, []).append(row)
        return {lang: tuple(rows) for lang, rows in grouped.items()}

    @cached_property
    def by_id(self) -> dict[str, WordForm]:
        index: dict[str, WordForm] = {}
        for row in self.rows:
            index.setdefault(row.id, row)
        return index

    def replace_row(self, row: WordForm) -> "Wordlist":
        """Return a new wordlist with the row of the same ID swapped out."""
        if row.id not in self.by_id:
            raise KeyError(row.id)
        return Wordlist(tuple(row if r.id == row.id else r for r in self.rows))


# ---------------------------------------------------------------------------
# token and segments text


def _parse_side(text: str, column: int | None) -> str | None:
    if text == GAP:
        return None
    if text == GAP_ESCAPE:
        return GAP
    return _check_segment(text, column)


def _serialize_side(segment: str | None) -> str:
    if segment is None:
        return GAP
    if segment == GAP:
        return GAP_ESCAPE
    return segment


def parse_token(text: str, column: int | None = None) -> SoundToken:
    """Parse one token, e.g. ``a``, ``a/b``, ``s/-`` or ``-/d``."""
    parts = text.split("/")
    if len(parts) == 1:
        side = _parse_side(parts[0], column)
        if side is None:
            raise ParseError("token is a gap on both sides", column=column)
        return SoundToken(side, side)
    if len(parts) == 2:
        surface = _parse_side(parts[0], column)
        underlying = _parse_side(parts[1], column)
        if surface is None and underlying is None:
            raise ParseError("token is a gap on both sides", column=column)
        return SoundToken(surface, underlying)
    raise ParseError(f"token {text!r} has more than one '/'", column=column)


def serialize_token(token: SoundToken) -> str:
    if token.is_plain:
        return _serialize_side(token.surface)
    return f"{_serialize_side(token.surface)}/{_serialize_side(token.underlying)}"


def parse_segments(text: str) -> tuple[Morph, ...]:
    """Parse a SEGMENTS string into morphs, split at ``+`` tokens."""
    pieces = text.split()
    if not pieces:
        raise ParseError("no segments")
    morphs: list[Morph] = []
    current: list[SoundToken] = []
    for column, piece in enumerate(pieces, start=1):
        if piece == "+":
            if not current:
                raise ParseError("empty morph before '+'", column=column)
            morphs.append(Morph(tuple(current)))
            current = []
        else:
            try:
                current.append(parse_token(piece, column=column))
            except ValueError as err:
                raise ParseError(str(err), column=column) from err
    if not current:
        raise ParseError("empty morph at end", column=len(pieces))
    morphs.append(Morph(tuple(current)))
    return tuple(morphs)


def serialize_segments(morphs: Iterable[Morph]) -> str:
    return " + ".join(" ".join(serialize_token(t) for t in m.tokens) for m in morphs)


# ---------------------------------------------------------------------------
# file I/O


def _read_rows(source: str | Path | IO[str], delimiter: str) -> Iterator[tuple[int, list[str]]]:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as handle:
            yield from enumerate(csv.reader(handle, delimiter=delimiter), start=1)
    else:
        yield from enumerate(csv.reader(source, delimiter=delimiter), start=1)


def parse_wordlist(source: str | Path | IO[str], delimiter: str = "\t") -> Wordlist:
    """Read a wordlist from a delimited UTF-8 file or file-like object.

    Raises ParseError with the offending line number for missing columns,
    malformed values, mismatched morph/cognate/gloss counts, and
    duplicate row IDs.
    """
    reader = _read_rows(source, delimiter)
    try:
        _, header = next(reader)
    except StopIteration:
        raise ParseError("empty file, expected a header line") from None
    missing = [c for c in COLUMNS if c not in header]
    if missing:
        raise ParseError(f"missing columns: {', '.join(missing)}", row=1)
    index = {name: header.index(name) for name in COLUMNS}

    rows: list[WordForm] = []
    seen_ids: set[str] = set()
    for lineno, record in reader:
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) < len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(record)}", row=lineno)
        cell = {name: unicodedata.normalize("NFC", record[i].strip()) for name, i in index.items()}
        row_id = cell["ID"]
        if not row_id:
            raise ParseError("empty ID", row=lineno)
        if row_id in seen_ids:
            raise ParseError(f"duplicate row ID {row_id!r}", row=lineno)
        seen_ids.add(row_id)
        try:
            value = int(cell["VALUE"])
        except ValueError:
            raise ParseError(f"VALUE {cell['VALUE']!r} is not an integer", row=lineno) from None
        try:
            morphs = parse_segments(cell["SEGMENTS"])
        except ParseError as err:
            raise ParseError(str(err), row=lineno) from err
        try:
            cognates = tuple(int(c) for c in cell["COGNATES"].split())
        except ValueError:
            raise ParseError(f"COGNATES {cell['COGNATES']!r} must be integers", row=lineno) from None
        glosses = tuple(cell["MORPHEMES"].split())
        if not (len(morphs) == len(cognates) == len(glosses)):
            raise ParseError(
                f"{len(morphs)} morphs, {len(cognates)} cognate IDs, {len(glosses)} glosses",
                row=lineno,
            )
        rows.append(
            WordForm(
                id=row_id,
                language=cell["LANGUAGE"],
                concept=cell["CONCEPT"],
                value=value,
                form=cell["FORM"],
                morphs=morphs,
                cognates=cognates,
                glosses=glosses,
            )
        )
    return Wordlist(tuple(rows))


def serialize_wordlist(
    wordlist: Wordlist, dest: str | Path | IO[str] | None = None, delimiter: str = "\t"
) -> str:
    """Write a wordlist back to delimited text; returns the text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in wordlist:
        writer.writerow(
            [
                row.id,
                row.language,
                row.concept,
                str(row.value),
                row.form,
                serialize_segments(row.morphs),
                " ".join(str(c) for c in row.cognates),
                " ".join(row.glosses),
            ]
        )
    text = buffer.getvalue()
    if dest is not None:
        if isinstance(dest, (str, Path)):
            Path(dest).write_text(text, encoding="utf-8")
        else:
            dest.write(text)
    return text


# ---------------------------------------------------------------------------
# validation

ERROR = "error"
WARNING = "warning"

INCONSISTENT_UNDERLYING = "inconsistent-underlying"
INCONSISTENT_GLOSS = "inconsistent-gloss"
LENGTH_MISMATCH = "length-mismatch"
BAD_COGNATE_ID = "bad-cognate-id"
EMPTY_GLOSS = "empty-gloss"
DUPLICATE_ID = "duplicate-id"
VALUE_COVERAGE = "value-coverage"

EXPECTED_VALUES = frozenset(range(1, 41))


@dataclass(frozen=True)
class Violation:
    """One validation finding, with the rows it implicates."""

    kind: str
    severity: str
    rows: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        rows = f" [{', '.join(self.rows)}]" if self.rows else ""
        return f"{self.severity}: {self.kind}: {self.message}{rows}"


def errors(violations: Iterable[Violation]) -> list[Violation]:
    """Error-severity violations only."""
    return [v for v in violations if v.severity == ERROR]


def validate(wordlist: Wordlist) -> list[Violation]:
    """Check structural and annotation consistency.

    Error kinds: per-row morph/cognate/gloss count mismatches, cognate
    IDs < 1, empty glosses, duplicate row IDs, cognate IDs whose morphs
    disagree on the underlying form, and cognate IDs with more than one
    gloss. Warning kind: a language whose values do not cover 1-40.
    """
    violations: list[Violation] = []
    consistent_rows: list[WordForm] = []

    seen: dict[str, str] = {}
    for row in wordlist:
        if row.id in seen:
            violations.append(
                Violation(DUPLICATE_ID, ERROR, (row.id,), f"row ID {row.id!r} used more than once")
            )
        seen[row.id] = row.id

    for row in wordlist:
        if not (len(row.morphs) == len(row.cognates) == len(row.glosses)) or not row.morphs:
            violations.append(
                Violation(
                    LENGTH_MISMATCH,
                    ERROR,
                    (row.id,),
                    f"{len(row.morphs)} morphs, {len(row.cognates)} cognate IDs, "
                    f"{len(row.glosses)} glosses",
                )
            )
            continue
        ok = True
        for cid in row.cognates:
            if cid < 1:
                violations.append(
                    Violation(BAD_COGNATE_ID, ERROR, (row.id,), f"cognate ID {cid} is not positive")
                )
                ok = False
        for gloss in row.glosses:
            if not gloss:
                violations.append(Violation(EMPTY_GLOSS, ERROR, (row.id,), "empty gloss"))
                ok = False
        if ok:
            consistent_rows.append(row)

    underlying_by_class: dict[tuple[str, int], dict[tuple[str, ...], list[str]]] = {}
    gloss_by_class: dict[tuple[str, int], dict[str, list[str]]] = {}
    for row in consistent_rows:
        for morph, cid, gloss in zip(row.morphs, row.cognates, row.glosses):
            key = (row.language, cid)
            underlying_by_class.setdefault(key, {}).setdefault(morph.underlying, []).append(row.id)
            gloss_by_class.setdefault(key, {}).setdefault(gloss, []).append(row.id)

    for (language, cid), forms in sorted(underlying_by_class.items()):
        if len(forms) > 1:
            shapes = "; ".join(" ".join(f) or "(empty)" for f in forms)
            rows = tuple(dict.fromkeys(r for ids in forms.values() for r in ids))
            violations.append(
                Violation(
                    INCONSISTENT_UNDERLYING,
                    ERROR,
                    rows,
                    f"{language} cognate {cid} has underlying forms {shapes}",
                )
            )
    for (language, cid), glosses in sorted(gloss_by_class.items()):
        if len(glosses) > 1:
            rows = tuple(dict.fromkeys(r for ids in glosses.values() for r in ids))
            violations.append(
                Violation(
                    INCONSISTENT_GLOSS,
                    ERROR,
                    rows,
                    f"{language} cognate {cid} has glosses {', '.join(sorted(glosses))}",
                )
            )

    for language, rows in wordlist.by_language.items():
        values = {row.value for row in rows}
        missing = EXPECTED_VALUES - values
        if missing:
            violations.append(
                Violation(
                    VALUE_COVERAGE,
                    WARNING,
                    tuple(),
                    f"{language} covers {len(values & EXPECTED_VALUES)} of the values 1-40",
                )
            )
    return violations
