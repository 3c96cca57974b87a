"""Cognate classes and alignment matrices.

Morphs sharing a cognate ID within one language form a cognate class.
Because every token already pairs a surface with an underlying segment,
the alignment of all class members falls out of the annotation itself:
each underlying position is a column, and surface material aligned to
an underlying gap goes into insertion columns anchored just before the
next underlying position (at the right edge when none follows).
"""

from __future__ import annotations

from dataclasses import dataclass

from .wordlist import GAP, Morph, Violation, Wordlist, errors, validate

ANCHOR = "anchor"
INSERTION = "insertion"


@dataclass(frozen=True)
class Occurrence:
    """One morph occurrence inside a cognate class."""

    row_id: str
    morph_index: int
    morph: Morph


@dataclass(frozen=True)
class CognateClass:
    """All morphs of one language that share a cognate ID.

    Attributes:
        underlying: the shared underlying form of every member.
        occurrences: members in row order.
    """

    language: str
    cognate_id: int
    gloss: str
    underlying: tuple[str, ...]
    occurrences: tuple[Occurrence, ...]

    @property
    def allomorphs(self) -> tuple[tuple[str, ...], ...]:
        """Distinct surface forms among the members, in first-seen order."""
        seen = dict.fromkeys(occ.morph.surface for occ in self.occurrences)
        return tuple(seen)


@dataclass(frozen=True)
class AlignmentColumn:
    """A matrix column: an underlying position or an insertion slot.

    For anchors, position is the underlying index. For insertions it is
    the underlying index the column precedes (len(underlying) for
    word-final insertions).
    """

    kind: str
    position: int


@dataclass(frozen=True)
class AlignmentMatrix:
    """Gapped surface rows, one per occurrence, under shared columns."""

    columns: tuple[AlignmentColumn, ...]
    rows: tuple[tuple[str | None, ...], ...]


def build_cognate_classes(wordlist: Wordlist, language: str | None = None) -> list[CognateClass]:
    """Group morphs into cognate classes, sorted by (language, cognate ID).

    Raises ValueError if validate() reports any error-severity violation,
    since classes are only well defined on consistent annotations.
    """
    bad = errors(validate(wordlist))
    if bad:
        raise ValueError(f"wordlist has {len(bad)} violations, first: {bad[0]}")
    members: dict[tuple[str, int], list[Occurrence]] = {}
    glosses: dict[tuple[str, int], str] = {}
    for row in wordlist:
        if language is not None and row.language != language:
            continue
        for index, (morph, cid, gloss) in enumerate(zip(row.morphs, row.cognates, row.glosses)):
            key = (row.language, cid)
            members.setdefault(key, []).append(Occurrence(row.id, index, morph))
            glosses[key] = gloss
    classes = []
    for (lang, cid), occurrences in sorted(members.items()):
        classes.append(
            CognateClass(
                language=lang,
                cognate_id=cid,
                gloss=glosses[(lang, cid)],
                underlying=occurrences[0].morph.underlying,
                occurrences=tuple(occurrences),
            )
        )
    return classes


def _occurrence_cells(
    morph: Morph, n_underlying: int
) -> tuple[list[str | None], dict[int, list[str]]]:
    anchors: list[str | None] = [None] * n_underlying
    insertions: dict[int, list[str]] = {}
    position = 0
    for token in morph.tokens:
        if token.underlying is None:
            insertions.setdefault(position, []).append(token.surface)
        else:
            anchors[position] = token.surface
            position += 1
    return anchors, insertions


def align_class(cognate_class: CognateClass) -> AlignmentMatrix:
    """Align all occurrences of a class into a gapped surface matrix.

    Deterministic and lossless: dropping the gaps from row i restores
    the surface form of occurrence i, and each underlying position
    appears as exactly one anchor column, in order.
    """
    n = len(cognate_class.underlying)
    per_occurrence = []
    for occ in cognate_class.occurrences:
        if occ.morph.underlying != cognate_class.underlying:
            raise ValueError(
                f"occurrence {occ.row_id}:{occ.morph_index} does not match the "
                f"class underlying form"
            )
        per_occurrence.append(_occurrence_cells(occ.morph, n))

    slot_width = {
        slot: max((len(ins.get(slot, ())) for _, ins in per_occurrence), default=0)
        for slot in range(n + 1)
    }
    columns: list[AlignmentColumn] = []
    for position in range(n + 1):
        columns.extend(AlignmentColumn(INSERTION, position) for _ in range(slot_width[position]))
        if position < n:
            columns.append(AlignmentColumn(ANCHOR, position))

    rows = []
    for anchors, insertions in per_occurrence:
        cells: list[str | None] = []
        for position in range(n + 1):
            slot = insertions.get(position, [])
            cells.extend(slot[j] if j < len(slot) else None for j in range(slot_width[position]))
            if position < n:
                cells.append(anchors[position])
        rows.append(tuple(cells))
    return AlignmentMatrix(columns=tuple(columns), rows=tuple(rows))


def format_class(cognate_class: CognateClass, matrix: AlignmentMatrix | None = None) -> str:
    """Render one class as a plain-text block with its alignment rows."""
    if matrix is None:
        matrix = align_class(cognate_class)
    header_cells = [
        cognate_class.underlying[c.position] if c.kind == ANCHOR else "."
        for c in matrix.columns
    ]
    labels = [f"{occ.row_id}:{occ.morph_index}" for occ in cognate_class.occurrences]
    label_width = max((len(l) for l in labels), default=0)
    widths = [
        max(len(header_cells[i]), max((len(row[i] or GAP) for row in matrix.rows), default=1))
        for i in range(len(matrix.columns))
    ]
    lines = [
        f"{cognate_class.language} cognate {cognate_class.cognate_id} "
        f"({cognate_class.gloss}), underlying "
        f"{' '.join(cognate_class.underlying) or '(empty)'}"
    ]
    if matrix.columns:
        lines.append(
            " " * label_width
            + "  "
            + " ".join(header_cells[i].ljust(widths[i]) for i in range(len(widths)))
        )
    for label, row in zip(labels, matrix.rows):
        cells = " ".join((cell or GAP).ljust(widths[i]) for i, cell in enumerate(row))
        lines.append(f"{label.ljust(label_width)}  {cells}".rstrip())
    return "\n".join(lines)
