"""Training corpora and gold boundaries projected from annotated rows.

A corpus word is the gap-stripped concatenation of a row's morphs at one
level (surface or underlying). Gold boundaries sit at the cumulative
lengths of the morph projections; morphs that are empty at the chosen
level contribute no boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .wordlist import LEVELS, WordForm, Wordlist

Word = tuple[str, ...]


@dataclass(frozen=True)
class TrainingCorpus:
    """Level-projected words of one language, with their row IDs."""

    language: str
    level: str
    row_ids: tuple[str, ...]
    words: tuple[Word, ...]

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)


def _check_level(level: str) -> None:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}, expected one of {LEVELS}")


def project_word(row: WordForm, level: str) -> Word:
    """The row's full form at one level, morph boundaries dropped."""
    _check_level(level)
    return tuple(s for morph in row.morphs for s in morph.projection(level))


def word_boundaries(row: WordForm, level: str) -> frozenset[int]:
    """Gold boundary positions of a row at one level."""
    _check_level(level)
    total = len(project_word(row, level))
    positions = set()
    consumed = 0
    for morph in row.morphs:
        consumed += len(morph.projection(level))
        if 0 < consumed < total:
            positions.add(consumed)
    return frozenset(positions)


def level_token_indices(row: WordForm, level: str) -> tuple[int, ...]:
    """Map level positions back to indices into the row's raw tokens."""
    _check_level(level)
    side = "surface" if level == "surface" else "underlying"
    return tuple(
        i for i, token in enumerate(row.tokens) if getattr(token, side) is not None
    )


def extract_corpus(wordlist: Wordlist, language: str, level: str) -> TrainingCorpus:
    """Project one language's rows into a training corpus.

    Raises ValueError for an unknown language, an unknown level, or a
    row whose projection at the level is entirely empty.
    """
    _check_level(level)
    rows = wordlist.by_language.get(language)
    if not rows:
        raise ValueError(f"no rows for language {language!r}")
    words = []
    for row in rows:
        word = project_word(row, level)
        if not word:
            raise ValueError(f"row {row.id} is empty at the {level} level")
        words.append(word)
    return TrainingCorpus(
        language=language,
        level=level,
        row_ids=tuple(row.id for row in rows),
        words=tuple(words),
    )


def gold_boundaries(wordlist: Wordlist, language: str, level: str) -> dict[str, frozenset[int]]:
    """Gold boundary sets per row ID for one language and level."""
    corpus = extract_corpus(wordlist, language, level)
    rows = wordlist.by_language[language]
    return {row.id: word_boundaries(row, level) for row in rows}
