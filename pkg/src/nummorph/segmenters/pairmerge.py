"""Pair-merge subword tokenizers used as morphological segmenters.

Both models start from single segments and repeatedly merge one
adjacent pair across the whole corpus. Training stops when the number
of distinct entry types actually in use across the current corpus
segmentation falls to the target size, or when no pair occurs at least
twice. Counting in-use types (rather than a cumulative merge table)
means the vocabulary size may go down when a merge consumes both of its
parts; the per-step sizes are kept in vocab_trajectory_.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .base import Boundaries, BoundarySegmenter, Word, check_corpus, check_word

Unit = tuple[str, ...]
Pair = tuple[Unit, Unit]


def apply_merge(units: Sequence[Unit], pair: Pair) -> list[Unit]:
    """Merge every left-to-right occurrence of the pair in one pass."""
    out: list[Unit] = []
    i = 0
    while i < len(units):
        if i + 1 < len(units) and (units[i], units[i + 1]) == pair:
            out.append(units[i] + units[i + 1])
            i += 2
        else:
            out.append(units[i])
            i += 1
    return out


def _in_use(segmentation: list[list[Unit]]) -> int:
    return len({unit for units in segmentation for unit in units})


def _boundaries(units: Sequence[Unit]) -> Boundaries:
    positions = set()
    consumed = 0
    for unit in units[:-1]:
        consumed += len(unit)
        positions.add(consumed)
    return frozenset(positions)


class _PairMergeSegmenter(BoundarySegmenter):
    """Shared training loop; subclasses rank the candidate pairs."""

    _fitted_attr = "merges_"

    def __init__(self, target_size: int | None = None):
        self.target_size = target_size

    def _pair_score(self, pair: Pair, pair_counts: Counter, unit_counts: Counter) -> float:
        raise NotImplementedError

    def fit(self, X, y=None):
        if self.target_size is not None and self.target_size < 1:
            raise ValueError(f"target_size must be >= 1, got {self.target_size}")
        words = check_corpus(X, require_words=True)
        segmentation = [[(segment,) for segment in word] for word in words]
        self.singles_ = frozenset((segment,) for word in words for segment in word)

        merges: list[Pair] = []
        trajectory = [_in_use(segmentation)]
        while self.target_size is None or trajectory[-1] > self.target_size:
            unit_counts: Counter = Counter()
            pair_counts: Counter = Counter()
            for units in segmentation:
                unit_counts.update(units)
                pair_counts.update(zip(units, units[1:]))
            eligible = [pair for pair, count in pair_counts.items() if count >= 2]
            if not eligible:
                break
            best = min(
                eligible,
                key=lambda pair: (-self._pair_score(pair, pair_counts, unit_counts), pair),
            )
            merges.append(best)
            segmentation = [apply_merge(units, best) for units in segmentation]
            trajectory.append(_in_use(segmentation))

        self.merges_ = tuple(merges)
        self.vocab_trajectory_ = tuple(trajectory)
        self.vocabulary_ = frozenset(
            unit for units in segmentation for unit in units
        ) | self.singles_
        return self


class BpeSegmenter(_PairMergeSegmenter):
    """Merges the most frequent pair; ties go to the smaller pair.

    Segments new words by replaying the learned merges in order.
    """

    def _pair_score(self, pair: Pair, pair_counts: Counter, unit_counts: Counter) -> float:
        return float(pair_counts[pair])

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        units: list[Unit] = [(segment,) for segment in word]
        for pair in self.merges_:
            units = apply_merge(units, pair)
        return _boundaries(units)


class WordPieceSegmenter(_PairMergeSegmenter):
    """Merges the pair maximizing count(ab) / (count(a) * count(b)).

    Segments new words greedily, always taking the longest vocabulary
    entry that matches at the current position. Single segments are
    always in the vocabulary; unseen segments pass through as
    single-segment pieces.
    """

    def _pair_score(self, pair: Pair, pair_counts: Counter, unit_counts: Counter) -> float:
        return pair_counts[pair] / (unit_counts[pair[0]] * unit_counts[pair[1]])

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        longest = max(len(unit) for unit in self.vocabulary_)
        units: list[Unit] = []
        i = 0
        while i < len(word):
            for length in range(min(longest, len(word) - i), 0, -1):
                candidate = word[i : i + length]
                if candidate in self.vocabulary_:
                    units.append(candidate)
                    i += length
                    break
            else:
                units.append((word[i],))
                i += 1
        return _boundaries(units)
