"""Unigram vocabulary pruning as a morphological segmenter.

The vocabulary is seeded with every contiguous subsequence of the
corpus words up to a maximum length. Each round runs a few hard-EM
iterations (best-path segmentation, then maximum-likelihood
re-estimation) and prunes the multi-segment entries whose removal
costs the least corpus likelihood, until the entry count reaches the
target. Single segments are never pruned; a target below their count
is clamped with a warning. Entry counts per round are kept in
vocab_trajectory_.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from typing import Iterable, Sequence

from .base import Boundaries, BoundarySegmenter, Word, check_corpus, check_word

Path = tuple[Word, ...]


def _better(a: tuple[float, int, Path], b: tuple[float, int, Path] | None) -> bool:
    """Prefer higher probability, then fewer pieces, then smaller pieces."""
    if b is None:
        return True
    if a[0] != b[0]:
        return a[0] > b[0]
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[2] < b[2]


def best_path(
    word: Word,
    probabilities: dict[Word, float],
    max_length: int,
    banned: Word | None = None,
) -> tuple[float, Path]:
    """Highest-probability segmentation of a word.

    Any single segment may always be used as a piece (at probability 0
    if unknown), so every word has a path.
    """
    n = len(word)
    best: list[tuple[float, int, Path] | None] = [None] * (n + 1)
    best[0] = (0.0, 0, ())
    for end in range(1, n + 1):
        for start in range(max(0, end - max_length), end):
            if best[start] is None:
                continue
            piece = word[start:end]
            if piece == banned:
                continue
            if len(piece) > 1 and piece not in probabilities:
                continue
            p = probabilities.get(piece, 0.0)
            log_p = math.log2(p) if p > 0 else -math.inf
            prev = best[start]
            candidate = (prev[0] + log_p, prev[1] + 1, prev[2] + (piece,))
            if _better(candidate, best[end]):
                best[end] = candidate
    log_p, _, path = best[n]
    return log_p, path


class UnigramSegmenter(BoundarySegmenter):
    """Prunes a seeded subsequence vocabulary down to a target size.

    Parameters:
        target_size: entry count to prune down to; None disables
            pruning (EM only over the full seed vocabulary).
        max_entry_length: longest seeded subsequence.
        prune_fraction: fraction of multi-segment entries dropped per
            round (at least one).
        em_iterations: hard-EM iterations per round.
    """

    _fitted_attr = "probabilities_"

    def __init__(
        self,
        target_size: int | None = None,
        max_entry_length: int = 6,
        prune_fraction: float = 0.2,
        em_iterations: int = 2,
    ):
        self.target_size = target_size
        self.max_entry_length = max_entry_length
        self.prune_fraction = prune_fraction
        self.em_iterations = em_iterations

    def _seed(self, words: list[Word]) -> Counter:
        seeds: Counter = Counter()
        for word in words:
            n = len(word)
            for start in range(n):
                for end in range(start + 1, min(start + self.max_entry_length, n) + 1):
                    seeds[word[start:end]] += 1
        return seeds

    def _em(self, words: list[Word], probabilities: dict[Word, float]) -> dict[Word, float]:
        for _ in range(self.em_iterations):
            counts: Counter = Counter()
            for word in words:
                _, path = best_path(word, probabilities, self.max_entry_length)
                counts.update(path)
            total = sum(counts.values())
            probabilities = {e: counts.get(e, 0) / total for e in probabilities}
        return probabilities

    def _losses(
        self, words: list[Word], probabilities: dict[Word, float], entries: Iterable[Word]
    ) -> dict[Word, float]:
        """Corpus log-likelihood drop from removing each entry alone."""
        paths = [best_path(w, probabilities, self.max_entry_length) for w in words]
        users: dict[Word, list[int]] = {}
        for i, (_, path) in enumerate(paths):
            for piece in set(path):
                users.setdefault(piece, []).append(i)
        losses: dict[Word, float] = {}
        for entry in entries:
            loss = 0.0
            for i in users.get(entry, ()):
                with_entry = paths[i][0]
                without, _ = best_path(
                    words[i], probabilities, self.max_entry_length, banned=entry
                )
                if math.isinf(with_entry) and math.isinf(without):
                    continue
                loss += with_entry - without
            losses[entry] = loss
        return losses

    def fit(self, X, y=None):
        if self.target_size is not None and self.target_size < 1:
            raise ValueError(f"target_size must be >= 1, got {self.target_size}")
        words = check_corpus(X, require_words=True)
        self.singles_ = frozenset((segment,) for word in words for segment in word)

        seeds = self._seed(words)
        total = sum(seeds.values())
        probabilities = {entry: count / total for entry, count in seeds.items()}

        target = self.target_size
        if target is not None and target < len(self.singles_):
            warnings.warn(
                f"target_size {target} is below the {len(self.singles_)} single "
                f"segments; clamping",
                stacklevel=2,
            )
            target = len(self.singles_)

        trajectory = [len(probabilities)]
        while True:
            probabilities = self._em(words, probabilities)
            if target is None or len(probabilities) <= target:
                break
            multi = [e for e in probabilities if len(e) > 1]
            if not multi:
                break
            n_drop = max(1, int(self.prune_fraction * len(multi)))
            n_drop = min(n_drop, len(probabilities) - target)
            losses = self._losses(words, probabilities, multi)
            for entry in sorted(multi, key=lambda e: (losses[e], e))[:n_drop]:
                del probabilities[entry]
            trajectory.append(len(probabilities))

        self.probabilities_ = probabilities
        self.vocab_trajectory_ = tuple(trajectory)
        return self

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        _, path = best_path(word, self.probabilities_, self.max_entry_length)
        positions = set()
        consumed = 0
        for piece in path[:-1]:
            consumed += len(piece)
            positions.add(consumed)
        return frozenset(positions)
