"""Segmentation by positional predictability in a prefix tree.

A prefix tree over the corpus word types stores, at every node, how
often each continuation (including an end-of-word symbol) follows the
prefix. A cut is proposed where the continuation distribution is hard
to predict: high variety (distinct continuations), high entropy, or a
weak modal continuation (maxdrop = 1 - max P). Scores can be read left
to right (successor), right to left (predecessor), or both.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .base import Boundaries, BoundarySegmenter, Word, check_corpus, check_word

SUCCESSOR = "successor"
PREDECESSOR = "predecessor"
BOTH = "both"
MODES = (SUCCESSOR, PREDECESSOR, BOTH)

VARIETY = "variety"
ENTROPY = "entropy"
MAXDROP = "maxdrop"
STATISTICS = (VARIETY, ENTROPY, MAXDROP)

UNION = "union"
SUM = "sum"
MAX = "max"
COMBINES = (UNION, SUM, MAX)


class _End:
    """End-of-word symbol; takes part in every continuation distribution."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "<end>"


END = _End()


def statistic_value(counts: Mapping, statistic: str) -> float:
    """Evaluate one continuation distribution; empty distributions score 0."""
    total = sum(counts.values())
    if total == 0:
        return 0.0
    if statistic == VARIETY:
        return float(len(counts))
    if statistic == ENTROPY:
        return -sum((c / total) * math.log2(c / total) for c in counts.values())
    if statistic == MAXDROP:
        return 1.0 - max(counts.values()) / total
    raise ValueError(f"unknown statistic {statistic!r}, expected one of {STATISTICS}")


class _Node:
    __slots__ = ("children", "end", "total")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.end = 0
        self.total = 0


class PrefixTree:
    """Prefix tree with per-node continuation counts over word types."""

    def __init__(self, words: Iterable[Word] = ()):
        self._root = _Node()
        for word in words:
            self.add(word)

    def add(self, word: Sequence[str]) -> None:
        node = self._root
        node.total += 1
        for segment in word:
            node = node.children.setdefault(segment, _Node())
            node.total += 1
        node.end += 1

    def _node(self, prefix: Sequence[str]) -> _Node | None:
        node = self._root
        for segment in prefix:
            node = node.children.get(segment)
            if node is None:
                return None
        return node

    def continuations(self, prefix: Sequence[str]) -> dict:
        """Continuation counts after a prefix; empty for unseen prefixes."""
        node = self._node(prefix)
        if node is None:
            return {}
        counts: dict = {segment: child.total for segment, child in node.children.items()}
        if node.end:
            counts[END] = node.end
        return counts

    def score(self, prefix: Sequence[str], statistic: str) -> float:
        return statistic_value(self.continuations(prefix), statistic)


def peak_positions(scores: Sequence[float], threshold: float) -> set[int]:
    """Cut positions where the score clears the threshold at a local max.

    scores[i] is the score of cut position i+1. A position is a local
    maximum when it is >= each existing neighbor.
    """
    positions = set()
    last = len(scores) - 1
    for i, score in enumerate(scores):
        if score < threshold:
            continue
        if i > 0 and score < scores[i - 1]:
            continue
        if i < last and score < scores[i + 1]:
            continue
        positions.add(i + 1)
    return positions


class PredictabilitySegmenter(BoundarySegmenter):
    """Prefix-tree predictability segmenter.

    Parameters:
        mode: successor, predecessor, or both.
        statistic: variety, entropy, or maxdrop.
        threshold: minimum score for a cut; None learns it in fit as the
            mean positive score over the training corpus (per direction,
            and for the combined stream when combine is sum or max).
        combine: how mode="both" merges directions. union takes the
            union of the per-direction boundary sets; sum and max merge
            the score streams pointwise before peak picking.
    """

    _fitted_attr = "threshold_"

    def __init__(
        self,
        mode: str = SUCCESSOR,
        statistic: str = ENTROPY,
        threshold: float | None = None,
        combine: str = UNION,
    ):
        self.mode = mode
        self.statistic = statistic
        self.threshold = threshold
        self.combine = combine

    def _check_params(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.statistic not in STATISTICS:
            raise ValueError(
                f"unknown statistic {self.statistic!r}, expected one of {STATISTICS}"
            )
        if self.combine not in COMBINES:
            raise ValueError(f"unknown combine {self.combine!r}, expected one of {COMBINES}")

    def fit(self, X, y=None):
        self._check_params()
        words = check_corpus(X, require_words=True)
        types = list(dict.fromkeys(words))
        self.forward_ = PrefixTree(types) if self.mode in (SUCCESSOR, BOTH) else None
        self.backward_ = (
            PrefixTree(tuple(reversed(w)) for w in types)
            if self.mode in (PREDECESSOR, BOTH)
            else None
        )
        self.threshold_ = self._learn_thresholds(types)
        return self

    # -- scoring ---------------------------------------------------------

    def _direction_scores(self, word: Word, direction: str) -> list[float]:
        n = len(word)
        if direction == SUCCESSOR:
            return [self.forward_.score(word[:p], self.statistic) for p in range(1, n)]
        return [
            self.backward_.score(tuple(reversed(word[p:])), self.statistic)
            for p in range(1, n)
        ]

    def scores(self, word: Sequence[str]) -> dict[str, list[float]]:
        """Per-direction (and combined) score streams for one word."""
        word = check_word(word)
        out: dict[str, list[float]] = {}
        if self.forward_ is not None:
            out[SUCCESSOR] = self._direction_scores(word, SUCCESSOR)
        if self.backward_ is not None:
            out[PREDECESSOR] = self._direction_scores(word, PREDECESSOR)
        if self.mode == BOTH and self.combine in (SUM, MAX):
            merge = sum if self.combine == SUM else max
            out["combined"] = [
                merge((f, b)) for f, b in zip(out[SUCCESSOR], out[PREDECESSOR])
            ]
        return out

    def _learn_thresholds(self, types: list[Word]) -> dict[str, float]:
        streams: dict[str, list[float]] = {}
        for word in types:
            for name, values in self.scores(word).items():
                streams.setdefault(name, []).extend(values)
        thresholds = {}
        for name, values in streams.items():
            if self.threshold is not None:
                thresholds[name] = self.threshold
                continue
            positive = [v for v in values if v > 0]
            thresholds[name] = sum(positive) / len(positive) if positive else math.inf
        return thresholds

    # -- prediction ------------------------------------------------------

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        if len(word) < 2:
            return frozenset()
        streams = self.scores(word)
        if self.mode == SUCCESSOR:
            return frozenset(peak_positions(streams[SUCCESSOR], self.threshold_[SUCCESSOR]))
        if self.mode == PREDECESSOR:
            return frozenset(
                peak_positions(streams[PREDECESSOR], self.threshold_[PREDECESSOR])
            )
        if self.combine == UNION:
            return frozenset(
                peak_positions(streams[SUCCESSOR], self.threshold_[SUCCESSOR])
                | peak_positions(streams[PREDECESSOR], self.threshold_[PREDECESSOR])
            )
        return frozenset(peak_positions(streams["combined"], self.threshold_["combined"]))
