"""Shared estimator contract for boundary segmenters.

All segmenters follow the scikit-learn convention: constructor arguments
are stored verbatim, fit(X, y=None) learns state into underscore
attributes and returns self, and get_params/set_params/clone work as
usual. X is a corpus: an iterable of words, each word a sequence of
segment strings (a TrainingCorpus works directly).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

Word = tuple[str, ...]
Boundaries = frozenset[int]


def check_word(word: Sequence[str]) -> Word:
    """Validate and normalize one word to a tuple of segment strings."""
    if isinstance(word, str):
        raise TypeError(f"word must be a sequence of segments, got the string {word!r}")
    out = tuple(word)
    if not out:
        raise ValueError("empty word")
    for segment in out:
        if not isinstance(segment, str) or not segment:
            raise ValueError(f"bad segment {segment!r}")
    return out


def check_corpus(X: Iterable[Sequence[str]], require_words: bool = False) -> list[Word]:
    """Validate and normalize a corpus to a list of words."""
    if hasattr(X, "words"):
        X = X.words
    words = [check_word(w) for w in X]
    if require_words and not words:
        raise ValueError("empty corpus")
    return words


def split_at(word: Sequence[str], boundaries: Iterable[int]) -> list[Word]:
    """Cut a word into pieces at the given boundary positions."""
    word = tuple(word)
    cuts = sorted(set(boundaries))
    if any(not 1 <= c <= len(word) - 1 for c in cuts):
        raise ValueError(f"boundary out of range for a word of {len(word)} segments")
    edges = [0, *cuts, len(word)]
    return [word[a:b] for a, b in zip(edges, edges[1:])]


class BoundarySegmenter(BaseEstimator):
    """Base class: learns from a corpus, predicts boundary positions."""

    _fitted_attr = "fitted_"

    def fit(self, X, y=None):
        raise NotImplementedError

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        raise NotImplementedError

    def predict(self, X) -> list[Boundaries]:
        """Boundary sets for each word of X."""
        check_is_fitted(self, self._fitted_attr)
        return [self.predict_word(w) for w in check_corpus(X)]

    def transform(self, X) -> list[list[Word]]:
        """Each word of X cut into its predicted pieces."""
        check_is_fitted(self, self._fitted_attr)
        return [split_at(w, self.predict_word(w)) for w in check_corpus(X)]

    def fit_predict(self, X, y=None) -> list[Boundaries]:
        return self.fit(X, y).predict(X)
