"""Segmentation by free-form evidence.

A cut is proposed wherever the material on either side of it occurs as
a complete word elsewhere in the corpus, the way numeral compounds
recycle their bases.
"""

from __future__ import annotations

from typing import Sequence

from .base import Boundaries, BoundarySegmenter, check_corpus, check_word


class AffixSegmenter(BoundarySegmenter):
    """Cuts where a prefix or suffix is itself a corpus word."""

    _fitted_attr = "vocabulary_"

    def fit(self, X, y=None):
        self.vocabulary_ = frozenset(check_corpus(X, require_words=True))
        return self

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        return frozenset(
            p
            for p in range(1, len(word))
            if word[:p] in self.vocabulary_ or word[p:] in self.vocabulary_
        )
