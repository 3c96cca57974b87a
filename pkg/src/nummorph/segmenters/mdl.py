"""Two-part description-length segmentation.

The corpus is analyzed into morphs so that the summed cost is minimal:

    corpus cost  = sum over morph tokens of -log2(count(m) / N)
    lexicon cost = for each distinct morph, the cost of spelling it out
                   segment by segment plus an end-of-morph symbol, under
                   segment probabilities estimated from the lexicon

Training greedily re-analyzes one word at a time with recursive binary
splits, repeating passes until the total cost stops improving. Ties are
broken toward not splitting.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from typing import Sequence

from .base import Boundaries, BoundarySegmenter, Word, check_corpus, check_word

# Tolerance for cost comparisons; a split must win by more than this,
# so exact ties keep the chunk whole.
_TIE = 1e-9


def description_length(counts: Counter) -> float:
    """Total cost, in bits, of a corpus analysis given its morph counts."""
    n_tokens = sum(counts.values())
    if n_tokens == 0:
        return 0.0
    log_n = math.log2(n_tokens)
    corpus_cost = sum(c * (log_n - math.log2(c)) for c in counts.values())

    segment_counts: Counter = Counter()
    for morph in counts:
        segment_counts.update(morph)
    n_entries = len(counts)
    total = sum(segment_counts.values()) + n_entries
    log_total = math.log2(total)
    lexicon_cost = sum(c * (log_total - math.log2(c)) for c in segment_counts.values())
    lexicon_cost += n_entries * (log_total - math.log2(n_entries))
    return corpus_cost + lexicon_cost


class MdlSegmenter(BoundarySegmenter):
    """Greedy recursive-split minimizer of the two-part description length.

    Parameters:
        convergence: stop when a full pass improves the cost by less
            than this many bits.
        max_epochs: hard cap on passes over the corpus.
        shuffle_seed: None processes words in corpus order; an int
            shuffles the processing order once, reproducibly.
    """

    _fitted_attr = "analyses_"

    def __init__(
        self,
        convergence: float = 0.1,
        max_epochs: int = 20,
        shuffle_seed: int | None = None,
    ):
        self.convergence = convergence
        self.max_epochs = max_epochs
        self.shuffle_seed = shuffle_seed

    # -- cost bookkeeping --------------------------------------------------

    @staticmethod
    def _add(counts: Counter, morph: Word, weight: int) -> None:
        counts[morph] += weight
        if counts[morph] <= 0:
            del counts[morph]

    def _candidate_cost(self, counts: Counter, morphs: Sequence[Word], weight: int) -> float:
        for m in morphs:
            self._add(counts, m, weight)
        cost = description_length(counts)
        for m in morphs:
            self._add(counts, m, -weight)
        return cost

    def _split_chunk(self, chunk: Word, weight: int, counts: Counter) -> tuple[Word, ...]:
        """Best analysis of a chunk whose material is absent from counts.

        Leaves the chosen analysis added to counts.
        """
        best_cost = self._candidate_cost(counts, [chunk], weight)
        best_split = None
        for p in range(1, len(chunk)):
            cost = self._candidate_cost(counts, [chunk[:p], chunk[p:]], weight)
            if cost < best_cost - _TIE:
                best_cost, best_split = cost, p
        if best_split is None:
            self._add(counts, chunk, weight)
            return (chunk,)
        left, right = chunk[:best_split], chunk[best_split:]
        # While one half is re-analyzed the other stays in the counts
        # as a single morph.
        self._add(counts, right, weight)
        left_morphs = self._split_chunk(left, weight, counts)
        self._add(counts, right, -weight)
        right_morphs = self._split_chunk(right, weight, counts)
        return left_morphs + right_morphs

    # -- estimator API ------------------------------------------------------

    def fit(self, X, y=None):
        words = check_corpus(X, require_words=True)
        word_weights = Counter(words)
        order = list(dict.fromkeys(words))
        if self.shuffle_seed is not None:
            random.Random(self.shuffle_seed).shuffle(order)

        counts: Counter = Counter()
        analyses: dict[Word, tuple[Word, ...]] = {}
        for word in order:
            analyses[word] = (word,)
            self._add(counts, word, word_weights[word])

        previous = description_length(counts)
        for _ in range(self.max_epochs):
            for word in order:
                weight = word_weights[word]
                for morph in analyses[word]:
                    self._add(counts, morph, -weight)
                analyses[word] = self._split_chunk(word, weight, counts)
            cost = description_length(counts)
            if previous - cost < self.convergence:
                previous = cost
                break
            previous = cost

        self.analyses_ = analyses
        self.counts_ = counts
        self.total_cost_ = previous
        return self

    def predict_word(self, word: Sequence[str]) -> Boundaries:
        word = check_word(word)
        if word in self.analyses_:
            morphs = self.analyses_[word]
        else:
            # Unknown word: best-cost split against a copy of the frozen
            # counts, so prediction never mutates the fitted state.
            scratch = self.counts_.copy()
            morphs = self._split_chunk(word, 1, scratch)
        positions = set()
        consumed = 0
        for morph in morphs[:-1]:
            consumed += len(morph)
            positions.add(consumed)
        return frozenset(positions)
