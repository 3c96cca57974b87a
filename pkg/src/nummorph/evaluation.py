"""Boundary precision and recall, and the cross-model benchmark.

Scores are micro-aggregated within a language: boundary counts are
pooled over rows before the ratios are taken. Precision is 1.0 when
nothing was predicted, recall is 1.0 when there is no gold boundary,
and F1 is 0.0 when precision and recall are both 0.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Set

from sklearn.base import clone

from .corpus import extract_corpus, gold_boundaries
from .metrics import compute_stats
from .segmenters import SUBWORD_MODELS, BoundarySegmenter, make_segmenter, model_name
from .wordlist import LEVELS, SURFACE, Wordlist


@dataclass(frozen=True)
class BprScore:
    """Pooled boundary counts with the derived precision/recall/F1."""

    n_gold: int
    n_predicted: int
    n_correct: int
    precision: float
    recall: float
    f1: float

    @classmethod
    def from_counts(cls, n_gold: int, n_predicted: int, n_correct: int) -> "BprScore":
        precision = n_correct / n_predicted if n_predicted else 1.0
        recall = n_correct / n_gold if n_gold else 1.0
        f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
        return cls(n_gold, n_predicted, n_correct, precision, recall, f1)


def bpr(
    gold: Mapping[str, Set[int]],
    predicted: Mapping[str, Set[int]],
    lengths: Mapping[str, int] | None = None,
) -> BprScore:
    """Boundary precision/recall over aligned per-row boundary sets.

    Raises ValueError when the row sets differ, or (when word lengths
    are given) when a position falls outside 1..len-1.
    """
    if set(gold) != set(predicted):
        missing = set(gold) ^ set(predicted)
        raise ValueError(f"row mismatch between gold and predicted: {sorted(missing)[:5]}")
    if lengths is not None:
        for row_id in gold:
            limit = lengths[row_id] - 1
            for name, positions in (("gold", gold[row_id]), ("predicted", predicted[row_id])):
                bad = [p for p in positions if not 1 <= p <= limit]
                if bad:
                    raise ValueError(f"row {row_id}: {name} boundary {bad[0]} out of range")
    n_gold = sum(len(g) for g in gold.values())
    n_predicted = sum(len(p) for p in predicted.values())
    n_correct = sum(len(gold[r] & predicted[r]) for r in gold)
    return BprScore.from_counts(n_gold, n_predicted, n_correct)


GOLD = "gold"


@dataclass
class EvalReport:
    """Benchmark scores per (language, model, level) with aggregates."""

    languages: tuple[str, ...]
    models: tuple[str, ...]
    levels: tuple[str, ...]
    cells: dict[tuple[str, str, str], BprScore] = field(default_factory=dict)

    def macro_f1(self, model: str, level: str) -> float:
        """Mean of the per-language F1 scores."""
        scores = [self.cells[(lang, model, level)].f1 for lang in self.languages]
        return sum(scores) / len(scores)

    def micro(self, model: str, level: str) -> BprScore:
        """Counts pooled across languages before the ratios."""
        cells = [self.cells[(lang, model, level)] for lang in self.languages]
        return BprScore.from_counts(
            sum(c.n_gold for c in cells),
            sum(c.n_predicted for c in cells),
            sum(c.n_correct for c in cells),
        )

    def aggregate_f1(self, model: str, level: str, micro: bool = False) -> float:
        return self.micro(model, level).f1 if micro else self.macro_f1(model, level)

    def to_dict(self) -> dict:
        return {
            "languages": list(self.languages),
            "models": list(self.models),
            "levels": list(self.levels),
            "cells": [
                {
                    "language": lang,
                    "model": model,
                    "level": level,
                    **vars(score),
                }
                for (lang, model, level), score in sorted(self.cells.items())
            ],
            "aggregates": [
                {
                    "model": model,
                    "level": level,
                    "macro_f1": self.macro_f1(model, level),
                    "micro_f1": self.micro(model, level).f1,
                }
                for model in self.models
                for level in self.levels
            ],
        }


def _resolve_target(wordlist: Wordlist, language: str, level: str) -> int:
    stats = compute_stats(wordlist, language)
    return stats.morphs_surface if level == SURFACE else stats.morphemes_underlying


def run_benchmark(
    wordlist: Wordlist,
    models: Sequence[str | BoundarySegmenter],
    levels: Sequence[str] = LEVELS,
    languages: Sequence[str] | None = None,
    target_size: int | str = GOLD,
    model_params: Mapping[str, Mapping] | None = None,
) -> EvalReport:
    """Fit and score every model on every language and level.

    Subword models receive target_size per language and level; the
    default "gold" uses the language's distinct morph count (surface)
    or morpheme count (underlying). Deterministic for fixed inputs.
    """
    languages = tuple(languages) if languages else wordlist.languages
    model_params = dict(model_params or {})
    names = []
    prototypes: dict[str, BoundarySegmenter] = {}
    for model in models:
        if isinstance(model, BoundarySegmenter):
            name = model_name(model)
            prototypes[name] = model
        else:
            name = model
            prototypes[name] = make_segmenter(name, **model_params.get(name, {}))
        names.append(name)

    report = EvalReport(languages=languages, models=tuple(names), levels=tuple(levels))
    for language in languages:
        for level in levels:
            corpus = extract_corpus(wordlist, language, level)
            gold = gold_boundaries(wordlist, language, level)
            lengths = {rid: len(word) for rid, word in zip(corpus.row_ids, corpus.words)}
            for name in names:
                estimator = clone(prototypes[name])
                if name in SUBWORD_MODELS and estimator.get_params().get("target_size") is None:
                    size = (
                        _resolve_target(wordlist, language, level)
                        if target_size == GOLD
                        else int(target_size)
                    )
                    estimator.set_params(target_size=size)
                # A clamped subword target is routine here, not news.
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    estimator.fit(corpus.words)
                predicted = {
                    rid: estimator.predict_word(word)
                    for rid, word in zip(corpus.row_ids, corpus.words)
                }
                report.cells[(language, name, level)] = bpr(gold, predicted, lengths)
    return report
