"""Boundary segmenters with a scikit-learn estimator API.

make_segmenter builds a model from its registry name:

    lsv, lpv        successor / predecessor variety
    lse, lpe        successor / predecessor entropy
    lspe            both directions, entropy
    maxdrop         successor maxdrop
    affix           whole-word prefix/suffix evidence
    mdl             description-length minimization
    bpe, wordpiece  pair-merge tokenizers
    unigram         pruned unigram vocabulary
"""

from __future__ import annotations

from .affix import AffixSegmenter
from .base import BoundarySegmenter, check_corpus, check_word, split_at
from .mdl import MdlSegmenter, description_length
from .pairmerge import BpeSegmenter, WordPieceSegmenter, apply_merge
from .predictability import (
    END,
    PredictabilitySegmenter,
    PrefixTree,
    peak_positions,
    statistic_value,
)
from .unigram import UnigramSegmenter, best_path

_PREDICTABILITY = {
    "lsv": {"mode": "successor", "statistic": "variety"},
    "lpv": {"mode": "predecessor", "statistic": "variety"},
    "lse": {"mode": "successor", "statistic": "entropy"},
    "lpe": {"mode": "predecessor", "statistic": "entropy"},
    "lspe": {"mode": "both", "statistic": "entropy"},
    "maxdrop": {"mode": "successor", "statistic": "maxdrop"},
}

MORPHOSEG_MODELS = (*_PREDICTABILITY, "affix", "mdl")
SUBWORD_MODELS = ("bpe", "wordpiece", "unigram")
MODELS = (*MORPHOSEG_MODELS, *SUBWORD_MODELS)


def model_name(estimator: BoundarySegmenter) -> str:
    """Registry name of an estimator, or its class name when ambiguous.

    Predictability models share one class across several registry
    names, so configured instances keep the class name.
    """
    by_class = {
        AffixSegmenter: "affix",
        MdlSegmenter: "mdl",
        BpeSegmenter: "bpe",
        WordPieceSegmenter: "wordpiece",
        UnigramSegmenter: "unigram",
    }
    return by_class.get(type(estimator), type(estimator).__name__)


def make_segmenter(name: str, **params) -> BoundarySegmenter:
    """Instantiate a segmenter by registry name with parameter overrides."""
    try:
        if name in _PREDICTABILITY:
            return PredictabilitySegmenter(**{**_PREDICTABILITY[name], **params})
        if name == "affix":
            return AffixSegmenter(**params)
        if name == "mdl":
            return MdlSegmenter(**params)
        if name == "bpe":
            return BpeSegmenter(**params)
        if name == "wordpiece":
            return WordPieceSegmenter(**params)
        if name == "unigram":
            return UnigramSegmenter(**params)
    except TypeError as err:
        raise ValueError(f"bad parameters for model {name!r}: {err}") from err
    raise ValueError(f"unknown model {name!r}, expected one of {MODELS}")


__all__ = [
    "AffixSegmenter",
    "BoundarySegmenter",
    "BpeSegmenter",
    "END",
    "MdlSegmenter",
    "MODELS",
    "MORPHOSEG_MODELS",
    "PredictabilitySegmenter",
    "PrefixTree",
    "SUBWORD_MODELS",
    "UnigramSegmenter",
    "WordPieceSegmenter",
    "apply_merge",
    "best_path",
    "check_corpus",
    "check_word",
    "description_length",
    "make_segmenter",
    "model_name",
    "peak_positions",
    "split_at",
    "statistic_value",
]
