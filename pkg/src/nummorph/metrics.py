"""Quantitative profile of a numeral system.

All statistics weight each morph token by 1/k, where k is the number of
alternative rows a language has for the same numeric value, so systems
with doublets are not overcounted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from scipy import stats as _scipy_stats

from .wordlist import WordForm, Wordlist


@dataclass(frozen=True)
class LanguageStats:
    """Morphological economy measures for one language.

    expressivity_surface and expressivity_underlying are weighted tokens
    per distinct morph and per morpheme; their ratio is the opacity
    (allomorphy load). avg_code_length is weighted tokens per distinct
    numeric value, ttr is morpheme types per weighted token, and entropy
    is the Shannon entropy (bits) of the weighted token mass across
    cognate classes.
    """

    language: str
    n_rows: int
    n_values: int
    morphs_surface: int
    morphemes_underlying: int
    weighted_tokens: float
    expressivity_surface: float
    expressivity_underlying: float
    opacity: float
    avg_code_length: float
    ttr: float
    entropy: float

    @classmethod
    def from_counts(
        cls,
        morphs_surface: int,
        morphemes_underlying: int,
        weighted_tokens: float,
        n_values: int,
        language: str = "",
        n_rows: int = 0,
        entropy: float = 0.0,
    ) -> "LanguageStats":
        """Derive the ratio statistics from the primitive counts."""
        if min(morphs_surface, morphemes_underlying, n_values) < 1 or weighted_tokens <= 0:
            raise ValueError("counts must be positive")
        return cls(
            language=language,
            n_rows=n_rows,
            n_values=n_values,
            morphs_surface=morphs_surface,
            morphemes_underlying=morphemes_underlying,
            weighted_tokens=weighted_tokens,
            expressivity_surface=weighted_tokens / morphs_surface,
            expressivity_underlying=weighted_tokens / morphemes_underlying,
            opacity=morphs_surface / morphemes_underlying,
            avg_code_length=weighted_tokens / n_values,
            ttr=morphemes_underlying / weighted_tokens,
            entropy=entropy,
        )


def _form_weights(rows: Sequence[WordForm]) -> dict[str, float]:
    alternatives: dict[int, int] = {}
    for row in rows:
        alternatives[row.value] = alternatives.get(row.value, 0) + 1
    return {row.id: 1.0 / alternatives[row.value] for row in rows}


def weighted_token_count(rows: Sequence[WordForm]) -> float:
    """Morph tokens summed at weight 1/k per row, k = rows per value."""
    weights = _form_weights(rows)
    return sum(len(row.morphs) * weights[row.id] for row in rows)


def compute_stats(wordlist: Wordlist, language: str) -> LanguageStats:
    """Compute LanguageStats for one language of a validated wordlist."""
    rows = wordlist.by_language.get(language)
    if not rows:
        raise ValueError(f"no rows for language {language!r}")
    for row in rows:
        if len(row.morphs) != len(row.cognates):
            raise ValueError(f"row {row.id} has unmatched morphs and cognate IDs")

    weights = _form_weights(rows)
    surface_forms = {morph.surface for row in rows for morph in row.morphs}
    cognate_ids = {cid for row in rows for cid in row.cognates}
    weighted_tokens = weighted_token_count(rows)

    class_mass: dict[int, float] = {}
    for row in rows:
        for cid in row.cognates:
            class_mass[cid] = class_mass.get(cid, 0.0) + weights[row.id]
    entropy = -sum(
        (mass / weighted_tokens) * math.log2(mass / weighted_tokens)
        for mass in class_mass.values()
        if mass > 0
    )

    return LanguageStats.from_counts(
        morphs_surface=len(surface_forms),
        morphemes_underlying=len(cognate_ids),
        weighted_tokens=weighted_tokens,
        n_values=len({row.value for row in rows}),
        language=language,
        n_rows=len(rows),
        entropy=entropy,
    )


def compute_all_stats(wordlist: Wordlist) -> dict[str, LanguageStats]:
    return {language: compute_stats(wordlist, language) for language in wordlist.languages}


@dataclass(frozen=True)
class SpearmanResult:
    """Rank correlation with its t-approximation p-value.

    rho and p_value are None when the correlation is undefined
    (a constant input), which is reported rather than coerced to 0.
    """

    rho: float | None
    p_value: float | None
    n: int
    alpha: float = 0.05

    @property
    def defined(self) -> bool:
        return self.rho is not None

    @property
    def significant(self) -> bool | None:
        if self.p_value is None:
            return None
        return self.p_value < self.alpha


def spearman(x: Sequence[float], y: Sequence[float], alpha: float = 0.05) -> SpearmanResult:
    """Spearman rank correlation with average ranks for ties."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise ValueError("need at least 3 observations")
    if len(set(x)) < 2 or len(set(y)) < 2:
        return SpearmanResult(rho=None, p_value=None, n=len(x), alpha=alpha)
    result = _scipy_stats.spearmanr(x, y)
    return SpearmanResult(
        rho=float(result.statistic), p_value=float(result.pvalue), n=len(x), alpha=alpha
    )


STAT_FIELDS = (
    "morphs_surface",
    "morphemes_underlying",
    "expressivity_surface",
    "expressivity_underlying",
    "opacity",
    "avg_code_length",
    "ttr",
    "entropy",
)


def stat_correlations(
    stats: Iterable[LanguageStats], fields: Sequence[str] = STAT_FIELDS, alpha: float = 0.05
) -> list[tuple[str, str, SpearmanResult]]:
    """Pairwise rank correlations between statistics across languages."""
    stats = list(stats)
    results = []
    for i, a in enumerate(fields):
        for b in fields[i + 1 :]:
            xs = [getattr(s, a) for s in stats]
            ys = [getattr(s, b) for s in stats]
            results.append((a, b, spearman(xs, ys, alpha=alpha)))
    return results
