"""Plain-text report layouts for stats, model scores, and alignments.

Paired surface/underlying figures render as "S / U" cells.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .alignment import align_class, build_cognate_classes, format_class
from .evaluation import EvalReport
from .metrics import STAT_FIELDS, LanguageStats, SpearmanResult, stat_correlations
from .wordlist import Wordlist


def format_table(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    rows = [list(r) for r in rows]
    widths = [
        max(len(headers[i]), max((len(row[i]) for row in rows), default=0))
        for i in range(len(headers))
    ]
    def line(cells: Sequence[str]) -> str:
        return "  ".join(str(c).ljust(widths[i]) for i, c in enumerate(cells)).rstrip()

    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(row) for row in rows)
    return "\n".join(out)


def _pair(surface: float, underlying: float, digits: int = 2) -> str:
    return f"{surface:.{digits}f} / {underlying:.{digits}f}"


def stats_table(stats: Sequence[LanguageStats]) -> str:
    """Per-language profile with paired S / U columns."""
    headers = ["Language", "Morphs S/U", "Expressivity S/U", "Opacity", "Length", "TTR", "Entropy", "T", "Values"]
    rows = [
        [
            s.language,
            f"{s.morphs_surface} / {s.morphemes_underlying}",
            _pair(s.expressivity_surface, s.expressivity_underlying),
            f"{s.opacity:.2f}",
            f"{s.avg_code_length:.2f}",
            f"{s.ttr:.2f}",
            f"{s.entropy:.2f}",
            f"{s.weighted_tokens:.2f}",
            str(s.n_values),
        ]
        for s in stats
    ]
    return format_table(headers, rows)


def model_table(report: EvalReport, models: Sequence[str] | None = None, micro: bool = False) -> str:
    """Aggregate F1 per model, one column per level."""
    models = list(models or report.models)
    headers = ["Model", *[level.capitalize() for level in report.levels]]
    rows = [
        [model, *[f"{report.aggregate_f1(model, level, micro=micro):.2f}" for level in report.levels]]
        for model in models
    ]
    return format_table(headers, rows)


def language_table(report: EvalReport) -> str:
    """Per-language F1 breakdown with S / U cells per model."""
    headers = ["Language", *report.models]
    rows = []
    for language in report.languages:
        cells = [language]
        for model in report.models:
            scores = [report.cells[(language, model, level)].f1 for level in report.levels]
            cells.append(" / ".join(f"{f1:.2f}" for f1 in scores))
        rows.append(cells)
    return format_table(headers, rows)


def cognate_report(wordlist: Wordlist, language: str | None = None) -> str:
    """One alignment block per cognate class."""
    classes = build_cognate_classes(wordlist, language=language)
    return "\n\n".join(format_class(c, align_class(c)) for c in classes)


def _spearman_cells(result: SpearmanResult) -> list[str]:
    if not result.defined:
        return ["undefined", "-", "-"]
    flag = "yes" if result.significant else "no"
    return [f"{result.rho:.3f}", f"{result.p_value:.4f}", flag]


def correlation_table(
    stats: Sequence[LanguageStats], fields: Sequence[str] = STAT_FIELDS
) -> str:
    """Pairwise rank correlations across languages (alpha 0.05)."""
    if len(stats) < 3:
        return f"correlations need at least 3 languages, got {len(stats)}"
    headers = ["Statistic A", "Statistic B", "rho", "p", "significant"]
    rows = [
        [a, b, *_spearman_cells(result)]
        for a, b, result in stat_correlations(stats, fields=fields)
    ]
    return format_table(headers, rows)
