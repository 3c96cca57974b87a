"""Command-line interface for wordlist validation, stats, and segmentation."""

import json
import sys

import click

from .corpus import extract_corpus
from .evaluation import GOLD, run_benchmark
from .metrics import compute_all_stats, compute_stats
from .reports import (
    cognate_report,
    correlation_table,
    language_table,
    model_table,
    stats_table,
)
from .segmenters import MODELS, MORPHOSEG_MODELS, SUBWORD_MODELS, make_segmenter
from .wordlist import LEVELS, WordlistError, errors, parse_wordlist, validate
from .service import Session, create_app

DELIMITERS = {"tab": "\t", "comma": ","}

delimiter_option = click.option(
    "--delimiter",
    type=click.Choice(sorted(DELIMITERS)),
    default="tab",
    show_default=True,
    help="Column delimiter of the wordlist file.",
)


def _load(path: str, delimiter: str):
    try:
        return parse_wordlist(path, delimiter=DELIMITERS[delimiter])
    except (WordlistError, OSError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc


def _parse_target(value: str) -> object:
    if value == GOLD:
        return GOLD
    try:
        return int(value)
    except ValueError:
        raise click.BadParameter("must be 'gold' or a positive integer") from None


def _segment_lines(wordlist, model: str, level: str, language, params, target, trace):
    """Fit one model per language and yield one tab-joined line per row."""
    languages = [language] if language else list(wordlist.languages)
    for lang in languages:
        corpus = extract_corpus(wordlist, lang, level)
        estimator = make_segmenter(model, **params)
        if model in SUBWORD_MODELS and estimator.get_params().get("target_size") is None:
            resolved = (
                compute_stats(wordlist, lang).morphs_surface
                if level == "surface"
                else compute_stats(wordlist, lang).morphemes_underlying
            ) if target == GOLD else int(target)
            estimator.set_params(target_size=resolved)
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            estimator.fit(corpus.words)
            pieces_per_word = estimator.transform(corpus.words)
        if trace and hasattr(estimator, "vocab_trajectory_"):
            click.echo(
                f"{model} {lang} vocabulary trajectory: "
                + " ".join(str(n) for n in estimator.vocab_trajectory_),
                err=True,
            )
        for row_id, pieces in zip(corpus.row_ids, pieces_per_word):
            rendered = " + ".join(" ".join(piece) for piece in pieces)
            yield "\t".join([row_id, lang, level, rendered])


@click.group()
@click.version_option(package_name="nummorph")
def main():
    """Work with annotated numeral wordlists."""


@main.command("validate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@delimiter_option
def validate_cmd(path, delimiter):
    """Check a wordlist and list every violation found."""
    wordlist = _load(path, delimiter)
    found = validate(wordlist)
    click.echo(f"{len(found)} violations")
    for violation in found:
        click.echo(str(violation))
    if errors(found):
        sys.exit(1)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--language", default=None, help="Restrict to one language.")
@delimiter_option
def stats(path, language, delimiter):
    """Per-language wordlist statistics."""
    wordlist = _load(path, delimiter)
    try:
        rows = (
            [compute_stats(wordlist, language)]
            if language
            else list(compute_all_stats(wordlist).values())
        )
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(stats_table(rows))


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--model", "-m", type=click.Choice(MORPHOSEG_MODELS), required=True)
@click.option("--level", type=click.Choice(LEVELS), default="surface", show_default=True)
@click.option("--language", default=None, help="Restrict to one language.")
@click.option("--params", default="{}", help="Model parameters as a JSON object.")
@delimiter_option
def segment(path, model, level, language, params, delimiter):
    """Segment every word with a morphological segmentation model."""
    try:
        parsed = json.loads(params)
        if not isinstance(parsed, dict):
            raise ValueError("expected a JSON object")
    except ValueError as exc:
        raise click.BadParameter(f"--params: {exc}") from exc
    wordlist = _load(path, delimiter)
    try:
        for line in _segment_lines(wordlist, model, level, language, parsed, None, False):
            click.echo(line)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--model", "-m", type=click.Choice(SUBWORD_MODELS), required=True)
@click.option("--level", type=click.Choice(LEVELS), default="surface", show_default=True)
@click.option("--language", default=None, help="Restrict to one language.")
@click.option(
    "--target-size",
    default=GOLD,
    show_default=True,
    help="Vocabulary target: 'gold' for the language's morph inventory size, or a number.",
)
@click.option("--trace", is_flag=True, help="Print the vocabulary-size trajectory to stderr.")
@delimiter_option
def tokenize(path, model, level, language, target_size, trace, delimiter):
    """Tokenize every word with a subword model at a vocabulary target."""
    target = _parse_target(target_size)
    wordlist = _load(path, delimiter)
    try:
        for line in _segment_lines(wordlist, model, level, language, {}, target, trace):
            click.echo(line)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--model",
    "-m",
    "models",
    type=click.Choice(MODELS),
    multiple=True,
    help="Models to score; defaults to the morphological segmenters.",
)
@click.option(
    "--level",
    "levels",
    type=click.Choice(LEVELS),
    multiple=True,
    help="Representation levels; defaults to both.",
)
@click.option("--language", default=None, help="Restrict to one language.")
@click.option("--target-size", default=GOLD, show_default=True)
@click.option("--micro", is_flag=True, help="Pool boundary counts instead of averaging F1.")
@delimiter_option
def evaluate(path, models, levels, language, target_size, micro, delimiter):
    """Score models against gold morph boundaries."""
    target = _parse_target(target_size)
    wordlist = _load(path, delimiter)
    try:
        report = run_benchmark(
            wordlist,
            list(models) if models else list(MORPHOSEG_MODELS),
            levels=tuple(levels) if levels else LEVELS,
            languages=[language] if language else None,
            target_size=target,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(model_table(report, micro=micro))
    click.echo("")
    click.echo(language_table(report))


REPORT_SECTIONS = ("stats", "models", "subword", "cognates", "correlations")


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--section",
    "sections",
    type=click.Choice(("all",) + REPORT_SECTIONS),
    multiple=True,
    default=("all",),
    show_default=True,
)
@delimiter_option
def report(path, sections, delimiter):
    """Full text report: stats, model scores, cognates, correlations."""
    wordlist = _load(path, delimiter)
    wanted = REPORT_SECTIONS if "all" in sections else tuple(s for s in REPORT_SECTIONS if s in sections)
    blocks: list[str] = []

    def add(title: str, body: str) -> None:
        blocks.append(f"== {title} ==\n{body}")

    try:
        if "stats" in wanted:
            add("Language statistics", stats_table(list(compute_all_stats(wordlist).values())))
        if "models" in wanted:
            morpho = run_benchmark(wordlist, list(MORPHOSEG_MODELS))
            add(
                "Morphological segmentation (boundary F1)",
                model_table(morpho) + "\n\n" + language_table(morpho),
            )
        if "subword" in wanted:
            subword = run_benchmark(wordlist, list(SUBWORD_MODELS), target_size=GOLD)
            add("Subword tokenizers at gold vocabulary size (boundary F1)", model_table(subword))
        if "cognates" in wanted:
            add("Cognate classes", cognate_report(wordlist))
        if "correlations" in wanted:
            add(
                "Statistic correlations (Spearman)",
                correlation_table(list(compute_all_stats(wordlist).values())),
            )
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo("\n\n".join(blocks))


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option(
    "--ui",
    "ui_dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory of static annotation-UI files to serve at the web root.",
)
@delimiter_option
def serve(path, host, port, ui_dir, delimiter):
    """Run the annotation HTTP service over one wordlist file."""
    import uvicorn

    try:
        session = Session(path, delimiter=DELIMITERS[delimiter])
    except (WordlistError, OSError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    uvicorn.run(create_app(session, ui_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
