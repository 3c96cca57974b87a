"""Command-line behavior: output shapes and exit codes."""

import shutil

import pytest
from click.testing import CliRunner

from nummorph import sample_path
from nummorph.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def sample_file(tmp_path):
    path = tmp_path / "sample.tsv"
    shutil.copy(sample_path(), path)
    return str(path)


def test_validate_clean_sample(runner, sample_file):
    result = runner.invoke(main, ["validate", sample_file])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "2 violations"
    assert all("value-coverage" in line for line in lines[1:])


def test_validate_exits_one_on_errors(runner, tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text(
        "ID\tLANGUAGE\tCONCEPT\tVALUE\tFORM\tSEGMENTS\tCOGNATES\tMORPHEMES\n"
        "1\tX\tone\t1\tab\ta b\t1\tONE\n"
        "2\tX\ttwo\t2\ta c\ta c\t1\tONE\n"
    )
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 1
    assert "inconsistent-underlying" in result.output


def test_validate_unparseable_file_is_data_error(runner, tmp_path):
    path = tmp_path / "broken.tsv"
    path.write_text("not a wordlist\n")
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 1


def test_missing_file_is_usage_error(runner, tmp_path):
    result = runner.invoke(main, ["validate", str(tmp_path / "nope.tsv")])
    assert result.exit_code == 2


def test_unknown_option_is_usage_error(runner, sample_file):
    result = runner.invoke(main, ["validate", sample_file, "--frobnicate"])
    assert result.exit_code == 2


def test_stats_table(runner, sample_file):
    result = runner.invoke(main, ["stats", sample_file])
    assert result.exit_code == 0
    assert "German" in result.output and "French" in result.output
    assert "Opacity" in result.output


def test_stats_language_filter(runner, sample_file):
    result = runner.invoke(main, ["stats", sample_file, "--language", "French"])
    assert result.exit_code == 0
    assert "French" in result.output and "German" not in result.output


def test_stats_unknown_language(runner, sample_file):
    result = runner.invoke(main, ["stats", sample_file, "--language", "Klingon"])
    assert result.exit_code == 1


def test_segment_outputs_one_line_per_row(runner, sample_file):
    result = runner.invoke(
        main, ["segment", sample_file, "--model", "mdl", "--level", "underlying"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 10
    first = lines[0].split("\t")
    assert first[0] == "1" and first[1] == "German" and first[2] == "underlying"


def test_segment_language_filter_and_params(runner, sample_file):
    result = runner.invoke(
        main,
        [
            "segment", sample_file, "--model", "lspe", "--language", "German",
            "--params", '{"threshold": 0.5}',
        ],
    )
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 5


def test_segment_rejects_bad_params_json(runner, sample_file):
    result = runner.invoke(
        main, ["segment", sample_file, "--model", "mdl", "--params", "not json"]
    )
    assert result.exit_code == 2


def test_segment_rejects_unknown_model(runner, sample_file):
    result = runner.invoke(main, ["segment", sample_file, "--model", "transformer"])
    assert result.exit_code == 2  # click.Choice rejects it


def test_tokenize_gold_target(runner, sample_file):
    result = runner.invoke(main, ["tokenize", sample_file, "--model", "bpe"])
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 10


def test_tokenize_trace_goes_to_stderr(runner, sample_file):
    result = runner.invoke(
        main,
        ["tokenize", sample_file, "--model", "bpe", "--language", "German", "--trace"],
    )
    assert result.exit_code == 0
    assert "vocabulary trajectory" in result.stderr
    assert "vocabulary trajectory" not in result.stdout


def test_tokenize_numeric_target(runner, sample_file):
    result = runner.invoke(
        main, ["tokenize", sample_file, "--model", "unigram", "--target-size", "6"]
    )
    assert result.exit_code == 0


def test_tokenize_rejects_bad_target(runner, sample_file):
    result = runner.invoke(
        main, ["tokenize", sample_file, "--model", "bpe", "--target-size", "few"]
    )
    assert result.exit_code == 2


def test_evaluate_default_models(runner, sample_file):
    result = runner.invoke(main, ["evaluate", sample_file])
    assert result.exit_code == 0
    assert "Model" in result.output
    assert "affix" in result.output and "mdl" in result.output
    assert "German" in result.output


def test_evaluate_micro_flag(runner, sample_file):
    result = runner.invoke(
        main, ["evaluate", sample_file, "-m", "affix", "--level", "surface", "--micro"]
    )
    assert result.exit_code == 0


def test_report_all_sections(runner, sample_file):
    result = runner.invoke(main, ["report", sample_file])
    assert result.exit_code == 0
    for title in (
        "== Language statistics ==",
        "== Morphological segmentation (boundary F1) ==",
        "== Subword tokenizers at gold vocabulary size (boundary F1) ==",
        "== Cognate classes ==",
        "== Statistic correlations (Spearman) ==",
    ):
        assert title in result.output


def test_report_single_section(runner, sample_file):
    result = runner.invoke(main, ["report", sample_file, "--section", "stats"])
    assert result.exit_code == 0
    assert "== Language statistics ==" in result.output
    assert "Cognate classes" not in result.output


def test_report_correlations_need_three_languages(runner, sample_file):
    result = runner.invoke(main, ["report", sample_file, "--section", "correlations"])
    assert result.exit_code == 0
    assert "at least 3 languages" in result.output


def test_comma_delimiter(runner, tmp_path):
    path = tmp_path / "sample.csv"
    text = open(sample_path()).read().replace("\t", ",")
    path.write_text(text)
    result = runner.invoke(main, ["stats", str(path), "--delimiter", "comma"])
    assert result.exit_code == 0
    assert "German" in result.output
