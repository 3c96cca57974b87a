"""Boundary precision/recall scoring and the benchmark runner."""

import random

import pytest
from sklearn.exceptions import NotFittedError

from nummorph import (
    GOLD,
    AffixSegmenter,
    BpeSegmenter,
    BprScore,
    bpr,
    run_benchmark,
)


def test_from_counts_conventions():
    # no predictions: vacuous precision
    assert BprScore.from_counts(2, 0, 0).precision == 1.0
    # no gold boundaries: vacuous recall
    assert BprScore.from_counts(0, 2, 0).recall == 1.0
    # nothing anywhere: perfect trivial agreement
    empty = BprScore.from_counts(0, 0, 0)
    assert (empty.precision, empty.recall, empty.f1) == (1.0, 1.0, 1.0)
    # zero precision and recall: f1 pinned to 0
    assert BprScore.from_counts(2, 2, 0).f1 == 0.0


def test_bpr_reference_examples():
    # one of two positions right, one wrong
    score = bpr({"w": {2, 5}}, {"w": {2, 4}})
    assert (score.precision, score.recall, score.f1) == (0.5, 0.5, 0.5)

    # nothing predicted at all
    score = bpr({"w": {2, 5}}, {"w": set()})
    assert score.precision == 1.0
    assert score.recall == 0.0
    assert score.f1 == 0.0

    # over-segmentation: all gold found, one extra cut
    score = bpr({"w": {2}}, {"w": {1, 2}})
    assert score.precision == 0.5
    assert score.recall == 1.0
    assert score.f1 == pytest.approx(2 / 3)


def test_bpr_pools_rows_micro():
    gold = {"a": {1}, "b": {2, 3}}
    predicted = {"a": {1}, "b": set()}
    score = bpr(gold, predicted)
    assert score.n_gold == 3
    assert score.n_predicted == 1
    assert score.n_correct == 1
    assert score.precision == 1.0
    assert score.recall == pytest.approx(1 / 3)


def test_bpr_rejects_row_mismatch():
    with pytest.raises(ValueError):
        bpr({"a": {1}}, {"b": {1}})


def test_bpr_rejects_out_of_range():
    with pytest.raises(ValueError):
        bpr({"a": {3}}, {"a": {1}}, lengths={"a": 3})
    with pytest.raises(ValueError):
        bpr({"a": {1}}, {"a": {0}}, lengths={"a": 3})
    # in range: len-1 is the last legal cut
    bpr({"a": {2}}, {"a": {2}}, lengths={"a": 3})


def test_micro_pooling_matches_count_oracle():
    rng = random.Random(23)
    for _ in range(20):
        gold, predicted = {}, {}
        for i in range(rng.randint(1, 8)):
            length = rng.randint(2, 9)
            positions = range(1, length)
            gold[f"w{i}"] = {p for p in positions if rng.random() < 0.4}
            predicted[f"w{i}"] = {p for p in positions if rng.random() < 0.4}
        score = bpr(gold, predicted)
        n_gold = sum(len(g) for g in gold.values())
        n_pred = sum(len(p) for p in predicted.values())
        n_corr = sum(len(gold[k] & predicted[k]) for k in gold)
        assert (score.n_gold, score.n_predicted, score.n_correct) == (
            n_gold, n_pred, n_corr,
        )
        if n_pred:
            assert score.precision == pytest.approx(n_corr / n_pred)
        if n_gold:
            assert score.recall == pytest.approx(n_corr / n_gold)


def test_run_benchmark_shapes(sample):
    report = run_benchmark(sample, ["affix", "mdl"])
    assert report.languages == ("German", "French")
    assert report.models == ("affix", "mdl")
    assert report.levels == ("surface", "underlying")
    assert set(report.cells) == {
        (lang, model, level)
        for lang in ("German", "French")
        for model in ("affix", "mdl")
        for level in ("surface", "underlying")
    }


def test_run_benchmark_macro_vs_micro(sample):
    report = run_benchmark(sample, ["affix"])
    cells = [report.cells[(lang, "affix", "surface")] for lang in report.languages]
    expected_macro = sum(c.f1 for c in cells) / len(cells)
    assert report.macro_f1("affix", "surface") == pytest.approx(expected_macro)
    pooled = report.micro("affix", "surface")
    assert pooled.n_gold == sum(c.n_gold for c in cells)
    assert pooled.n_predicted == sum(c.n_predicted for c in cells)
    assert pooled.n_correct == sum(c.n_correct for c in cells)
    assert report.aggregate_f1("affix", "surface") == pytest.approx(expected_macro)
    assert report.aggregate_f1("affix", "surface", micro=True) == pytest.approx(pooled.f1)


def test_run_benchmark_languages_filter(sample):
    report = run_benchmark(sample, ["affix"], languages=["French"])
    assert report.languages == ("French",)
    assert all(key[0] == "French" for key in report.cells)


def test_run_benchmark_accepts_estimator_instances(sample):
    estimator = BpeSegmenter(target_size=5)
    report = run_benchmark(sample, [estimator], levels=("surface",))
    assert report.models == ("bpe",)
    # the original instance is cloned, never fitted in place
    with pytest.raises(NotFittedError):
        estimator.predict([("a", "b")])


def test_run_benchmark_gold_target(sample, mandarin):
    report = run_benchmark(mandarin, ["bpe"], target_size=GOLD)
    for level in ("surface", "underlying"):
        assert 0.0 < report.cells[("Mandarin", "bpe", level)].f1 < 1.0


def test_run_benchmark_numeric_target(mandarin):
    report = run_benchmark(mandarin, ["bpe"], levels=("surface",), target_size=16)
    assert ("Mandarin", "bpe", "surface") in report.cells


def test_run_benchmark_unknown_model(sample):
    with pytest.raises(ValueError):
        run_benchmark(sample, ["transformer"])


def test_run_benchmark_unknown_language(sample):
    with pytest.raises(ValueError):
        run_benchmark(sample, ["affix"], languages=["Klingon"])


def test_report_to_dict(sample):
    report = run_benchmark(sample, ["affix"], levels=("surface",))
    data = report.to_dict()
    assert {c["language"] for c in data["cells"]} == {"German", "French"}
    cell = data["cells"][0]
    assert {"language", "model", "level", "precision", "recall", "f1"} <= set(cell)
    assert data["aggregates"]
    agg = data["aggregates"][0]
    assert {"model", "level", "macro_f1", "micro_f1"} <= set(agg)


def test_affix_macro_one_on_mandarin(mandarin):
    report = run_benchmark(mandarin, ["affix"])
    assert report.macro_f1("affix", "surface") == 1.0
    assert report.macro_f1("affix", "underlying") == 1.0
    assert isinstance(run_benchmark(mandarin, [AffixSegmenter()]).models[0], str)
