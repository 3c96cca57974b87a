"""Level projection, gold boundaries, and training-corpus extraction."""

import pytest

from nummorph import (
    WordForm,
    Wordlist,
    extract_corpus,
    gold_boundaries,
    level_token_indices,
    parse_segments,
    project_word,
    word_boundaries,
)


def test_project_word_surface(sample):
    row = sample.by_id["4"]  # German twenty-one
    assert project_word(row, "surface") == (
        "aI", "n", "s", "U", "n", "ts", "v", "a", "n", "ts", "I", "ç",
    )


def test_project_word_underlying(sample):
    row = sample.by_id["4"]
    assert project_word(row, "underlying") == (
        "aI", "n", "U", "n", "d", "ts", "v", "a", "n", "ts", "I", "ç",
    )


def test_word_boundaries_both_levels(sample):
    row = sample.by_id["4"]
    assert word_boundaries(row, "surface") == frozenset({3, 5, 9})
    assert word_boundaries(row, "underlying") == frozenset({2, 5, 9})


def test_word_boundaries_single_morph(sample):
    row = sample.by_id["1"]
    assert word_boundaries(row, "surface") == frozenset()


def test_level_token_indices(sample):
    row = sample.by_id["4"]
    surface = level_token_indices(row, "surface")
    underlying = level_token_indices(row, "underlying")
    assert len(surface) == 12 and len(underlying) == 12
    assert 5 not in surface  # the deleted-underlying token carries no surface
    assert 2 not in underlying  # the inserted-surface token carries no underlying
    assert surface[0] == 0 and underlying[-1] == 12


def test_extract_corpus_row_order(sample):
    corpus = extract_corpus(sample, "German", "surface")
    assert corpus.language == "German"
    assert corpus.level == "surface"
    assert corpus.row_ids == ("1", "2", "3", "4", "5")
    assert len(corpus) == 5
    assert corpus.words[0] == ("aI", "n", "s")


def test_extract_corpus_unknown_language(sample):
    with pytest.raises(ValueError):
        extract_corpus(sample, "Klingon", "surface")


def test_extract_corpus_unknown_level(sample):
    with pytest.raises(ValueError):
        extract_corpus(sample, "German", "phonetic")


def test_extract_corpus_rejects_empty_projection():
    row = WordForm(
        id="r1", language="X", concept="c", value=1, form="t",
        morphs=parse_segments("t/-"), cognates=(1,), glosses=("G",),
    )
    with pytest.raises(ValueError) as info:
        extract_corpus(Wordlist((row,)), "X", "underlying")
    assert "r1" in str(info.value)


def test_gold_boundaries_match_rows(sample):
    gold = gold_boundaries(sample, "German", "underlying")
    assert set(gold) == {"1", "2", "3", "4", "5"}
    assert gold["4"] == frozenset({2, 5, 9})
    for row_id, cuts in gold.items():
        assert cuts == word_boundaries(sample.by_id[row_id], "underlying")


def test_mandarin_gold_sizes(mandarin):
    gold = gold_boundaries(mandarin, "Mandarin", "surface")
    # 40 words: boundaries only in compounds
    assert len(gold) == 40
    assert gold["zh7"] == frozenset()
    assert gold["zh15"] == frozenset({3})  # shi + wu
    assert gold["zh21"] == frozenset({2, 5})  # er + shi + yi
