"""Shared fixtures: the bundled sample and a synthetic Mandarin wordlist.

Mandarin numerals compose transparently (eleven = ten one, twenty-one =
two ten one), which makes hand-checkable gold segmentations easy, so
the suite builds 1-40 from ten morphs at two granularities: one letter
per sound segment, and one atom per whole morph.
"""

import pytest

from nummorph import Morph, SoundToken, WordForm, Wordlist, parse_wordlist, sample_path

UNITS = {
    1: ("yi", ("y", "i")),
    2: ("er", ("e", "r")),
    3: ("san", ("s", "a", "n")),
    4: ("si", ("s", "i")),
    5: ("wu", ("w", "u")),
    6: ("liu", ("l", "i", "u")),
    7: ("qi", ("q", "i")),
    8: ("ba", ("b", "a")),
    9: ("jiu", ("j", "i", "u")),
    10: ("shi", ("s", "h", "i")),
}

GLOSSES = {
    1: "ONE", 2: "TWO", 3: "THREE", 4: "FOUR", 5: "FIVE",
    6: "SIX", 7: "SEVEN", 8: "EIGHT", 9: "NINE", 10: "TEN",
}


def formation(value: int) -> list[int]:
    """Decompose a numeral value into its morph sequence (unit values)."""
    if value <= 10:
        return [value]
    if value < 20:
        return [10, value - 10]
    if value % 10 == 0:
        return [value // 10, 10]
    return [value // 10, 10, value % 10]


def build_mandarin(max_value: int = 40) -> Wordlist:
    """Letter-level Mandarin numerals with transparent morphology."""
    rows = []
    for value in range(1, max_value + 1):
        parts = formation(value)
        morphs = tuple(
            Morph(tuple(SoundToken(seg, seg) for seg in UNITS[p][1])) for p in parts
        )
        rows.append(
            WordForm(
                id=f"zh{value}",
                language="Mandarin",
                concept=str(value),
                value=value,
                form="".join(UNITS[p][0] for p in parts),
                morphs=morphs,
                cognates=tuple(parts),
                glosses=tuple(GLOSSES[p] for p in parts),
            )
        )
    return Wordlist(tuple(rows))


def mandarin_atomic_words(max_value: int = 40) -> list[tuple[str, ...]]:
    """The same numerals with each morph as a single indivisible token."""
    return [tuple(UNITS[p][0] for p in formation(v)) for v in range(1, max_value + 1)]


@pytest.fixture(scope="session")
def sample() -> Wordlist:
    return parse_wordlist(sample_path())


@pytest.fixture(scope="session")
def mandarin() -> Wordlist:
    return build_mandarin()


@pytest.fixture(scope="session")
def atomic_words() -> list[tuple[str, ...]]:
    return mandarin_atomic_words()
