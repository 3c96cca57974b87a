"""Workbench for numeral-system morphology.

Parse and validate annotated wordlists, align cognate morphs, profile
the morphological economy of numeral systems, and train boundary
segmenters that share a scikit-learn estimator API.
"""

from importlib import resources

from .alignment import (
    AlignmentColumn,
    AlignmentMatrix,
    CognateClass,
    Occurrence,
    align_class,
    build_cognate_classes,
    format_class,
)
from .corpus import (
    TrainingCorpus,
    extract_corpus,
    gold_boundaries,
    level_token_indices,
    project_word,
    word_boundaries,
)
from .evaluation import GOLD, BprScore, EvalReport, bpr, run_benchmark
from .metrics import (
    STAT_FIELDS,
    LanguageStats,
    SpearmanResult,
    compute_all_stats,
    compute_stats,
    spearman,
    stat_correlations,
    weighted_token_count,
)
from .segmenters import (
    MODELS,
    MORPHOSEG_MODELS,
    SUBWORD_MODELS,
    AffixSegmenter,
    BoundarySegmenter,
    BpeSegmenter,
    MdlSegmenter,
    PredictabilitySegmenter,
    UnigramSegmenter,
    WordPieceSegmenter,
    make_segmenter,
)
from .wordlist import (
    GAP,
    LEVELS,
    SURFACE,
    UNDERLYING,
    Morph,
    ParseError,
    SoundToken,
    Violation,
    WordForm,
    Wordlist,
    WordlistError,
    errors,
    parse_segments,
    parse_token,
    parse_wordlist,
    serialize_segments,
    serialize_token,
    serialize_wordlist,
    surface_form,
    underlying_form,
    validate,
)

__version__ = "0.1.0"


def sample_path() -> str:
    """Path of the bundled ten-row German/French sample."""
    return str(resources.files(__name__).joinpath("data/sample.tsv"))
