"""Metrical scansion of Spanish verse without full syllabification.

Counts syllables by locating vowel nuclei, lays them into metric
positions with synalephas and end compensation, splits long verses into
hemistichs, resolves dialefa/dieresis/syneresis ambiguity against the
poem's own measure tendency, and names the resulting rhythm from a
catalog of verse types.
"""
from .catalog import (
    Catalog,
    MatchResult,
    MetricalPattern,
    PatternType,
    catalog_lookup,
    default_catalog,
    generic_type,
    match_pattern,
)
from .corpus import CorpusEntry, EvalReport, evaluate, load_corpus
from .poem import PoemAnalysis, PoemOptions, PoemRow, analyze_poem, frequent_measures
from .verse import (
    Candidate,
    Hemistich,
    HemistichPlan,
    ResourceTag,
    VerseScansion,
    ambiguity_sites,
    generate_candidates,
    resolve_ambiguity,
    scan_verse,
)
from .words import (
    LexiconConfig,
    ScansionError,
    WordScan,
    default_lexicon,
    is_diphthong,
    normalize_word,
    scan_word,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "Catalog",
    "CorpusEntry",
    "EvalReport",
    "Hemistich",
    "HemistichPlan",
    "LexiconConfig",
    "MatchResult",
    "MetricalPattern",
    "PatternType",
    "PoemAnalysis",
    "PoemOptions",
    "PoemRow",
    "ResourceTag",
    "ScansionError",
    "VerseScansion",
    "WordScan",
    "__version__",
    "ambiguity_sites",
    "analyze_poem",
    "catalog_lookup",
    "default_catalog",
    "default_lexicon",
    "evaluate",
    "frequent_measures",
    "generate_candidates",
    "generic_type",
    "is_diphthong",
    "load_corpus",
    "match_pattern",
    "normalize_word",
    "resolve_ambiguity",
    "scan_verse",
    "scan_word",
]
