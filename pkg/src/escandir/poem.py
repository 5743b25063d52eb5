"""Poem-level analysis.

Scans every verse once, derives the poem's measure tendency from those
default readings, then rescans the non-conforming verses against that
tendency so ambiguity resolution can pull them toward it.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .catalog import Catalog, catalog_lookup, match_pattern
from .verse import VerseScansion, generate_candidates, resolve_ambiguity, scan_verse
from .words import LexiconConfig, ScansionError, default_lexicon

# a measure becomes part of the tendency when it covers at least a
# quarter of the verses and appears at least twice
FREQUENT_SHARE = 0.25
FREQUENT_MIN = 2

DEFAULT_WINDOW = 14

MODES = ("auto", "fixed", "mixed")


@dataclass
class PoemRow:
    """One input line: its scansion, or the reason it has none."""

    line_number: int  # 1-based over the input lines
    text: str
    scansion: VerseScansion | None = None
    error: str | None = None


@dataclass
class PoemAnalysis:
    rows: list[PoemRow]
    tendency: tuple[int, ...]
    mode: str
    window: int

    @property
    def is_fixed(self) -> bool:
        return len(self.tendency) == 1


@dataclass(frozen=True)
class PoemOptions:
    mode: str = "auto"
    window: int = DEFAULT_WINDOW
    forced_measures: tuple[int, ...] | None = None
    lexicon: LexiconConfig | None = None
    catalog: Catalog | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.window < 1:
            raise ValueError("window must be positive")
        if self.mode == "fixed" and not self.forced_measures:
            raise ValueError("fixed mode needs explicit measures")


def frequent_measures(measures) -> tuple[int, ...]:
    """Measures covering >= 25% of the verses, seen at least twice.

    Falls back to the most common measure (smallest on ties) so the
    tendency is never empty for a non-empty poem.
    """
    measures = list(measures)
    if not measures:
        return ()
    counts = Counter(measures)
    cutoff = FREQUENT_SHARE * len(measures)
    chosen = [m for m, c in counts.items() if c >= cutoff and c >= FREQUENT_MIN]
    if not chosen:
        top = max(counts.values())
        chosen = [min(m for m, c in counts.items() if c == top)]
    return tuple(sorted(chosen))


def analyze_poem(text: str, options: PoemOptions | None = None) -> PoemAnalysis:
    """Two-pass scan of a whole poem.

    Pass one reads every verse in its default realization. The tendency
    comes from those measures (or the caller's). Pass two rescans each
    verse whose measure falls outside its targets, resolving licences
    toward them; conforming verses keep the default reading.
    """
    opts = options or PoemOptions()
    lexicon = opts.lexicon or default_lexicon()

    rows: list[PoemRow] = []
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = PoemRow(line_number=i, text=line)
        try:
            row.scansion = scan_verse(line, lexicon)
        except ScansionError as exc:
            row.error = str(exc)
        rows.append(row)

    scanned = [r for r in rows if r.scansion is not None]
    pass1 = [r.scansion.measure for r in scanned]

    forced = tuple(sorted(opts.forced_measures)) if opts.forced_measures else None
    if forced:
        tendency = forced
    else:
        tendency = frequent_measures(pass1)

    for idx, row in enumerate(scanned):
        targets = _targets_for(idx, pass1, tendency, forced, opts)
        sc = row.scansion
        if targets and sc.measure not in targets:
            cands = generate_candidates(sc, lexicon)
            row.scansion = resolve_ambiguity(cands, targets, opts.catalog)
        else:
            sc.match = match_pattern(
                sc.pattern, catalog_lookup(sc.measure, opts.catalog)
            )
    return PoemAnalysis(rows=rows, tendency=tendency, mode=opts.mode, window=opts.window)


def _targets_for(idx, pass1, tendency, forced, opts):
    """Target measures for verse idx; () means leave the default alone."""
    if forced:
        return forced
    if opts.mode == "auto":
        return tendency
    if opts.mode == "mixed":
        # causal: only the measures of the verses already read count
        lo = max(0, idx - opts.window)
        context = pass1[lo:idx]
        if not context:
            return ()
        return frequent_measures(context)
    return tendency
