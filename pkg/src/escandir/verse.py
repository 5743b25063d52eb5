"""Verse-level scansion.

Lays out word nuclei into metric positions, merging synalephas, applying
end-of-verse (and, past eleven syllables, hemistich) compensation, and
generating alternative readings for the poetic licences: dialefa,
dieresis, syneresis.
"""
from __future__ import annotations

import itertools
import unicodedata
from dataclasses import dataclass

from .catalog import Catalog, MatchResult, MetricalPattern, catalog_lookup, match_pattern
from .words import (
    LexiconConfig,
    ScansionError,
    WordScan,
    cached_scan,
    default_lexicon,
    normalize_word,
    scan_word,
)

# verses longer than this try the hemistich rescan
HEMISTICH_THRESHOLD = 11

# combination cap for ambiguity sites: at most 2**6 combined readings
MAX_COMBINED_SITES = 6

SYNALEPHA_MARK = "‿"  # ‿
DIALEFA_MARK = "‖"  # ‖
PAUSE_MARK = " / "
COMBINING_DIAERESIS = "̈"


@dataclass(frozen=True)
class ResourceTag:
    """A metrical resource applied at a site.

    kind: synalepha | dialefa | dieresis | syneresis |
          hemistich_break | hemistich_dialefa
    word_index / nucleus_index are 0- and 1-based respectively; for the
    cross-word kinds the site names the first word's last nucleus.
    """

    kind: str
    word_index: int
    nucleus_index: int


@dataclass(frozen=True)
class Hemistich:
    """One hemistich: raw syllable count plus its compensation."""

    count: int
    compensation: int

    @property
    def measure(self) -> int:
        return self.count + self.compensation


@dataclass(frozen=True)
class HemistichPlan:
    splits: tuple[Hemistich, ...]

    @property
    def measure(self) -> int:
        return sum(h.measure for h in self.splits)


@dataclass
class VerseScansion:
    """Complete reading of one verse."""

    text: str
    tagged_text: str
    measure: int
    pattern: MetricalPattern
    hemistichs: HemistichPlan | None
    resources: tuple[ResourceTag, ...]
    words: tuple[WordScan, ...]
    match: MatchResult | None = None
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class Site:
    """An ambiguity site detected on the default reading."""

    kind: str  # dialefa | dieresis | syneresis
    word_index: int
    nucleus_index: int
    pair: tuple[int, int] | None = None  # syneresis only

    @property
    def order_key(self) -> tuple[int, int, int]:
        rank = {"dieresis": 0, "syneresis": 1, "dialefa": 2}[self.kind]
        return (self.word_index, self.nucleus_index, rank)


@dataclass
class Candidate:
    """One alternative reading plus the licences that produced it."""

    scansion: VerseScansion
    applied: tuple[ResourceTag, ...]
    score: tuple | None = None


def _tokenize(text: str):
    """(original tokens, indices of scannable ones, normalized words)."""
    tokens = text.split()
    norm = [normalize_word(t) for t in tokens]
    scannable = [i for i, w in enumerate(norm) if w]
    return tokens, scannable, norm


def _synalepha_pairs(words: list[WordScan]) -> list[int]:
    # punctuation between the tokens never blocks the merge
    return [
        i
        for i in range(len(words) - 1)
        if words[i].ends_with_vowel_sound and words[i + 1].starts_with_vowel_sound
    ]


def _word_positions(words, merged, starts_at=0):
    """Metric position of every nucleus; merged first nuclei share one."""
    pos = starts_at
    layout = []
    for i, w in enumerate(words):
        row = []
        for k in range(w.syllable_count):
            if k == 0 and merged[i] and pos > 0:
                row.append(pos)
            else:
                pos += 1
                row.append(pos)
        layout.append(row)
    return layout, pos - starts_at


def _stress_positions(words, layout):
    out = set()
    for w, row in zip(words, layout):
        if w.stress_index is not None:
            out.add(row[w.stress_index - 1])
        if w.secondary_stress_index is not None:
            out.add(row[w.secondary_stress_index - 1])
    return out


def _try_split(words, merged, expected_seq):
    """Greedy hemistich walk for one candidate split.

    A word closes the open hemistich when the running count plus its own
    contribution and compensation hits the expected measure; atonic words
    never close one. Returns (hemistichs, closing indices, ruptured merge
    sites, adjusted merges) or None when the split does not fit.
    """
    merged = list(merged)
    hems: list[Hemistich] = []
    closes: list[int] = []
    ruptures: list[int] = []
    running = 0
    for i, w in enumerate(words):
        if len(hems) == len(expected_seq):
            return None  # verse continues past the last hemistich
        expected = expected_seq[len(hems)]
        contrib = w.syllable_count - (1 if merged[i] else 0)
        if not w.is_atonic and running + contrib + w.compensation == expected:
            hems.append(Hemistich(running + contrib, w.compensation))
            closes.append(i)
            if i + 1 < len(words) and merged[i + 1]:
                merged[i + 1] = False  # synalepha breaks at the pause
                ruptures.append(i)
            running = 0
        else:
            running += contrib
            if running >= expected:
                return None
    if len(hems) != len(expected_seq) or closes[-1] != len(words) - 1:
        return None
    return hems, closes, ruptures, merged


def _hemistich_layout(words, merged, closes, hems):
    """Nucleus positions with each hemistich offset by the measures before it."""
    layout = []
    base = 0
    start = 0
    for close, hem in zip(closes, hems):
        segment = words[start : close + 1]
        seg_merged = list(merged[start : close + 1])
        seg_layout, _ = _word_positions(segment, seg_merged, starts_at=base)
        # a merge into the segment's first word crosses no pause here only
        # because ruptures were already cleared by the split walk
        layout.extend(seg_layout)
        base += hem.measure
        start = close + 1
    return layout


def scan_verse(
    text: str,
    lexicon: LexiconConfig | None = None,
    allow_hemistich: bool = True,
    *,
    dialefa: frozenset[int] | tuple[int, ...] = (),
    word_dieresis: dict[int, tuple[int, ...]] | None = None,
    word_syneresis: dict[int, tuple[tuple[int, int], ...]] | None = None,
    splits_menu: tuple[tuple[int, ...], ...] | None = None,
) -> VerseScansion:
    """Scan one verse under a fixed choice of licences.

    The keyword sets force alternative readings and are what candidate
    generation iterates over; a plain call gives the default reading
    (every synalepha merged, no dieresis/syneresis).
    """
    if lexicon is None:
        lexicon = default_lexicon()
    tokens, scannable, norm = _tokenize(text)
    if not scannable:
        raise ScansionError(f"no scannable word in verse: {text!r}")

    word_dieresis = word_dieresis or {}
    word_syneresis = word_syneresis or {}
    words: list[WordScan] = []
    for wi, ti in enumerate(scannable):
        di = word_dieresis.get(wi, ())
        sy = word_syneresis.get(wi, ())
        if di or sy:
            words.append(scan_word(norm[ti], lexicon, dieresis=di, syneresis=sy))
        else:
            words.append(cached_scan(norm[ti], lexicon))

    pairs = _synalepha_pairs(words)
    dialefa = frozenset(dialefa)
    for d in dialefa:
        if d not in pairs:
            raise ScansionError(f"not a synalepha site: words {d},{d + 1}")
    merged = [False] * len(words)
    for p in pairs:
        if p not in dialefa:
            merged[p + 1] = True

    layout, total = _word_positions(words, merged)
    final = words[-1]
    measure = total + final.compensation
    hem_plan = None
    closes: list[int] = []
    ruptures: list[int] = []
    flags: list[str] = []

    if allow_hemistich and measure > HEMISTICH_THRESHOLD:
        for expected_seq in splits_menu or _default_splits_menu():
            got = _try_split(words, merged, expected_seq)
            if got is not None:
                hems, closes, ruptures, merged = got
                hem_plan = HemistichPlan(tuple(hems))
                layout = _hemistich_layout(words, merged, closes, hems)
                measure = hem_plan.measure
                break
        else:
            flags.append("no_hemistich_split")

    stresses = _stress_positions(words, layout)
    pattern = MetricalPattern(tuple(sorted(stresses)), measure)

    resources = _collect_resources(
        words, merged, pairs, dialefa, word_dieresis, word_syneresis, closes, ruptures
    )
    tagged = _render_tagged(
        tokens, scannable, norm, lexicon, merged, dialefa, word_dieresis,
        word_syneresis, closes,
    )
    return VerseScansion(
        text=text,
        tagged_text=tagged,
        measure=measure,
        pattern=pattern,
        hemistichs=hem_plan,
        resources=resources,
        words=tuple(words),
        flags=tuple(flags),
    )


def _collect_resources(
    words, merged, pairs, dialefa, word_dieresis, word_syneresis, closes, ruptures
):
    tags = []
    for wi, w in enumerate(words):
        for j in word_dieresis.get(wi, ()):
            tags.append(ResourceTag("dieresis", wi, j))
        for j, _k in word_syneresis.get(wi, ()):
            tags.append(ResourceTag("syneresis", wi, j))
        if wi + 1 < len(words) and merged[wi + 1]:
            tags.append(ResourceTag("synalepha", wi, w.syllable_count))
    for p in sorted(dialefa):
        tags.append(ResourceTag("dialefa", p, words[p].syllable_count))
    for r in ruptures:
        tags.append(ResourceTag("hemistich_dialefa", r, words[r].syllable_count))
    for c in closes:
        tags.append(ResourceTag("hemistich_break", c, words[c].syllable_count))
    tags.sort(key=lambda t: (t.word_index, t.nucleus_index, t.kind))
    return tuple(tags)


def _mark_dieresis(token: str, span: tuple[int, int], core_start: int) -> str:
    """Insert a diaeresis on the preferred vowel of a split nucleus."""
    t = unicodedata.normalize("NFC", token)
    lo = t.lower()
    begin, end = core_start + span[0], core_start + span[1]
    target = None
    for i in range(begin, min(end, len(t))):
        if lo[i] in "iu":
            target = i
            break
        if target is None and lo[i] in "aeoáéíóú":
            target = i
    if target is None or lo[target] in "üï":
        return t
    marked = t[: target + 1] + COMBINING_DIAERESIS + t[target + 1 :]
    return unicodedata.normalize("NFC", marked)


def _wrap_syneresis(token: str, begin: int, end: int, core_start: int) -> str:
    t = unicodedata.normalize("NFC", token)
    b, e = core_start + begin, core_start + end
    b, e = max(0, min(b, len(t))), max(0, min(e, len(t)))
    return t[:b] + "(" + t[b:e] + ")" + t[e:]


def _core_start(token: str) -> int:
    t = unicodedata.normalize("NFC", token).lower()
    i = 0
    while i < len(t) and not (t[i].isalpha() or t[i].isdigit()):
        i += 1
    return i


def _render_tagged(
    tokens, scannable, norm, lexicon, merged, dialefa, word_dieresis,
    word_syneresis, closes,
):
    """Rebuild the verse with the licences marked in the text.

    Synalepha joins the words with a tie, dialefa separates them with a
    double bar, hemistich pauses render as " / ", diereses add the mark
    on the vowel and synereses wrap the merged vowels in parentheses.
    """
    rendered = [unicodedata.normalize("NFC", t) for t in tokens]
    for wi, ti in enumerate(scannable):
        di = word_dieresis.get(wi, ())
        sy = word_syneresis.get(wi, ())
        if not di and not sy:
            continue
        # spans come from the default nuclei, before any licence
        base = cached_scan(norm[ti], lexicon)
        start = _core_start(tokens[ti])
        edits = []
        for j in di:
            edits.append(("d", base.nuclei[j - 1]))
        for j, k in sy:
            edits.append(("s", (base.nuclei[j - 1][0], base.nuclei[k - 1][1])))
        # right-to-left so earlier offsets stay valid
        edits.sort(key=lambda e: e[1][0], reverse=True)
        out = rendered[ti]
        for kind, span in edits:
            if kind == "d":
                out = _mark_dieresis(out, span, start)
            else:
                out = _wrap_syneresis(out, span[0], span[1], start)
        rendered[ti] = out

    # each joiner sits right before the second word of its pair
    joiner = {}
    closing = set(closes)
    for wi in range(len(scannable) - 1):
        ti = scannable[wi + 1]
        if wi in closing:
            joiner[ti] = PAUSE_MARK
        elif merged[wi + 1]:
            joiner[ti] = SYNALEPHA_MARK
        elif wi in dialefa:
            joiner[ti] = DIALEFA_MARK

    parts = [rendered[0]]
    for ti in range(1, len(tokens)):
        parts.append(joiner.get(ti, " "))
        parts.append(rendered[ti])
    return "".join(parts)


_SPLITS_CACHE: tuple[tuple[int, ...], ...] | None = None


def _default_splits_menu() -> tuple[tuple[int, ...], ...]:
    global _SPLITS_CACHE
    if _SPLITS_CACHE is None:
        from importlib import resources as importlib_resources

        ref = importlib_resources.files("escandir.data").joinpath("hemistich_splits.txt")
        menu = []
        for line in ref.read_text(encoding="utf-8").splitlines():
            entry = line.split("#", 1)[0].strip()
            if entry:
                menu.append(tuple(int(p) for p in entry.split("+")))
        _SPLITS_CACHE = tuple(menu)
    return _SPLITS_CACHE


def ambiguity_sites(scansion: VerseScansion) -> list[Site]:
    """Sites where the default reading may flex, in document order."""
    sites: list[Site] = []
    words = scansion.words
    for wi, w in enumerate(words):
        for j in w.diphthong_sites:
            sites.append(Site("dieresis", wi, j))
        for j, k in w.hiatus_sites:
            sites.append(Site("syneresis", wi, j, pair=(j, k)))
    for tag in scansion.resources:
        if tag.kind == "synalepha" or tag.kind == "hemistich_dialefa":
            sites.append(Site("dialefa", tag.word_index, tag.nucleus_index))
    sites.sort(key=lambda s: s.order_key)
    return sites


def _conflicts(combo) -> bool:
    # a nucleus cannot be split and merged in the same reading
    split = {(s.word_index, s.nucleus_index) for s in combo if s.kind == "dieresis"}
    for s in combo:
        if s.kind == "syneresis":
            a, b = s.pair
            if (s.word_index, a) in split or (s.word_index, b) in split:
                return True
    return False


def _apply_combo(text, lexicon, combo, allow_hemistich):
    dial = frozenset(s.word_index for s in combo if s.kind == "dialefa")
    di: dict[int, list[int]] = {}
    sy: dict[int, list[tuple[int, int]]] = {}
    for s in combo:
        if s.kind == "dieresis":
            di.setdefault(s.word_index, []).append(s.nucleus_index)
        elif s.kind == "syneresis":
            sy.setdefault(s.word_index, []).append(s.pair)
    return scan_verse(
        text,
        lexicon,
        allow_hemistich,
        dialefa=dial,
        word_dieresis={k: tuple(v) for k, v in di.items()},
        word_syneresis={k: tuple(v) for k, v in sy.items()},
    )


def generate_candidates(
    scansion: VerseScansion,
    lexicon: LexiconConfig | None = None,
    allow_hemistich: bool = True,
) -> list[Candidate]:
    """Default reading plus every licence combination, document order.

    Powerset over at most MAX_COMBINED_SITES sites; any sites beyond the
    cap are still reachable one at a time.
    """
    if lexicon is None:
        lexicon = default_lexicon()
    sites = ambiguity_sites(scansion)
    candidates = [Candidate(scansion, applied=())]
    head, tail = sites[:MAX_COMBINED_SITES], sites[MAX_COMBINED_SITES:]
    combos = []
    for size in range(1, len(head) + 1):
        combos.extend(itertools.combinations(head, size))
    combos.extend((s,) for s in tail)
    for combo in combos:
        if _conflicts(combo):
            continue
        try:
            alt = _apply_combo(scansion.text, lexicon, combo, allow_hemistich)
        except ScansionError:
            continue
        applied = tuple(
            ResourceTag(s.kind, s.word_index, s.nucleus_index) for s in combo
        )
        candidates.append(Candidate(alt, applied=applied))
    return candidates


def resolve_ambiguity(
    candidates: list[Candidate],
    target_measures,
    catalog: Catalog | None = None,
) -> VerseScansion:
    """Pick the best reading: conformity, then coincidence, then economy.

    Lexicographic score (measure in targets, Jaccard ratio, fewer
    licences); remaining ties keep the earliest-generated candidate,
    which follows document order of the sites.
    """
    if not candidates:
        raise ScansionError("no candidates to resolve")
    targets = frozenset(target_measures or ())
    best: Candidate | None = None
    best_key = None
    best_match: MatchResult | None = None
    for idx, cand in enumerate(candidates):
        sc = cand.scansion
        rows = catalog_lookup(sc.measure, catalog)
        match = match_pattern(sc.pattern, rows)
        conforming = (not targets) or sc.measure in targets
        key = (conforming, match.coincidence_ratio, -len(cand.applied), -idx)
        cand.score = (conforming, match.coincidence_ratio, len(cand.applied))
        if best_key is None or key > best_key:
            best, best_key = cand, key
            best_match = match
    best.scansion.match = best_match
    return best.scansion
