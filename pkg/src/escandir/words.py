"""Word-level metrical analysis.

Counts vowel nuclei (metric syllables) directly on the grapheme string,
assigns the stressed nucleus and derives the end-of-verse compensation
factor, without building a full syllabification of the word.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as importlib_resources

OPEN_VOWELS = "aeoáéó"
CLOSED_VOWELS = "iuíúüï"
VOWELS = frozenset(OPEN_VOWELS + CLOSED_VOWELS)
ACCENTED = frozenset("áéíóú")
ACCENTED_CLOSED = frozenset("íú")
DIAERESIS_MARKED = frozenset("üï")

# The fourteen falling/rising combinations that merge into one nucleus,
# written without accents. Two open vowels never merge.
DIPHTHONG_PAIRS = frozenset(
    ["ai", "au", "ei", "eu", "oi", "ou", "ui", "iu",
     "ia", "ua", "ie", "ue", "io", "uo"]
)

# A nucleus absorbs at most two following vowels (triphthong cap).
MAX_NUCLEUS_VOWELS = 3

_STRIP_MARKS = str.maketrans("áéíóúüï", "aeiouui")

# Adverbs in -mente carry two stresses; these lookalikes do not. The list
# covers the adjectives in -mente plus frequent subjunctives of -mentar verbs
# whose stems would pass the two-nuclei test.
MENTE_EXCEPTIONS = frozenset(
    ["mente", "clemente", "demente", "vehemente",
     "alimente", "atormente", "aumente", "cimente", "comente",
     "experimente", "fermente", "fomente", "lamente"]
)


class ScansionError(ValueError):
    """A token or verse that cannot be scanned (no vowel nucleus, etc.)."""


@dataclass(frozen=True)
class LexiconConfig:
    """Closed-class word lists driving tonicity decisions.

    atonic_words: words that carry no metrical stress.
    forced_tonic_words: overrides removed from the atonic set.
    oh_is_tonic: the interjection "oh" is stressed by default; corpora
        annotated the other way can flip this.
    """

    atonic_words: frozenset[str]
    forced_tonic_words: frozenset[str] = frozenset()
    oh_is_tonic: bool = True

    def is_atonic(self, word: str) -> bool:
        if word in self.forced_tonic_words:
            return False
        if word == "oh":
            return not self.oh_is_tonic
        return word in self.atonic_words


@dataclass(frozen=True)
class WordScan:
    """Metrical reading of a single normalized word.

    Indices are 1-based over nuclei. `compensation` is the end-of-verse
    adjustment: +1 oxytone, 0 paroxytone, -1 proparoxytone, 0 atonic.
    `nuclei` holds grapheme spans (start, end) into the normalized word.
    """

    word: str
    syllable_count: int
    stress_index: int | None
    secondary_stress_index: int | None
    compensation: int
    nuclei: tuple[tuple[int, int], ...]
    hiatus_sites: tuple[tuple[int, int], ...]
    diphthong_sites: tuple[int, ...]
    starts_with_vowel_sound: bool
    ends_with_vowel_sound: bool
    is_atonic: bool

    @property
    def effective_stress_index(self) -> int | None:
        """Last stressed nucleus; the one that matters at verse end."""
        if self.secondary_stress_index is not None:
            return self.secondary_stress_index
        return self.stress_index


_BARE_LEXICON = LexiconConfig(atonic_words=frozenset())


def is_diphthong(first: str, second: str) -> bool:
    """True when the two vowels realize as a single nucleus.

    Acute-accented closed vowels (í, ú) and diaeresis-marked vowels
    (ü, ï) force hiatus; everything else follows the fourteen-pair table.
    """
    if first not in VOWELS or second not in VOWELS:
        return False
    if first in ACCENTED_CLOSED or second in ACCENTED_CLOSED:
        return False
    if first in DIAERESIS_MARKED or second in DIAERESIS_MARKED:
        return False
    pair = (first + second).translate(_STRIP_MARKS)
    return pair in DIPHTHONG_PAIRS


def normalize_word(token: str) -> str:
    """Lowercase NFC form with enclosing punctuation stripped.

    Interior apostrophes and hyphens survive (elisions, compounds).
    Returns "" for punctuation-only tokens.
    """
    t = unicodedata.normalize("NFC", token).lower()
    start, end = 0, len(t)
    while start < end and not _is_word_char(t[start]):
        start += 1
    while end > start and not _is_word_char(t[end - 1]):
        end -= 1
    return t[start:end]


def _is_word_char(c: str) -> bool:
    return c.isalpha() or c.isdigit()


def _vowel_kind(word: str, i: int) -> bool:
    """Is word[i] a pronounced vowel in context?

    Mute u in que/qui/gue/gui; "y" is vocalic unless a vowel follows.
    """
    c = word[i]
    if c == "y":
        nxt = word[i + 1] if i + 1 < len(word) else ""
        return not (nxt in VOWELS)
    if c not in VOWELS:
        return False
    if c == "u" and i > 0 and word[i - 1] in "qg":
        nxt = word[i + 1] if i + 1 < len(word) else ""
        if nxt in "eiéí":
            return False
    return True


def _vowel_value(c: str) -> str:
    # word-final or preconsonantal "y" sounds /i/
    return "i" if c == "y" else c


def _pronounced_vowels(word: str) -> list[tuple[int, str, bool]]:
    """(index, vowel value, contiguous-with-previous) for each vowel.

    Contiguity is h-transparent: vowels separated only by "h" stay in
    contact and can merge or form syneresis sites.
    """
    out = []
    prev_end = -2  # index after the previous vowel's transparent run
    for i, c in enumerate(word):
        if _vowel_kind(word, i):
            contiguous = i == prev_end
            out.append((i, _vowel_value(c), contiguous))
            prev_end = i + 1
        elif c == "h" and prev_end == i:
            prev_end = i + 1  # stay transparent
    return out


def _build_nuclei(word: str) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Group pronounced vowels into nuclei; return nuclei and hiatus sites.

    Each nucleus is a list of grapheme indices. Hiatus sites are 1-based
    pairs (k, k+1) of adjacent nuclei still in vowel contact (syneresis
    candidates).
    """
    nuclei: list[list[int]] = []
    hiatus: list[tuple[int, int]] = []
    for idx, value, contiguous in _pronounced_vowels(word):
        if nuclei and contiguous:
            last = nuclei[-1]
            prev_value = _vowel_value(word[last[-1]])
            if len(last) < MAX_NUCLEUS_VOWELS and is_diphthong(prev_value, value):
                last.append(idx)
                continue
            hiatus.append((len(nuclei), len(nuclei) + 1))
        nuclei.append([idx])
    return nuclei, hiatus


def _apply_resources(
    nuclei: list[list[int]],
    hiatus: list[tuple[int, int]],
    dieresis: tuple[int, ...],
    syneresis: tuple[tuple[int, int], ...],
) -> list[list[int]]:
    """Re-group default nuclei applying forced diereses and synereses.

    Indices refer to the default reading. A dieresis splits a nucleus
    after its first vowel; a syneresis merges an adjacent hiatus pair.
    """
    valid = set(hiatus)
    for pair in syneresis:
        if pair not in valid:
            raise ScansionError(f"not a syneresis site: {pair}")
    merged_into_next = {a for a, _ in syneresis}

    groups: list[list[int]] = []
    for k, nucleus in enumerate(nuclei, start=1):
        parts: list[list[int]]
        if k in dieresis:
            if len(nucleus) < 2:
                raise ScansionError(f"not a dieresis site: {k}")
            parts = [nucleus[:1], nucleus[1:]]
        else:
            parts = [list(nucleus)]
        if groups and (k - 1) in merged_into_next:
            groups[-1].extend(parts[0])
            groups.extend(parts[1:])
        else:
            groups.extend(parts)
    return groups


def _mente_stem(word: str) -> str | None:
    """Stem of a -mente adverb, or None when the word is not one."""
    if len(word) <= 5 or not word.endswith("mente"):
        return None
    if word in MENTE_EXCEPTIONS:
        return None
    stem = word[:-5]
    stem_nuclei, _ = _build_nuclei(stem)
    if not stem_nuclei:
        return None
    has_accent = any(c in ACCENTED for c in stem)
    if len(stem_nuclei) >= 2 or has_accent:
        return stem
    return None


def _default_stress(word: str, count: int) -> int:
    # graphic-accentless rule: vowel/n/s ending -> paroxytone, else oxytone
    if count == 1:
        return 1
    last = word[-1]
    if last in VOWELS or last in "ns":
        return count - 1
    return count


def _locate(groups: list[list[int]], grapheme: int) -> int:
    for k, g in enumerate(groups, start=1):
        if g[0] <= grapheme <= g[-1]:
            return k
    raise ScansionError(f"no nucleus holds grapheme {grapheme}")


def scan_word(
    word: str,
    lexicon: LexiconConfig | None = None,
    *,
    dieresis: tuple[int, ...] = (),
    syneresis: tuple[tuple[int, int], ...] = (),
) -> WordScan:
    """Scan one normalized word.

    `dieresis` / `syneresis` force poetic readings on the listed sites of
    the default reading (used by verse-level candidate generation).
    Raises ScansionError when the word has no vowel nucleus.
    """
    if lexicon is None:
        lexicon = default_lexicon()
    if not word:
        raise ScansionError("empty word")

    base_nuclei, hiatus = _build_nuclei(word)
    if not base_nuclei:
        raise ScansionError(f"unscannable word (no vowel nucleus): {word!r}")
    diphthong_sites = tuple(
        k for k, n in enumerate(base_nuclei, start=1) if len(n) > 1
    )

    if dieresis or syneresis:
        groups = _apply_resources(base_nuclei, hiatus, tuple(dieresis), tuple(syneresis))
    else:
        groups = base_nuclei
    count = len(groups)

    atonic = lexicon.is_atonic(word)
    stress: int | None = None
    secondary: int | None = None
    if not atonic:
        stem = _mente_stem(word)
        if stem is not None:
            # scan the stem lexicon-free: an adjective stem is never atonic
            stem_scan = scan_word(stem, _BARE_LEXICON)
            anchor = stem_scan.nuclei[stem_scan.stress_index - 1][0]
            stress = _locate(groups, anchor)
            secondary = count - 1  # the "men" nucleus
        else:
            accented_at = next((i for i, c in enumerate(word) if c in ACCENTED), None)
            if accented_at is not None:
                stress = _locate(groups, accented_at)
            else:
                stress = _default_stress(word, count)

    if atonic:
        compensation = 0
    else:
        # the last stress decides the verse-end adjustment: oxytone +1,
        # paroxytone 0, proparoxytone -1, and so on down
        eff = secondary if secondary is not None else stress
        compensation = eff - (count - 1)

    spans = tuple((g[0], g[-1] + 1) for g in groups)
    return WordScan(
        word=word,
        syllable_count=count,
        stress_index=stress,
        secondary_stress_index=secondary,
        compensation=compensation,
        nuclei=spans,
        hiatus_sites=tuple(hiatus),
        diphthong_sites=diphthong_sites,
        starts_with_vowel_sound=_starts_with_vowel_sound(word),
        ends_with_vowel_sound=_ends_with_vowel_sound(word),
        is_atonic=atonic,
    )


def _starts_with_vowel_sound(word: str) -> bool:
    # initial vowel, or mute h before one; "y" only when vocalic in context
    if not word:
        return False
    i = 1 if word[0] == "h" and len(word) > 1 else 0
    return _vowel_kind(word, i)


def _ends_with_vowel_sound(word: str) -> bool:
    # trailing mute h is transparent ("oh" can merge forward)
    if not word:
        return False
    i = len(word) - 1
    while i > 0 and word[i] == "h":
        i -= 1
    return _vowel_kind(word, i)


def load_word_list(path) -> frozenset[str]:
    """One normalized word per line; '#' starts a comment; UTF-8."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(normalize_word(entry))
    return frozenset(words)


@lru_cache(maxsize=1)
def default_lexicon() -> LexiconConfig:
    """Lexicon backed by the packaged atonic word list."""
    ref = importlib_resources.files("escandir.data").joinpath("atonic.txt")
    words = set()
    for line in ref.read_text(encoding="utf-8").splitlines():
        entry = line.split("#", 1)[0].strip()
        if entry:
            words.add(entry)
    return LexiconConfig(atonic_words=frozenset(words))


@lru_cache(maxsize=65536)
def cached_scan(word: str, lexicon: LexiconConfig) -> WordScan:
    """Default-reading scan with memoization (verse-level hot path)."""
    return scan_word(word, lexicon)
