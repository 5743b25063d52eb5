"""Annotated corpora: loading and accuracy evaluation.

Two line formats are understood. "dotted" holds the verse, a tab, and
the gold pattern as dot-separated positions, optionally followed by
"|measure" when the measure is not just the last stress plus one:

    Amigos, el amor me perjudica<TAB>2.6.10|11

"signs" encodes the gold annotation as one mark per metric position,
"+" stressed and "-" unstressed, so measure is the string's length:

    Amigos, el amor me perjudica<TAB>-+---+---+-
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .catalog import Catalog, MetricalPattern
from .verse import generate_candidates, resolve_ambiguity, scan_verse
from .words import LexiconConfig, ScansionError, default_lexicon

FORMATS = ("dotted", "signs")


@dataclass(frozen=True)
class CorpusEntry:
    text: str
    pattern: MetricalPattern

    @property
    def measure(self) -> int:
        return self.pattern.measure


@dataclass
class EvalFailure:
    index: int
    text: str
    expected: str
    got: str


@dataclass
class EvalReport:
    total: int
    correct: int
    seconds: float
    failures: list[EvalFailure]

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0

    def summary(self) -> str:
        return (
            f"{self.correct}/{self.total} correct, "
            f"accuracy {self.accuracy:.2f}, {self.seconds:.2f}s"
        )


def parse_dotted(value: str) -> MetricalPattern:
    """"2.6.10" or "2.6.10|11"; without a measure, oxytone is assumed."""
    head, sep, tail = value.partition("|")
    head = head.strip()
    try:
        positions = tuple(int(p) for p in head.split(".")) if head else ()
    except ValueError:
        raise ScansionError(f"bad dotted pattern: {value!r}") from None
    if not positions:
        raise ScansionError(f"empty pattern: {value!r}")
    if sep:
        measure = int(tail.strip())
    else:
        measure = positions[-1] + 1
    return MetricalPattern(positions, measure)


def parse_signs(value: str) -> MetricalPattern:
    value = value.strip()
    if not value or set(value) - {"+", "-"}:
        raise ScansionError(f"bad signs pattern: {value!r}")
    positions = tuple(i + 1 for i, c in enumerate(value) if c == "+")
    return MetricalPattern(positions, len(value))


def load_corpus(path, fmt: str = "dotted") -> list[CorpusEntry]:
    if fmt not in FORMATS:
        raise ScansionError(f"unknown corpus format {fmt!r}")
    parse = parse_dotted if fmt == "dotted" else parse_signs
    entries: list[CorpusEntry] = []
    with open(path, encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            text, sep, annot = line.rpartition("\t")
            if not sep or not text.strip():
                raise ScansionError(f"{path}:{ln}: expected verse<TAB>pattern")
            try:
                pattern = parse(annot)
            except (ScansionError, ValueError) as exc:
                raise ScansionError(f"{path}:{ln}: {exc}") from None
            entries.append(CorpusEntry(text.strip(), pattern))
    return entries


def evaluate(
    entries,
    lexicon: LexiconConfig | None = None,
    catalog: Catalog | None = None,
    forced_measures=None,
    max_failures: int = 50,
) -> EvalReport:
    """Scan every entry and compare pattern and measure with the gold.

    Targets per verse are the forced measures when given, otherwise the
    entry's own gold measure. Parsing happens before the clock starts;
    the reported time covers scansion only.
    """
    entries = list(entries)
    lexicon = lexicon or default_lexicon()
    forced = tuple(forced_measures) if forced_measures else None
    correct = 0
    failures: list[EvalFailure] = []
    start = time.perf_counter()
    for i, entry in enumerate(entries):
        targets = forced or (entry.measure,)
        got_dotted = "<error>"
        try:
            sc = scan_verse(entry.text, lexicon)
            if sc.measure not in targets:
                sc = resolve_ambiguity(
                    generate_candidates(sc, lexicon), targets, catalog
                )
            got_dotted = f"{sc.pattern.dotted()}|{sc.measure}"
            if (
                sc.measure == entry.measure
                and sc.pattern.positions == entry.pattern.positions
            ):
                correct += 1
                continue
        except ScansionError as exc:
            got_dotted = f"<error: {exc}>"
        if len(failures) < max_failures:
            failures.append(
                EvalFailure(
                    index=i,
                    text=entry.text,
                    expected=f"{entry.pattern.dotted()}|{entry.measure}",
                    got=got_dotted,
                )
            )
    seconds = time.perf_counter() - start
    return EvalReport(
        total=len(entries), correct=correct, seconds=seconds, failures=failures
    )
