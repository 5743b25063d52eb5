"""Verse typology: pattern catalog lookup and closest-type matching."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as importlib_resources

GENERIC_FAMILY = "genérico"


@dataclass(frozen=True)
class MetricalPattern:
    """Stress positions of a verse: 1-based, strictly increasing."""

    positions: tuple[int, ...]
    measure: int

    def __post_init__(self):
        if self.measure < 1:
            raise ValueError(f"measure must be positive: {self.measure}")
        if any(p < 1 or p > self.measure for p in self.positions):
            raise ValueError(
                f"positions out of range 1..{self.measure}: {self.positions}"
            )
        if any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError(f"positions must increase: {self.positions}")

    def dotted(self) -> str:
        return ".".join(str(p) for p in self.positions)


@dataclass(frozen=True)
class PatternType:
    """One catalog row: a named stress-position set for a measure."""

    measure: int
    family: str
    variant: str
    stresses: frozenset[int]

    @property
    def name(self) -> str:
        return f"{self.family} {self.variant}".strip()

    def dotted(self) -> str:
        return ".".join(str(p) for p in sorted(self.stresses))


@dataclass(frozen=True)
class MatchResult:
    """Closest catalog type for a pattern."""

    type: PatternType
    coincidence_ratio: float
    extrarrhythmic: frozenset[int]

    @property
    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.type.stresses))


class Catalog:
    """Ordered collection of PatternType rows indexed by measure."""

    def __init__(self, rows):
        self.rows: tuple[PatternType, ...] = tuple(rows)
        self._by_measure: dict[int, list[PatternType]] = {}
        for row in self.rows:
            self._by_measure.setdefault(row.measure, []).append(row)

    def lookup(self, measure: int) -> list[PatternType]:
        """Rows for a measure; a one-row generic fallback when none ship."""
        rows = self._by_measure.get(measure)
        if rows:
            return list(rows)
        return [generic_type(measure)]

    @classmethod
    def from_file(cls, path) -> "Catalog":
        with open(path, encoding="utf-8") as fh:
            return cls(_parse_rows(fh.read(), str(path)))


def generic_type(measure: int) -> PatternType:
    # the obligatory stress alone; degenerate measures get an empty set
    stresses = frozenset([measure - 1]) if measure >= 2 else frozenset()
    return PatternType(measure, GENERIC_FAMILY, "", stresses)


def _parse_rows(text: str, source: str):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ValueError(f"{source}:{lineno}: expected 4 tab-separated fields")
        measure_s, family, variant, dotted = parts
        try:
            measure = int(measure_s)
            stresses = frozenset(int(p) for p in dotted.split("."))
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: {exc}") from None
        if not stresses or min(stresses) < 1 or max(stresses) > measure:
            raise ValueError(f"{source}:{lineno}: stresses out of range")
        rows.append(PatternType(measure, family.strip(), variant.strip(), stresses))
    return rows


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    ref = importlib_resources.files("escandir.data").joinpath("catalog.tsv")
    return Catalog(_parse_rows(ref.read_text(encoding="utf-8"), "catalog.tsv"))


def catalog_lookup(measure: int, catalog: Catalog | None = None) -> list[PatternType]:
    """Catalog rows for `measure` (generic fallback when none exist)."""
    return (catalog or default_catalog()).lookup(measure)


def _jaccard(p: frozenset, t: frozenset) -> float:
    union = p | t
    if not union:
        return 1.0
    return len(p & t) / len(union)


def match_pattern(pattern: MetricalPattern, catalog_rows) -> MatchResult:
    """Closest type by Jaccard coincidence over stress-position sets.

    Only types sharing the obligatory stress (measure - 1) with the
    pattern compete; if the pattern itself lacks it, all types do.
    Ties fall to pure extrarrhythmic readings (type inside pattern),
    then to the larger type, then to catalog order.
    """
    p = frozenset(pattern.positions)
    obligatory = pattern.measure - 1
    rows = list(catalog_rows)
    eligible = [t for t in rows if obligatory in p and obligatory in t.stresses]
    if not eligible:
        eligible = rows

    best = None
    best_key = None
    for order, t in enumerate(eligible):
        ratio = _jaccard(p, t.stresses)
        key = (ratio, t.stresses <= p, len(t.stresses), -order)
        if best_key is None or key > best_key:
            best, best_key = t, key
    return MatchResult(
        type=best,
        coincidence_ratio=best_key[0],
        extrarrhythmic=p - best.stresses,
    )
