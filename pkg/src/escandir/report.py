"""Serialization of analysis results for the CLI and the HTTP API."""
from __future__ import annotations

from .poem import PoemAnalysis, PoemRow

COLUMNS = (
    "verse",
    "tagged",
    "syllables",
    "pattern",
    "canonical_pattern",
    "type_name",
    "ratio",
    "resources",
    "flags",
)


def row_dict(row: PoemRow) -> dict:
    if row.scansion is None:
        return {
            "verse": row.text,
            "tagged": row.text,
            "syllables": None,
            "pattern": None,
            "canonical_pattern": None,
            "type_name": None,
            "ratio": None,
            "resources": [],
            "flags": ["error"],
            "error": row.error,
        }
    sc = row.scansion
    match = sc.match
    return {
        "verse": row.text,
        "tagged": sc.tagged_text,
        "syllables": sc.measure,
        "pattern": sc.pattern.dotted(),
        "canonical_pattern": ".".join(map(str, match.canonical)) if match else None,
        "type_name": match.type.name if match else None,
        "ratio": round(match.coincidence_ratio, 4) if match else None,
        "resources": [
            {"kind": t.kind, "word": t.word_index, "nucleus": t.nucleus_index}
            for t in sc.resources
        ],
        "flags": list(sc.flags),
    }


def color_for(row: PoemRow, tendency) -> str:
    """Traffic light per verse; breaking the tendency wins over the rest."""
    if row.scansion is None:
        return "red"
    if tendency and row.scansion.measure not in tendency:
        return "red"
    match = row.scansion.match
    if match is not None and match.coincidence_ratio == 1.0:
        return "green"
    return "black"


def analysis_dict(analysis: PoemAnalysis, with_colors: bool = False) -> dict:
    rows = []
    for row in analysis.rows:
        d = row_dict(row)
        d["line"] = row.line_number
        if with_colors:
            d["color"] = color_for(row, analysis.tendency)
        rows.append(d)
    return {
        "rows": rows,
        "tendency": list(analysis.tendency),
        "is_fixed": analysis.is_fixed,
        "mode": analysis.mode,
        "window": analysis.window,
    }


def rows_tsv(analysis: PoemAnalysis) -> str:
    out = ["\t".join(COLUMNS)]
    for row in analysis.rows:
        d = row_dict(row)
        out.append(
            "\t".join(
                [
                    d["verse"],
                    d["tagged"],
                    str(d["syllables"] if d["syllables"] is not None else ""),
                    d["pattern"] or "",
                    d["canonical_pattern"] or "",
                    d["type_name"] or "",
                    "" if d["ratio"] is None else f"{d['ratio']:.4f}",
                    ",".join(t["kind"] for t in d["resources"]),
                    ",".join(d["flags"]),
                ]
            )
        )
    return "\n".join(out) + "\n"


def rows_pretty(analysis: PoemAnalysis) -> str:
    lines = []
    tendency = ".".join(str(m) for m in analysis.tendency)
    lines.append(f"tendency: {tendency or '(none)'}")
    for row in analysis.rows:
        d = row_dict(row)
        if d["syllables"] is None:
            lines.append(f"  !! {d['verse']}  ({d.get('error')})")
            continue
        kinds = ",".join(t["kind"] for t in d["resources"]) or "-"
        lines.append(
            f"  {d['syllables']:>3} | {d['pattern']:<18} {d['type_name']:<26}"
            f" r={d['ratio']:.2f}  {d['tagged']}  [{kinds}]"
        )
    return "\n".join(lines) + "\n"
