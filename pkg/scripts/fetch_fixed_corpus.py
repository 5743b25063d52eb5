#!/usr/bin/env python3
"""Convert a TEI-annotated verse corpus into the dotted TSV the
evaluator reads.

Several public corpora of Spanish Golden Age sonnets ship as TEI XML
where each line element carries its gold metrical pattern:

    <l n="1" met="2.6.10">Amigos, el amor me perjudica</l>

This tool walks one or more such files (or a directory of them),
extracts every line that has a ``met`` attribute, and writes
``verse<TAB>pattern|measure`` rows. Point the test suite at the result:

    python3 scripts/fetch_fixed_corpus.py corpus_dir/ -o fixed_corpus.dotted
    ESCANDIR_CORPUS=fixed_corpus.dotted python3 -m pytest tests/test_acceptance.py

Sonnets are hendecasyllabic, so the measure defaults to 11; override
with --measure, or pass --measure 0 to infer last-stress-plus-one per
line. Patterns given as sign strings ("-+---+---+-") are recognized
too.
"""
import argparse
import re
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

DOTTED = re.compile(r"^\d+(\.\d+)*$")
SIGNS = re.compile(r"^[+-]+$")


def met_to_dotted(met: str, measure: int) -> str | None:
    met = met.strip()
    if SIGNS.match(met):
        positions = [str(i + 1) for i, c in enumerate(met) if c == "+"]
        if not positions:
            return None
        return ".".join(positions) + f"|{len(met)}"
    if DOTTED.match(met):
        if measure:
            return f"{met}|{measure}"
        return met
    return None


def iter_lines(path: Path):
    try:
        tree = ET.parse(path)
    except ET.ParseError as exc:
        print(f"warning: {path}: {exc}", file=sys.stderr)
        return
    for el in tree.iter():
        if not el.tag.endswith("}l") and el.tag != "l":
            continue
        met = el.get("met")
        text = "".join(el.itertext()).strip()
        if met and text:
            yield text, met


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("sources", nargs="+",
                        help="TEI files or directories to scan recursively")
    parser.add_argument("-o", "--out", default="fixed_corpus.dotted")
    parser.add_argument("--measure", type=int, default=11,
                        help="measure for dotted met values; 0 infers it")
    parser.add_argument("--limit", type=int, default=0,
                        help="stop after this many verses (0 = all)")
    args = parser.parse_args(argv)

    files = []
    for src in args.sources:
        p = Path(src)
        if p.is_dir():
            files.extend(sorted(p.rglob("*.xml")))
        elif p.exists():
            files.append(p)
        else:
            print(f"error: {src} not found", file=sys.stderr)
            return 2

    rows = []
    skipped = 0
    for path in files:
        for text, met in iter_lines(path):
            annot = met_to_dotted(met, args.measure)
            if annot is None:
                skipped += 1
                continue
            # tabs inside the verse would break the two-column format
            rows.append(f"{text.replace(chr(9), ' ')}\t{annot}")
            if args.limit and len(rows) >= args.limit:
                break
        if args.limit and len(rows) >= args.limit:
            break

    if not rows:
        print("error: no annotated lines found", file=sys.stderr)
        return 2
    Path(args.out).write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} verses to {args.out}"
          + (f" ({skipped} lines without a usable met skipped)" if skipped else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())
