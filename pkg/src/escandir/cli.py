"""Command line interface: scan poems, evaluate corpora, serve HTTP."""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import Catalog, default_catalog
from .corpus import FORMATS, evaluate, load_corpus
from .poem import DEFAULT_WINDOW, MODES, PoemOptions, analyze_poem
from .report import analysis_dict, rows_pretty, rows_tsv
from .words import LexiconConfig, ScansionError, default_lexicon, load_word_list


def _parse_measures(value: str):
    try:
        measures = tuple(int(p) for p in value.replace(",", ".").split(".") if p)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad measures {value!r}") from None
    if not measures or any(m < 1 for m in measures):
        raise argparse.ArgumentTypeError(f"bad measures {value!r}")
    return measures


def _add_analysis_args(p: argparse.ArgumentParser):
    p.add_argument("--measures", type=_parse_measures, default=None,
                   help="force the target measures, e.g. 11 or 7.11")
    p.add_argument("--mode", choices=MODES, default="auto",
                   help="tendency source: whole poem, fixed, or sliding window")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                   help="verses of context in mixed mode")
    p.add_argument("--lexicon", default=None, metavar="PATH",
                   help="replace the built-in atonic word list")
    p.add_argument("--catalog", default=None, metavar="PATH",
                   help="replace the built-in verse type catalog")
    p.add_argument("--oh-atonic", action="store_true",
                   help="treat the interjection oh as unstressed")


def _build_lexicon(args) -> LexiconConfig:
    if args.lexicon:
        words = load_word_list(args.lexicon)
        return LexiconConfig(atonic_words=words, oh_is_tonic=not args.oh_atonic)
    base = default_lexicon()
    if args.oh_atonic:
        return LexiconConfig(
            atonic_words=base.atonic_words,
            forced_tonic_words=base.forced_tonic_words,
            oh_is_tonic=False,
        )
    return base


def _build_catalog(args) -> Catalog:
    return Catalog.from_file(args.catalog) if args.catalog else default_catalog()


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_scan(args) -> int:
    try:
        text = _read_text(args.input)
        options = PoemOptions(
            mode=args.mode,
            window=args.window,
            forced_measures=args.measures,
            lexicon=_build_lexicon(args),
            catalog=_build_catalog(args),
        )
        analysis = analyze_poem(text, options)
    except (OSError, ValueError, ScansionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(analysis_dict(analysis), ensure_ascii=False, indent=2))
    elif args.format == "tsv":
        sys.stdout.write(rows_tsv(analysis))
    else:
        sys.stdout.write(rows_pretty(analysis))
    return 0


def cmd_eval(args) -> int:
    try:
        entries = load_corpus(args.corpus, fmt=args.corpus_format)
        report = evaluate(
            entries,
            lexicon=_build_lexicon(args),
            catalog=_build_catalog(args),
            forced_measures=args.measures,
        )
    except (OSError, ValueError, ScansionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(
            {
                "total": report.total,
                "correct": report.correct,
                "accuracy": round(report.accuracy, 4),
                "seconds": round(report.seconds, 3),
                "failures": [
                    {"index": f.index, "verse": f.text,
                     "expected": f.expected, "got": f.got}
                    for f in report.failures
                ],
            },
            ensure_ascii=False, indent=2,
        ))
    else:
        print(report.summary())
        for f in report.failures[: args.show_failures]:
            print(f"  #{f.index}: {f.text}")
            print(f"      expected {f.expected}  got {f.got}")
    return 0


def cmd_serve(args) -> int:
    from .server import serve_forever

    try:
        lexicon = _build_lexicon(args)
        catalog = _build_catalog(args)
    except (OSError, ValueError, ScansionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"listening on http://{args.host}:{args.port}", file=sys.stderr)
    try:
        serve_forever(args.host, args.port, lexicon, catalog)
    except KeyboardInterrupt:
        pass
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="escandir",
        description="Metrical scansion of Spanish verse",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="scan a poem from a file or stdin")
    p_scan.add_argument("input", help="poem file, or - for stdin")
    _add_analysis_args(p_scan)
    p_scan.add_argument("--format", choices=("pretty", "json", "tsv"),
                        default="pretty")
    p_scan.set_defaults(func=cmd_scan)

    p_eval = sub.add_parser("eval", help="evaluate against an annotated corpus")
    p_eval.add_argument("--corpus", required=True, metavar="PATH")
    p_eval.add_argument("--corpus-format", choices=FORMATS, default="dotted")
    _add_analysis_args(p_eval)
    p_eval.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_eval.add_argument("--show-failures", type=int, default=10)
    p_eval.set_defaults(func=cmd_eval)

    p_serve = sub.add_parser("serve", help="serve the HTTP analysis API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8176)
    _add_analysis_args(p_serve)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
