"""Minimal HTTP API over the analyzer.

POST /analyze takes {"text": "...", "measures": [..], "mode": "...",
"window": n} and returns the analysis rows plus the poem tendency, each
row carrying a display color: red when the verse breaks the tendency,
green for a full pattern coincidence, black otherwise. GET /health
answers {"status": "ok"}.
"""
from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .catalog import Catalog
from .poem import PoemOptions, analyze_poem
from .report import analysis_dict
from .words import LexiconConfig, ScansionError

MAX_BODY = 1 << 20  # 1 MiB of poem is beyond any reasonable request


def _options_from_payload(payload: dict) -> PoemOptions:
    measures = payload.get("measures")
    if measures is not None:
        if not isinstance(measures, list) or not all(
            isinstance(m, int) and m > 0 for m in measures
        ):
            raise ScansionError("measures must be a list of positive integers")
        measures = tuple(measures)
    mode = payload.get("mode", "auto")
    window = payload.get("window", PoemOptions.window)
    if not isinstance(window, int) or window < 1:
        raise ScansionError("window must be a positive integer")
    try:
        return PoemOptions(mode=mode, window=window, forced_measures=measures)
    except ValueError as exc:
        raise ScansionError(str(exc)) from None


class AnalyzeHandler(BaseHTTPRequestHandler):
    lexicon: LexiconConfig | None = None
    catalog: Catalog | None = None

    def log_message(self, fmt, *args):
        pass  # tests and embedded use want a silent server

    def _send(self, code: int, payload: dict):
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(code)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        if self.path == "/health":
            self._send(200, {"status": "ok"})
        else:
            self._send(404, {"error": "not found"})

    def do_POST(self):
        if self.path != "/analyze":
            self._send(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            length = 0
        if length <= 0 or length > MAX_BODY:
            self._send(400, {"error": "bad content length"})
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw)
            if not isinstance(payload, dict):
                raise ValueError("payload must be an object")
            text = payload.get("text")
            if not isinstance(text, str):
                raise ValueError("text must be a string")
            options = _options_from_payload(payload)
        except (ValueError, ScansionError) as exc:
            self._send(400, {"error": str(exc)})
            return
        options = PoemOptions(
            mode=options.mode,
            window=options.window,
            forced_measures=options.forced_measures,
            lexicon=self.lexicon,
            catalog=self.catalog,
        )
        analysis = analyze_poem(text, options)
        self._send(200, analysis_dict(analysis, with_colors=True))


def make_server(
    host: str = "127.0.0.1",
    port: int = 8176,
    lexicon: LexiconConfig | None = None,
    catalog: Catalog | None = None,
) -> ThreadingHTTPServer:
    handler = type(
        "BoundAnalyzeHandler",
        (AnalyzeHandler,),
        {"lexicon": lexicon, "catalog": catalog},
    )
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(host: str, port: int, lexicon=None, catalog=None):
    httpd = make_server(host, port, lexicon, catalog)
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()
