"""CLI subcommands and the HTTP analysis endpoint."""
import http.client
import io
import json
import threading

import pytest

from escandir.cli import main
from escandir.server import make_server

POEM = """\
Amigos, el amor me perjudica
Siempre la claridad viene del cielo
Creía que te había dicho adiós
dentro de su fluir los manantiales
"""


@pytest.fixture
def poem_file(tmp_path):
    path = tmp_path / "poem.txt"
    path.write_text(POEM, encoding="utf-8")
    return str(path)


def test_scan_pretty(poem_file, capsys):
    assert main(["scan", poem_file]) == 0
    out = capsys.readouterr().out
    assert "tendency: 11" in out
    assert "flüir" in out
    assert "2.6.10" in out


def test_scan_json(poem_file, capsys):
    assert main(["scan", poem_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["tendency"] == [11]
    assert data["is_fixed"] is True
    assert len(data["rows"]) == 4
    row = data["rows"][0]
    assert row["syllables"] == 11
    assert row["pattern"] == "2.6.10"
    assert row["type_name"] == "heroico puro"
    assert row["ratio"] == 1.0
    assert row["line"] == 1
    assert "color" not in row


def test_scan_tsv(poem_file, capsys):
    assert main(["scan", poem_file, "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("verse\ttagged\tsyllables")
    assert len(lines) == 5
    assert lines[1].split("\t")[2] == "11"


def test_scan_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(POEM))
    assert main(["scan", "-", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["tendency"] == [11]


def test_scan_forced_measures(poem_file, capsys):
    assert main(["scan", poem_file, "--measures", "12"]) == 0
    out = capsys.readouterr().out
    assert "tendency: 12" in out


def test_scan_missing_file(capsys):
    assert main(["scan", "/nonexistent/poem.txt"]) == 2
    assert "error:" in capsys.readouterr().err


def test_scan_bad_measures(poem_file):
    with pytest.raises(SystemExit):
        main(["scan", poem_file, "--measures", "once"])


def test_eval_pretty(tmp_path, capsys):
    corpus = tmp_path / "gold.tsv"
    corpus.write_text(
        "Amigos, el amor me perjudica\t2.6.10|11\n"
        "dentro de su fluir los manantiales\t1.6.10|11\n",
        encoding="utf-8",
    )
    assert main(["eval", "--corpus", str(corpus)]) == 0
    out = capsys.readouterr().out
    assert "2/2 correct" in out
    assert "accuracy 1.00" in out


def test_eval_json_with_failure(tmp_path, capsys):
    corpus = tmp_path / "gold.tsv"
    corpus.write_text(
        "Amigos, el amor me perjudica\t1.6.10|11\n", encoding="utf-8"
    )
    assert main(["eval", "--corpus", str(corpus), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["total"] == 1
    assert data["correct"] == 0
    assert data["failures"][0]["got"] == "2.6.10|11"


def test_eval_signs_format(tmp_path, capsys):
    corpus = tmp_path / "gold.signs"
    corpus.write_text(
        "Amigos, el amor me perjudica\t-+---+---+-\n", encoding="utf-8"
    )
    assert main(["eval", "--corpus", str(corpus),
                 "--corpus-format", "signs"]) == 0
    assert "1/1 correct" in capsys.readouterr().out


def test_eval_bad_corpus(tmp_path, capsys):
    corpus = tmp_path / "bad.tsv"
    corpus.write_text("verso sin anotar\n", encoding="utf-8")
    assert main(["eval", "--corpus", str(corpus)]) == 2
    assert ":1:" in capsys.readouterr().err


@pytest.fixture
def live_server():
    server = make_server("127.0.0.1", 0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield server.server_address
    server.shutdown()
    server.server_close()


def _request(addr, method, path, body=None):
    conn = http.client.HTTPConnection(*addr, timeout=5)
    headers = {"Content-Type": "application/json"} if body is not None else {}
    conn.request(method, path,
                 body=json.dumps(body) if body is not None else None,
                 headers=headers)
    resp = conn.getresponse()
    raw = resp.read()
    conn.close()
    return resp.status, json.loads(raw) if raw else None


def test_health(live_server):
    status, data = _request(live_server, "GET", "/health")
    assert status == 200
    assert data == {"status": "ok"}


def test_analyze_endpoint(live_server):
    status, data = _request(live_server, "POST", "/analyze", {"text": POEM})
    assert status == 200
    assert data["tendency"] == [11]
    colors = [r["color"] for r in data["rows"]]
    assert colors[0] == "green"
    assert "red" not in colors


def test_analyze_colors_breaking_verse(live_server):
    poem = POEM + "sol\n"
    status, data = _request(live_server, "POST", "/analyze", {"text": poem})
    assert status == 200
    assert data["rows"][-1]["color"] == "red"


def test_analyze_respects_measures(live_server):
    status, data = _request(
        live_server, "POST", "/analyze", {"text": POEM, "measures": [12]}
    )
    assert status == 200
    assert data["tendency"] == [12]


def test_analyze_rejects_bad_payloads(live_server):
    for body in [{"measures": [11]}, {"text": 7},
                 {"text": "hola", "measures": "11"},
                 {"text": "hola", "window": 0},
                 {"text": "hola", "mode": "loose"}]:
        status, data = _request(live_server, "POST", "/analyze", body)
        assert status == 400, body
        assert "error" in data

    conn = http.client.HTTPConnection(*live_server, timeout=5)
    conn.request("POST", "/analyze", body=b"{not json",
                 headers={"Content-Type": "application/json"})
    assert conn.getresponse().status == 400
    conn.close()


def test_unknown_paths(live_server):
    assert _request(live_server, "GET", "/nope")[0] == 404
    assert _request(live_server, "POST", "/nope", {"text": "x"})[0] == 404


def test_preflight(live_server):
    conn = http.client.HTTPConnection(*live_server, timeout=5)
    conn.request("OPTIONS", "/analyze")
    resp = conn.getresponse()
    assert resp.status == 204
    assert resp.getheader("Access-Control-Allow-Origin") == "*"
    conn.close()
