import json
import subprocess
import sys
from pathlib import Path

from story_frontend.annotate import annotate
from story_frontend.fixtures import LocalServer, export_fixtures, run_compiler

from conftest import CORPUS


def write_corpus_docs(tmp_path) -> list[Path]:
    docs = []
    for i, line in enumerate(CORPUS.read_text().splitlines()):
        if not line.strip():
            continue
        payload = annotate(line, doc_id=f"s{i}")
        target = tmp_path / f"s{i:02d}.json"
        target.write_text(json.dumps(payload, indent=2) + "\n")
        docs.append(target)
    return docs


def test_online_compile_succeeds(tmp_path):
    docs = write_corpus_docs(tmp_path)
    with LocalServer() as server:
        proc = run_compiler(docs, server.base_url, tmp_path / "online.pddl", tmp_path / "online.json")
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "online.pddl").read_text().startswith("(define (domain")


def test_offline_online_equivalence(tmp_path):
    docs = write_corpus_docs(tmp_path)

    online_pddl = tmp_path / "online.pddl"
    online_trace = tmp_path / "online-trace.json"
    with LocalServer() as server:
        proc = run_compiler(docs, server.base_url, online_pddl, online_trace)
    assert proc.returncode == 0, proc.stderr

    fixture_dir = export_fixtures(docs, tmp_path / "fixtures")
    for name in ("generation.jsonl", "similarity.jsonl", "nli.jsonl"):
        assert (fixture_dir / name).exists()

    offline_pddl = tmp_path / "offline.pddl"
    offline_trace = tmp_path / "offline-trace.json"
    proc = subprocess.run(
        [
            sys.executable, "-m", "story2pddl.cli", "compile", *map(str, docs),
            "--providers", "fixture",
            "--fixtures", str(fixture_dir),
            "--out", str(offline_pddl),
            "--trace", str(offline_trace),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr

    assert offline_pddl.read_bytes() == online_pddl.read_bytes()
    assert offline_trace.read_bytes() == online_trace.read_bytes()


def test_export_fixture_record_bound(tmp_path):
    doc = tmp_path / "one.json"
    doc.write_text(json.dumps(annotate("Bryan hits Jack in the face.", doc_id="one")))
    fixture_dir = export_fixtures([doc], tmp_path / "fx")
    rows = [
        json.loads(line)
        for line in (fixture_dir / "generation.jsonl").read_text().splitlines()
    ]
    per_event = {}
    for row in rows:
        per_event.setdefault(row["event"], []).append(row)
    for event, event_rows in per_event.items():
        assert len(event_rows) <= 30, event  # 5 relations * k=6

    con_doc = tmp_path / "statements.json"
    con_doc.write_text(json.dumps(annotate("The lamp is magic.", doc_id="statements")))
    empty_dir = export_fixtures([con_doc], tmp_path / "fx-empty")
    assert (empty_dir / "generation.jsonl").read_text() == ""


def test_cli_annotate_and_fixtures(tmp_path):
    source = tmp_path / "mini.txt"
    source.write_text("Bryan hits Jack in the face.\n")
    out_json = tmp_path / "mini.json"
    proc = subprocess.run(
        [sys.executable, "-m", "story_frontend.cli", "annotate", str(source), str(out_json)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(out_json.read_text())["sentences"]

    out_dir = tmp_path / "fixtures"
    proc = subprocess.run(
        [sys.executable, "-m", "story_frontend.cli", "export-fixtures", str(source), str(out_dir)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out_dir / "generation.jsonl").exists()
