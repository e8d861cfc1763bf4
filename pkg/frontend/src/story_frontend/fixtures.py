"""Offline fixture export.

The exporter runs the downstream compiler through its own CLI against a
local recording server, so the fixture files contain exactly the queries
a fixture-mode run will make: same interface, same answers, no drift.
"""

from __future__ import annotations

import json
import socket
import subprocess
import sys
import threading
import time
from pathlib import Path

from .config import FrontendConfig
from .server import create_app

COMPILER = [sys.executable, "-m", "story2pddl.cli"]


class QueryRecorder:
    def __init__(self):
        self.generation_log: dict[tuple[str, str], list[dict]] = {}
        self.similarity_log: dict[tuple[str, str], float] = {}
        self.nli_log: dict[tuple[str, str], dict] = {}
        self._lock = threading.Lock()

    @staticmethod
    def _norm(text: str) -> str:
        return " ".join(text.split()).lower()

    def generation(self, event, relation, beam):
        with self._lock:
            self.generation_log[(self._norm(event), relation)] = beam

    def similarity(self, a, b, score):
        key = tuple(sorted((self._norm(a), self._norm(b))))
        with self._lock:
            self.similarity_log[key] = score

    def nli(self, a, b, verdict):
        with self._lock:
            self.nli_log[(self._norm(a), self._norm(b))] = verdict

    def write(self, out_dir: Path) -> None:
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "generation.jsonl", "w", encoding="utf-8") as fh:
            for (event, relation), beam in sorted(self.generation_log.items()):
                if not beam:
                    fh.write(json.dumps({"event": event, "relation": relation, "phrase": None, "p": 0.0}) + "\n")
                for item in beam:
                    fh.write(
                        json.dumps(
                            {"event": event, "relation": relation, "phrase": item["phrase"], "p": item["p"]}
                        )
                        + "\n"
                    )
        with open(out_dir / "similarity.jsonl", "w", encoding="utf-8") as fh:
            for (a, b), score in sorted(self.similarity_log.items()):
                fh.write(json.dumps({"a": a, "b": b, "score": score}) + "\n")
        with open(out_dir / "nli.jsonl", "w", encoding="utf-8") as fh:
            for (a, b), verdict in sorted(self.nli_log.items()):
                fh.write(
                    json.dumps({"a": a, "b": b, "label": verdict["label"], "score": verdict["score"]}) + "\n"
                )


class LocalServer:
    """A real HTTP server on a free port, running in a background thread."""

    def __init__(self, config: FrontendConfig | None = None, recorder=None):
        import uvicorn

        self.app = create_app(config, recorder=recorder)
        sock = socket.socket()
        sock.bind(("127.0.0.1", 0))
        self.port = sock.getsockname()[1]
        sock.close()
        self._server = uvicorn.Server(
            uvicorn.Config(self.app, host="127.0.0.1", port=self.port, log_level="error")
        )
        self._thread = threading.Thread(target=self._server.run, daemon=True)

    @property
    def base_url(self) -> str:
        return f"http://127.0.0.1:{self.port}"

    def __enter__(self) -> "LocalServer":
        self._thread.start()
        deadline = time.time() + 10
        while not self._server.started:
            if time.time() > deadline:
                raise RuntimeError("frontend server did not start")
            time.sleep(0.02)
        return self

    def __exit__(self, *exc) -> None:
        self._server.should_exit = True
        self._thread.join(timeout=10)


def run_compiler(documents: list[Path], provider_url: str, out: Path, trace: Path | None = None,
                 negation: str = "local") -> subprocess.CompletedProcess:
    cmd = COMPILER + [
        "compile", *map(str, documents),
        "--providers", "http",
        "--provider-url", provider_url,
        "--negation", negation,
        "--out", str(out),
    ]
    if trace is not None:
        cmd += ["--trace", str(trace)]
    return subprocess.run(cmd, capture_output=True, text=True)


def export_fixtures(documents: list[Path], out_dir: Path, config: FrontendConfig | None = None,
                    negations: tuple[str, ...] = ("local", "global")) -> Path:
    """Record every provider query the compiler makes over the documents
    and write the three fixture files."""
    recorder = QueryRecorder()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with LocalServer(config, recorder=recorder) as server:
        for negation in negations:
            proc = run_compiler(
                documents, server.base_url, out_dir / f"_probe-{negation}.pddl", negation=negation
            )
            if proc.returncode != 0:
                raise RuntimeError(
                    f"compiler failed under --negation {negation}: {proc.stderr.strip()}"
                )
    for probe in out_dir.glob("_probe-*.pddl"):
        probe.unlink()
    recorder.write(out_dir)
    return out_dir
