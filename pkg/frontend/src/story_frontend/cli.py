"""Frontend CLI: annotate raw text, export provider fixtures, serve the
knowledge endpoints."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .annotate import annotate
from .config import FrontendConfig
from .fixtures import export_fixtures
from .server import serve


def _cmd_annotate(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    payload = annotate(text, doc_id=Path(args.input).stem)
    Path(args.output).write_text(
        json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"wrote {args.output} ({len(payload['sentences'])} sentences)")
    return 0


def _cmd_export_fixtures(args) -> int:
    corpus = Path(args.corpus)
    out = Path(args.out)
    doc_dir = out / "docs"
    doc_dir.mkdir(parents=True, exist_ok=True)
    documents = []
    text_files = sorted(corpus.glob("*.txt")) if corpus.is_dir() else [corpus]
    if not text_files:
        print(f"no .txt files under {corpus}", file=sys.stderr)
        return 1
    for text_file in text_files:
        payload = annotate(text_file.read_text(encoding="utf-8"), doc_id=text_file.stem)
        target = doc_dir / f"{text_file.stem}.json"
        target.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        documents.append(target)
    export_fixtures(documents, out, FrontendConfig(beam_size=max(args.k, 6)))
    print(f"wrote fixtures under {out}")
    return 0


def _cmd_serve(args) -> int:
    serve(FrontendConfig(port=args.port))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="story-frontend")
    sub = parser.add_subparsers(dest="command", required=True)

    annotate_p = sub.add_parser("annotate", help="annotate a text file")
    annotate_p.add_argument("input")
    annotate_p.add_argument("output")
    annotate_p.set_defaults(func=_cmd_annotate)

    export_p = sub.add_parser("export-fixtures", help="export provider fixtures for a corpus")
    export_p.add_argument("corpus", help="text file or directory of .txt files")
    export_p.add_argument("out", help="output fixture directory")
    export_p.add_argument("--k", type=int, default=6, help="candidates per (event, relation)")
    export_p.set_defaults(func=_cmd_export_fixtures)

    serve_p = sub.add_parser("serve", help="run the knowledge endpoint server")
    serve_p.add_argument("--port", type=int, default=8077)
    serve_p.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
