"""Command-line interface.

Subcommands: compile (full pipeline), score-cond / score-arg / score-param
(scorers over JSON-Lines prediction/gold files), validate (PDDL check).
Exit codes: 0 success, 1 input or validation error, 2 provider failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .annotations import SchemaError, ValidationError
from .knowledge import (
    ENV_PROVIDER_URL,
    FixtureMiss,
    FixtureProvider,
    HttpProvider,
    ProviderUnavailable,
    Relation,
    ThresholdPolicy,
)
from .pddl import validate_syntax
from .pipeline import PipelineConfig, run_pipeline
from .scoring import (
    IdMismatch,
    load_conditionals,
    load_containment_pairs,
    load_parameters,
    score_argument_pairs,
    score_conditionals,
    score_parameters,
)
from .synthesis import NegationStrategy

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PROVIDER = 2


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _build_policy(section: dict) -> ThresholdPolicy:
    if not section:
        return ThresholdPolicy()
    theta = dict(ThresholdPolicy().theta)
    for rel in Relation:
        if rel.value in section:
            theta[rel] = float(section[rel.value])
    return ThresholdPolicy(k=int(section.get("k", 6)), theta=theta)


def _cmd_compile(args) -> int:
    config_file = _load_config(args.config)
    section = config_file.get("compile", {})

    documents = [Path(p) for p in (args.documents or section.get("documents", []))]
    if not documents:
        print("compile: no annotation documents given", file=sys.stderr)
        return EXIT_INPUT

    policy = _build_policy(config_file.get("policy", {}))
    mode = args.providers or section.get("providers", "fixture")
    if mode == "fixture":
        fixtures_dir = args.fixtures or section.get("fixtures")
        if not fixtures_dir:
            print("compile: fixture mode needs --fixtures DIR", file=sys.stderr)
            return EXIT_INPUT
        provider = FixtureProvider.from_dir(fixtures_dir, k=policy.k)
    elif mode == "http":
        base_url = args.provider_url or section.get("provider_url")
        provider = HttpProvider(base_url=base_url, k=policy.k)
    else:
        print(f"compile: unknown provider mode {mode!r}", file=sys.stderr)
        return EXIT_INPUT

    kwargs = {}
    if "signals" in section:
        kwargs["signal_phrases"] = tuple(tuple(s.lower().split()) for s in section["signals"])
    pipeline_config = PipelineConfig(
        documents=documents,
        provider=provider,
        negation=NegationStrategy(args.negation or section.get("negation", "local")),
        domain_name=args.name or section.get("name", "story"),
        policy=policy,
        output_path=Path(args.out) if args.out else None,
        trace_path=Path(args.trace) if args.trace else None,
        jobs=args.jobs,
        **kwargs,
    )
    result = run_pipeline(pipeline_config)
    if args.out is None:
        print(result.pddl, end="")
    else:
        print(f"wrote {args.out} ({len(result.domain.actions)} actions)")
    return EXIT_OK


def _print_report(report) -> None:
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))


def _cmd_score_cond(args) -> int:
    report = score_conditionals(load_conditionals(args.predictions), load_conditionals(args.gold))
    _print_report(report)
    return EXIT_OK


def _cmd_score_arg(args) -> int:
    report = score_argument_pairs(
        load_containment_pairs(args.predictions), load_containment_pairs(args.gold)
    )
    _print_report(report)
    return EXIT_OK


def _cmd_score_param(args) -> int:
    report = score_parameters(load_parameters(args.predictions), load_parameters(args.gold))
    _print_report(report)
    return EXIT_OK


def _cmd_validate(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    diagnostics = validate_syntax(text)
    for diag in diagnostics:
        print(f"{args.file}:{diag}")
    if diagnostics:
        return EXIT_INPUT
    print(f"{args.file}: ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="story2pddl",
        description="Compile narrative-text annotations into PDDL action models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compile_p = sub.add_parser("compile", help="run the full pipeline")
    compile_p.add_argument("documents", nargs="*", help="annotation JSON files")
    compile_p.add_argument("--providers", choices=["fixture", "http"], default=None)
    compile_p.add_argument("--fixtures", help="directory with provider fixture JSONL files")
    compile_p.add_argument(
        "--provider-url", help=f"HTTP provider base URL (or ${ENV_PROVIDER_URL})"
    )
    compile_p.add_argument("--negation", choices=["local", "global"], default=None)
    compile_p.add_argument("--name", help="domain name")
    compile_p.add_argument("--out", help="output .pddl path (stdout if omitted)")
    compile_p.add_argument("--trace", help="write a JSON trace to this path")
    compile_p.add_argument("--config", help="TOML config file")
    compile_p.add_argument("--jobs", type=int, default=1, help="document worker count")
    compile_p.set_defaults(func=_cmd_compile)

    for name, func, help_text in (
        ("score-cond", _cmd_score_cond, "score conditional detection"),
        ("score-arg", _cmd_score_arg, "score argument-pair decisions"),
        ("score-param", _cmd_score_param, "score parameter extraction"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("predictions", help="prediction JSONL")
        p.add_argument("gold", help="gold JSONL")
        p.set_defaults(func=func)

    validate_p = sub.add_parser("validate", help="check a PDDL file")
    validate_p.add_argument("file")
    validate_p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProviderUnavailable, FixtureMiss) as exc:
        print(f"provider error: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except (SchemaError, ValidationError, IdMismatch, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
