import json
import subprocess
import sys
from pathlib import Path

import pytest

from story2pddl.cli import main
from story2pddl.pipeline import DocumentErrors, PipelineConfig, run_pipeline
from story2pddl.synthesis import NegationStrategy

from conftest import DOCS, FIXTURES


def compile_config(doc_names, provider, **kwargs):
    return PipelineConfig(
        documents=[DOCS / f"{n}.json" for n in doc_names],
        provider=provider,
        **kwargs,
    )


class TestRunPipeline:
    def test_aladdin_action_set(self, fixture_provider):
        result = run_pipeline(compile_config(["aladdin"], fixture_provider, domain_name="aladdin"))
        assert sorted(a.name for a in result.domain.actions) == sorted(
            [
                "travel", "slay", "take", "hand", "summon", "cast", "fall-in", "wed",
                "be-confined", "be-not-confined", "rub", "see", "make",
            ]
        )

    def test_west_action_set(self, fixture_provider):
        result = run_pipeline(compile_config(["west"], fixture_provider, domain_name="west"))
        assert sorted(a.name for a in result.domain.actions) == sorted(
            [
                "die", "heal", "shoot", "steal", "get-bitten",
                "intend-to-heal", "intend-to-shoot", "use", "anger",
            ]
        )

    def test_empty_corpus(self, fixture_provider):
        result = run_pipeline(PipelineConfig(documents=[], provider=fixture_provider))
        assert result.domain.actions == []
        assert "(define (domain story)" in result.pddl

    def test_condition_event_gets_own_action(self, fixture_provider):
        result = run_pipeline(compile_config(["simon"], fixture_provider))
        names = {a.name for a in result.domain.actions}
        assert "marry" in names and "inherit" in names
        assert not any("if" in n for n in names)

    def test_outputs_written(self, fixture_provider, tmp_path):
        out = tmp_path / "domain.pddl"
        trace = tmp_path / "trace.json"
        run_pipeline(
            compile_config(
                ["hit_example"], fixture_provider, output_path=out, trace_path=trace, domain_name="fig"
            )
        )
        assert out.read_text().startswith("(define (domain fig)")
        payload = json.loads(trace.read_text())
        assert payload["documents"][0]["doc_id"] == "hit-example"

    def test_trace_every_literal_traceable(self, fixture_provider):
        result = run_pipeline(compile_config(["hit_example", "west"], fixture_provider))
        for action_model, action_trace in zip(result.domain.actions, result.trace["actions"]):
            emitted_positive = {
                (l.predicate, tuple(l.args)) for l in action_model.preconditions + action_model.effects if not l.negated
            }
            candidate_literals = {
                (c["literal"]["predicate"], tuple(c["literal"]["args"]))
                for c in action_trace["candidates"]
                if c["literal"]
            }
            kept_by_filter = {
                (f["predicate"],) for f in action_trace["filter_decisions"] if f["kept"]
            }
            assert {p for p, _ in emitted_positive} <= {p for (p,) in kept_by_filter}
            assert emitted_positive <= candidate_literals
            for negated in (l for l in action_model.preconditions + action_model.effects if l.negated):
                assert any(
                    n["predicate"] == negated.predicate for n in action_trace["negations"]
                )

    def test_byte_determinism(self, fixture_provider):
        configs = [
            compile_config(["hit_example", "aladdin", "west"], fixture_provider, jobs=j) for j in (1, 3)
        ]
        results = [run_pipeline(c) for c in configs]
        blobs = {
            json.dumps(r.trace, sort_keys=True) + r.pddl for r in results
        }
        assert len(blobs) == 1

    def test_document_errors_aggregated(self, fixture_provider, tmp_path):
        bad_one = tmp_path / "one.json"
        bad_two = tmp_path / "two.json"
        bad_one.write_text("{}")
        bad_two.write_text("not json")
        with pytest.raises(DocumentErrors) as exc_info:
            run_pipeline(PipelineConfig(documents=[bad_one, bad_two], provider=fixture_provider))
        assert len(exc_info.value.failures) == 2
        assert "one.json" in str(exc_info.value) and "two.json" in str(exc_info.value)

    def test_global_strategy_superset(self, fixture_provider):
        local = run_pipeline(
            compile_config(["hit_example"], fixture_provider, negation=NegationStrategy.LOCAL)
        )
        global_ = run_pipeline(
            compile_config(["hit_example"], fixture_provider, negation=NegationStrategy.GLOBAL)
        )

        def negated(result):
            return {
                (a.name, l.predicate, l.args, "pre" if l in a.preconditions else "eff")
                for a in result.domain.actions
                for l in a.preconditions + a.effects
                if l.negated
            }

        assert negated(local) <= negated(global_)


class TestCli:
    def test_compile_to_stdout(self, capsys):
        code = main(
            [
                "compile",
                str(DOCS / "hit_example.json"),
                "--providers", "fixture",
                "--fixtures", str(FIXTURES),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "(:action hit" in out

    def test_compile_with_outputs(self, tmp_path, capsys):
        out = tmp_path / "west.pddl"
        trace = tmp_path / "trace.json"
        code = main(
            [
                "compile", str(DOCS / "west.json"),
                "--fixtures", str(FIXTURES),
                "--out", str(out),
                "--trace", str(trace),
                "--negation", "local",
                "--name", "west",
            ]
        )
        assert code == 0
        assert out.exists() and trace.exists()

    def test_compile_config_file(self, tmp_path, capsys):
        config = tmp_path / "run.toml"
        config.write_text(
            "[compile]\n"
            f'documents = ["{DOCS / "hit_example.json"}"]\n'
            f'fixtures = "{FIXTURES}"\n'
            'negation = "local"\n'
            'name = "fig"\n'
        )
        assert main(["compile", "--config", str(config)]) == 0
        assert "(define (domain fig)" in capsys.readouterr().out

    def test_missing_documents_is_input_error(self, capsys):
        assert main(["compile", "--fixtures", str(FIXTURES)]) == 1

    def test_signal_override(self):
        # With only "whenever" active, if-sentences stop splitting.
        class SilentProvider:
            def generate(self, event, relation):
                return []

        result = run_pipeline(
            PipelineConfig(
                documents=[DOCS / "conditions.json"],
                provider=SilentProvider(),
                signal_phrases=(("whenever",),),
            )
        )
        patterns = {
            p["pattern"] for d in result.trace["documents"] for p in d["condition_pairs"]
        }
        assert patterns == {"S3"}  # only the whenever-sentence still matches

    def test_invalid_annotation_is_input_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"doc_id": "x"}')
        code = main(["compile", str(bad), "--fixtures", str(FIXTURES)])
        assert code == 1

    def test_provider_failure_exit_code(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("STORY2PDDL_PROVIDER_URL", "http://127.0.0.1:1")
        code = main(["compile", str(DOCS / "hit_example.json"), "--providers", "http"])
        assert code == 2

    def test_fixture_miss_is_provider_failure(self, tmp_path, capsys):
        incomplete = tmp_path / "fixtures"
        incomplete.mkdir()
        (incomplete / "generation.jsonl").write_text("")
        code = main(["compile", str(DOCS / "hit_example.json"), "--fixtures", str(incomplete)])
        assert code == 2

    def test_validate_ok(self, tmp_path, capsys):
        target = tmp_path / "d.pddl"
        main(
            [
                "compile", str(DOCS / "hit_example.json"),
                "--fixtures", str(FIXTURES),
                "--out", str(target),
            ]
        )
        assert main(["validate", str(target)]) == 0

    def test_validate_broken(self, tmp_path, capsys):
        target = tmp_path / "broken.pddl"
        target.write_text("(define (domain d)")
        assert main(["validate", str(target)]) == 1
        assert "unclosed" in capsys.readouterr().out

    def test_score_cond_cli(self, tmp_path, capsys):
        gold = tmp_path / "gold.jsonl"
        pred = tmp_path / "pred.jsonl"
        rows_gold = [
            {"sentence_id": "s1", "has_conditional": True,
             "pairs": [{"condition": [6, 7], "consequence": [2, 3]}]},
            {"sentence_id": "s2", "has_conditional": False, "pairs": []},
        ]
        rows_pred = [
            {"sentence_id": "s1", "has_conditional": True,
             "pairs": [{"condition": [6, 7], "consequence": [2, 3]}]},
            {"sentence_id": "s2", "has_conditional": False, "pairs": []},
        ]
        gold.write_text("\n".join(json.dumps(r) for r in rows_gold))
        pred.write_text("\n".join(json.dumps(r) for r in rows_pred))
        assert main(["score-cond", str(pred), str(gold)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["precision"] == 1.0 and report["em_rate"] == 1.0

    def test_score_param_cli(self, tmp_path, capsys):
        rows = [{"event_id": "e1", "subject": "a", "object": None}]
        gold = tmp_path / "gold.jsonl"
        pred = tmp_path / "pred.jsonl"
        gold.write_text("\n".join(json.dumps(r) for r in rows))
        pred.write_text("\n".join(json.dumps(r) for r in rows))
        assert main(["score-param", str(pred), str(gold)]) == 0
        assert json.loads(capsys.readouterr().out)["accuracy"] == 1.0

    def test_score_arg_cli(self, tmp_path, capsys):
        rows = [{"sentence_id": "s1", "container": 1, "contained": 2, "is_argument": True}]
        gold = tmp_path / "gold.jsonl"
        pred = tmp_path / "pred.jsonl"
        gold.write_text("\n".join(json.dumps(r) for r in rows))
        pred.write_text("\n".join(json.dumps(r) for r in rows))
        assert main(["score-arg", str(pred), str(gold)]) == 0

    def test_module_entrypoint(self):
        proc = subprocess.run(
            [sys.executable, "-m", "story2pddl.cli", "--help"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "compile" in proc.stdout
