import json

import pytest
from hypothesis import given, strategies as st

from story2pddl.scoring import (
    GoldConditional,
    GoldContainmentPair,
    GoldParameters,
    IdMismatch,
    load_conditionals,
    load_containment_pairs,
    load_parameters,
    score_argument_pairs,
    score_conditionals,
    score_parameters,
)


def conditional_sets(tp, fp, fn, tn, exact_of_tp):
    """Synthetic aligned prediction/gold lists with the given confusion."""
    gold, pred = [], []
    sid = 0

    def add(g_has, p_has, exact):
        nonlocal sid
        sid += 1
        name = f"s{sid}"
        g_pairs = (((1, 2), (4, 5)),) if g_has else ()
        if p_has:
            p_pairs = g_pairs if (g_has and exact) else (((0, 1), (2, 3)),)
        else:
            p_pairs = ()
        gold.append(GoldConditional(sentence_id=name, has_conditional=g_has, pairs=g_pairs))
        pred.append(GoldConditional(sentence_id=name, has_conditional=p_has, pairs=p_pairs))

    for i in range(tp):
        add(True, True, exact=i < exact_of_tp)
    for _ in range(fp):
        add(False, True, exact=False)
    for _ in range(fn):
        add(True, False, exact=False)
    for _ in range(tn):
        add(False, False, exact=False)
    return pred, gold


class TestScoreConditionals:
    def test_headline_confusion_counts(self):
        pred, gold = conditional_sets(tp=53, fp=4, fn=22, tn=21, exact_of_tp=45)
        report = score_conditionals(pred, gold)
        assert report.true_positives == 53
        assert report.false_positives == 4
        assert report.false_negatives == 22
        assert round(report.precision, 2) == 0.93
        assert round(report.recall, 2) == 0.71
        assert round(report.em_rate, 2) == 0.85

    def test_em_rate_counts_exact_span_matches_only(self):
        pred, gold = conditional_sets(tp=2, fp=0, fn=0, tn=0, exact_of_tp=1)
        assert score_conditionals(pred, gold).em_rate == 0.5

    def test_degenerate_no_predictions(self):
        pred, gold = conditional_sets(tp=0, fp=0, fn=3, tn=1, exact_of_tp=0)
        report = score_conditionals(pred, gold)
        assert report.precision == 0.0 and report.precision_undefined
        assert report.recall == 0.0 and not report.recall_undefined

    def test_id_mismatch(self):
        pred, gold = conditional_sets(tp=1, fp=0, fn=0, tn=0, exact_of_tp=1)
        with pytest.raises(IdMismatch):
            score_conditionals(pred, gold[:0])

    def test_pairs_iff_flag(self):
        with pytest.raises(ValueError):
            GoldConditional(sentence_id="s", has_conditional=True, pairs=())
        with pytest.raises(ValueError):
            GoldConditional(sentence_id="s", has_conditional=False, pairs=(((0, 1), (2, 3)),))


def pair(sid, is_arg):
    return GoldContainmentPair(sentence_id=sid, container=1, contained=2, is_argument=is_arg)


class TestScoreArgumentPairs:
    def test_all_predictions_correct_low_recall(self):
        # 34 gold positives, 15 predicted, all of them correct
        gold = [pair(f"s{i}", i < 34) for i in range(114)]
        pred = [pair(f"s{i}", i < 15) for i in range(114)]
        report = score_argument_pairs(pred, gold)
        assert report.precision == 1.0
        assert round(report.recall, 2) == 0.44

    def test_empty_predictions_flagged(self):
        gold = [pair("a", True), pair("b", True)]
        pred = [pair("a", False), pair("b", False)]
        report = score_argument_pairs(pred, gold)
        assert report.precision == 0.0 and report.precision_undefined
        assert report.recall == 0.0

    def test_perfect_predictions(self):
        gold = [pair("a", True), pair("b", False)]
        report = score_argument_pairs(gold, gold)
        assert report.precision == report.recall == 1.0

    def test_id_mismatch(self):
        with pytest.raises(IdMismatch):
            score_argument_pairs([pair("a", True)], [pair("b", True)])


def params(eid, subject, obj):
    return GoldParameters(event_id=eid, subject=subject, object=obj)


class TestScoreParameters:
    def test_accuracy_46_of_65(self):
        gold = [params(f"e{i}", "s", "o") for i in range(65)]
        pred = [params(f"e{i}", "s", "o" if i < 46 else "WRONG") for i in range(65)]
        report = score_parameters(pred, gold)
        assert round(report.accuracy * 100, 1) == 70.8

    def test_accuracy_41_of_60(self):
        gold = [params(f"e{i}", "s", None) for i in range(60)]
        pred = [params(f"e{i}", "s" if i < 41 else None, None) for i in range(60)]
        assert round(score_parameters(pred, gold).accuracy * 100, 1) == 68.3

    def test_null_sensitive(self):
        gold = [params("e1", None, None)]
        assert score_parameters([params("e1", None, None)], gold).accuracy == 1.0
        assert score_parameters([params("e1", "x", None)], gold).accuracy == 0.0

    def test_id_mismatch(self):
        with pytest.raises(IdMismatch):
            score_parameters([params("e1", None, None)], [params("e2", None, None)])


@given(
    tp=st.integers(min_value=0, max_value=40),
    fp=st.integers(min_value=0, max_value=40),
    fn=st.integers(min_value=0, max_value=40),
    tn=st.integers(min_value=0, max_value=40),
    exact=st.integers(min_value=0, max_value=40),
)
def test_scorer_ratios_exact(tp, fp, fn, tn, exact):
    exact = min(exact, tp)
    pred, gold = conditional_sets(tp, fp, fn, tn, exact)
    report = score_conditionals(pred, gold)
    assert report.true_positives == tp
    assert report.false_positives == fp
    assert report.false_negatives == fn
    if tp + fp:
        assert report.precision == tp / (tp + fp)
    else:
        assert report.precision_undefined
    if tp + fn:
        assert report.recall == tp / (tp + fn)
    if tp:
        assert report.em_rate == exact / tp


def test_jsonl_loaders(tmp_path):
    cond = tmp_path / "cond.jsonl"
    cond.write_text(
        json.dumps(
            {
                "sentence_id": "s1",
                "has_conditional": True,
                "pairs": [{"condition": [6, 7], "consequence": [2, 3]}],
            }
        )
        + "\n"
        + json.dumps({"sentence_id": "s2", "has_conditional": False, "pairs": []})
        + "\n"
    )
    rows = load_conditionals(cond)
    assert rows[0].pairs == (((6, 7), (2, 3)),)

    arg = tmp_path / "arg.jsonl"
    arg.write_text(json.dumps({"sentence_id": "s1", "container": 1, "contained": 3, "is_argument": True}) + "\n")
    assert load_containment_pairs(arg)[0].container == 1

    par = tmp_path / "par.jsonl"
    par.write_text(json.dumps({"event_id": "e1", "subject": "Hank", "object": None}) + "\n")
    assert load_parameters(par)[0].object is None
