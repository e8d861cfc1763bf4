"""Scorers for conditional detection, argument-pair decisions and
parameter extraction, plus the JSON-Lines gold formats they consume."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


class IdMismatch(ValueError):
    """Prediction and gold files do not cover the same identifiers."""


@dataclass(frozen=True)
class GoldConditional:
    sentence_id: str
    has_conditional: bool
    # ((condition start, condition end), (consequence start, consequence end))
    pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()

    def __post_init__(self):
        if self.has_conditional != bool(self.pairs):
            raise ValueError(f"{self.sentence_id}: pairs must be non-empty iff has_conditional")


@dataclass(frozen=True)
class GoldContainmentPair:
    sentence_id: str
    container: int
    contained: int
    is_argument: bool

    def __post_init__(self):
        if self.container == self.contained:
            raise ValueError(f"{self.sentence_id}: container equals contained")


@dataclass(frozen=True)
class GoldParameters:
    event_id: str
    subject: str | None
    object: str | None


@dataclass
class ScoreReport:
    true_positives: int = 0
    false_positives: int = 0
    false_negatives: int = 0
    precision: float = 0.0
    recall: float = 0.0
    em_rate: float | None = None
    accuracy: float | None = None
    precision_undefined: bool = False
    recall_undefined: bool = False

    def to_dict(self) -> dict:
        out = {
            "true_positives": self.true_positives,
            "false_positives": self.false_positives,
            "false_negatives": self.false_negatives,
            "precision": self.precision,
            "recall": self.recall,
        }
        if self.em_rate is not None:
            out["em_rate"] = self.em_rate
        if self.accuracy is not None:
            out["accuracy"] = self.accuracy
        if self.precision_undefined:
            out["precision_undefined"] = True
        if self.recall_undefined:
            out["recall_undefined"] = True
        return out


def _ratio(numerator: int, denominator: int) -> tuple[float, bool]:
    if denominator == 0:
        return 0.0, True
    return numerator / denominator, False


def score_conditionals(predictions: list[GoldConditional], gold: list[GoldConditional]) -> ScoreReport:
    """Sentence-level precision/recall on conditional presence; EM-rate is
    the fraction of true positives whose pair spans match gold exactly."""
    pred_by_id = {p.sentence_id: p for p in predictions}
    gold_by_id = {g.sentence_id: g for g in gold}
    if set(pred_by_id) != set(gold_by_id):
        raise IdMismatch("prediction and gold sentence ids differ")

    tp = fp = fn = exact = 0
    for sid, g in gold_by_id.items():
        p = pred_by_id[sid]
        if p.has_conditional and g.has_conditional:
            tp += 1
            if set(p.pairs) == set(g.pairs):
                exact += 1
        elif p.has_conditional:
            fp += 1
        elif g.has_conditional:
            fn += 1

    precision, p_undef = _ratio(tp, tp + fp)
    recall, r_undef = _ratio(tp, tp + fn)
    em_rate, _ = _ratio(exact, tp)
    return ScoreReport(
        true_positives=tp,
        false_positives=fp,
        false_negatives=fn,
        precision=precision,
        recall=recall,
        em_rate=em_rate,
        precision_undefined=p_undef,
        recall_undefined=r_undef,
    )


def score_argument_pairs(predictions: list[GoldContainmentPair], gold: list[GoldContainmentPair]) -> ScoreReport:
    """Pair-level precision/recall on is_argument decisions."""
    key = lambda p: (p.sentence_id, p.container, p.contained)
    pred_by_key = {key(p): p for p in predictions}
    gold_by_key = {key(g): g for g in gold}
    if set(pred_by_key) != set(gold_by_key):
        raise IdMismatch("prediction and gold pair ids differ")

    tp = fp = fn = 0
    for k, g in gold_by_key.items():
        p = pred_by_key[k]
        if p.is_argument and g.is_argument:
            tp += 1
        elif p.is_argument:
            fp += 1
        elif g.is_argument:
            fn += 1
    precision, p_undef = _ratio(tp, tp + fp)
    recall, r_undef = _ratio(tp, tp + fn)
    return ScoreReport(
        true_positives=tp,
        false_positives=fp,
        false_negatives=fn,
        precision=precision,
        recall=recall,
        precision_undefined=p_undef,
        recall_undefined=r_undef,
    )


def score_parameters(predictions: list[GoldParameters], gold: list[GoldParameters]) -> ScoreReport:
    """Accuracy of exact (subject, object) matches, nulls included."""
    pred_by_id = {p.event_id: p for p in predictions}
    gold_by_id = {g.event_id: g for g in gold}
    if set(pred_by_id) != set(gold_by_id):
        raise IdMismatch("prediction and gold event ids differ")

    correct = 0
    for eid, g in gold_by_id.items():
        p = pred_by_id[eid]
        if (p.subject, p.object) == (g.subject, g.object):
            correct += 1
    accuracy, _ = _ratio(correct, len(gold_by_id))
    return ScoreReport(
        true_positives=correct,
        false_positives=len(gold_by_id) - correct,
        false_negatives=0,
        precision=accuracy,
        recall=accuracy,
        accuracy=accuracy,
    )


def _load_jsonl(path) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def load_conditionals(path) -> list[GoldConditional]:
    out = []
    for rec in _load_jsonl(path):
        pairs = tuple(
            (tuple(p["condition"]), tuple(p["consequence"])) for p in rec.get("pairs", [])
        )
        out.append(
            GoldConditional(
                sentence_id=rec["sentence_id"],
                has_conditional=rec["has_conditional"],
                pairs=pairs,
            )
        )
    return out


def load_containment_pairs(path) -> list[GoldContainmentPair]:
    return [
        GoldContainmentPair(
            sentence_id=rec["sentence_id"],
            container=rec["container"],
            contained=rec["contained"],
            is_argument=rec["is_argument"],
        )
        for rec in _load_jsonl(path)
    ]


def load_parameters(path) -> list[GoldParameters]:
    return [
        GoldParameters(event_id=rec["event_id"], subject=rec["subject"], object=rec["object"])
        for rec in _load_jsonl(path)
    ]
