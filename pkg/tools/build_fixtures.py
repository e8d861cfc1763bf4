#!/usr/bin/env python3
"""Build the committed provider fixtures under tests/data/fixtures/.

A recording provider answers pipeline queries from the curated tables
below (falling back to empty/neutral defaults) and logs every query it
receives; the fixture files are exactly the recorded query/answer pairs,
so fixture-mode runs can never miss. Both negation strategies are
recorded. Unused table keys are reported, since they indicate a drifted
event text.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from story2pddl.knowledge import (  # noqa: E402
    NliLabel,
    NliVerdict,
    Relation,
    RelationPrediction,
    ThresholdPolicy,
    normalize_key,
)
from story2pddl.pipeline import PipelineConfig, run_pipeline  # noqa: E402
from story2pddl.synthesis import NegationStrategy  # noqa: E402

DOCS = REPO / "tests" / "data" / "docs"
OUT = REPO / "tests" / "data" / "fixtures"

DEFAULT_SIMILARITY = 0.05
DEFAULT_NLI = ("neutral", 0.35)

# (event text, relation) -> [(phrase, probability), ...]; thresholds are
# xNeed 0.7, x/oEffect 0.5, x/oReact 0.2.
GENERATION: dict[tuple[str, str], list[tuple[str, float]]] = {
    # --- hit example ---
    ("bryan hits jack in the face", "xNeed"): [
        ("be close to Jack", 0.8),
        ("be angry at Jack", 0.75),
        ("be in a fight Jack", 0.72),
        ("be near Jack", 0.7),
    ],
    ("bryan hits jack in the face", "xEffect"): [("none", 0.9)],
    ("bryan hits jack in the face", "oEffect"): [
        ("yell at Bryan", 0.8),
        ("be injured", 0.7),
    ],
    ("bryan hits jack in the face", "xReact"): [("angry at Jack", 0.15)],
    ("bryan hits jack in the face", "oReact"): [("hurt", 0.25)],
    # --- old american west ---
    ("hank stole antivenom from the shop", "xNeed"): [("be in the shop", 0.8)],
    ("hank stole antivenom from the shop", "xEffect"): [("have antivenom", 0.7)],
    ("hank stole antivenom from the shop", "oEffect"): [("be gone", 0.6)],
    ("hank stole antivenom from the shop", "xReact"): [("guilty", 0.3)],
    ("which angered sheriff william", "xNeed"): [("be unfair", 0.75)],
    ("which angered sheriff william", "xEffect"): [("cause trouble", 0.6)],
    ("which angered sheriff william", "oEffect"): [("be angry", 0.55)],
    ("hank got bitten by a snake", "xNeed"): [("be near a snake", 0.8)],
    ("hank got bitten by a snake", "xEffect"): [
        ("be poisoned", 0.7),
        ("need antivenom", 0.6),
    ],
    ("hank got bitten by a snake", "xReact"): [("scared", 0.3)],
    (
        "carl the shopkeeper healed timmy using carl the shopkeeper's medicine",
        "xNeed",
    ): [("have medicine", 0.85)],
    (
        "carl the shopkeeper healed timmy using carl the shopkeeper's medicine",
        "xEffect",
    ): [("use up the medicine", 0.55)],
    (
        "carl the shopkeeper healed timmy using carl the shopkeeper's medicine",
        "oEffect",
    ): [("be healthy", 0.6)],
    (
        "carl the shopkeeper healed timmy using carl the shopkeeper's medicine",
        "xReact",
    ): [("relieved", 0.25)],
    (
        "carl the shopkeeper healed timmy using carl the shopkeeper's medicine",
        "oReact",
    ): [("grateful", 0.22)],
    ("carl the shopkeeper using carl the shopkeeper's medicine", "xNeed"): [
        ("have medicine", 0.8)
    ],
    ("carl the shopkeeper using carl the shopkeeper's medicine", "xEffect"): [
        ("run out of medicine", 0.55)
    ],
    ("carl the shopkeeper using carl the shopkeeper's medicine", "oEffect"): [
        ("be used up", 0.5)
    ],
    ("sheriff william intended to shoot hank for hank's crime", "xNeed"): [
        ("be angry", 0.75)
    ],
    ("sheriff william intended to shoot hank for hank's crime", "xEffect"): [
        ("get ready to shoot", 0.55)
    ],
    ("sheriff william intended to shoot hank for hank's crime", "oEffect"): [
        ("be afraid", 0.5)
    ],
    ("sheriff william intended to shoot hank for hank's crime", "xReact"): [
        ("determined", 0.3)
    ],
    ("carl intended to heal timmy", "xNeed"): [("want to help", 0.72)],
    ("carl intended to heal timmy", "xEffect"): [("prepare the medicine", 0.55)],
    ("carl intended to heal timmy", "oEffect"): [("be hopeful", 0.5)],
    ("sheriff william shot hank", "xNeed"): [("have a gun", 0.8)],
    ("sheriff william shot hank", "xEffect"): [("fire the gun", 0.55)],
    ("sheriff william shot hank", "oEffect"): [("be wounded", 0.6)],
    ("sheriff william shot hank", "oReact"): [("pain", 0.25)],
    ("hank died", "xNeed"): [("be wounded", 0.75)],
    ("hank died", "xEffect"): [("be dead", 0.6)],
    # --- aladdin ---
    ("aladdin travels to the castle", "xNeed"): [("know the way", 0.8)],
    ("aladdin travels to the castle", "xEffect"): [("arrive at the castle", 0.6)],
    ("aladdin travels to the castle", "xReact"): [("tired", 0.25)],
    ("aladdin slays the dragon", "xNeed"): [("have a sword", 0.8)],
    ("aladdin slays the dragon", "xEffect"): [("be victorious", 0.55)],
    ("aladdin slays the dragon", "oEffect"): [("be dead", 0.6)],
    ("aladdin slays the dragon", "xReact"): [("proud", 0.3)],
    ("aladdin takes the magic lamp", "xNeed"): [("be near the magic lamp", 0.75)],
    ("aladdin takes the magic lamp", "xEffect"): [("have the magic lamp", 0.6)],
    ("aladdin hands the magic lamp to king jafar", "xNeed"): [
        ("hold the magic lamp", 0.72)
    ],
    ("aladdin hands the magic lamp to king jafar", "xEffect"): [
        ("no longer have the magic lamp", 0.55)
    ],
    ("aladdin hands the magic lamp to king jafar", "oEffect"): [
        ("belong to King Jafar", 0.5)
    ],
    ("king jafar summons the genie", "xNeed"): [("be near the genie", 0.8)],
    ("king jafar summons the genie", "xEffect"): [("see the genie", 0.5)],
    ("king jafar summons the genie", "oEffect"): [("appear", 0.55)],
    ("the genie casts a love spell on the princess", "xNeed"): [("know magic", 0.75)],
    ("the genie casts a love spell on the princess", "xEffect"): [("grow weak", 0.55)],
    ("the genie casts a love spell on the princess", "oEffect"): [("take effect", 0.5)],
    ("the princess falls in love with king jafar", "xNeed"): [("meet someone", 0.72)],
    ("the princess falls in love with king jafar", "xEffect"): [("be happy", 0.55)],
    ("the princess falls in love with king jafar", "xReact"): [("joyful", 0.3)],
    ("king jafar weds the princess", "xNeed"): [("love the princess", 0.8)],
    ("king jafar weds the princess", "xEffect"): [("be married to the princess", 0.55)],
    ("king jafar weds the princess", "oEffect"): [("be married", 0.5)],
    ("king jafar weds the princess", "xReact"): [("happy", 0.25)],
    ("the genie is confined within the magic lamp", "xNeed"): [("anger a sorcerer", 0.72)],
    ("the genie is confined within the magic lamp", "xEffect"): [("stay in the lamp", 0.55)],
    ("the genie is confined within the magic lamp", "xReact"): [("miserable", 0.25)],
    ("the genie is not confined within the magic lamp", "xNeed"): [("be freed", 0.75)],
    ("the genie is not confined within the magic lamp", "xEffect"): [("leave the lamp", 0.55)],
    ("the genie is not confined within the magic lamp", "xReact"): [("joyful", 0.22)],
    ("aladdin rubs the magic lamp", "xNeed"): [("hold the magic lamp", 0.78)],
    ("aladdin rubs the magic lamp", "xEffect"): [("summon the genie", 0.55)],
    ("aladdin rubs the magic lamp", "oEffect"): [("glow", 0.5)],
    ("aladdin sees the genie", "xNeed"): [("look around", 0.75)],
    ("aladdin sees the genie", "xEffect"): [("know about the genie", 0.5)],
    ("aladdin sees the genie", "xReact"): [("amazed", 0.3)],
    ("the genie makes a promise", "xNeed"): [("owe a favor", 0.72)],
    ("the genie makes a promise", "xEffect"): [("keep a promise", 0.5)],
    # --- simon ---
    ("simon takes great pains to accept simon as gay", "xNeed"): [
        ("struggle with himself", 0.72)
    ],
    ("simon takes great pains to accept simon as gay", "xEffect"): [
        ("accept himself", 0.5)
    ],
    ("simon takes great pains to accept simon as gay", "xReact"): [("relieved", 0.25)],
    ("simon inherit simon's grandfather 's fortune", "xNeed"): [("marry a woman", 0.75)],
    ("simon inherit simon's grandfather 's fortune", "xEffect"): [("be rich", 0.55)],
    ("simon inherit simon's grandfather 's fortune", "oEffect"): [
        ("belong to Simon", 0.5)
    ],
    ("simon inherit simon's grandfather 's fortune", "xReact"): [("glad", 0.25)],
    ("simon marries a woman", "xNeed"): [("find a woman", 0.72)],
    ("simon marries a woman", "xEffect"): [("be married", 0.5)],
    ("simon marries a woman", "oEffect"): [("be married", 0.5)],
}

# Unordered phrase pairs with non-default cosine similarity.
SIMILARITY: dict[frozenset[str], float] = {
    frozenset({"be close to jack", "be near jack"}): 0.8,
    frozenset({"be injured", "hurt"}): 0.7,
}

# Ordered (premise, hypothesis) pairs with non-default NLI labels.
NLI: dict[tuple[str, str], tuple[str, float]] = {
    ("jack yell at bryan", "bryan close to jack"): ("contradiction", 0.92),
}


class RecordingProvider:
    """Answers from the curated tables and logs every query."""

    def __init__(self, k: int = 6):
        self.k = k
        self.generation_log: dict[tuple[str, str], list[tuple[str, float]]] = {}
        self.similarity_log: dict[frozenset[str], float] = {}
        self.nli_log: dict[tuple[str, str], tuple[str, float]] = {}
        self.used_generation: set[tuple[str, str]] = set()
        self.used_similarity: set[frozenset[str]] = set()
        self.used_nli: set[tuple[str, str]] = set()

    def generate(self, event_text: str, relation: Relation):
        key = (normalize_key(event_text), relation.value)
        rows = GENERATION.get(key, [])
        if key in GENERATION:
            self.used_generation.add(key)
        self.generation_log[key] = rows
        return [
            RelationPrediction(event_text=event_text, relation=relation, phrase=p, probability=prob)
            for p, prob in rows[: self.k]
        ]

    def similarity(self, a: str, b: str) -> float:
        na, nb = normalize_key(a), normalize_key(b)
        if na == nb:
            return 1.0
        key = frozenset({na, nb})
        score = SIMILARITY.get(key, DEFAULT_SIMILARITY)
        if key in SIMILARITY:
            self.used_similarity.add(key)
        self.similarity_log[key] = score
        return score

    def nli(self, a: str, b: str) -> NliVerdict:
        na, nb = normalize_key(a), normalize_key(b)
        if na == nb:
            return NliVerdict(label=NliLabel.ENTAILMENT, score=1.0)
        key = (na, nb)
        label, score = NLI.get(key, DEFAULT_NLI)
        if key in NLI:
            self.used_nli.add(key)
        self.nli_log[key] = (label, score)
        return NliVerdict(label=NliLabel(label), score=score)


def main() -> None:
    provider = RecordingProvider()
    documents = sorted(DOCS.glob("*.json"))
    for strategy in (NegationStrategy.LOCAL, NegationStrategy.GLOBAL):
        run_pipeline(
            PipelineConfig(
                documents=documents,
                provider=provider,
                negation=strategy,
                policy=ThresholdPolicy(),
            )
        )

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "generation.jsonl", "w", encoding="utf-8") as fh:
        for (event, relation), rows in sorted(provider.generation_log.items()):
            if not rows:
                fh.write(json.dumps({"event": event, "relation": relation, "phrase": None, "p": 0.0}) + "\n")
            for phrase, p in rows:
                fh.write(json.dumps({"event": event, "relation": relation, "phrase": phrase, "p": p}) + "\n")
    with open(OUT / "similarity.jsonl", "w", encoding="utf-8") as fh:
        for key, score in sorted(provider.similarity_log.items(), key=lambda kv: sorted(kv[0])):
            a, b = sorted(key)
            fh.write(json.dumps({"a": a, "b": b, "score": score}) + "\n")
    with open(OUT / "nli.jsonl", "w", encoding="utf-8") as fh:
        for (a, b), (label, score) in sorted(provider.nli_log.items()):
            fh.write(json.dumps({"a": a, "b": b, "label": label, "score": score}) + "\n")

    print(f"generation records: {sum(max(len(v), 1) for v in provider.generation_log.values())}")
    print(f"similarity records: {len(provider.similarity_log)}")
    print(f"nli records: {len(provider.nli_log)}")

    stale = set(GENERATION) - provider.used_generation
    for key in sorted(stale):
        print(f"WARNING: generation table entry never queried: {key}")
    for key in set(SIMILARITY) - provider.used_similarity:
        print(f"WARNING: similarity table entry never queried: {sorted(key)}")
    for key in set(NLI) - provider.used_nli:
        print(f"WARNING: nli table entry never queried: {key}")
    if stale:
        sys.exit(1)


if __name__ == "__main__":
    main()
