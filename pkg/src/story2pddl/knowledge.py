"""Commonsense relation generation, phrase similarity and NLI behind one
provider interface, with file-backed and HTTP-backed implementations.

File-backed providers are read-only after load and bit-deterministic.
The HTTP provider talks to the companion frontend service; it retries a
failed request once and then raises, never returning silent empties.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

import requests

ENV_PROVIDER_URL = "STORY2PDDL_PROVIDER_URL"
REDUNDANCY_BAR = 0.5
NONE_SENTINEL = "none"


class ProviderUnavailable(RuntimeError):
    """HTTP backend unreachable or persistently failing."""


class FixtureMiss(LookupError):
    """File backend has no entry for the query (distinct from an empty one)."""


class Relation(enum.Enum):
    XNEED = "xNeed"
    XEFFECT = "xEffect"
    OEFFECT = "oEffect"
    XREACT = "xReact"
    OREACT = "oReact"

    @property
    def is_object_side(self) -> bool:
        return self in (Relation.OEFFECT, Relation.OREACT)


PRECONDITION_RELATIONS = (Relation.XNEED,)
EFFECT_RELATIONS = (Relation.XEFFECT, Relation.OEFFECT, Relation.XREACT, Relation.OREACT)
RELATION_ORDER = (Relation.XNEED, Relation.XEFFECT, Relation.OEFFECT, Relation.XREACT, Relation.OREACT)


class NliLabel(enum.Enum):
    ENTAILMENT = "entailment"
    NEUTRAL = "neutral"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class NliVerdict:
    label: NliLabel
    score: float


@dataclass(frozen=True)
class RelationPrediction:
    event_text: str
    relation: Relation
    phrase: str
    probability: float

    def __post_init__(self):
        if not self.phrase:
            raise ValueError("prediction phrase must be non-empty")
        if not (0.0 <= self.probability <= 1.0):
            raise ValueError(f"probability {self.probability} outside [0, 1]")


@dataclass(frozen=True)
class ThresholdPolicy:
    k: int = 6
    theta: dict[Relation, float] = field(
        default_factory=lambda: {
            Relation.XNEED: 0.7,
            Relation.XEFFECT: 0.5,
            Relation.OEFFECT: 0.5,
            Relation.XREACT: 0.2,
            Relation.OREACT: 0.2,
        }
    )

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        for rel, theta in self.theta.items():
            if not (0.0 <= theta <= 1.0):
                raise ValueError(f"threshold for {rel.value} outside [0, 1]")


def normalize_key(text: str) -> str:
    return " ".join(text.split()).lower()


def apply_thresholds(preds: list[RelationPrediction], policy: ThresholdPolicy) -> list[RelationPrediction]:
    """Keep the prefix at or above the relation's threshold, then cut at the
    first "none" phrase (exclusive). Always returns a prefix of the input."""
    if not preds:
        return []
    theta = policy.theta[preds[0].relation]
    kept = []
    for pred in preds:
        if pred.probability < theta:
            break
        if pred.phrase.strip().lower() == NONE_SENTINEL:
            break
        kept.append(pred)
    return kept


class FixtureProvider:
    """Providers backed by committed JSON-Lines fixtures.

    generation: {"event","relation","phrase","p"} per candidate; a record
    with "phrase": null registers the key with zero candidates.
    similarity: {"a","b","score"} (symmetric). nli: {"a","b","label","score"}.
    """

    def __init__(self, generation_path, similarity_path=None, nli_path=None, k: int = 6):
        self.k = k
        self._generation: dict[tuple[str, str], list[tuple[str, float]]] = {}
        self._similarity: dict[tuple[str, str], float] = {}
        self._nli: dict[tuple[str, str], NliVerdict] = {}
        if generation_path is not None:
            self._load_generation(Path(generation_path))
        if similarity_path is not None:
            self._load_similarity(Path(similarity_path))
        if nli_path is not None:
            self._load_nli(Path(nli_path))

    @classmethod
    def from_dir(cls, directory, k: int = 6) -> "FixtureProvider":
        d = Path(directory)
        return cls(
            generation_path=d / "generation.jsonl" if (d / "generation.jsonl").exists() else None,
            similarity_path=d / "similarity.jsonl" if (d / "similarity.jsonl").exists() else None,
            nli_path=d / "nli.jsonl" if (d / "nli.jsonl").exists() else None,
            k=k,
        )

    @staticmethod
    def _records(path: Path):
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ValueError(f"{path}:{line_no}: bad JSON record: {exc}") from None

    def _load_generation(self, path: Path) -> None:
        for rec in self._records(path):
            key = (normalize_key(rec["event"]), rec["relation"])
            bucket = self._generation.setdefault(key, [])
            if rec["phrase"] is None:
                continue  # presence marker only
            bucket.append((rec["phrase"], float(rec["p"])))
        for bucket in self._generation.values():
            bucket.sort(key=lambda pp: -pp[1])

    def _load_similarity(self, path: Path) -> None:
        for rec in self._records(path):
            a, b = normalize_key(rec["a"]), normalize_key(rec["b"])
            key = (a, b) if a <= b else (b, a)
            self._similarity[key] = float(rec["score"])

    def _load_nli(self, path: Path) -> None:
        for rec in self._records(path):
            key = (normalize_key(rec["a"]), normalize_key(rec["b"]))
            self._nli[key] = NliVerdict(label=NliLabel(rec["label"]), score=float(rec["score"]))

    def generate(self, event_text: str, relation: Relation) -> list[RelationPrediction]:
        key = (normalize_key(event_text), relation.value)
        if key not in self._generation:
            raise FixtureMiss(f"no generation fixture for {key}")
        return [
            RelationPrediction(event_text=event_text, relation=relation, phrase=phrase, probability=p)
            for phrase, p in self._generation[key][: self.k]
        ]

    def similarity(self, a: str, b: str) -> float:
        na, nb = normalize_key(a), normalize_key(b)
        if na == nb:
            return 1.0
        key = (na, nb) if na <= nb else (nb, na)
        if key not in self._similarity:
            raise FixtureMiss(f"no similarity fixture for {key}")
        return self._similarity[key]

    def nli(self, a: str, b: str) -> NliVerdict:
        na, nb = normalize_key(a), normalize_key(b)
        if na == nb:
            return NliVerdict(label=NliLabel.ENTAILMENT, score=1.0)
        if (na, nb) not in self._nli:
            raise FixtureMiss(f"no nli fixture for ({na!r}, {nb!r})")
        return self._nli[(na, nb)]


class HttpProvider:
    """Providers served by the frontend component over JSON/HTTP."""

    def __init__(self, base_url: str | None = None, k: int = 6, timeout: float = 10.0):
        base_url = base_url or os.environ.get(ENV_PROVIDER_URL)
        if not base_url:
            raise ProviderUnavailable(
                f"no provider URL: pass base_url or set {ENV_PROVIDER_URL}"
            )
        self.base_url = base_url.rstrip("/")
        self.k = k
        self.timeout = timeout

    def _post(self, endpoint: str, payload: dict) -> dict | list:
        url = f"{self.base_url}/{endpoint}"
        last_error = None
        for _ in range(2):  # one retry
            try:
                response = requests.post(url, json=payload, timeout=self.timeout)
                if response.status_code == 200:
                    return response.json()
                last_error = f"HTTP {response.status_code}: {response.text[:200]}"
            except requests.RequestException as exc:
                last_error = str(exc)
        raise ProviderUnavailable(f"POST {url} failed twice: {last_error}")

    def generate(self, event_text: str, relation: Relation) -> list[RelationPrediction]:
        body = self._post("generate", {"event": event_text, "relation": relation.value, "k": self.k})
        preds = [
            RelationPrediction(
                event_text=event_text,
                relation=relation,
                phrase=item["phrase"],
                probability=float(item["p"]),
            )
            for item in body
        ]
        preds.sort(key=lambda p: -p.probability)
        return preds[: self.k]

    def similarity(self, a: str, b: str) -> float:
        body = self._post("similarity", {"a": a, "b": b})
        return float(body["score"])

    def nli(self, a: str, b: str) -> NliVerdict:
        body = self._post("nli", {"a": a, "b": b})
        return NliVerdict(label=NliLabel(body["label"]), score=float(body["score"]))
