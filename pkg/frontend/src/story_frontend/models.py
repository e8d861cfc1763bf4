"""The three knowledge models behind the HTTP endpoints.

The builtin backends are deterministic: generation comes from a curated
commonsense template table with relation-specific fallbacks, similarity
is cosine over hash-seeded 384-dim bag-of-words embeddings, and NLI is a
negation/antonym rule classifier. Checkpoint-backed models can be plugged
in by registering another backend name in build_models.
"""

from __future__ import annotations

import hashlib
import math

import numpy as np

from .annotate import VERB_FORMS
from .config import FrontendConfig

RELATIONS = ("xNeed", "xEffect", "oEffect", "xReact", "oReact")

# (verb lemma, relation) -> ranked candidate phrases.
KNOWLEDGE: dict[tuple[str, str], list[str]] = {
    ("hit", "xNeed"): ["be close to PersonY", "be angry at PersonY", "be in a fight PersonY"],
    ("hit", "xEffect"): ["none"],
    ("hit", "oEffect"): ["yell at PersonX", "be injured"],
    ("hit", "xReact"): ["angry"],
    ("hit", "oReact"): ["hurt"],
    ("repair", "xNeed"): ["to have money", "go to the garage"],
    ("repair", "xEffect"): ["get the car back"],
    ("get", "xNeed"): ["to have money", "ask for it"],
    ("steal", "xNeed"): ["be in the shop", "find the goods"],
    ("steal", "xEffect"): ["have the goods", "run away"],
    ("steal", "xReact"): ["guilty"],
    ("heal", "xNeed"): ["have medicine"],
    ("heal", "oEffect"): ["be healthy"],
    ("shoot", "xNeed"): ["have a gun"],
    ("shoot", "oEffect"): ["be wounded"],
    ("die", "xNeed"): ["be wounded"],
    ("die", "xEffect"): ["be dead"],
    ("travel", "xNeed"): ["know the way"],
    ("travel", "xEffect"): ["arrive there"],
    ("marry", "xNeed"): ["find a partner", "be in love"],
    ("marry", "xEffect"): ["be married"],
    ("inherit", "xNeed"): ["have a rich relative"],
    ("inherit", "xEffect"): ["be rich"],
    ("take", "xNeed"): ["be near it"],
    ("take", "xEffect"): ["have it"],
    ("see", "xNeed"): ["look around"],
    ("see", "xEffect"): ["know about it"],
    ("tell", "xNeed"): ["know the truth"],
    ("tell", "oEffect"): ["learn something"],
    ("hate", "xNeed"): ["be hurt by PersonY"],
    ("hate", "xReact"): ["bitter"],
    ("summon", "xNeed"): ["rub the lamp"],
    ("summon", "oEffect"): ["appear"],
    ("accept", "xNeed"): ["think about it"],
    ("accept", "xReact"): ["relieved"],
}

FALLBACK: dict[str, list[str]] = {
    "xNeed": ["be ready", "be there", "none"],
    "xEffect": ["get a result", "none"],
    "oEffect": ["be affected", "none"],
    "xReact": ["satisfied", "none"],
    "oReact": ["surprised", "none"],
}

NEGATORS = {"not", "no", "never", "n't", "longer"}

ANTONYMS = {
    frozenset({"close", "far"}),
    frozenset({"alive", "dead"}),
    frozenset({"happy", "sad"}),
    frozenset({"open", "closed"}),
    frozenset({"free", "confined"}),
    frozenset({"healthy", "wounded"}),
    frozenset({"rich", "poor"}),
    frozenset({"near", "away"}),
}


class TemplateGenerator:
    """Ranked phrase candidates for (event text, relation) queries."""

    def __init__(self, beam_size: int):
        self.beam_size = beam_size

    def _lookup(self, event_text: str, relation: str) -> list[str]:
        for word in event_text.lower().split():
            stripped = word.strip("'\".,!?")
            entry = VERB_FORMS.get(stripped)
            if entry and (entry[0], relation) in KNOWLEDGE:
                return KNOWLEDGE[(entry[0], relation)]
        return FALLBACK[relation]

    def generate(self, event_text: str, relation: str, k: int) -> list[dict]:
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        phrases = self._lookup(event_text, relation)[: min(k, self.beam_size)]
        # Softmax over descending logits: normalized over the beam, sums to 1.
        logits = [1.0 - 0.4 * i for i in range(len(phrases))]
        total = sum(math.exp(l) for l in logits) or 1.0
        return [
            {"phrase": phrase, "p": math.exp(logit) / total}
            for phrase, logit in zip(phrases, logits)
        ]


class HashEmbedder:
    """384-dim bag-of-words embeddings with hash-seeded token vectors."""

    dimensions = 384

    def _token_vector(self, token: str) -> np.ndarray:
        digest = hashlib.md5(token.encode("utf-8")).digest()
        seed = int.from_bytes(digest[:8], "big") % (2**32)
        rng = np.random.default_rng(seed)
        return rng.standard_normal(self.dimensions)

    def embed(self, phrase: str) -> np.ndarray:
        tokens = [t for t in phrase.lower().split() if t] or [""]
        vec = np.sum([self._token_vector(t) for t in tokens], axis=0)
        norm = np.linalg.norm(vec)
        return vec / norm if norm else vec

    def similarity(self, a: str, b: str) -> float:
        if " ".join(a.lower().split()) == " ".join(b.lower().split()):
            return 1.0
        return float(np.dot(self.embed(a), self.embed(b)))


class NegationNli:
    """Entailment for equal phrases, contradiction for negation/antonym
    pairs, neutral otherwise."""

    @staticmethod
    def _content(phrase: str) -> tuple[list[str], bool]:
        words = [w.strip("'\".,!?").lower() for w in phrase.split()]
        words = [w for w in words if w]
        kept = [w for w in words if w not in NEGATORS]
        return kept, len(kept) != len(words)

    def classify(self, a: str, b: str) -> dict:
        content_a, negated_a = self._content(a)
        content_b, negated_b = self._content(b)
        if content_a == content_b:
            if negated_a == negated_b:
                return {"label": "entailment", "score": 0.98}
            return {"label": "contradiction", "score": 0.96}
        if len(content_a) == len(content_b):
            diffs = [
                (x, y) for x, y in zip(content_a, content_b) if x != y
            ]
            if len(diffs) == 1 and frozenset(diffs[0]) in ANTONYMS:
                if negated_a == negated_b:
                    return {"label": "contradiction", "score": 0.9}
                return {"label": "entailment", "score": 0.85}
        return {"label": "neutral", "score": 0.6}


class ModelStack:
    def __init__(self, generator, embedder, nli):
        self.generator = generator
        self.embedder = embedder
        self.nli = nli


def build_models(config: FrontendConfig) -> ModelStack:
    backends = {
        "builtin:atomic-templates": lambda: TemplateGenerator(config.beam_size),
        "builtin:hash-embed-384": HashEmbedder,
        "builtin:negation-rules": NegationNli,
    }
    for name in (config.generator_model, config.embedding_model, config.nli_model):
        if name not in backends:
            raise ValueError(f"unknown model backend {name!r}")
    return ModelStack(
        generator=backends[config.generator_model](),
        embedder=backends[config.embedding_model](),
        nli=backends[config.nli_model](),
    )
