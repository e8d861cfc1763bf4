"""Frontend configuration: which model backs each role, decoding width,
server port. The builtin: backends are deterministic rule/lexicon models
that need no downloads; swap in real checkpoints by changing the
identifiers, not the code."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FrontendConfig:
    srl_model: str = "builtin:srl-rules"
    coref_model: str = "builtin:coref-rules"
    parser_model: str = "builtin:parser-rules"
    generator_model: str = "builtin:atomic-templates"
    embedding_model: str = "builtin:hash-embed-384"
    nli_model: str = "builtin:negation-rules"
    beam_size: int = 8
    port: int = 8077

    def __post_init__(self):
        if self.beam_size < 6:
            raise ValueError("beam_size must cover the downstream candidate budget (>= 6)")
        if not (0 < self.port < 65536):
            raise ValueError(f"bad port {self.port}")
