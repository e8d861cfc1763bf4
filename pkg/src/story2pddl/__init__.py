"""story2pddl: compile narrative-text annotations into PDDL action models."""

from .annotations import AnnotatedDocument, load_document, sentence_text
from .knowledge import FixtureProvider, HttpProvider, Relation, ThresholdPolicy
from .pddl import PlanningDomain, assemble, emit_pddl, validate_syntax
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .synthesis import ActionModel, Literal, NegationStrategy

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "ActionModel",
    "FixtureProvider",
    "HttpProvider",
    "Literal",
    "NegationStrategy",
    "PipelineConfig",
    "PipelineResult",
    "PlanningDomain",
    "Relation",
    "ThresholdPolicy",
    "assemble",
    "emit_pddl",
    "load_document",
    "run_pipeline",
    "sentence_text",
    "validate_syntax",
]
