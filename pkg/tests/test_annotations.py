import json

import pytest
from hypothesis import given, strategies as st

from story2pddl.annotations import (
    AnnotatedDocument,
    SchemaError,
    Span,
    ValidationError,
    load_document,
    sentence_text,
    serialize_document,
)

import docbuild
from docbuild import document, load, sentence


def test_minimal_document():
    doc = load(document([sentence("Hello||UH")]))
    assert len(doc.sentences) == 1
    assert doc.sentences[0].frames == ()


def test_span_bounds_rejected():
    payload = document(
        [sentence("Bryan|Bryan|NNP hits|hit|VBZ", root=1, frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 9)])])]
    )
    with pytest.raises(ValidationError, match="sentences\\[0\\]"):
        load(payload)


def test_hit_example_loads(hit_doc):
    frame = hit_doc.sentences[0].frames[0]
    assert hit_doc.sentences[0].tokens[frame.verb_index].text == "hits"
    labels = [lbl for lbl, _ in frame.arguments]
    assert labels == ["ARG0", "ARG1", "ARGM-LOC"]


def test_sentence_text_joins_tokens():
    doc = load(document([sentence("Bryan|Bryan|NNP hits|hit|VBZ Jack|Jack|NNP", root=1)]))
    assert sentence_text(doc, 0) == "Bryan hits Jack"


def test_sentence_text_index_error():
    doc = load(document([]))
    with pytest.raises(IndexError):
        sentence_text(doc, 0)


def test_loaded_sentence_round_trips():
    from conftest import doc_json

    payload = doc_json("simon")
    doc = load_document(json.dumps(payload))
    joined = sentence_text(doc, 0)
    assert joined == " ".join(t["text"] for t in payload["sentences"][0]["tokens"])


def test_extra_field_is_schema_error():
    payload = document([sentence("Hi||UH")])
    payload["bogus"] = 1
    with pytest.raises(SchemaError, match="bogus"):
        load(payload)


def test_missing_field_is_schema_error():
    payload = document([sentence("Hi||UH")])
    del payload["sentences"][0]["deps"]
    with pytest.raises(SchemaError, match="deps"):
        load(payload)


def test_wrong_type_is_schema_error():
    payload = document([sentence("Hi||UH")])
    payload["sentences"][0]["tokens"][0]["text"] = 5
    with pytest.raises(SchemaError):
        load(payload)


def test_bool_is_not_an_int():
    payload = document([sentence("Hi||UH")])
    payload["sentences"][0]["deps"][0]["dep"] = True
    with pytest.raises(SchemaError):
        load(payload)


def test_duplicate_numbered_label_rejected():
    payload = document(
        [sentence("a||DT b|b|NN c|c|NN", root=1, frames=[(1, [("ARG0", 0, 1), ("ARG0", 2, 3)])])]
    )
    with pytest.raises(ValidationError, match="ARG0"):
        load(payload)


def test_duplicate_modifier_label_allowed():
    payload = document(
        [sentence("a||DT b|b|NN c|c|NN", root=1, frames=[(1, [("ARGM-ADV", 0, 1), ("ARGM-ADV", 2, 3)])])]
    )
    assert load(payload) is not None


def test_verb_inside_own_argument_rejected():
    payload = document([sentence("a||DT b|b|VB c|c|NN", root=1, frames=[(1, [("ARG1", 0, 3)])])])
    with pytest.raises(ValidationError, match="verb"):
        load(payload)


def test_dependency_cycle_rejected():
    payload = document([sentence("a||DT b|b|NN", root=0)])
    payload["sentences"][0]["deps"] = [
        {"head": 1, "dep": 0, "rel": "dep"},
        {"head": 0, "dep": 1, "rel": "dep"},
    ]
    with pytest.raises(ValidationError, match="cycle"):
        load(payload)


def test_duplicate_dependent_rejected():
    payload = document([sentence("a||DT b|b|NN", root=0)])
    payload["sentences"][0]["deps"] = [
        {"head": -1, "dep": 0, "rel": "root"},
        {"head": 0, "dep": 1, "rel": "dep"},
        {"head": -1, "dep": 1, "rel": "root"},
    ]
    with pytest.raises(ValidationError, match="already dependent"):
        load(payload)


def test_uncovered_token_rejected():
    payload = document([sentence("a||DT b|b|NN", root=0)])
    payload["sentences"][0]["deps"] = [{"head": -1, "dep": 0, "rel": "root"}]
    with pytest.raises(ValidationError, match="no incoming"):
        load(payload)


def test_self_loop_rejected():
    payload = document([sentence("a||DT b|b|NN", root=0)])
    payload["sentences"][0]["deps"][1] = {"head": 1, "dep": 1, "rel": "dep"}
    with pytest.raises(ValidationError, match="self-loop"):
        load(payload)


def test_chain_of_one_mention_rejected():
    payload = document([sentence("a||DT b|b|NN", root=0)], coref=[[{"sent": 0, "start": 0, "end": 1}]])
    with pytest.raises(ValidationError, match="two mentions"):
        load(payload)


def test_unordered_chain_rejected():
    payload = document(
        [sentence("a||DT b|b|NN", root=0)],
        coref=[[{"sent": 0, "start": 1, "end": 2}, {"sent": 0, "start": 0, "end": 1}]],
    )
    with pytest.raises(ValidationError, match="ordered"):
        load(payload)


def test_unknown_dependency_labels_pass():
    payload = document([sentence("a||DT b|b|NN", root=0, edges={1: (0, "weird:rel")})])
    assert load(payload).sentences[0].deps[1].relation == "weird:rel"


def test_not_json_is_schema_error():
    with pytest.raises(SchemaError, match="UTF-8"):
        load_document(b"\xff\xfe{")
    with pytest.raises(SchemaError, match="JSON"):
        load_document(b"[1, 2")


@given(docbuild.random_document())
def test_round_trip(payload):
    doc = load_document(json.dumps(payload))
    again = load_document(serialize_document(doc))
    assert again == doc


@given(st.binary(max_size=200))
def test_validation_is_total(blob):
    try:
        doc = load_document(blob)
    except (SchemaError, ValidationError):
        return
    assert isinstance(doc, AnnotatedDocument)


def test_span_helpers():
    assert Span(0, 3).contains(Span(1, 2))
    assert not Span(0, 3).contains(Span(2, 4))
    assert Span(0, 3).overlaps(Span(2, 4))
    assert not Span(0, 2).overlaps(Span(2, 4))
    assert Span(1, 4).contains_index(3)
    assert not Span(1, 4).contains_index(4)
    with pytest.raises(ValidationError):
        Span(2, 2)
