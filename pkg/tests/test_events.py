import json

from hypothesis import given, strategies as st

from story2pddl.annotations import Span, load_document
from story2pddl.events import (
    build_events,
    detect_phrasal_verb,
    load_lexicon,
    resolve_entities,
    resolved_span_text,
)

import docbuild
from conftest import load_doc
from docbuild import document, load, sentence

LEXICON = load_lexicon()


def test_lexicon_loads_nonempty():
    assert "make up" in LEXICON
    assert all(entry == entry.lower() for entry in LEXICON)


def test_possessive_pronoun_resolution():
    # "his" resolves to the representative with an appended 's
    doc = load(
        document(
            [
                sentence("Simon|Simon|NNP sleeps|sleep|VBZ", root=1),
                sentence("his|his|PRP$ dog|dog|NN barks|bark|VBZ", root=2),
            ],
            coref=[[{"sent": 0, "start": 0, "end": 1}, {"sent": 1, "start": 0, "end": 1}]],
        )
    )
    resolved = resolve_entities(doc)
    assert resolved.resolution_map()[(1, 0, 1)] == "Simon's"
    assert resolved_span_text(resolved, 1, Span(0, 2)) == "Simon's dog"


def test_plain_pronoun_resolution():
    doc = load(
        document(
            [
                sentence("the|the|DT king|king|NN sleeps|sleep|VBZ", root=2),
                sentence("he|he|PRP snores|snore|VBZ", root=1),
            ],
            coref=[[{"sent": 0, "start": 0, "end": 2}, {"sent": 1, "start": 0, "end": 1}]],
        )
    )
    assert resolve_entities(doc).resolution_map()[(1, 0, 1)] == "the king"


def test_pronoun_representative_substitutes_nothing():
    doc = load(
        document(
            [
                sentence("He|he|PRP sleeps|sleep|VBZ", root=1),
                sentence("he|he|PRP snores|snore|VBZ", root=1),
            ],
            coref=[[{"sent": 0, "start": 0, "end": 1}, {"sent": 1, "start": 0, "end": 1}]],
        )
    )
    assert resolve_entities(doc).resolution_map() == {}


def test_no_chains_identity():
    doc = load_doc("hit_example")
    resolved = resolve_entities(doc)
    assert resolved.resolution_map() == {}
    assert resolved_span_text(resolved, 0, Span(0, 3)) == "Bryan hits Jack"


def test_west_possessives():
    doc = resolve_entities(load_doc("west"))
    overlay = doc.resolution_map()
    assert overlay[(3, 7, 8)] == "Hank's"
    assert overlay[(2, 6, 7)] == "Carl the shopkeeper's"


def test_phrasal_compound_prt():
    doc = load(
        document(
            [
                sentence(
                    "Bryan|Bryan|NNP makes|make|VBZ up|up|RP a|a|DT story|story|NN",
                    root=1,
                    edges={0: (1, "nsubj"), 2: (1, "compound:prt"), 4: (1, "obj"), 3: (4, "det")},
                    frames=[(1, [("ARG0", 0, 1), ("ARG1", 3, 5)])],
                )
            ]
        )
    )
    assert detect_phrasal_verb(doc.sentences[0], 1, LEXICON) == Span(1, 3)
    events = build_events(doc, LEXICON)
    assert events[0].verb_text == "make up"


def test_phrasal_absent_without_particle_edge():
    doc = load_doc("hit_example")
    assert detect_phrasal_verb(doc.sentences[0], 1, LEXICON) is None


def test_phrasal_rejected_by_lexicon():
    doc = load(
        document(
            [
                sentence(
                    "he|he|PRP walks|walk|VBZ oranges|orange|NNS",
                    root=1,
                    edges={0: (1, "nsubj"), 2: (1, "compound:prt")},
                )
            ]
        )
    )
    assert detect_phrasal_verb(doc.sentences[0], 1, LEXICON) is None


def test_phrasal_adjacent_case_edge():
    doc = load_doc("aladdin")
    fall_sentence = doc.sentences[6]
    assert detect_phrasal_verb(fall_sentence, 2, LEXICON) == Span(2, 4)


def test_build_events_hit_example(hit_doc):
    events = build_events(resolve_entities(hit_doc), LEXICON)
    assert len(events) == 1
    event = events[0]
    assert event.verb_text == "hit"
    assert not event.is_statement
    assert [a.label for a in event.arguments] == ["ARG0", "ARG1", "ARGM-LOC"]
    assert event.arguments[2].resolved_text == "in the face"


def test_statement_flag():
    doc = load(
        document(
            [
                sentence(
                    "this|this|DT is|be|VBZ fine|fine|JJ",
                    root=1,
                    frames=[(1, [("ARG1", 0, 1), ("ARG2", 2, 3)])],
                )
            ]
        )
    )
    assert build_events(doc, LEXICON)[0].is_statement


def test_zero_frames_zero_events():
    doc = load(document([sentence("nothing||NN here|here|RB", root=0)]))
    assert build_events(doc, LEXICON) == []


def test_build_events_deterministic():
    doc = resolve_entities(load_doc("west"))
    assert build_events(doc, LEXICON) == build_events(doc, LEXICON)
    ids = [e.id for e in build_events(doc, LEXICON)]
    assert ids == sorted(ids, key=lambda i: int(i[1:]))


@given(docbuild.random_sentence())
def test_phrasal_only_fires_with_lexicon(payload):
    doc = load_document(json.dumps({"doc_id": "t", "sentences": [payload], "coref": []}))
    sent = doc.sentences[0]
    for frame in sent.frames:
        span = detect_phrasal_verb(sent, frame.verb_index, LEXICON)
        if span is not None:
            particle = next(i for i in range(span.start, span.end) if i != frame.verb_index)
            bigram = f"{sent.tokens[frame.verb_index].lemma.lower()} {sent.tokens[particle].lemma.lower()}"
            assert bigram in LEXICON


@given(st.data())
def test_statement_flag_ignores_arguments(data):
    lemma = data.draw(st.sampled_from(["be", "have", "run", "hit"]))
    n_args = data.draw(st.integers(min_value=0, max_value=2))
    args = []
    if n_args >= 1:
        args.append(("ARG0", 0, 1))
    if n_args >= 2:
        args.append(("ARG1", 2, 3))
    doc = load(
        document(
            [sentence(f"a||DT x|{lemma}|VBZ b|b|NN", root=1, frames=[(1, args)])]
        )
    )
    event = build_events(doc, LEXICON)[0]
    assert event.is_statement == (lemma in ("be", "have"))
