"""Expected condition links for every sentence of the committed
conditions document: sentence index -> set of (condition verb index,
consequence verb index, pattern tag)."""

EXPECTED = {
    0: {(6, 2, "S1")},   # She will hate me if I tell the truth .
    1: {(2, 6, "S1")},   # If he comes , she will leave .
    2: {(5, 1, "S2")},   # She stays if he will go .
    3: {(5, 2, "S3")},   # You must leave if he arrives .
    4: {(5, 2, "S3")},   # She may stay whenever he sings .
    5: {(5, 2, "S4")},   # She would leave if he lied .
    6: {(5, 2, "S5")},   # She could win if she trained .
    7: {(5, 2, "S5")},   # He might come if she called .
    8: {(7, 2, "S6")},   # She could sleep if the baby was resting .
    9: {(6, 2, "S6")},   # He could relax if he had finished .
    10: {(7, 3, "S7")},  # She would have stayed if he had asked .
    11: {(8, 4, "S8")},  # She would have been working if he had called .
    12: {(8, 3, "S9")},  # She would have won if she had been training .
    13: {(7, 3, "S10")}, # She would be winning if she had trained .
    14: {(7, 2, "S1")},  # as long as
    15: {(6, 2, "S1")},  # provided that
    16: {(7, 2, "S1")},  # on condition that
    17: {(8, 2, "S1")},  # on the condition that
    18: set(),           # Go away or I'll call the police !
    19: set(),           # Come back and I'll call the police !
    20: set(),           # I'll call the police and come back .
    21: set(),           # I told the truth .
    22: set(),           # signal present, tenses mismatch
    23: set(),           # another event verb inside the subsequence
    24: {(5, 2, "S1"), (12, 9, "S1")},  # two signals, two pairs
    25: {(2, 6, "S1"), (9, 6, "S1")},   # one consequence, two conditions
    26: set(),           # statement verb blocks the subsequence
}


def detected_links(doc):
    """(sentence index, condition verb, consequence verb, pattern) tuples."""
    from story2pddl.events import build_events, load_lexicon
    from story2pddl.structuring import structure_sentence

    events = build_events(doc, load_lexicon())
    by_id = {e.id: e for e in events}
    out = {}
    for i, sent in enumerate(doc.sentences):
        sentence_events = [e for e in events if e.sentence_index == i]
        _, links = structure_sentence(sentence_events, sent)
        out[i] = {
            (by_id[l.condition_id].verb_index, by_id[l.consequence_id].verb_index, l.pattern)
            for l in links
        }
    return out
