#!/usr/bin/env python3
"""Author the committed annotation documents under tests/data/docs/.

Token spec: "text|lemma|POS" ("text||POS" takes the lowercased text as
lemma). Every token not named in `edges` attaches to the root with the
generic label "dep", so each sentence forms a valid dependency tree.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from story2pddl.annotations import load_document  # noqa: E402

OUT_DIR = REPO / "tests" / "data" / "docs"


def sentence(spec: str, root: int, edges: dict[int, tuple[int, str]], frames: list) -> dict:
    tokens = []
    for part in spec.split():
        text, lemma, pos = part.split("|")
        tokens.append({"text": text, "lemma": lemma or text.lower(), "pos": pos})
    deps = []
    for i in range(len(tokens)):
        if i == root:
            deps.append({"head": -1, "dep": i, "rel": "root"})
        elif i in edges:
            head, rel = edges[i]
            deps.append({"head": head, "dep": i, "rel": rel})
        else:
            deps.append({"head": root, "dep": i, "rel": "dep"})
    out_frames = []
    for verb, args in frames:
        out_frames.append(
            {
                "verb": verb,
                "args": [{"label": lbl, "start": s, "end": e} for lbl, s, e in args],
            }
        )
    return {"tokens": tokens, "deps": deps, "frames": out_frames}


def doc(doc_id: str, sentences: list[dict], coref: list | None = None) -> dict:
    return {"doc_id": doc_id, "sentences": sentences, "coref": coref or []}


HIT_EXAMPLE = doc(
    "hit-example",
    [
        sentence(
            "Bryan|Bryan|NNP hits|hit|VBZ Jack|Jack|NNP in|in|IN the|the|DT face|face|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 2: (1, "obj"), 5: (1, "obl"), 3: (5, "case"), 4: (5, "det"), 6: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 3), ("ARGM-LOC", 3, 6)])],
        )
    ],
)

SIMON = doc(
    "simon",
    [
        sentence(
            "Simon|Simon|NNP takes|take|VBZ great|great|JJ pains|pain|NNS to|to|TO "
            "accept|accept|VB himself|himself|PRP as|as|IN gay|gay|JJ .|.|.",
            root=1,
            edges={
                0: (1, "nsubj"), 3: (1, "obj"), 2: (3, "amod"), 5: (1, "xcomp"),
                4: (5, "mark"), 6: (5, "obj"), 8: (5, "obl"), 7: (8, "case"), 9: (1, "punct"),
            },
            frames=[
                (1, [("ARG0", 0, 1), ("ARG1", 2, 9)]),
                (5, [("ARG0", 0, 1), ("ARG1", 6, 7), ("ARG2", 7, 9)]),
            ],
        ),
        sentence(
            "He|he|PRP will|will|MD only|only|RB inherit|inherit|VB his|his|PRP$ "
            "grandfather|grandfather|NN 's|'s|POS fortune|fortune|NN if|if|IN he|he|PRP "
            "marries|marry|VBZ a|a|DT woman|woman|NN .|.|.",
            root=3,
            edges={
                0: (3, "nsubj"), 1: (3, "aux"), 2: (3, "advmod"), 7: (3, "obj"),
                4: (5, "nmod:poss"), 5: (7, "nmod:poss"), 6: (5, "case"),
                10: (3, "advcl"), 8: (10, "mark"), 9: (10, "nsubj"),
                12: (10, "obj"), 11: (12, "det"), 13: (3, "punct"),
            },
            frames=[
                (3, [("ARG0", 0, 1), ("ARG1", 4, 8), ("ARGM-ADV", 8, 13)]),
                (10, [("ARG0", 9, 10), ("ARG1", 11, 13)]),
            ],
        ),
    ],
    coref=[
        [
            {"sent": 0, "start": 0, "end": 1},
            {"sent": 0, "start": 6, "end": 7},
            {"sent": 1, "start": 0, "end": 1},
            {"sent": 1, "start": 4, "end": 5},
            {"sent": 1, "start": 9, "end": 10},
        ]
    ],
)

NESTED = doc(
    "nested",
    [
        sentence(
            "Daniel|Daniel|NNP sees|see|VBZ Bryan|Bryan|NNP try|try|VB to|to|TO "
            "hit|hit|VB Jack|Jack|NNP .|.|.",
            root=1,
            edges={
                0: (1, "nsubj"), 3: (1, "ccomp"), 2: (3, "nsubj"),
                5: (3, "xcomp"), 4: (5, "mark"), 6: (5, "obj"), 7: (1, "punct"),
            },
            frames=[
                (1, [("ARG0", 0, 1), ("ARG1", 2, 7)]),
                (3, [("ARG0", 2, 3), ("ARG1", 4, 7)]),
                (5, [("ARG0", 2, 3), ("ARG1", 6, 7)]),
            ],
        )
    ],
)

WEST = doc(
    "old-american-west",
    [
        sentence(  # 0
            "Hank|Hank|NNP stole|steal|VBD antivenom|antivenom|NN from|from|IN the|the|DT "
            "shop|shop|NN ,|,|, which|which|WDT angered|anger|VBD sheriff|sheriff|NN "
            "William|William|NNP .|.|.",
            root=1,
            edges={
                0: (1, "nsubj"), 2: (1, "obj"), 5: (1, "obl"), 3: (5, "case"), 4: (5, "det"),
                6: (1, "punct"), 8: (5, "acl:relcl"), 7: (8, "nsubj"),
                10: (8, "obj"), 9: (10, "compound"), 11: (1, "punct"),
            },
            frames=[
                (1, [("ARG0", 0, 1), ("ARG1", 2, 3), ("ARGM-DIR", 3, 6)]),
                (8, [("ARG0", 7, 8), ("ARG1", 9, 11)]),
            ],
        ),
        sentence(  # 1
            "Hank|Hank|NNP got|get|VBD bitten|bite|VBN by|by|IN a|a|DT snake|snake|NN .|.|.",
            root=2,
            edges={
                0: (2, "nsubj:pass"), 1: (2, "aux:pass"), 5: (2, "obl:agent"),
                3: (5, "case"), 4: (5, "det"), 6: (2, "punct"),
            },
            frames=[
                (1, [("ARG1", 0, 1), ("ARG2", 2, 6)]),
                (2, [("ARG1", 0, 1), ("ARG0", 3, 6)]),
            ],
        ),
        sentence(  # 2
            "Carl|Carl|NNP the|the|DT shopkeeper|shopkeeper|NN healed|heal|VBD Timmy|Timmy|NNP "
            "using|use|VBG his|his|PRP$ medicine|medicine|NN .|.|.",
            root=3,
            edges={
                0: (3, "nsubj"), 2: (0, "appos"), 1: (2, "det"), 4: (3, "obj"),
                5: (3, "advcl"), 7: (5, "obj"), 6: (7, "nmod:poss"), 8: (3, "punct"),
            },
            frames=[
                (3, [("ARG0", 0, 3), ("ARG1", 4, 5), ("ARGM-MNR", 5, 8)]),
                (5, [("ARG0", 0, 3), ("ARG1", 6, 8)]),
            ],
        ),
        sentence(  # 3
            "Sheriff|Sheriff|NNP William|William|NNP intended|intend|VBD to|to|TO shoot|shoot|VB "
            "Hank|Hank|NNP for|for|IN his|his|PRP$ crime|crime|NN .|.|.",
            root=2,
            edges={
                1: (2, "nsubj"), 0: (1, "compound"), 4: (2, "xcomp"), 3: (4, "mark"),
                5: (4, "obj"), 8: (4, "obl"), 6: (8, "case"), 7: (8, "nmod:poss"), 9: (2, "punct"),
            },
            frames=[
                (2, [("ARG0", 0, 2), ("ARG1", 3, 9)]),
                (4, [("ARG0", 0, 2), ("ARG1", 5, 6), ("ARGM-CAU", 6, 9)]),
            ],
        ),
        sentence(  # 4
            "Carl|Carl|NNP intended|intend|VBD to|to|TO heal|heal|VB Timmy|Timmy|NNP .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 3: (1, "xcomp"), 2: (3, "mark"), 4: (3, "obj"), 5: (1, "punct")},
            frames=[
                (1, [("ARG0", 0, 1), ("ARG1", 2, 5)]),
                (3, [("ARG0", 0, 1), ("ARG1", 4, 5)]),
            ],
        ),
        sentence(  # 5
            "Sheriff|Sheriff|NNP William|William|NNP shot|shoot|VBD Hank|Hank|NNP .|.|.",
            root=2,
            edges={1: (2, "nsubj"), 0: (1, "compound"), 3: (2, "obj"), 4: (2, "punct")},
            frames=[(2, [("ARG0", 0, 2), ("ARG1", 3, 4)])],
        ),
        sentence(  # 6
            "Hank|Hank|NNP died|die|VBD .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 2: (1, "punct")},
            frames=[(1, [("ARG1", 0, 1)])],
        ),
    ],
    coref=[
        [
            {"sent": 0, "start": 0, "end": 1},
            {"sent": 1, "start": 0, "end": 1},
            {"sent": 3, "start": 5, "end": 6},
            {"sent": 3, "start": 7, "end": 8},
            {"sent": 5, "start": 3, "end": 4},
            {"sent": 6, "start": 0, "end": 1},
        ],
        [
            {"sent": 2, "start": 0, "end": 3},
            {"sent": 2, "start": 6, "end": 7},
        ],
    ],
)

ALADDIN = doc(
    "aladdin",
    [
        sentence(  # 0
            "Aladdin|Aladdin|NNP travels|travel|VBZ to|to|TO the|the|DT castle|castle|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 4: (1, "obl"), 2: (4, "case"), 3: (4, "det"), 5: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG4", 2, 5)])],
        ),
        sentence(  # 1
            "Aladdin|Aladdin|NNP slays|slay|VBZ the|the|DT dragon|dragon|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 3: (1, "obj"), 2: (3, "det"), 4: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 4)])],
        ),
        sentence(  # 2
            "Aladdin|Aladdin|NNP takes|take|VBZ the|the|DT magic|magic|JJ lamp|lamp|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 4: (1, "obj"), 2: (4, "det"), 3: (4, "amod"), 5: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 5)])],
        ),
        sentence(  # 3
            "Aladdin|Aladdin|NNP hands|hand|VBZ the|the|DT magic|magic|JJ lamp|lamp|NN "
            "to|to|TO King|King|NNP Jafar|Jafar|NNP .|.|.",
            root=1,
            edges={
                0: (1, "nsubj"), 4: (1, "obj"), 2: (4, "det"), 3: (4, "amod"),
                7: (1, "obl"), 5: (7, "case"), 6: (7, "compound"), 8: (1, "punct"),
            },
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 5), ("ARG2", 5, 8)])],
        ),
        sentence(  # 4
            "King|King|NNP Jafar|Jafar|NNP summons|summon|VBZ the|the|DT genie|genie|NN .|.|.",
            root=2,
            edges={1: (2, "nsubj"), 0: (1, "compound"), 4: (2, "obj"), 3: (4, "det"), 5: (2, "punct")},
            frames=[(2, [("ARG0", 0, 2), ("ARG1", 3, 5)])],
        ),
        sentence(  # 5
            "The|the|DT genie|genie|NN casts|cast|VBZ a|a|DT love|love|NN spell|spell|NN "
            "on|on|IN the|the|DT princess|princess|NN .|.|.",
            root=2,
            edges={
                1: (2, "nsubj"), 0: (1, "det"), 5: (2, "obj"), 3: (5, "det"), 4: (5, "compound"),
                8: (2, "obl"), 6: (8, "case"), 7: (8, "det"), 9: (2, "punct"),
            },
            frames=[(2, [("ARG0", 0, 2), ("ARG1", 3, 6), ("ARG2", 6, 9)])],
        ),
        sentence(  # 6
            "The|the|DT princess|princess|NN falls|fall|VBZ in|in|IN love|love|NN "
            "with|with|IN King|King|NNP Jafar|Jafar|NNP .|.|.",
            root=2,
            edges={
                1: (2, "nsubj"), 0: (1, "det"), 3: (2, "case"), 4: (2, "obl"),
                7: (2, "obl"), 5: (7, "case"), 6: (7, "compound"), 8: (2, "punct"),
            },
            frames=[(2, [("ARG1", 0, 2), ("ARGM-PRD", 4, 8)])],
        ),
        sentence(  # 7
            "King|King|NNP Jafar|Jafar|NNP weds|wed|VBZ the|the|DT princess|princess|NN .|.|.",
            root=2,
            edges={1: (2, "nsubj"), 0: (1, "compound"), 4: (2, "obj"), 3: (4, "det"), 5: (2, "punct")},
            frames=[(2, [("ARG0", 0, 2), ("ARG1", 3, 5)])],
        ),
        sentence(  # 8
            "The|the|DT genie|genie|NN is|be|VBZ confined|confine|VBN within|within|IN "
            "the|the|DT magic|magic|JJ lamp|lamp|NN .|.|.",
            root=3,
            edges={
                1: (3, "nsubj:pass"), 0: (1, "det"), 2: (3, "aux:pass"),
                7: (3, "obl"), 4: (7, "case"), 5: (7, "det"), 6: (7, "amod"), 8: (3, "punct"),
            },
            frames=[
                (2, [("ARG1", 0, 2), ("ARG2", 3, 8)]),
                (3, [("ARG1", 0, 2), ("ARGM-LOC", 4, 8)]),
            ],
        ),
        sentence(  # 9
            "The|the|DT genie|genie|NN is|be|VBZ not|not|RB confined|confine|VBN within|within|IN "
            "the|the|DT magic|magic|JJ lamp|lamp|NN .|.|.",
            root=4,
            edges={
                1: (4, "nsubj:pass"), 0: (1, "det"), 2: (4, "aux:pass"), 3: (4, "advmod"),
                8: (4, "obl"), 5: (8, "case"), 6: (8, "det"), 7: (8, "amod"), 9: (4, "punct"),
            },
            frames=[
                (2, [("ARG1", 0, 2), ("ARG2", 3, 9)]),
                (4, [("ARG1", 0, 2), ("ARGM-LOC", 5, 9)]),
            ],
        ),
        sentence(  # 10
            "Aladdin|Aladdin|NNP rubs|rub|VBZ the|the|DT magic|magic|JJ lamp|lamp|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 4: (1, "obj"), 2: (4, "det"), 3: (4, "amod"), 5: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 5)])],
        ),
        sentence(  # 11
            "Aladdin|Aladdin|NNP sees|see|VBZ the|the|DT genie|genie|NN .|.|.",
            root=1,
            edges={0: (1, "nsubj"), 3: (1, "obj"), 2: (3, "det"), 4: (1, "punct")},
            frames=[(1, [("ARG0", 0, 1), ("ARG1", 2, 4)])],
        ),
        sentence(  # 12
            "The|the|DT genie|genie|NN makes|make|VBZ a|a|DT promise|promise|NN .|.|.",
            root=2,
            edges={1: (2, "nsubj"), 0: (1, "det"), 4: (2, "obj"), 3: (4, "det"), 5: (2, "punct")},
            frames=[(2, [("ARG0", 0, 2), ("ARG1", 3, 5)])],
        ),
    ],
)


def _simple(spec, root, edges, frames):
    return sentence(spec, root, edges, frames)


CONDITIONS = doc(
    "conditions",
    [
        _simple(  # 0: S1, consequence first (the canonical sentence)
            "She|she|PRP will|will|MD hate|hate|VB me|me|PRP if|if|IN I|I|PRP "
            "tell|tell|VBP the|the|DT truth|truth|NN .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 3: (2, "obj"), 6: (2, "advcl"),
             4: (6, "mark"), 5: (6, "nsubj"), 8: (6, "obj"), 7: (8, "det"), 9: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARG1", 3, 4), ("ARGM-ADV", 4, 9)]),
             (6, [("ARG0", 5, 6), ("ARG1", 7, 9)])],
        ),
        _simple(  # 1: S1, signal first
            "If|if|IN he|he|PRP comes|come|VBZ ,|,|, she|she|PRP will|will|MD leave|leave|VB .|.|.",
            6,
            {2: (6, "advcl"), 0: (2, "mark"), 1: (2, "nsubj"), 4: (6, "nsubj"), 5: (6, "aux"), 3: (6, "punct"), 7: (6, "punct")},
            [(2, [("ARG1", 1, 2)]), (6, [("ARG0", 4, 5), ("ARGM-ADV", 0, 3)])],
        ),
        _simple(  # 2: S2
            "She|she|PRP stays|stay|VBZ if|if|IN he|he|PRP will|will|MD go|go|VB .|.|.",
            1,
            {0: (1, "nsubj"), 5: (1, "advcl"), 2: (5, "mark"), 3: (5, "nsubj"), 4: (5, "aux"), 6: (1, "punct")},
            [(1, [("ARG0", 0, 1), ("ARGM-ADV", 2, 6)]), (5, [("ARG0", 3, 4)])],
        ),
        _simple(  # 3: S3 (must)
            "You|you|PRP must|must|MD leave|leave|VB if|if|IN he|he|PRP arrives|arrive|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"), 6: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 6)]), (5, [("ARG1", 4, 5)])],
        ),
        _simple(  # 4: S3 (may, whenever)
            "She|she|PRP may|may|MD stay|stay|VB whenever|whenever|WRB he|he|PRP sings|sing|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "advmod"), 4: (5, "nsubj"), 6: (2, "punct")},
            [(2, [("ARG1", 0, 1), ("ARGM-TMP", 3, 6)]), (5, [("ARG0", 4, 5)])],
        ),
        _simple(  # 5: S4
            "She|she|PRP would|would|MD leave|leave|VB if|if|IN he|he|PRP lied|lie|VBD .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"), 6: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 6)]), (5, [("ARG0", 4, 5)])],
        ),
        _simple(  # 6: S5 (could)
            "She|she|PRP could|could|MD win|win|VB if|if|IN she|she|PRP trained|train|VBD .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"), 6: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 6)]), (5, [("ARG0", 4, 5)])],
        ),
        _simple(  # 7: S5 (might)
            "He|he|PRP might|might|MD come|come|VB if|if|IN she|she|PRP called|call|VBD .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"), 6: (2, "punct")},
            [(2, [("ARG1", 0, 1), ("ARGM-ADV", 3, 6)]), (5, [("ARG0", 4, 5)])],
        ),
        _simple(  # 8: S6 (past continuous)
            "She|she|PRP could|could|MD sleep|sleep|VB if|if|IN the|the|DT baby|baby|NN "
            "was|be|VBD resting|rest|VBG .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 7: (2, "advcl"), 3: (7, "mark"),
             5: (7, "nsubj"), 4: (5, "det"), 6: (7, "aux"), 8: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 8)]), (7, [("ARG0", 4, 6)])],
        ),
        _simple(  # 9: S6 (past perfect)
            "He|he|PRP could|could|MD relax|relax|VB if|if|IN he|he|PRP had|have|VBD "
            "finished|finish|VBN .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 6: (2, "advcl"), 3: (6, "mark"),
             4: (6, "nsubj"), 5: (6, "aux"), 7: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 7)]), (6, [("ARG0", 4, 5)])],
        ),
        _simple(  # 10: S7
            "She|she|PRP would|would|MD have|have|VB stayed|stay|VBN if|if|IN he|he|PRP "
            "had|have|VBD asked|ask|VBN .|.|.",
            3,
            {0: (3, "nsubj"), 1: (3, "aux"), 2: (3, "aux"), 7: (3, "advcl"),
             4: (7, "mark"), 5: (7, "nsubj"), 6: (7, "aux"), 8: (3, "punct")},
            [(3, [("ARG0", 0, 1), ("ARGM-ADV", 4, 8)]), (7, [("ARG0", 5, 6)])],
        ),
        _simple(  # 11: S8
            "She|she|PRP would|would|MD have|have|VB been|be|VBN working|work|VBG if|if|IN "
            "he|he|PRP had|have|VBD called|call|VBN .|.|.",
            4,
            {0: (4, "nsubj"), 1: (4, "aux"), 2: (4, "aux"), 3: (4, "aux"), 8: (4, "advcl"),
             5: (8, "mark"), 6: (8, "nsubj"), 7: (8, "aux"), 9: (4, "punct")},
            [(4, [("ARG0", 0, 1), ("ARGM-ADV", 5, 9)]), (8, [("ARG0", 6, 7)])],
        ),
        _simple(  # 12: S9
            "She|she|PRP would|would|MD have|have|VB won|win|VBN if|if|IN she|she|PRP "
            "had|have|VBD been|be|VBN training|train|VBG .|.|.",
            3,
            {0: (3, "nsubj"), 1: (3, "aux"), 2: (3, "aux"), 8: (3, "advcl"),
             4: (8, "mark"), 5: (8, "nsubj"), 6: (8, "aux"), 7: (8, "aux"), 9: (3, "punct")},
            [(3, [("ARG0", 0, 1), ("ARGM-ADV", 4, 9)]), (8, [("ARG0", 5, 6)])],
        ),
        _simple(  # 13: S10
            "She|she|PRP would|would|MD be|be|VB winning|win|VBG if|if|IN she|she|PRP "
            "had|have|VBD trained|train|VBN .|.|.",
            3,
            {0: (3, "nsubj"), 1: (3, "aux"), 2: (3, "aux"), 7: (3, "advcl"),
             4: (7, "mark"), 5: (7, "nsubj"), 6: (7, "aux"), 8: (3, "punct")},
            [(3, [("ARG0", 0, 1), ("ARGM-ADV", 4, 8)]), (7, [("ARG0", 5, 6)])],
        ),
        _simple(  # 14: S1, "as long as"
            "She|she|PRP will|will|MD stay|stay|VB as|as|IN long|long|RB as|as|IN "
            "he|he|PRP behaves|behave|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 7: (2, "advcl"), 3: (7, "mark"),
             4: (7, "advmod"), 5: (7, "mark"), 6: (7, "nsubj"), 8: (2, "punct")},
            [(2, [("ARG1", 0, 1), ("ARGM-ADV", 3, 8)]), (7, [("ARG0", 6, 7)])],
        ),
        _simple(  # 15: S1, "provided that"
            "He|he|PRP will|will|MD pay|pay|VB provided|provided|VBN that|that|IN "
            "she|she|PRP signs|sign|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 6: (2, "advcl"), 3: (6, "mark"),
             4: (6, "mark"), 5: (6, "nsubj"), 7: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 7)]), (6, [("ARG0", 5, 6)])],
        ),
        _simple(  # 16: S1, "on condition that"
            "He|he|PRP will|will|MD help|help|VB on|on|IN condition|condition|NN that|that|IN "
            "she|she|PRP pays|pay|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 7: (2, "advcl"), 3: (7, "mark"),
             4: (7, "mark"), 5: (7, "mark"), 6: (7, "nsubj"), 8: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 8)]), (7, [("ARG0", 6, 7)])],
        ),
        _simple(  # 17: S1, "on the condition that"
            "He|he|PRP will|will|MD go|go|VB on|on|IN the|the|DT condition|condition|NN "
            "that|that|IN she|she|PRP stays|stay|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 8: (2, "advcl"), 3: (8, "mark"), 4: (5, "det"),
             5: (8, "nmod"), 6: (8, "mark"), 7: (8, "nsubj"), 9: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 9)]), (8, [("ARG0", 7, 8)])],
        ),
        _simple(  # 18: negative, conditional via conjunction
            "Go|go|VB away|away|RB or|or|CC I|I|PRP 'll|will|MD call|call|VB "
            "the|the|DT police|police|NN !|!|.",
            0,
            {1: (0, "advmod"), 5: (0, "conj"), 2: (5, "cc"), 3: (5, "nsubj"),
             4: (5, "aux"), 7: (5, "obj"), 6: (7, "det"), 8: (0, "punct")},
            [(0, [("ARGM-DIR", 1, 2)]), (5, [("ARG0", 3, 4), ("ARG1", 6, 8)])],
        ),
        _simple(  # 19: negative, conditional via conjunction
            "Come|come|VB back|back|RB and|and|CC I|I|PRP 'll|will|MD call|call|VB "
            "the|the|DT police|police|NN !|!|.",
            0,
            {1: (0, "advmod"), 5: (0, "conj"), 2: (5, "cc"), 3: (5, "nsubj"),
             4: (5, "aux"), 7: (5, "obj"), 6: (7, "det"), 8: (0, "punct")},
            [(0, [("ARGM-DIR", 1, 2)]), (5, [("ARG0", 3, 4), ("ARG1", 6, 8)])],
        ),
        _simple(  # 20: negative, plain conjunction without conditional meaning
            "I|I|PRP 'll|will|MD call|call|VB the|the|DT police|police|NN and|and|CC "
            "come|come|VB back|back|RB .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 4: (2, "obj"), 3: (4, "det"),
             6: (2, "conj"), 5: (6, "cc"), 7: (6, "advmod"), 8: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARG1", 3, 5)]), (6, [("ARGM-DIR", 7, 8)])],
        ),
        _simple(  # 21: negative, no signal
            "I|I|PRP told|tell|VBD the|the|DT truth|truth|NN .|.|.",
            1,
            {0: (1, "nsubj"), 3: (1, "obj"), 2: (3, "det"), 4: (1, "punct")},
            [(1, [("ARG0", 0, 1), ("ARG1", 2, 4)])],
        ),
        _simple(  # 22: negative, signal present but tenses mismatch
            "She|she|PRP will|will|MD hate|hate|VB me|me|PRP if|if|IN I|I|PRP "
            "told|tell|VBD the|the|DT truth|truth|NN .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 3: (2, "obj"), 6: (2, "advcl"),
             4: (6, "mark"), 5: (6, "nsubj"), 8: (6, "obj"), 7: (8, "det"), 9: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARG1", 3, 4), ("ARGM-ADV", 4, 9)]),
             (6, [("ARG0", 5, 6), ("ARG1", 7, 9)])],
        ),
        _simple(  # 23: negative, another event verb inside the subsequence
            "He|he|PRP will|will|MD leave|leave|VB if|if|IN she|she|PRP sang|sing|VBD "
            "and|and|CC I|I|PRP tell|tell|VBP the|the|DT truth|truth|NN .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"),
             8: (5, "conj"), 6: (8, "cc"), 7: (8, "nsubj"), 10: (8, "obj"), 9: (10, "det"),
             11: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 11)]),
             (5, [("ARG0", 4, 5)]),
             (8, [("ARG0", 7, 8), ("ARG1", 9, 11)])],
        ),
        _simple(  # 24: two independent signal matches in one sentence
            "She|she|PRP will|will|MD leave|leave|VB if|if|IN he|he|PRP yells|yell|VBZ "
            "and|and|CC she|she|PRP will|will|MD cry|cry|VB if|if|IN he|he|PRP "
            "lies|lie|VBZ .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 5: (2, "advcl"), 3: (5, "mark"), 4: (5, "nsubj"),
             9: (2, "conj"), 6: (9, "cc"), 7: (9, "nsubj"), 8: (9, "aux"),
             12: (9, "advcl"), 10: (12, "mark"), 11: (12, "nsubj"), 13: (2, "punct")},
            [(2, [("ARG0", 0, 1), ("ARGM-ADV", 3, 6)]),
             (5, [("ARG0", 4, 5)]),
             (9, [("ARG0", 7, 8), ("ARGM-ADV", 10, 13)]),
             (12, [("ARG0", 11, 12)])],
        ),
        _simple(  # 25: one consequence carrying two conditions
            "If|if|IN he|he|PRP pays|pay|VBZ ,|,|, she|she|PRP will|will|MD sign|sign|VB "
            "if|if|IN he|he|PRP smiles|smile|VBZ .|.|.",
            6,
            {2: (6, "advcl"), 0: (2, "mark"), 1: (2, "nsubj"), 3: (6, "punct"),
             4: (6, "nsubj"), 5: (6, "aux"), 9: (6, "advcl"), 7: (9, "mark"),
             8: (9, "nsubj"), 10: (6, "punct")},
            [(2, [("ARG0", 1, 2)]),
             (6, [("ARG0", 4, 5), ("ARGM-ADV", 0, 3), ("ARGM-ADV", 7, 10)]),
             (9, [("ARG0", 8, 9)])],
        ),
        _simple(  # 26: negative, statement verb blocks the subsequence
            "She|she|PRP will|will|MD leave|leave|VB ,|,|, he|he|PRP is|be|VBZ sure|sure|JJ "
            ",|,|, if|if|IN I|I|PRP tell|tell|VBP the|the|DT truth|truth|NN .|.|.",
            2,
            {0: (2, "nsubj"), 1: (2, "aux"), 3: (2, "punct"), 5: (2, "parataxis"),
             4: (5, "nsubj"), 6: (5, "xcomp"), 7: (2, "punct"), 10: (2, "advcl"),
             8: (10, "mark"), 9: (10, "nsubj"), 12: (10, "obj"), 11: (12, "det"),
             13: (2, "punct")},
            [(2, [("ARG0", 0, 1)]),
             (5, [("ARG1", 4, 5), ("ARG2", 6, 7)]),
             (10, [("ARG0", 9, 10), ("ARG1", 11, 13)])],
        ),
    ],
)

GOLD_CONTAINMENT = [
    {"sentence_id": "nested:0", "container": 1, "contained": 3, "is_argument": True},
    {"sentence_id": "nested:0", "container": 1, "contained": 5, "is_argument": False},
    {"sentence_id": "nested:0", "container": 3, "contained": 5, "is_argument": True},
    {"sentence_id": "simon:0", "container": 1, "contained": 5, "is_argument": True},
    {"sentence_id": "simon:1", "container": 3, "contained": 10, "is_argument": False},
    {"sentence_id": "old-american-west:1", "container": 1, "contained": 2, "is_argument": True},
    {"sentence_id": "old-american-west:2", "container": 3, "contained": 5, "is_argument": False},
    {"sentence_id": "old-american-west:3", "container": 2, "contained": 4, "is_argument": True},
    {"sentence_id": "old-american-west:4", "container": 1, "contained": 3, "is_argument": True},
    {"sentence_id": "aladdin:8", "container": 2, "contained": 3, "is_argument": True},
    {"sentence_id": "aladdin:9", "container": 2, "contained": 4, "is_argument": True},
]


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    docs = {
        "hit_example.json": HIT_EXAMPLE,
        "simon.json": SIMON,
        "nested.json": NESTED,
        "west.json": WEST,
        "aladdin.json": ALADDIN,
        "conditions.json": CONDITIONS,
    }
    for name, payload in docs.items():
        blob = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
        load_document(blob)  # refuse to write anything invalid
        (OUT_DIR / name).write_text(blob, encoding="utf-8")
        print(f"wrote {OUT_DIR / name}")

    gold_dir = REPO / "tests" / "data" / "gold"
    gold_dir.mkdir(parents=True, exist_ok=True)
    with open(gold_dir / "containment_pairs.jsonl", "w", encoding="utf-8") as fh:
        for rec in GOLD_CONTAINMENT:
            fh.write(json.dumps(rec) + "\n")
    print(f"wrote {gold_dir / 'containment_pairs.jsonl'}")


if __name__ == "__main__":
    main()
