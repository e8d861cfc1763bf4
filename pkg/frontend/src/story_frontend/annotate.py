"""Rule-based annotator producing the pipeline's annotation JSON: tokens
with Penn POS tags and lemmas, a dependency tree, PropBank-style frames,
and pronoun coreference chains.

This is the deterministic builtin backend; it targets controlled
narrative English and always emits schema-valid documents (it falls back
to a flat tree if the heuristic parse cannot be attached consistently).
"""

from __future__ import annotations

import re

DETERMINERS = {"the", "a", "an"}
PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
            "himself", "herself", "itself", "themselves", "myself", "someone", "anyone"}
POSSESSIVES = {"my", "your", "his", "her", "its", "our", "their"}
MODALS = {"will", "would", "shall", "should", "can", "could", "may", "might", "must", "'ll", "'d"}
CONJUNCTIONS = {"and", "or", "but"}
PREPOSITIONS = {"in", "on", "at", "from", "with", "by", "within", "of", "for", "to", "into",
                "about", "against", "as", "if", "that", "because", "while", "after", "before"}
WH_ADVERBS = {"whenever", "when", "where", "why", "how"}
WH_DETERMINERS = {"which", "who", "whom", "whose", "what"}
ADVERBS = {"not", "never", "only", "also", "always", "often", "soon", "away", "back", "again",
           "now", "then", "here", "there", "no", "longer", "quickly", "slowly"}
PARTICLES = {"up", "down", "off", "out", "away", "over", "back", "around"}

BE_FORMS = {"am", "is", "are", "was", "were", "be", "been", "being", "'m", "'re", "'s"}
HAVE_FORMS = {"have", "has", "had", "having", "'ve"}
DO_FORMS = {"do", "does", "did", "doing"}
GET_FORMS = {"get", "gets", "got", "gotten", "getting"}

# (lemma, past, participle) for irregular verbs the tagger should know.
IRREGULAR_VERBS = [
    ("be", "was", "been"), ("have", "had", "had"), ("do", "did", "done"),
    ("get", "got", "gotten"), ("go", "went", "gone"), ("come", "came", "come"),
    ("see", "saw", "seen"), ("take", "took", "taken"), ("make", "made", "made"),
    ("give", "gave", "given"), ("tell", "told", "told"), ("say", "said", "said"),
    ("know", "knew", "known"), ("think", "thought", "thought"), ("find", "found", "found"),
    ("leave", "left", "left"), ("feel", "felt", "felt"), ("bring", "brought", "brought"),
    ("buy", "bought", "bought"), ("catch", "caught", "caught"), ("fall", "fell", "fallen"),
    ("fight", "fought", "fought"), ("hit", "hit", "hit"), ("hold", "held", "held"),
    ("keep", "kept", "kept"), ("lose", "lost", "lost"), ("meet", "met", "met"),
    ("pay", "paid", "paid"), ("run", "ran", "run"), ("sing", "sang", "sung"),
    ("sleep", "slept", "slept"), ("speak", "spoke", "spoken"), ("steal", "stole", "stolen"),
    ("shoot", "shot", "shot"), ("win", "won", "won"), ("write", "wrote", "written"),
    ("bite", "bit", "bitten"), ("wed", "wed", "wed"), ("lie", "lied", "lied"),
    ("cast", "cast", "cast"), ("stand", "stood", "stood"), ("sit", "sat", "sat"),
]

REGULAR_VERBS = [
    "accept", "anger", "answer", "appear", "arrive", "ask", "behave", "believe", "call",
    "carry", "change", "confine", "cry", "dance", "die", "discover", "end", "escape",
    "fail", "finish", "follow", "free", "grab", "hand", "happen", "hate", "heal", "help",
    "hide", "inherit", "intend", "jump", "kill", "kiss", "laugh", "learn", "like", "live",
    "look", "love", "marry", "move", "need", "notice", "open", "order", "plan", "play",
    "promise", "pull", "push", "reach", "refuse", "relax", "release", "remember",
    "repair", "rescue", "rest", "return", "rub", "save", "scream", "seem", "sign",
    "slay", "smile", "stay", "stop", "study", "summon", "talk", "thank", "train",
    "travel", "try", "turn", "use", "visit", "wait", "walk", "want", "watch", "wish",
    "work", "yell",
]


def _third_person(lemma: str) -> str:
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return lemma + "es"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    return lemma + "s"


def _past(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ied"
    if (
        len(lemma) >= 3
        and lemma[-1] not in "aeiouwxy"
        and lemma[-2] in "aeiou"
        and lemma[-3] not in "aeiou"
    ):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _gerund(lemma: str) -> str:
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and lemma not in {"be", "see", "free"}:
        return lemma[:-1] + "ing"
    if (
        len(lemma) >= 3
        and lemma[-1] not in "aeiouwxy"
        and lemma[-2] in "aeiou"
        and lemma[-3] not in "aeiou"
    ):
        return lemma + lemma[-1] + "ing"
    return lemma + "ing"


def _verb_forms() -> tuple[dict[str, tuple[str, str]], set[str], set[str]]:
    """surface -> (lemma, base/3sg/past/part/ger), plus the past and
    participle surface sets (they overlap for regular verbs)."""
    forms: dict[str, tuple[str, str]] = {}
    pasts: set[str] = set()
    participles: set[str] = set()

    def put(surface, lemma, kind):
        forms.setdefault(surface, (lemma, kind))

    for lemma, past, part in IRREGULAR_VERBS:
        put(lemma, lemma, "base")
        put(_third_person(lemma), lemma, "3sg")
        put(past, lemma, "past")
        put(part, lemma, "part")
        put(_gerund(lemma), lemma, "ger")
        if past != lemma:
            pasts.add(past)
        if part != lemma:
            participles.add(part)
    for lemma in REGULAR_VERBS:
        put(lemma, lemma, "base")
        put(_third_person(lemma), lemma, "3sg")
        put(_past(lemma), lemma, "past")
        put(_gerund(lemma), lemma, "ger")
        pasts.add(_past(lemma))
        participles.add(_past(lemma))
    put("am", "be", "3sg")
    put("is", "be", "3sg")
    put("are", "be", "base")
    put("was", "be", "past")
    put("were", "be", "past")
    put("has", "have", "3sg")
    pasts.update({"was", "were"})
    return forms, pasts, participles


VERB_FORMS, PAST_FORMS, PARTICIPLE_FORMS = _verb_forms()

_SENTENCE_RE = re.compile(r"[^.!?]*[.!?]?", re.S)
_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)?|[^\w\s]")


def split_sentences(text: str) -> list[str]:
    out = []
    for chunk in text.replace("\n", " ").split("  "):
        out.append(chunk)
    sentences = []
    for match in _SENTENCE_RE.finditer(" ".join(text.split())):
        piece = match.group().strip()
        if piece:
            sentences.append(piece)
    return sentences


def tokenize(sentence: str) -> list[str]:
    tokens: list[str] = []
    for raw in _TOKEN_RE.findall(sentence):
        low = raw.lower()
        if low.endswith("n't") and len(raw) > 3:
            tokens.append(raw[:-3])
            tokens.append(raw[-3:])
        elif "'" in raw[1:]:
            head, _, tail = raw.partition("'")
            tokens.append(head)
            tokens.append("'" + tail)
        else:
            tokens.append(raw)
    return [t for t in tokens if t]


def _is_participle_context(tags: list[str], words: list[str], index: int) -> bool:
    for back in range(max(0, index - 3), index):
        if words[back] in BE_FORMS | HAVE_FORMS | GET_FORMS:
            return True
        if tags[back] == "MD":
            return True
    return False


def tag(tokens: list[str]) -> list[tuple[str, str]]:
    """(POS, lemma) per token."""
    tags: list[str] = []
    lemmas: list[str] = []
    words = [t.lower() for t in tokens]
    for i, (token, word) in enumerate(zip(tokens, words)):
        lemma = word
        if not token[0].isalnum():
            pos = token if token in {".", ",", ":"} else ("." if token in "!?" else token)
            if token == "'s":
                pos = "POS"
        elif word in {"'ll", "'d"}:
            pos, lemma = "MD", {"'ll": "will", "'d": "would"}[word]
        elif word == "'s":
            pos, lemma = "POS", "'s"
        elif word in MODALS:
            pos = "MD"
        elif word == "to":
            pos = "TO"
        elif word in DETERMINERS or word in {"this", "these", "those"}:
            pos = "DT"
        elif word in POSSESSIVES:
            pos = "PRP$"
        elif word in PRONOUNS:
            pos = "PRP"
        elif word in CONJUNCTIONS:
            pos = "CC"
        elif word in WH_ADVERBS:
            pos = "WRB"
        elif word in WH_DETERMINERS:
            pos = "WDT"
        elif word == "that":
            pos = "IN"
        elif word in VERB_FORMS and not (tags and tags[-1] in {"DT", "IN", "PRP$", "JJ"}):
            lemma, kind = VERB_FORMS[word]
            prev = words[i - 1] if i else ""
            if kind == "3sg":
                pos = "VBZ"
            elif kind == "ger":
                pos = "VBG"
            elif kind in ("past", "part"):
                if word in PARTICIPLE_FORMS and word not in PAST_FORMS:
                    pos = "VBN"  # unambiguous participle like "bitten"
                elif word in PARTICIPLE_FORMS and _is_participle_context(tags, words, i):
                    pos = "VBN"
                else:
                    pos = "VBD"
            else:  # base form
                pos = "VB" if prev == "to" or (tags and tags[-1] == "MD") else "VBP"
        elif word in PREPOSITIONS:
            pos = "IN"
        elif word in ADVERBS or word.endswith("ly"):
            pos = "RB"
        elif token[0].isupper():
            pos = "NNP"
        elif word.endswith("s") and len(word) > 3 and word[:-1] in _NOUN_HINTS:
            pos, lemma = "NNS", word[:-1]
        else:
            pos = "NN"
        tags.append(pos)
        lemmas.append(lemma)
    return list(zip(tags, lemmas))


_NOUN_HINTS = {"pain", "dragon", "spell", "lamp", "snake", "story", "police", "truth",
               "woman", "fortune", "crime", "castle", "shop", "promise", "medicine",
               "king", "genie", "princess", "baby", "door", "gun", "sword", "way"}


def _noun_phrase_start(tags: list[str], end: int) -> int:
    """Walk left from an NP head over dets/adjectives/possessives/compounds."""
    start = end
    while start - 1 >= 0 and tags[start - 1] in {"DT", "JJ", "PRP$", "NNP", "NN", "POS"}:
        if tags[start - 1] == "POS" and start - 2 >= 0:
            start -= 1
            continue
        start -= 1
    return start


def parse(tokens: list[str], tagged: list[tuple[str, str]]) -> list[dict]:
    """Heuristic dependency tree; labels cover what downstream rules read."""
    n = len(tokens)
    tags = [pos for pos, _ in tagged]
    words = [t.lower() for t in tokens]
    head = [None] * n
    rel = ["dep"] * n

    verb_indices = [i for i, t in enumerate(tags) if t.startswith("VB")]
    if not verb_indices:
        root = 0
        head[root] = -1
        rel[root] = "root"
        for i in range(n):
            if i != root:
                head[i], rel[i] = root, "punct" if not tokens[i][0].isalnum() else "dep"
        return [{"head": h, "dep": i, "rel": r} for i, (h, r) in enumerate(zip(head, rel))]

    # Main verb: first finite verb, preferring a VBN right after its passive aux.
    def attach(i, h, r):
        if head[i] is None and h != i:
            head[i], rel[i] = h, r

    main = None
    for i in verb_indices:
        if tags[i] in {"VBZ", "VBP", "VBD"} and words[i] in BE_FORMS | GET_FORMS | HAVE_FORMS:
            nxt = next((j for j in verb_indices if j > i), None)
            if nxt is not None and tags[nxt] in {"VBN", "VBG"} and nxt - i <= 3:
                main = nxt
                attach(i, nxt, "aux:pass" if tags[nxt] == "VBN" else "aux")
                break
        if tags[i] in {"VBZ", "VBP", "VBD"}:
            main = i
            break
    if main is None:
        main = verb_indices[0]
    head[main] = -1
    rel[main] = "root"

    # Other verbs: clause attachment.
    for i in verb_indices:
        if head[i] is not None or i == main:
            continue
        prev = words[i - 1] if i else ""
        prev2 = words[i - 2] if i >= 2 else ""
        left_verbs = [v for v in verb_indices if v < i and v != i]
        nearest_left = max((v for v in left_verbs if head[v] is None or rel[v] in {"root", "ccomp", "xcomp", "conj", "advcl", "acl:relcl"}), default=main)
        if prev == "to" or tags[i] == "VB" and prev2 == "to":
            attach(i, nearest_left, "xcomp")
        elif tags[i] in {"VBN", "VBG"} and prev in BE_FORMS | GET_FORMS | HAVE_FORMS:
            attach(i - 1, i, "aux:pass" if tags[i] == "VBN" else "aux")
            # re-point: the participle heads its own clause under the left verb
            attach(i, nearest_left, "xcomp")
        elif any(words[j] in {"if", "whenever"} or (words[j], words[min(j + 1, n - 1)]) == ("as", "long") for j in range(max(0, i - 5), i)):
            attach(i, main, "advcl")
        elif any(tags[j] == "WDT" for j in range(max(0, i - 2), i)):
            attach(i, nearest_left, "acl:relcl")
        elif any(tags[j] == "CC" for j in range(max(0, i - 4), i)):
            attach(i, main, "conj")
        elif tags[i] == "VBG":
            attach(i, nearest_left, "advcl")
        elif tags[i] in {"VBZ", "VBP", "VBD"}:
            attach(i, nearest_left, "ccomp")
        else:
            attach(i, nearest_left, "dep")

    # Auxiliaries, negation, subjects, objects, function words.
    for i in range(n):
        if head[i] is not None:
            continue
        pos = tags[i]
        word = words[i]
        next_verb = next((v for v in verb_indices if v > i), None)
        prev_verb = next((v for v in reversed(verb_indices) if v < i), None)
        next_noun = next(
            (j for j in range(i + 1, n) if tags[j] in {"NN", "NNS", "NNP", "PRP"}), None
        )
        if pos in {"MD", "TO"} and next_verb is not None:
            attach(i, next_verb, "aux" if pos == "MD" else "mark")
        elif word in BE_FORMS | HAVE_FORMS | DO_FORMS | GET_FORMS and next_verb is not None and pos.startswith("VB"):
            attach(i, next_verb, "aux")
        elif pos == "RB":
            target = next_verb if next_verb is not None else (prev_verb if prev_verb is not None else main)
            if word in PARTICLES and prev_verb is not None and (next_noun is None or tags[i - 1].startswith("VB")):
                attach(i, prev_verb, "compound:prt")
            else:
                attach(i, target, "advmod")
        elif pos == "DT":
            attach(i, next_noun if next_noun is not None else main, "det")
        elif pos == "PRP$":
            attach(i, next_noun if next_noun is not None else main, "nmod:poss")
        elif pos == "POS":
            attach(i, i - 1 if i else main, "case")
        elif pos == "JJ":
            attach(i, next_noun if next_noun is not None else main, "amod")
        elif pos in {"IN", "WRB"}:
            if word in {"if", "whenever", "that", "because", "while", "after", "before"} and next_verb is not None:
                attach(i, next_verb, "mark")
            elif next_noun is not None:
                attach(i, next_noun, "case")
            else:
                attach(i, main, "dep")
        elif pos == "CC":
            later_verb = next((v for v in verb_indices if v > i), None)
            attach(i, later_verb if later_verb is not None else main, "cc")
        elif pos == "WDT" and next_verb is not None:
            attach(i, next_verb, "nsubj")
        elif pos in {"NNP", "NN", "NNS", "PRP"}:
            if i + 1 < n and tags[i + 1] == "NNP" and pos == "NNP":
                attach(i, i + 1, "compound")
            elif next_verb is not None and prev_verb is None and next_verb - i <= 4:
                attach(i, next_verb, "nsubj")
            elif prev_verb is not None and i - 1 >= 0 and tags[i - 1] in {"IN", "TO"}:
                attach(i, prev_verb, "obl")
            elif prev_verb is not None:
                attach(i, prev_verb, "obj")
            else:
                attach(i, main, "dep")
        elif not token_is_word(tokens[i]):
            attach(i, main, "punct")
        else:
            attach(i, main, "dep")

    for i in range(n):
        if head[i] is None:
            head[i], rel[i] = main, "dep"

    # Break any accidental cycles by re-rooting the offender.
    for start in range(n):
        seen = set()
        cur = start
        while cur != -1:
            if cur in seen:
                head[start], rel[start] = main, "dep"
                break
            seen.add(cur)
            cur = head[cur]

    return [{"head": h, "dep": i, "rel": r} for i, (h, r) in enumerate(zip(head, rel))]


def token_is_word(token: str) -> bool:
    return token[0].isalnum() or token.startswith("'")


def _np_span(tags: list[str], head_index: int) -> tuple[int, int]:
    return (_noun_phrase_start(tags, head_index), head_index + 1)


def frames(tokens: list[str], tagged: list[tuple[str, str]], deps: list[dict]) -> list[dict]:
    """One PropBank-style frame per content verb."""
    n = len(tokens)
    tags = [pos for pos, _ in tagged]
    words = [t.lower() for t in tokens]
    aux_targets = {d["dep"] for d in deps if d["rel"] in {"aux", "aux:pass", "mark"}}
    end_content = n
    while end_content > 0 and not token_is_word(tokens[end_content - 1]):
        end_content -= 1

    verb_indices = [
        i
        for i, t in enumerate(tags)
        if t.startswith("VB") and i not in aux_targets
    ]
    out = []
    for verb in verb_indices:
        args = []
        passive = any(d["dep"] != verb and d["head"] == verb and d["rel"] == "aux:pass" for d in deps)
        # Subject: nearest NP ending before the verb group.
        group_start = verb
        while group_start - 1 >= 0 and (
            tags[group_start - 1] in {"MD", "TO", "RB"}
            or words[group_start - 1] in BE_FORMS | HAVE_FORMS | DO_FORMS | GET_FORMS
        ):
            group_start -= 1
        subject_head = next(
            (
                j
                for j in range(group_start - 1, -1, -1)
                if tags[j] in {"NNP", "NN", "NNS", "PRP", "WDT"}
            ),
            None,
        )
        if subject_head is not None and not any(
            tags[k].startswith("VB") and k not in aux_targets
            for k in range(subject_head + 1, group_start)
        ):
            span = _np_span(tags, subject_head)
            args.append(("ARG1" if passive else "ARG0", span))

        # Complement: everything from after the verb to the last content token.
        after = verb + 1
        signal_start = None
        for j in range(after, end_content):
            if words[j] == "if" or (words[j] == "whenever") or (
                words[j] == "as" and j + 2 < n and words[j + 1] == "long"
            ):
                signal_start = j
                break
        comp_end = signal_start if signal_start is not None else end_content
        has_later_verb = any(v > verb for v in verb_indices)
        if after < comp_end:
            if has_later_verb or passive:
                label = "ARG2" if passive else "ARG1"
                args.append((label, (after, comp_end)))
            else:
                # Split off a trailing locative PP when present.
                pp_start = next(
                    (
                        j
                        for j in range(after + 1, comp_end)
                        if tags[j] == "IN" and words[j] in {"in", "on", "at", "within"}
                    ),
                    None,
                )
                if pp_start is not None and pp_start > after:
                    args.append(("ARG1", (after, pp_start)))
                    args.append(("ARGM-LOC", (pp_start, comp_end)))
                elif tags[after] == "IN" or tags[after] == "TO":
                    args.append(("ARG2", (after, comp_end)))
                else:
                    args.append(("ARG1", (after, comp_end)))
        if signal_start is not None and signal_start > verb:
            args.append(("ARGM-ADV", (signal_start, end_content)))

        cleaned = []
        seen_numbered = set()
        for label, (s, e) in args:
            if not (0 <= s < e <= n) or s <= verb < e:
                continue
            if label[3:].isdigit():
                if label in seen_numbered:
                    continue
                seen_numbered.add(label)
            cleaned.append({"label": label, "start": s, "end": e})
        out.append({"verb": verb, "args": cleaned})
    return out


def coref_chains(sentences: list[dict]) -> list[list[dict]]:
    """Pronouns link to the most recent proper-name mention."""
    mentions_by_entity: dict[str, list[dict]] = {}
    last_person: str | None = None
    for si, sent in enumerate(sentences):
        tokens = sent["tokens"]
        i = 0
        while i < len(tokens):
            tok = tokens[i]
            if tok["pos"] == "NNP":
                end = i + 1
                while end < len(tokens) and tokens[end]["pos"] == "NNP":
                    end += 1
                name = " ".join(t["text"] for t in tokens[i:end])
                mentions_by_entity.setdefault(name, []).append({"sent": si, "start": i, "end": end})
                last_person = name
                i = end
                continue
            word = tok["text"].lower()
            if word in {"he", "she", "him", "her", "his", "himself", "herself"} and last_person:
                mentions_by_entity[last_person].append({"sent": si, "start": i, "end": i + 1})
            i += 1
    chains = []
    for mentions in mentions_by_entity.values():
        unique = sorted({(m["sent"], m["start"], m["end"]) for m in mentions})
        if len(unique) >= 2:
            chains.append([{"sent": s, "start": a, "end": b} for s, a, b in unique])
    chains.sort(key=lambda c: (c[0]["sent"], c[0]["start"]))
    return chains


def annotate(text: str, doc_id: str = "doc") -> dict:
    """Full annotation JSON for a text; empty text gives zero sentences."""
    sentences = []
    for raw in split_sentences(text):
        tokens = tokenize(raw)
        if not tokens:
            continue
        tagged = tag(tokens)
        deps = parse(tokens, tagged)
        sentences.append(
            {
                "tokens": [
                    {"text": t, "lemma": lemma, "pos": pos}
                    for t, (pos, lemma) in zip(tokens, tagged)
                ],
                "deps": deps,
                "frames": frames(tokens, tagged, deps),
            }
        )
    return {"doc_id": doc_id, "sentences": sentences, "coref": coref_chains(sentences)}
