"""Turn SRL frames into events: coreference substitution, phrasal verbs,
statement classification."""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources

from .annotations import AnnotatedDocument, Sentence, Span

STATEMENT_LEMMAS = frozenset({"be", "have"})
POSSESSIVE_POS = "PRP$"
PARTICLE_RELATIONS = frozenset({"case", "mark"})


@dataclass(frozen=True)
class EventArgument:
    label: str
    span: Span
    resolved_text: str


@dataclass(frozen=True)
class Event:
    id: str
    sentence_index: int
    verb_index: int  # head verb token
    verb_span: Span  # widened by phrasal-verb detection
    verb_text: str  # lemmatized head verb, possibly "lemma particle"
    arguments: tuple[EventArgument, ...]
    is_statement: bool

    def argument(self, label: str) -> EventArgument | None:
        for arg in self.arguments:
            if arg.label == label:
                return arg
        return None


def load_lexicon(path=None) -> frozenset[str]:
    """Phrasal-verb list: one lowercase entry per line, '#' comments allowed."""
    if path is None:
        text = resources.files("story2pddl").joinpath("data/phrasal_verbs.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    entries = set()
    for line in text.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            entries.add(line)
    return frozenset(entries)


def _mention_is_pronoun(sentence: Sentence, span: Span) -> bool:
    return all(sentence.tokens[i].pos.startswith("PRP") for i in range(span.start, span.end))


def _mention_is_possessive(sentence: Sentence, span: Span) -> bool:
    last = sentence.tokens[span.end - 1]
    return last.pos in (POSSESSIVE_POS, "POS") or last.text.lower().endswith("'s")


def resolve_entities(doc: AnnotatedDocument) -> AnnotatedDocument:
    """Substitute each chain's first mention for its later mentions.

    The substitution is an overlay keyed by (sentence, start, end); the
    token and dependency structure is untouched. Possessive pronouns pick
    up a trailing "'s" when the representative is not itself possessive;
    pronoun representatives substitute nothing.
    """
    overlay: dict[tuple[int, int, int], str] = {}
    for chain in doc.coref_chains:
        rep = chain.representative
        rep_sentence = doc.sentences[rep.sentence_index]
        if _mention_is_pronoun(rep_sentence, rep.span):
            continue
        rep_text = rep_sentence.text(rep.span)
        rep_possessive = _mention_is_possessive(rep_sentence, rep.span)
        for mention in chain.mentions[1:]:
            sentence = doc.sentences[mention.sentence_index]
            text = rep_text
            if not rep_possessive and _mention_is_possessive(sentence, mention.span):
                text = rep_text + "'s"
            overlay[(mention.sentence_index, mention.span.start, mention.span.end)] = text
    return replace(doc, resolutions=tuple(sorted(overlay.items())))


def resolved_span_text(doc: AnnotatedDocument, sentence_index: int, span: Span) -> str:
    """Surface text of a span with resolved mentions substituted in."""
    overlay = doc.resolution_map()
    mentions = sorted(
        (
            (Span(s, e), text)
            for (sent, s, e), text in overlay.items()
            if sent == sentence_index and span.contains(Span(s, e))
        ),
        key=lambda m: (m[0].start, m[0].end),
    )
    sentence = doc.sentences[sentence_index]
    parts: list[str] = []
    i = span.start
    while i < span.end:
        hit = next((m for m in mentions if m[0].start == i), None)
        if hit is not None:
            parts.append(hit[1])
            i = hit[0].end
        else:
            parts.append(sentence.tokens[i].text)
            i += 1
    return " ".join(parts)


def detect_phrasal_verb(sentence: Sentence, verb_index: int, lexicon: frozenset[str]) -> Span | None:
    """Widen a frame verb to verb+particle when the lexicon confirms it.

    Candidates: a token with a compound:prt edge to the verb, or a token
    adjacent to the verb attached to it by case/mark. Only "verb particle"
    bigrams present in the lexicon are accepted.
    """
    verb = sentence.tokens[verb_index]
    candidates: list[int] = []
    for edge in sentence.deps:
        if edge.head != verb_index:
            continue
        particle = edge.dependent
        if edge.relation == "compound:prt":
            candidates.append(particle)
        elif edge.relation in PARTICLE_RELATIONS and abs(particle - verb_index) == 1:
            candidates.append(particle)
    for particle in sorted(candidates):
        bigram = f"{verb.lemma.lower()} {sentence.tokens[particle].lemma.lower()}"
        if bigram in lexicon:
            return Span(min(verb_index, particle), max(verb_index, particle) + 1)
    return None


def build_events(doc: AnnotatedDocument, lexicon: frozenset[str]) -> list[Event]:
    """One event per SRL frame, ordered by (sentence, verb position).

    Expects an entity-resolved document; argument texts come from the
    resolution overlay.
    """
    events: list[Event] = []
    counter = 0
    for sent_index, sentence in enumerate(doc.sentences):
        for frame in sorted(sentence.frames, key=lambda f: f.verb_index):
            counter += 1
            verb = sentence.tokens[frame.verb_index]
            verb_span = detect_phrasal_verb(sentence, frame.verb_index, lexicon)
            if verb_span is None:
                verb_span = Span(frame.verb_index, frame.verb_index + 1)
                verb_text = verb.lemma.lower()
            else:
                particle = next(
                    i for i in range(verb_span.start, verb_span.end) if i != frame.verb_index
                )
                verb_text = f"{verb.lemma.lower()} {sentence.tokens[particle].lemma.lower()}"
            args = tuple(
                EventArgument(
                    label=label,
                    span=span,
                    resolved_text=resolved_span_text(doc, sent_index, span),
                )
                for label, span in frame.arguments
            )
            events.append(
                Event(
                    id=f"e{counter}",
                    sentence_index=sent_index,
                    verb_index=frame.verb_index,
                    verb_span=verb_span,
                    verb_text=verb_text,
                    arguments=args,
                    is_statement=verb.lemma.lower() in STATEMENT_LEMMAS,
                )
            )
    return events
