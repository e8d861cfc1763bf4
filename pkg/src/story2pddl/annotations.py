"""Linguistic-annotation interchange format: types, loading, validation.

A document is a list of sentences, each carrying tokens (surface, lemma,
Penn POS), a dependency tree and PropBank-style SRL frames, plus
document-level coreference chains. Documents are immutable after load and
safe to share across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

ROOT = -1

NUMBERED_LABELS = frozenset({"ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5"})


class SchemaError(ValueError):
    """Input JSON does not match the annotation schema (shape/type level)."""


class ValidationError(ValueError):
    """Structurally well-formed input violating an annotation invariant."""


@dataclass(frozen=True)
class Span:
    """Half-open token interval [start, end) within one sentence."""

    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start < self.end):
            raise ValidationError(f"bad span [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start

    def contains_index(self, index: int) -> bool:
        return self.start <= index < self.end

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end


@dataclass(frozen=True)
class Token:
    index: int
    text: str
    lemma: str
    pos: str


@dataclass(frozen=True)
class DependencyEdge:
    head: int  # token index, or ROOT (-1)
    dependent: int
    relation: str


@dataclass(frozen=True)
class SrlFrame:
    verb_index: int
    arguments: tuple[tuple[str, Span], ...]

    def argument(self, label: str) -> Span | None:
        for lbl, span in self.arguments:
            if lbl == label:
                return span
        return None


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    deps: tuple[DependencyEdge, ...]
    frames: tuple[SrlFrame, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def text(self, span: Span | None = None) -> str:
        toks = self.tokens if span is None else self.tokens[span.start:span.end]
        return " ".join(t.text for t in toks)

    def edges_between(self, head: int, dependent: int) -> list[str]:
        return [e.relation for e in self.deps if e.head == head and e.dependent == dependent]


@dataclass(frozen=True)
class Mention:
    sentence_index: int
    span: Span


@dataclass(frozen=True)
class CorefChain:
    mentions: tuple[Mention, ...]

    @property
    def representative(self) -> Mention:
        return self.mentions[0]


@dataclass(frozen=True)
class AnnotatedDocument:
    doc_id: str
    sentences: tuple[Sentence, ...]
    coref_chains: tuple[CorefChain, ...]
    # Overlay written by entity resolution: (sentence, start, end) -> text.
    # Empty on freshly loaded documents; never serialized.
    resolutions: tuple[tuple[tuple[int, int, int], str], ...] = field(default=())

    def resolution_map(self) -> dict[tuple[int, int, int], str]:
        return dict(self.resolutions)


def _expect_keys(obj, keys: tuple[str, ...], where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    extra = [k for k in obj if k not in keys]
    if missing:
        raise SchemaError(f"{where}: missing fields {missing}")
    if extra:
        raise SchemaError(f"{where}: unexpected fields {extra}")


def _expect_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(f"{where}: expected string, got {type(value).__name__}")
    return value


def _expect_int(value, where: str) -> int:
    # bool is an int subclass; annotations never carry booleans.
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{where}: expected integer, got {type(value).__name__}")
    return value


def _expect_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected array, got {type(value).__name__}")
    return value


def _parse_span(obj, n_tokens: int, where: str) -> Span:
    start = _expect_int(obj["start"], f"{where}.start")
    end = _expect_int(obj["end"], f"{where}.end")
    if not (0 <= start < end <= n_tokens):
        raise ValidationError(f"{where}: span [{start}, {end}) out of range for {n_tokens} tokens")
    return Span(start, end)


def _parse_sentence(obj, sent_index: int) -> Sentence:
    where = f"sentences[{sent_index}]"
    _expect_keys(obj, ("tokens", "deps", "frames"), where)

    tokens = []
    for i, tok in enumerate(_expect_list(obj["tokens"], f"{where}.tokens")):
        twhere = f"{where}.tokens[{i}]"
        _expect_keys(tok, ("text", "lemma", "pos"), twhere)
        text = _expect_str(tok["text"], f"{twhere}.text")
        lemma = _expect_str(tok["lemma"], f"{twhere}.lemma")
        pos = _expect_str(tok["pos"], f"{twhere}.pos")
        if not text or not lemma:
            raise ValidationError(f"{twhere}: empty text or lemma")
        tokens.append(Token(index=i, text=text, lemma=lemma, pos=pos))
    n = len(tokens)

    edges = []
    seen_dependents: dict[int, int] = {}
    for i, dep in enumerate(_expect_list(obj["deps"], f"{where}.deps")):
        dwhere = f"{where}.deps[{i}]"
        _expect_keys(dep, ("head", "dep", "rel"), dwhere)
        head = _expect_int(dep["head"], f"{dwhere}.head")
        dependent = _expect_int(dep["dep"], f"{dwhere}.dep")
        rel = _expect_str(dep["rel"], f"{dwhere}.rel")
        if not (0 <= dependent < n):
            raise ValidationError(f"{dwhere}: dependent {dependent} out of range")
        if head != ROOT and not (0 <= head < n):
            raise ValidationError(f"{dwhere}: head {head} out of range")
        if head == dependent:
            raise ValidationError(f"{dwhere}: self-loop on token {dependent}")
        if dependent in seen_dependents:
            raise ValidationError(
                f"{dwhere}: token {dependent} already dependent of edge {seen_dependents[dependent]}"
            )
        seen_dependents[dependent] = i
        edges.append(DependencyEdge(head=head, dependent=dependent, relation=rel))

    if len(edges) != n:
        missing = sorted(set(range(n)) - set(seen_dependents))
        raise ValidationError(f"{where}: tokens {missing} have no incoming dependency edge")

    # Tree property: every head chain must terminate at ROOT.
    head_of = {e.dependent: e.head for e in edges}
    for start_tok in range(n):
        seen = set()
        cur = start_tok
        while cur != ROOT:
            if cur in seen:
                raise ValidationError(f"{where}: dependency cycle through token {cur}")
            seen.add(cur)
            cur = head_of[cur]

    frames = []
    for i, fr in enumerate(_expect_list(obj["frames"], f"{where}.frames")):
        fwhere = f"{where}.frames[{i}]"
        _expect_keys(fr, ("verb", "args"), fwhere)
        verb = _expect_int(fr["verb"], f"{fwhere}.verb")
        if not (0 <= verb < n):
            raise ValidationError(f"{fwhere}: verb index {verb} out of range")
        args = []
        numbered_seen = set()
        for j, arg in enumerate(_expect_list(fr["args"], f"{fwhere}.args")):
            awhere = f"{fwhere}.args[{j}]"
            _expect_keys(arg, ("label", "start", "end"), awhere)
            label = _expect_str(arg["label"], f"{awhere}.label")
            span = _parse_span(arg, n, awhere)
            if label in NUMBERED_LABELS:
                if label in numbered_seen:
                    raise ValidationError(f"{awhere}: duplicate numbered label {label}")
                numbered_seen.add(label)
            if span.contains_index(verb):
                raise ValidationError(f"{awhere}: argument span covers the frame verb {verb}")
            args.append((label, span))
        frames.append(SrlFrame(verb_index=verb, arguments=tuple(args)))

    return Sentence(tokens=tuple(tokens), deps=tuple(edges), frames=tuple(frames))


def load_document(data: bytes | str) -> AnnotatedDocument:
    """Parse and fully validate one annotation JSON document.

    Raises SchemaError for shape/type problems and ValidationError for
    invariant violations; never returns a partially valid document.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not JSON: {exc}") from None

    _expect_keys(obj, ("doc_id", "sentences", "coref"), "document")
    doc_id = _expect_str(obj["doc_id"], "doc_id")

    sentences = tuple(
        _parse_sentence(s, i) for i, s in enumerate(_expect_list(obj["sentences"], "sentences"))
    )

    chains = []
    for ci, chain in enumerate(_expect_list(obj["coref"], "coref")):
        cwhere = f"coref[{ci}]"
        mentions = []
        for mi, m in enumerate(_expect_list(chain, cwhere)):
            mwhere = f"{cwhere}[{mi}]"
            _expect_keys(m, ("sent", "start", "end"), mwhere)
            sent = _expect_int(m["sent"], f"{mwhere}.sent")
            if not (0 <= sent < len(sentences)):
                raise ValidationError(f"{mwhere}: sentence index {sent} out of range")
            span = _parse_span(m, len(sentences[sent]), mwhere)
            mentions.append(Mention(sentence_index=sent, span=span))
        if len(mentions) < 2:
            raise ValidationError(f"{cwhere}: chain needs at least two mentions")
        keys = [(m.sentence_index, m.span.start) for m in mentions]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValidationError(f"{cwhere}: mentions not ordered by (sentence, start)")
        chains.append(CorefChain(mentions=tuple(mentions)))

    return AnnotatedDocument(doc_id=doc_id, sentences=sentences, coref_chains=tuple(chains))


def document_to_dict(doc: AnnotatedDocument) -> dict:
    """Inverse of load_document, up to the resolution overlay."""
    return {
        "doc_id": doc.doc_id,
        "sentences": [
            {
                "tokens": [{"text": t.text, "lemma": t.lemma, "pos": t.pos} for t in s.tokens],
                "deps": [{"head": e.head, "dep": e.dependent, "rel": e.relation} for e in s.deps],
                "frames": [
                    {
                        "verb": f.verb_index,
                        "args": [
                            {"label": lbl, "start": sp.start, "end": sp.end}
                            for lbl, sp in f.arguments
                        ],
                    }
                    for f in s.frames
                ],
            }
            for s in doc.sentences
        ],
        "coref": [
            [{"sent": m.sentence_index, "start": m.span.start, "end": m.span.end} for m in c.mentions]
            for c in doc.coref_chains
        ],
    }


def serialize_document(doc: AnnotatedDocument) -> bytes:
    return json.dumps(document_to_dict(doc), ensure_ascii=False).encode("utf-8")


def sentence_text(doc: AnnotatedDocument, sentence_index: int) -> str:
    """Tokens of one sentence joined by single spaces."""
    if not (0 <= sentence_index < len(doc.sentences)):
        raise IndexError(f"sentence index {sentence_index} out of range (document has {len(doc.sentences)})")
    return doc.sentences[sentence_index].text()
