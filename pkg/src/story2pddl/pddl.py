"""Assemble action models into a planning domain and emit canonical PDDL.

Output is STRIPS + typing (+ negative preconditions when present), two
fixed types (subject/object), deterministic formatting: 2-space indent,
one literal per line, lowercase throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .synthesis import ActionModel, Literal

TYPE_BY_PARAM = {"x": "subject", "o": "object"}


@dataclass(frozen=True)
class PredicateDecl:
    name: str
    params: tuple[str, ...]  # parameter names, e.g. ("x", "o")

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass
class PlanningDomain:
    name: str
    predicates: tuple[PredicateDecl, ...]
    actions: list[ActionModel]
    requirements: tuple[str, ...] = (":strips", ":typing")
    types: tuple[str, ...] = ("subject", "object")


def _unique_action_names(actions: list[ActionModel]) -> list[ActionModel]:
    seen: dict[str, int] = {}
    out = []
    for action in actions:
        count = seen.get(action.name, 0) + 1
        seen[action.name] = count
        if count == 1:
            out.append(action)
        else:
            out.append(replace(action, name=f"{action.name}-{count}"))
    return out


def assemble(actions: list[ActionModel], name: str) -> PlanningDomain:
    """Deduplicate predicates, resolve arity conflicts, compute requirements.

    When one predicate name occurs at several arities, the most frequent
    variant keeps the name and the others are suffixed with their arity;
    all literals are rewritten accordingly.
    """
    actions = _unique_action_names([replace(a) for a in actions])

    usage: dict[tuple[str, int], int] = {}
    first_params: dict[tuple[str, int], tuple[str, ...]] = {}
    for action in actions:
        for lit in action.preconditions + action.effects:
            key = (lit.predicate, len(lit.args))
            usage[key] = usage.get(key, 0) + 1
            first_params.setdefault(key, lit.args)

    arities: dict[str, list[int]] = {}
    for pred, arity in usage:
        arities.setdefault(pred, []).append(arity)

    rename: dict[tuple[str, int], str] = {}
    for pred, arity_list in arities.items():
        if len(arity_list) == 1:
            continue
        # Highest usage keeps the bare name; ties go to the lower arity.
        winner = sorted(arity_list, key=lambda a: (-usage[(pred, a)], a))[0]
        for arity in arity_list:
            if arity != winner:
                rename[(pred, arity)] = f"{pred}-{arity}"

    if rename:
        for action in actions:
            for pool_name in ("preconditions", "effects"):
                pool = getattr(action, pool_name)
                for i, lit in enumerate(pool):
                    key = (lit.predicate, len(lit.args))
                    if key in rename:
                        pool[i] = replace(lit, predicate=rename[key])

    decls = set()
    for key, params in first_params.items():
        final_name = rename.get(key, key[0])
        decls.add(PredicateDecl(name=final_name, params=params))

    requirements = [":strips", ":typing"]
    if any(lit.negated for action in actions for lit in action.preconditions):
        requirements.append(":negative-preconditions")

    return PlanningDomain(
        name=name,
        predicates=tuple(sorted(decls, key=lambda d: (d.name, d.arity))),
        actions=actions,
        requirements=tuple(requirements),
    )


def _format_literal(lit: Literal) -> str:
    atom = "(" + " ".join([lit.predicate] + [f"?{a}" for a in lit.args]) + ")"
    return f"(not {atom})" if lit.negated else atom


def _format_params(params) -> str:
    return " ".join(f"?{p.name} - {p.type}" for p in params)


def emit_pddl(domain: PlanningDomain) -> str:
    """Canonical, deterministic PDDL text for the assembled domain."""
    lines = [f"(define (domain {domain.name})"]
    lines.append(f"  (:requirements {' '.join(domain.requirements)})")
    lines.append(f"  (:types {' '.join(domain.types)})")
    if domain.predicates:
        lines.append("  (:predicates")
        for decl in domain.predicates:
            params = " ".join(f"?{p} - {TYPE_BY_PARAM.get(p, 'object')}" for p in decl.params)
            lines.append(f"    ({decl.name} {params})")
        lines[-1] += ")"
    else:
        lines.append("  (:predicates)")
    for action in domain.actions:
        lines.append(f"  (:action {action.name}")
        lines.append(f"    :parameters ({_format_params(action.parameters)})")
        lines.append("    :precondition (and")
        for lit in action.preconditions:
            lines.append(f"      {_format_literal(lit)}")
        lines[-1] += ")"
        lines.append("    :effect (and")
        for lit in action.effects:
            lines.append(f"      {_format_literal(lit)}")
        lines[-1] += "))"
    lines.append(")")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


@dataclass
class _Node:
    """S-expression node: either an atom or a list of nodes."""
    line: int
    column: int
    atom: str | None = None
    items: list = field(default_factory=list)

    @property
    def is_list(self) -> bool:
        return self.atom is None


def _tokenize(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif ch in "()":
            yield (ch, line, col)
            col += 1
            i += 1
        else:
            start = i
            start_col = col
            while i < len(text) and text[i] not in " \t\r\n();":
                i += 1
                col += 1
            yield (text[start:i], line, start_col)


def _parse_sexprs(text: str) -> tuple[list[_Node], list[Diagnostic]]:
    roots: list[_Node] = []
    stack: list[_Node] = []
    for tok, line, col in _tokenize(text):
        if tok == "(":
            node = _Node(line=line, column=col)
            if stack:
                stack[-1].items.append(node)
            else:
                roots.append(node)
            stack.append(node)
        elif tok == ")":
            if not stack:
                return roots, [Diagnostic(line, col, "unbalanced ')'")]
            stack.pop()
        else:
            node = _Node(line=line, column=col, atom=tok)
            if stack:
                stack[-1].items.append(node)
            else:
                roots.append(node)
    if stack:
        open_node = stack[-1]
        return roots, [Diagnostic(open_node.line, open_node.column, "unclosed '('")]
    return roots, []


_SECTION_KEYWORDS = {":requirements", ":types", ":constants", ":predicates", ":functions", ":action"}
_ACTION_KEYS = {":parameters", ":precondition", ":effect"}


def _check_literal(node: _Node, declared_params: set[str], predicates: dict[str, set[int]], diags: list[Diagnostic], allow_not=True) -> None:
    if not node.is_list or not node.items or not node.items[0].atom:
        diags.append(Diagnostic(node.line, node.column, "expected a literal"))
        return
    head = node.items[0].atom
    if head == "and":
        for item in node.items[1:]:
            _check_literal(item, declared_params, predicates, diags, allow_not)
        return
    if head == "not":
        if not allow_not:
            diags.append(Diagnostic(node.line, node.column, "nested 'not'"))
        elif len(node.items) != 2:
            diags.append(Diagnostic(node.line, node.column, "'not' takes exactly one literal"))
        else:
            _check_literal(node.items[1], declared_params, predicates, diags, allow_not=False)
        return
    arity = len(node.items) - 1
    if head not in predicates:
        diags.append(Diagnostic(node.line, node.column, f"undeclared predicate '{head}'"))
    elif arity not in predicates[head]:
        diags.append(Diagnostic(node.line, node.column, f"predicate '{head}' used with arity {arity}"))
    for arg in node.items[1:]:
        if arg.atom is None:
            diags.append(Diagnostic(arg.line, arg.column, "literal arguments must be atoms"))
        elif not arg.atom.startswith("?"):
            diags.append(Diagnostic(arg.line, arg.column, f"expected a variable, got '{arg.atom}'"))
        elif arg.atom not in declared_params:
            diags.append(Diagnostic(arg.line, arg.column, f"undeclared parameter {arg.atom}"))


def _parse_typed_vars(items: list[_Node], diags: list[Diagnostic]) -> set[str]:
    names: set[str] = set()
    i = 0
    while i < len(items):
        item = items[i]
        if item.atom is None or not item.atom.startswith("?"):
            diags.append(Diagnostic(item.line, item.column, "expected a variable"))
            i += 1
            continue
        names.add(item.atom)
        if i + 1 < len(items) and items[i + 1].atom == "-":
            if i + 2 >= len(items) or items[i + 2].atom is None:
                diags.append(Diagnostic(item.line, item.column, "dangling type dash"))
                i += 2
            else:
                i += 3
        else:
            i += 1
    return names


def validate_syntax(text: str) -> list[Diagnostic]:
    """Structural PDDL check; an empty list means the text is well-formed."""
    roots, diags = _parse_sexprs(text)
    if diags:
        return diags
    if len(roots) != 1 or not roots[0].is_list:
        where = roots[1] if len(roots) > 1 else (roots[0] if roots else _Node(1, 1))
        return [Diagnostic(where.line, where.column, "expected exactly one (define ...) form")]

    root = roots[0]
    items = root.items
    if not items or items[0].atom != "define":
        return [Diagnostic(root.line, root.column, "top-level form must be (define ...)")]
    if len(items) < 2 or not items[1].is_list or len(items[1].items) != 2 or items[1].items[0].atom != "domain":
        return [Diagnostic(root.line, root.column, "missing (domain NAME) declaration")]

    predicates: dict[str, set[int]] = {}
    actions: list[_Node] = []
    for section in items[2:]:
        if not section.is_list or not section.items or not section.items[0].atom:
            diags.append(Diagnostic(section.line, section.column, "expected a (:section ...) form"))
            continue
        keyword = section.items[0].atom
        if keyword not in _SECTION_KEYWORDS:
            diags.append(Diagnostic(section.line, section.column, f"unknown section '{keyword}'"))
            continue
        if keyword == ":predicates":
            for decl in section.items[1:]:
                if not decl.is_list or not decl.items or decl.items[0].atom is None:
                    diags.append(Diagnostic(decl.line, decl.column, "bad predicate declaration"))
                    continue
                name = decl.items[0].atom
                _parse_typed_vars(decl.items[1:], diags)
                arity = sum(1 for it in decl.items[1:] if it.atom and it.atom.startswith("?"))
                predicates.setdefault(name, set()).add(arity)
        elif keyword == ":action":
            actions.append(section)

    for action in actions:
        if len(action.items) < 2 or action.items[1].atom is None:
            diags.append(Diagnostic(action.line, action.column, "action needs a name"))
            continue
        declared: set[str] = set()
        body = action.items[2:]
        grouped: dict[str, _Node] = {}
        i = 0
        while i < len(body):
            key = body[i].atom
            if key in _ACTION_KEYS and i + 1 < len(body):
                grouped[key] = body[i + 1]
                i += 2
            else:
                diags.append(Diagnostic(body[i].line, body[i].column, "unexpected token in action body"))
                i += 1
        if ":parameters" in grouped:
            params_node = grouped[":parameters"]
            if params_node.is_list:
                declared = _parse_typed_vars(params_node.items, diags)
            else:
                diags.append(Diagnostic(params_node.line, params_node.column, "parameters must be a list"))
        for key in (":precondition", ":effect"):
            if key in grouped:
                _check_literal(grouped[key], declared, predicates, diags)
    return diags
