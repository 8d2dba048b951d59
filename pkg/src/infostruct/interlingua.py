"""Interlingua data model and the s-expression document reader/writer.

A document is a sequence of ``(sent ...)`` records, one per sentence::

    (sent (pred meet (arg agent pat) (arg comitative chris))
          (adv today (setting +))
          (feat tense fut))

Entities default to the indefinite source form; ``(ent talk (form def))``
overrides it.  ``;`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterator, Sequence, Union

THETA_ROLES = ("agent", "experiencer", "goal", "comitative", "theme", "other")

# document spelling -> data model spelling
FORM_CODES = {
    "name": "name",
    "def": "definite-np",
    "indef": "indefinite-np",
    "pron": "overt-pronoun",
    "zero": "zero",
}
FORM_NAMES = {v: k for k, v in FORM_CODES.items()}
DEFAULT_FORM = "indefinite-np"


class DocumentError(ValueError):
    """Raised for malformed documents; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class EntityRef:
    concept: str
    source_form: str = DEFAULT_FORM
    index: int = -1

    def __post_init__(self):
        if not self.concept:
            raise ValueError("entity concept must be a non-empty symbol")
        if self.source_form not in FORM_NAMES:
            raise ValueError(f"unknown source form {self.source_form!r}")


@dataclass(frozen=True)
class EmbeddedClause:
    rep: "SemanticRep"


@dataclass(frozen=True)
class Argument:
    role: str
    filler: Union[EntityRef, EmbeddedClause]


@dataclass(frozen=True)
class Adjunct:
    entity: EntityRef
    setting: bool = False


@dataclass(frozen=True)
class SemanticRep:
    event: EntityRef
    args: tuple = ()
    adjuncts: tuple = ()
    features: tuple = ()  # ((name, value), ...) in input order

    def feature(self, name, default=None):
        for key, value in self.features:
            if key == name:
                return value
        return default

    def has_embedding(self) -> bool:
        return any(isinstance(a.filler, EmbeddedClause) for a in self.args)


@dataclass(frozen=True)
class Constituent:
    """One realized entity occurrence together with where it sits in the clause tree.

    ``path`` lists the argument positions leading from the matrix clause down to
    the clause that contains the occurrence; it is empty for matrix material.
    """

    ref: EntityRef
    kind: str  # "arg", "adjunct" or "event"
    role: str | None = None
    path: tuple = ()
    position: int = 0  # argument/adjunct position within its own clause
    setting: bool = False

    @property
    def concept(self) -> str:
        return self.ref.concept

    @property
    def depth(self) -> int:
        return len(self.path) + 1

    @property
    def is_subject(self) -> bool:
        return self.kind == "arg" and self.position == 0

    @property
    def is_nominal(self) -> bool:
        return self.kind != "event"

    def __str__(self):
        return self.ref.concept


def clause_at(rep: SemanticRep, path: Sequence[int]) -> SemanticRep:
    for position in path:
        rep = rep.args[position].filler.rep
    return rep


def realized_constituents(rep: SemanticRep, recurse: bool = True, _path=()) -> list:
    """Constituents of ``rep`` in centering rank order.

    Nominal arguments (theta order), then adjuncts, then the contents of
    embedded clauses in the same scheme, and finally the clause's own event.
    """
    out = []
    embedded = []
    for pos, arg in enumerate(rep.args):
        if isinstance(arg.filler, EmbeddedClause):
            embedded.append((pos, arg.filler.rep))
        else:
            out.append(Constituent(arg.filler, "arg", arg.role, _path, pos))
    for pos, adj in enumerate(rep.adjuncts):
        out.append(Constituent(adj.entity, "adjunct", None, _path, pos, adj.setting))
    if recurse:
        for pos, sub in embedded:
            out.extend(realized_constituents(sub, True, _path + (pos,)))
    out.append(Constituent(rep.event, "event", None, _path))
    return out


def realized_entities(rep: SemanticRep, recurse: bool = True) -> list:
    return [c.ref for c in realized_constituents(rep, recurse)]


# ---------------------------------------------------------------------------
# reading

class _Token:
    __slots__ = ("text", "line", "column")

    def __init__(self, text, line, column):
        self.text = text
        self.line = line
        self.column = column


class _List(list):
    line = 1
    column = 1


def _tokenize(text: str) -> Iterator[_Token]:
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line, col = line + 1, 1
            i += 1
        elif c.isspace():
            i += 1
            col += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "()":
            yield _Token(c, line, col)
            i += 1
            col += 1
        else:
            start = i
            while i < n and not text[i].isspace() and text[i] not in "();":
                i += 1
            yield _Token(text[start:i], line, col)
            col += i - start


def _read_forms(text: str) -> list:
    stack = [_List()]
    for tok in _tokenize(text):
        if tok.text == "(":
            node = _List()
            node.line, node.column = tok.line, tok.column
            stack[-1].append(node)
            stack.append(node)
        elif tok.text == ")":
            if len(stack) == 1:
                raise DocumentError("unbalanced ')'", tok.line, tok.column)
            stack.pop()
        else:
            stack[-1].append(tok)
    if len(stack) > 1:
        raise DocumentError("unterminated list", stack[-1].line, stack[-1].column)
    return stack[0]


def _head(node) -> str | None:
    if isinstance(node, _List) and node and isinstance(node[0], _Token):
        return node[0].text
    return None


def _where(node):
    return (node.line, node.column)


def _symbol(node, what) -> str:
    if not isinstance(node, _Token):
        raise DocumentError(f"expected {what} symbol", *_where(node))
    return node.text


class _Reader:
    def __init__(self, hierarchy):
        self.rank = {role: i for i, role in enumerate(hierarchy)}

    def entity(self, node) -> EntityRef:
        if isinstance(node, _Token):
            return EntityRef(node.text)
        if _head(node) != "ent" or len(node) not in (2, 3):
            raise DocumentError("expected entity", *_where(node))
        concept = _symbol(node[1], "concept")
        form = DEFAULT_FORM
        if len(node) == 3:
            spec = node[2]
            if _head(spec) != "form" or len(spec) != 2:
                raise DocumentError("expected (form FORM)", *_where(spec))
            code = _symbol(spec[1], "form")
            if code not in FORM_CODES:
                raise DocumentError(f"unknown form {code!r}", spec[1].line, spec[1].column)
            form = FORM_CODES[code]
        return EntityRef(concept, form)

    def clause(self, pred, rest, where) -> SemanticRep:
        if _head(pred) != "pred" or len(pred) < 2:
            raise DocumentError("expected (pred SYMBOL arg*)", *where)
        event = EntityRef(_symbol(pred[1], "predicate"))
        args = []
        seen = {}
        for node in pred[2:]:
            if _head(node) != "arg" or len(node) != 3:
                raise DocumentError("expected (arg ROLE filler)", *_where(node))
            role = _symbol(node[1], "role")
            if role not in self.rank:
                raise DocumentError(f"unknown theta role {role!r}", node[1].line, node[1].column)
            if role in seen:
                raise DocumentError(f"duplicate role {role!r} in one clause", node[1].line, node[1].column)
            seen[role] = True
            filler = node[2]
            if _head(filler) == "clause":
                if len(filler) < 2:
                    raise DocumentError("empty clause", *_where(filler))
                filler = EmbeddedClause(self.clause(filler[1], filler[2:], _where(filler)))
            else:
                filler = self.entity(filler)
            args.append(Argument(role, filler))
        args.sort(key=lambda a: self.rank[a.role])

        adjuncts, features = [], []
        for node in rest:
            head = _head(node)
            if head == "adv":
                if len(node) not in (2, 3):
                    raise DocumentError("expected (adv entity (setting +)?)", *_where(node))
                setting = False
                if len(node) == 3:
                    flag = node[2]
                    if _head(flag) != "setting" or len(flag) != 2 or _symbol(flag[1], "flag") != "+":
                        raise DocumentError("expected (setting +)", *_where(flag))
                    setting = True
                adjuncts.append(Adjunct(self.entity(node[1]), setting))
            elif head == "feat":
                if len(node) != 3:
                    raise DocumentError("expected (feat NAME VALUE)", *_where(node))
                features.append((_symbol(node[1], "feature"), _symbol(node[2], "value")))
            else:
                raise DocumentError("expected adjunct or feature", *_where(node))
        return SemanticRep(event, tuple(args), tuple(adjuncts), tuple(features))


def _number(rep: SemanticRep, counter) -> SemanticRep:
    # indices follow the canonical (printed) order so that round trips are exact
    event = replace(rep.event, index=next(counter))
    args = []
    for arg in rep.args:
        if isinstance(arg.filler, EmbeddedClause):
            args.append(Argument(arg.role, EmbeddedClause(_number(arg.filler.rep, counter))))
        else:
            args.append(Argument(arg.role, replace(arg.filler, index=next(counter))))
    adjuncts = tuple(Adjunct(replace(a.entity, index=next(counter)), a.setting)
                     for a in rep.adjuncts)
    return SemanticRep(event, tuple(args), adjuncts, rep.features)


def _counter():
    i = 0
    while True:
        yield i
        i += 1


def parse_document(text: str, hierarchy: Sequence[str] = THETA_ROLES) -> list:
    """Parse a document into a list of SemanticRep, one per ``(sent ...)`` record."""
    reader = _Reader(hierarchy)
    counter = _counter()
    reps = []
    for node in _read_forms(text):
        if _head(node) != "sent":
            where = (node.line, node.column)
            raise DocumentError("expected (sent ...) record", *where)
        if len(node) < 2:
            raise DocumentError("empty sentence record", *_where(node))
        rep = reader.clause(node[1], node[2:], _where(node))
        reps.append(_number(rep, counter))
    return reps


def load_hierarchy(path) -> tuple:
    """Read a theta hierarchy from a JSON config file (``{"theta_hierarchy": [...]}``)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    roles = tuple(data.get("theta_hierarchy", THETA_ROLES))
    if sorted(roles) != sorted(THETA_ROLES):
        raise ValueError(f"theta_hierarchy must order exactly {', '.join(THETA_ROLES)}")
    return roles


# ---------------------------------------------------------------------------
# writing

def _format_entity(ref: EntityRef) -> str:
    if ref.source_form == DEFAULT_FORM:
        return ref.concept
    return f"(ent {ref.concept} (form {FORM_NAMES[ref.source_form]}))"


def _format_clause(rep: SemanticRep) -> str:
    parts = [f"(pred {rep.event.concept}"]
    for arg in rep.args:
        if isinstance(arg.filler, EmbeddedClause):
            filler = f"(clause {_format_clause(arg.filler.rep)})"
        else:
            filler = _format_entity(arg.filler)
        parts.append(f" (arg {arg.role} {filler})")
    parts.append(")")
    for adj in rep.adjuncts:
        flag = " (setting +)" if adj.setting else ""
        parts.append(f" (adv {_format_entity(adj.entity)}{flag})")
    for name, value in rep.features:
        parts.append(f" (feat {name} {value})")
    return "".join(parts)


def format_document(reps: Sequence[SemanticRep]) -> str:
    return "".join(f"(sent {_format_clause(rep)})\n" for rep in reps)


def document_concepts(reps: Sequence[SemanticRep]) -> list:
    seen = {}
    for rep in reps:
        for c in realized_constituents(rep):
            seen.setdefault(c.concept, c)
    return list(seen)
