"""Word order from information structure, order labels, and lexicon glosses.

Topic goes sentence-initially, focus immediately before the verb.  Ground
material is interposed between them, postposed after the verb, or dropped,
depending on the :class:`PlacementPolicy`.  A topic found inside an embedded
clause is scrambled out to the front of the matrix clause, leaving a gap.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field

from .interlingua import (FORM_NAMES, Constituent, EmbeddedClause, SemanticRep, clause_at,
                          realized_constituents)

GROUND_MODES = ("interpose", "postpose", "salience")
ZONES = ("topic", "ground-interposed", "focus", "verb", "postposed")

GAP = "e_i"
COINDEX = "_i"
STRESS = "*"

MARKED_OBJECT_FORMS = frozenset({"definite-np", "name", "overt-pronoun"})


class InvariantError(RuntimeError):
    """The information structure handed to the linearizer is not a partition."""


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class PlacementPolicy:
    ground_mode: str = "interpose"
    drop_enabled: bool = False

    def __post_init__(self):
        if self.ground_mode not in GROUND_MODES:
            raise ValueError(f"unknown ground mode {self.ground_mode!r}")


@dataclass(frozen=True)
class Slot:
    zone: str
    constituent: Constituent | None = None  # None marks an embedded-clause block
    block: tuple = ()
    case: str = ""
    gap: bool = False
    extracted: bool = False
    focused: bool = False

    @property
    def is_block(self):
        return self.constituent is None


@dataclass(frozen=True)
class LinearizedSentence:
    slots: tuple
    label: str = ""
    gloss: tuple = ()
    dropped: tuple = ()
    depth_marked: bool = False

    def walk(self, slots=None):
        """Yield every non-block slot depth-first in surface order (gaps included)."""
        for slot in self.slots if slots is None else slots:
            if slot.is_block:
                yield from self.walk(slot.block)
            else:
                yield slot

    @property
    def order(self):
        return [(s.constituent, s.zone) for s in self.walk() if not s.gap]


@dataclass
class Lexicon:
    entries: dict = field(default_factory=dict)

    def lookup(self, concept, key, form=None):
        if form is not None:
            hit = self.entries.get((concept, f"{key}/{form}"))
            if hit is not None:
                return hit
        return self.entries.get((concept, key))


def load_lexicon(text: str) -> Lexicon:
    """Parse ``lex <concept> <key> "<surface form>"`` lines; ``#`` starts a comment.

    A key may be qualified by a source form code (``acc/pron``) to give a
    pronominal or otherwise form-specific realization precedence.
    """
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        try:
            parts = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise LexiconError(f"line {lineno}: {exc}") from None
        if not parts:
            continue
        if len(parts) != 4 or parts[0] != "lex":
            raise LexiconError(f"line {lineno}: expected lex <concept> <key> \"<form>\"")
        entries[(parts[1], parts[2])] = parts[3]
    return Lexicon(entries)


def load_lexicon_file(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh.read())


# ---------------------------------------------------------------------------
# case keys

def verb_key(rep: SemanticRep, embedded: bool) -> str:
    parts = ["ger"] if embedded else []
    if rep.feature("polarity") in ("neg", "-"):
        parts.append("neg")
    for name in ("tense", "mood"):
        value = rep.feature(name)
        if value is not None:
            parts.append(value)
    return "+".join(parts) or "verb"


def case_key(c: Constituent, rep: SemanticRep) -> str:
    if c.kind == "event":
        return verb_key(rep, bool(c.path))
    if c.kind == "adjunct":
        return "loc"
    if c.is_subject:
        return "gen" if c.path else "nom"
    if c.role == "comitative":
        return "com"
    if c.role in ("goal", "experiencer"):
        return "dat"
    return "acc" if c.ref.source_form in MARKED_OBJECT_FORMS else "nom"


# ---------------------------------------------------------------------------
# linearization

def _check_partition(rep, info):
    realized = realized_constituents(rep, recurse=True)
    cells = [(info.topic,), tuple(info.focus), tuple(info.ground)]
    seen = []
    for cell in cells:
        for c in cell:
            if c in seen:
                raise InvariantError(f"{c.concept} assigned to more than one IS cell")
            seen.append(c)
    if set(seen) != set(realized) or len(seen) != len(realized):
        raise InvariantError("topic, focus and ground do not cover the realized constituents")


def _clause_units(rep: SemanticRep, path):
    """Constituents and embedded clauses of one clause in canonical order."""
    by_index = {c.ref.index: c for c in realized_constituents(rep, recurse=False, _path=path)}
    units = []
    for pos, arg in enumerate(rep.args):
        if isinstance(arg.filler, EmbeddedClause):
            units.append((arg.filler.rep, path + (pos,)))
        else:
            units.append(by_index[arg.filler.index])
    for adj in rep.adjuncts:
        units.append(by_index[adj.entity.index])
    return units, by_index[rep.event.index]


def _block(rep, path, info, zone):
    """Embedded clause in canonical order with a gap where an extracted topic was."""
    units, verb = _clause_units(rep, path)
    slots = []
    for unit in units:
        if isinstance(unit, tuple):
            sub_rep, sub_path = unit
            slots.append(Slot(zone, block=_block(sub_rep, sub_path, info, zone)))
        elif unit == info.topic:
            slots.append(Slot(zone, unit, gap=True))
        else:
            slots.append(Slot(zone, unit, case=case_key(unit, rep),
                              focused=unit in info.focus))
    slots.append(Slot(zone, verb, case=case_key(verb, rep), focused=verb in info.focus))
    return tuple(slots)


def _block_has_focus(rep, path, info):
    return any(c in info.focus for c in realized_constituents(rep, True, path))


def linearize(rep: SemanticRep, info, policy: PlacementPolicy = PlacementPolicy(),
              prev_realized=frozenset(), lexicon: Lexicon | None = None,
              mark_stress: bool = False) -> LinearizedSentence:
    _check_partition(rep, info)
    units, verb = _clause_units(rep, ())

    topic_slot = None
    if info.topic.path:
        owner = clause_at(rep, info.topic.path)
        topic_slot = Slot("topic", info.topic, case=case_key(info.topic, owner), extracted=True)

    interposed, focus, postposed, dropped = [], [], [], []
    for unit in units:
        if isinstance(unit, tuple):
            sub_rep, sub_path = unit
            if _block_has_focus(sub_rep, sub_path, info):
                focus.append(Slot("focus", block=_block(sub_rep, sub_path, info, "focus")))
            else:
                # embedded ground never crosses the matrix verb
                interposed.append(Slot("ground-interposed",
                                       block=_block(sub_rep, sub_path, info, "ground-interposed")))
            continue
        if unit == info.topic:
            topic_slot = Slot("topic", unit, case=case_key(unit, rep))
        elif unit in info.focus:
            focus.append(Slot("focus", unit, case=case_key(unit, rep), focused=True))
        elif policy.drop_enabled and unit.concept in prev_realized:
            dropped.append(unit)
        elif policy.ground_mode == "interpose":
            interposed.append(Slot("ground-interposed", unit, case=case_key(unit, rep)))
        else:
            postposed.append(Slot("postposed", unit, case=case_key(unit, rep)))

    verb_slot = Slot("verb", verb, case=case_key(verb, rep), focused=verb in info.focus)
    slots = tuple([topic_slot] + interposed + focus + [verb_slot] + postposed)
    sentence = LinearizedSentence(slots, dropped=tuple(dropped),
                                  depth_marked=rep.has_embedding())
    label = order_label(sentence, rep)
    gloss = realize_gloss(sentence, lexicon or Lexicon(), mark_stress)
    return LinearizedSentence(slots, label, tuple(gloss), tuple(dropped), sentence.depth_marked)


def _letter(c: Constituent) -> str:
    if c.kind == "event":
        return "V"
    if c.kind == "adjunct":
        return "Adv"
    return "S" if c.is_subject else "O"


def order_label(sentence: LinearizedSentence, rep: SemanticRep | None = None) -> str:
    """Symbolic word order such as ``AdvSOV`` or ``O2S1[S2V2]V1``.

    Clause depth digits are appended only when the sentence embeds a clause.
    """
    marked = rep.has_embedding() if rep is not None else sentence.depth_marked

    def render(slots):
        out = []
        for slot in slots:
            if slot.is_block:
                out.append("[" + render(slot.block) + "]")
            elif not slot.gap:
                c = slot.constituent
                out.append(_letter(c) + (str(c.depth) if marked else ""))
        return "".join(out)

    return render(sentence.slots)


def realize_gloss(sentence: LinearizedSentence, lexicon: Lexicon, mark_stress=False) -> list:
    tokens = []
    for slot in sentence.walk():
        if slot.gap:
            tokens.append(GAP)
            continue
        c = slot.constituent
        form = lexicon.lookup(c.concept, slot.case, FORM_NAMES[c.ref.source_form])
        if form is None:
            form = f"{c.concept}#{slot.case}"
        if slot.extracted:
            form += COINDEX
        if mark_stress and slot.focused and c.kind == "event":
            form += STRESS
        tokens.append(form)
    return tokens
