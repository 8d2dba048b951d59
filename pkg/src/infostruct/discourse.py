"""Discourse model and centering bookkeeping (Cf lists, Cb)."""

from __future__ import annotations

from dataclasses import dataclass

from .interlingua import SemanticRep, realized_constituents

DISCOURSE_OLD = "discourse-old"
INFERRABLE = "inferrable"
HEARER_OLD = "hearer-old"
BRAND_NEW = "brand-new"
STATUSES = (DISCOURSE_OLD, INFERRABLE, HEARER_OLD, BRAND_NEW)

# source forms that signal the speaker treats the referent as known
ACCOMMODATING_FORMS = frozenset({"definite-np", "name", "overt-pronoun"})


@dataclass
class DiscourseEntity:
    concept: str
    status: str  # information status when the entity was introduced
    first_mention: int
    last_mention: int
    mention_count: int = 1


class DiscourseModel:
    """Registry of discourse entities, grown one sentence at a time."""

    def __init__(self):
        self.entities = {}
        self.sentence_count = 0

    def __contains__(self, concept):
        return concept in self.entities

    def __len__(self):
        return len(self.entities)

    def concepts(self):
        return list(self.entities)

    def register(self, concept, status=DISCOURSE_OLD, ordinal=None):
        if ordinal is None:
            ordinal = max(self.sentence_count, 1)
        entity = self.entities.get(concept)
        if entity is None:
            self.entities[concept] = DiscourseEntity(concept, status, ordinal, ordinal)
        else:
            entity.last_mention = max(entity.last_mention, ordinal)
            entity.mention_count += 1
        self.sentence_count = max(self.sentence_count, ordinal)

    def dump(self) -> str:
        lines = []
        for e in self.entities.values():
            lines.append(f"{e.concept}\t{e.status}\tfirst={e.first_mention}"
                         f"\tlast={e.last_mention}\tcount={e.mention_count}")
        lines.append(f"sentences={self.sentence_count}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CfList:
    ranked: tuple = ()

    def __contains__(self, concept):
        return concept in self.ranked

    def __iter__(self):
        return iter(self.ranked)

    def __len__(self):
        return len(self.ranked)


@dataclass(frozen=True)
class CenterAnalysis:
    cb: str | None
    cf: CfList


def build_cf(rep: SemanticRep) -> CfList:
    ranked = []
    for c in realized_constituents(rep, recurse=True):
        if c.concept not in ranked:
            ranked.append(c.concept)
    return CfList(tuple(ranked))


def compute_cb(prev: CfList | None, current_realized) -> str | None:
    """Highest-ranked member of the previous Cf list realized in the current utterance."""
    if prev is None:
        return None
    for concept in prev.ranked:
        if concept in current_realized:
            return concept
    return None


def analyze_centers(rep: SemanticRep, prev: CfList | None) -> CenterAnalysis:
    cf = build_cf(rep)
    return CenterAnalysis(compute_cb(prev, set(cf.ranked)), cf)


def lookup_status(model: DiscourseModel, ref, kb=None) -> str:
    if ref.concept in model:
        return DISCOURSE_OLD
    if kb is not None and kb.inferrable(ref.concept, model):
        return INFERRABLE
    if ref.source_form in ACCOMMODATING_FORMS:
        return HEARER_OLD
    return BRAND_NEW


def is_given(status: str) -> bool:
    # inferrable and hearer-old entities pattern with discourse-old ones
    return status != BRAND_NEW


def commit_sentence(model: DiscourseModel, rep: SemanticRep, kb=None) -> DiscourseModel:
    """Register every realized entity of ``rep`` (events included) as the next sentence."""
    ordinal = model.sentence_count + 1
    constituents = realized_constituents(rep, recurse=True)
    # statuses are judged against the model as it stood before this sentence
    statuses = [lookup_status(model, c.ref, kb) for c in constituents]
    for c, status in zip(constituents, statuses):
        model.register(c.concept, status, ordinal)
    model.sentence_count = ordinal
    return model
