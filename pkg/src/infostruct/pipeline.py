"""Sentence-by-sentence driver: plan, linearize, then commit to the discourse model."""

from __future__ import annotations

from dataclasses import dataclass

from .discourse import DiscourseModel, build_cf, commit_sentence
from .interlingua import document_concepts
from .knowledge import KnowledgeBaseError
from .linearizer import LinearizedSentence, PlacementPolicy, linearize
from .planner import InformationStructure, plan_sentence


@dataclass(frozen=True)
class SentenceResult:
    ordinal: int
    info: InformationStructure
    sentence: LinearizedSentence

    def line(self) -> str:
        return " ".join([self.info.annotation, self.sentence.label, *self.sentence.gloss])


def check_types(reps, kb):
    missing = kb.missing(document_concepts(reps))
    if missing:
        raise KnowledgeBaseError("no semantic type for: " + ", ".join(missing))


def plan_document(reps, kb, policy=PlacementPolicy(), lexicon=None, mark_stress=False,
                  model=None, prev_cf=None):
    """Plan and linearize ``reps`` in order; returns ``(results, model)``.

    ``model`` and ``prev_cf`` seed the discourse context, otherwise planning
    starts from an empty model.
    """
    check_types(reps, kb)
    model = DiscourseModel() if model is None else model
    results = []
    for ordinal, rep in enumerate(reps, 1):
        info = plan_sentence(rep, prev_cf, model, kb)
        prev_realized = frozenset(prev_cf.ranked) if prev_cf is not None else frozenset()
        sentence = linearize(rep, info, policy, prev_realized, lexicon, mark_stress)
        results.append(SentenceResult(ordinal, info, sentence))
        commit_sentence(model, rep, kb)
        prev_cf = build_cf(rep)
    return results, model
