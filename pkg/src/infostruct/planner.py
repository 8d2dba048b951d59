"""Sentence planning: topic, focus and ground for one semantic representation."""

from __future__ import annotations

from dataclasses import dataclass

from .discourse import BRAND_NEW, analyze_centers, is_given, lookup_status
from .interlingua import Constituent, SemanticRep, realized_constituents
from .knowledge import alternative_set


class PlanningError(ValueError):
    pass


@dataclass(frozen=True)
class InformationStructure:
    topic: Constituent
    topic_step: int
    focus: tuple
    focus_step: int
    ground: tuple
    cb: str | None = None

    @property
    def annotation(self) -> str:
        return f"(T:{self.topic_step},F:{self.focus_step})"

    def zone_of(self, constituent) -> str:
        if constituent == self.topic:
            return "topic"
        if constituent in self.focus:
            return "focus"
        return "ground"


def select_topic(rep: SemanticRep, prev_cf, model, kb):
    """Return ``(constituent, step)`` for the first topic step that succeeds.

    Only nominal constituents (arguments and adjuncts) are eligible; events
    stay in the Cf list for Cb computation but never become the topic.
    """
    constituents = realized_constituents(rep, recurse=True)
    nominals = [c for c in constituents if c.is_nominal]
    if not nominals:
        raise PlanningError(f"clause {rep.event.concept!r} has no arguments or adjuncts")

    centers = analyze_centers(rep, prev_cf)
    if centers.cb is not None:
        for c in nominals:
            if c.concept == centers.cb:
                return c, 1

    for c in nominals:
        if is_given(lookup_status(model, c.ref, kb)):
            return c, 2

    for c in nominals:
        if c.kind == "adjunct" and c.setting and not c.path:
            return c, 3

    return nominals[0], 4


def select_focus(rep: SemanticRep, topic, model, kb):
    candidates = [c for c in realized_constituents(rep, recurse=True) if c != topic]
    new = [c for c in candidates if lookup_status(model, c.ref, kb) == BRAND_NEW]
    if new:
        return tuple(new), 1

    focus = tuple(c for c in candidates if alternative_set(kb, model, c.concept))
    if not focus:
        # all given and nothing to contrast: the verb carries the comment
        focus = tuple(c for c in candidates if c.kind == "event" and not c.path)
    return focus, 2


def plan_sentence(rep: SemanticRep, prev_cf, model, kb) -> InformationStructure:
    topic, topic_step = select_topic(rep, prev_cf, model, kb)
    focus, focus_step = select_focus(rep, topic, model, kb)
    ground = tuple(c for c in realized_constituents(rep, recurse=True)
                   if c != topic and c not in focus)
    cb = analyze_centers(rep, prev_cf).cb
    return InformationStructure(topic, topic_step, focus, focus_step, ground, cb)
