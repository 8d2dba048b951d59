"""Semantic-type knowledge base, inferability links and alternative sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType

SEMANTIC_TYPES = ("agent", "object", "event")


class KnowledgeBaseError(ValueError):
    pass


class UnknownConceptError(KeyError):
    pass


@dataclass(frozen=True)
class KnowledgeBase:
    types: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))
    infer_links: frozenset = frozenset()

    def type_of(self, concept):
        try:
            return self.types[concept]
        except KeyError:
            raise UnknownConceptError(concept) from None

    def inferrable(self, concept, known) -> bool:
        """True if some concept in ``known`` licenses ``concept`` by a single link."""
        return any(source == concept and target in known
                   for source, target in self.infer_links)

    def missing(self, concepts):
        return [c for c in concepts if c not in self.types]


def load_kb(text: str) -> KnowledgeBase:
    """Parse KB declarations: ``type <concept> <agent|object|event>`` and
    ``infer <concept> <concept>``, one per line, ``#`` comments."""
    types = {}
    links = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "type" and len(parts) == 3:
            _, concept, sem_type = parts
            if sem_type not in SEMANTIC_TYPES:
                raise KnowledgeBaseError(f"line {lineno}: unknown semantic type {sem_type!r}")
            if concept in types:
                if types[concept] != sem_type:
                    raise KnowledgeBaseError(
                        f"line {lineno}: conflicting types for {concept!r}: "
                        f"{types[concept]} vs {sem_type}")
                raise KnowledgeBaseError(f"line {lineno}: duplicate type declaration for {concept!r}")
            types[concept] = sem_type
        elif parts[0] == "infer" and len(parts) == 3:
            links.add((parts[1], parts[2]))
        else:
            raise KnowledgeBaseError(f"line {lineno}: cannot parse {raw.strip()!r}")
    return KnowledgeBase(MappingProxyType(types), frozenset(links))


def load_kb_file(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return load_kb(fh.read())


@dataclass(frozen=True)
class AlternativeSet:
    anchor: str
    members: frozenset

    def __bool__(self):
        return bool(self.members)

    def __len__(self):
        return len(self.members)


def alternative_set(kb: KnowledgeBase, model, anchor: str) -> AlternativeSet:
    """Same-type discourse-model concepts other than ``anchor`` itself."""
    sem_type = kb.type_of(anchor)
    members = frozenset(c for c in model.concepts()
                        if c != anchor and kb.types.get(c) == sem_type)
    return AlternativeSet(anchor, members)
