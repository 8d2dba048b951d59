"""Information-structure planning and Turkish word order for interlingua input."""

from importlib import resources

from .discourse import (CenterAnalysis, CfList, DiscourseEntity, DiscourseModel, analyze_centers,
                        build_cf, commit_sentence, compute_cb, lookup_status)
from .interlingua import (Adjunct, Argument, Constituent, DocumentError, EmbeddedClause, EntityRef,
                          SemanticRep, format_document, parse_document, realized_constituents,
                          realized_entities)
from .knowledge import AlternativeSet, KnowledgeBase, alternative_set, load_kb
from .linearizer import (Lexicon, LinearizedSentence, PlacementPolicy, linearize, load_lexicon,
                         order_label, realize_gloss)
from .pipeline import plan_document
from .planner import InformationStructure, plan_sentence, select_focus, select_topic
from .stats import ChiSquareResult, ContingencyTable, builtin_tables, chi_square

__version__ = "0.1.0"

__all__ = [
    "Adjunct", "AlternativeSet", "Argument", "CenterAnalysis", "CfList", "ChiSquareResult",
    "Constituent", "ContingencyTable", "DiscourseEntity", "DiscourseModel", "DocumentError",
    "EmbeddedClause", "EntityRef", "InformationStructure", "KnowledgeBase", "Lexicon",
    "LinearizedSentence", "PlacementPolicy", "SemanticRep", "alternative_set", "analyze_centers",
    "build_cf", "builtin_tables", "chi_square", "commit_sentence", "compute_cb", "fixture_path",
    "format_document", "linearize", "load_kb", "load_lexicon", "lookup_status", "order_label",
    "parse_document", "plan_document", "plan_sentence", "realize_gloss", "realized_constituents",
    "realized_entities", "select_focus", "select_topic",
]


def fixture_path(name):
    """Path to one of the bundled fixture files (documents, KBs, lexicon)."""
    return str(resources.files(__name__).joinpath("fixtures", name))
