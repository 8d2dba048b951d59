"""Command line entry point: ``infostruct plan`` and ``infostruct stats``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .interlingua import THETA_ROLES, DocumentError, load_hierarchy, parse_document
from .knowledge import KnowledgeBaseError, UnknownConceptError, load_kb_file
from .linearizer import (GROUND_MODES, InvariantError, LexiconError, PlacementPolicy,
                         load_lexicon_file)
from .pipeline import plan_document
from .planner import PlanningError
from . import stats

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2

TSV_COLUMNS = ("ordinal", "topic", "topic_step", "focus_list", "focus_step",
               "ground_list", "dropped", "label", "gloss")


@dataclass
class RunConfig:
    doc: str
    kb: str
    lexicon: str | None = None
    policy: PlacementPolicy = PlacementPolicy()
    verbose: int = 0
    fmt: str = "text"
    mark_stress: bool = False
    dump_model: bool = False
    config: str | None = None


def _names(constituents):
    return ",".join(c.concept for c in constituents)


def format_results(results, fmt="text", verbose=0) -> str:
    lines = []
    if fmt == "tsv":
        lines.append("\t".join(TSV_COLUMNS))
        for r in results:
            info, s = r.info, r.sentence
            lines.append("\t".join([
                str(r.ordinal), info.topic.concept, str(info.topic_step),
                _names(info.focus), str(info.focus_step), _names(info.ground),
                _names(s.dropped), s.label, " ".join(s.gloss),
            ]))
    else:
        for r in results:
            lines.append(r.line())
            if verbose:
                info = r.info
                lines.append(f"  cb={info.cb or '-'} topic={info.topic.concept} "
                             f"focus={_names(info.focus)} ground={_names(info.ground)} "
                             f"dropped={_names(r.sentence.dropped)}")
    return "".join(line + "\n" for line in lines)


def run_pipeline(config: RunConfig):
    """Run the whole document; returns ``(exit_status, report, diagnostics)``.

    Nothing is reported unless every sentence succeeds.
    """
    try:
        hierarchy = load_hierarchy(config.config) if config.config else THETA_ROLES
        with open(config.doc, encoding="utf-8") as fh:
            reps = parse_document(fh.read(), hierarchy)
        kb = load_kb_file(config.kb)
        lexicon = load_lexicon_file(config.lexicon) if config.lexicon else None
        results, model = plan_document(reps, kb, config.policy, lexicon, config.mark_stress)
    except (OSError, ValueError, DocumentError, KnowledgeBaseError, LexiconError,
            PlanningError, UnknownConceptError) as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    except InvariantError as exc:
        return EXIT_INVARIANT, "", f"internal error: {exc}\n"
    diagnostics = model.dump() if config.dump_model else ""
    return EXIT_OK, format_results(results, config.fmt, config.verbose), diagnostics


def run_stats(fmt="text", figures=None) -> str:
    tables = stats.builtin_tables()
    results = {name: stats.chi_square(t) for name, t in tables.items()}
    lines = []
    if fmt == "tsv":
        lines.append("name\tstatistic\tdf\tband\treported")
        for name, res in results.items():
            reported = stats.REPORTED.get(name, ("",))[0]
            lines.append(f"{name}\t{res.statistic:.3f}\t{res.degrees_of_freedom}\t{res.band}\t{reported}")
        lines.append(f"footnote\t\t\t\t{stats.FOOTNOTE_CLAIM} not reproduced")
    else:
        for name, table in tables.items():
            res = results[name]
            lines.append(f"== {name}")
            width = max(len(label) for label in table.row_labels)
            lines.append(" " * width + "  " + "  ".join(f"{c:>10}" for c in table.col_labels))
            for label, row in zip(table.row_labels, table.counts):
                lines.append(f"{label:<{width}}  " + "  ".join(f"{v:>10}" for v in row))
            lines.append(f"chi2 = {res.statistic:.3f}  df = {res.degrees_of_freedom}  {res.band}")
            if name in stats.REPORTED:
                value, _, band = stats.REPORTED[name]
                lines.append(f"reported: chi2 = {value}, {band}")
            lines.append("")
        lines.append("== footnote (OSV observed against SOV expected)")
        for variant, value in stats.footnote_attempts().items():
            lines.append(f"{variant}: chi2 = {value:.3f}")
        status = "reproduced" if stats.footnote_reproduced() else "not reproduced"
        lines.append(f"reported: chi2 = {stats.FOOTNOTE_CLAIM}: {status}")
    if figures:
        from .plotting import render_tables

        for path in render_tables(tables, results, figures):
            lines.append(f"figure: {path}")
    return "".join(line + "\n" for line in lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="infostruct",
                                     description="Topic/focus planning and word order for Turkish.")
    sub = parser.add_subparsers(dest="command", required=True)

    plan = sub.add_parser("plan", help="plan and linearize a document")
    plan.add_argument("--doc", required=True)
    plan.add_argument("--kb", required=True)
    plan.add_argument("--lexicon")
    plan.add_argument("--ground", choices=GROUND_MODES, default="interpose")
    plan.add_argument("--drop", action="store_true", help="drop ground realized in the previous sentence")
    plan.add_argument("--mark-stress", action="store_true")
    plan.add_argument("--format", choices=("text", "tsv"), default="text")
    plan.add_argument("--dump-model", action="store_true", help="write the final discourse model to stderr")
    plan.add_argument("--config", help="JSON file with a theta_hierarchy list")
    plan.add_argument("-v", "--verbose", action="count", default=0)

    st = sub.add_parser("stats", help="chi-square analyses of the built-in count tables")
    st.add_argument("--format", choices=("text", "tsv"), default="text")
    st.add_argument("--figures", metavar="DIR", help="also write bar charts to DIR")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "stats":
        sys.stdout.write(run_stats(args.format, args.figures))
        return EXIT_OK
    config = RunConfig(
        doc=args.doc, kb=args.kb, lexicon=args.lexicon,
        policy=PlacementPolicy(args.ground, args.drop), verbose=args.verbose,
        fmt=args.format, mark_stress=args.mark_stress, dump_model=args.dump_model,
        config=args.config,
    )
    status, report, diagnostics = run_pipeline(config)
    sys.stdout.write(report)
    sys.stderr.write(diagnostics)
    return status


if __name__ == "__main__":
    sys.exit(main())
