"""Command-line front end: score pages, trace intermediate values, and
generate synthetic fixture reports."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import engine
from .belief import pignistic
from .engine import AccessLevel, FrameDecision, estimate_parts
from .errors import IndicatorError, TotalConflict
from .reports import (
    FIXTURE_KINDS,
    AssessorReport,
    generate_fixture,
    parse_report,
)
from .wcag import (
    GLOBAL,
    FRAME_ORDER,
    CriterionCatalog,
    WeightConfig,
    _weights_from_json,
    default_catalog,
    default_weights,
    load_catalog,
    resolve_frame,
)

FRAME_LABELS = ("Visual", "Hearing", "Motor", "Cognitive", "Global")
FRAME_KEYS = (*FRAME_ORDER, GLOBAL)


def _load_config(catalog_path: Optional[str],
                 weights_path: Optional[str]) -> Tuple[CriterionCatalog,
                                                       WeightConfig]:
    """Resolve catalog and weights; an explicit weights file wins over
    overrides embedded in the catalog file."""
    base = default_weights()
    doc = (json.loads(Path(catalog_path).read_text(encoding="utf-8"))
           if catalog_path else None)
    if doc is None:
        entries_doc: object = None
        w = base
    elif isinstance(doc, dict):
        entries_doc = doc.get("criteria")
        w = _weights_from_json(doc, base)
    else:
        entries_doc = doc
        w = base
    if weights_path:
        wdoc = json.loads(Path(weights_path).read_text(encoding="utf-8"))
        w = _weights_from_json(wdoc, w)
    if doc is None:
        catalog, _ = default_catalog(w)
    else:
        catalog, _ = load_catalog(entries_doc, w)
    return catalog, w


def _read_pages(page_groups: List[List[str]],
                catalog: CriterionCatalog) -> List[List[AssessorReport]]:
    pages = []
    for group in page_groups:
        reports = [parse_report(Path(p).read_text(encoding="utf-8"), catalog)
                   for p in group]
        pages.append(reports)
    return pages


def _glyph(level: AccessLevel, ascii_mode: bool) -> str:
    return level.ascii_glyph if ascii_mode else level.glyph


def _cell(decision: FrameDecision, ascii_mode: bool) -> str:
    return f"{decision.decision:.3f} {_glyph(decision.level, ascii_mode)}"


def _render_table(rows: List[Tuple[str, Dict]], ascii_mode: bool) -> str:
    header = ["URL", *FRAME_LABELS]
    table = [header]
    for url, decisions in rows:
        table.append([url] + [_cell(decisions[k], ascii_mode)
                              for k in FRAME_KEYS])
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in table]
    return "\n".join(lines) + "\n"


def _render_tsv(rows: List[Tuple[str, Dict]], ascii_mode: bool) -> str:
    lines = ["\t".join(["URL", *FRAME_LABELS])]
    for url, decisions in rows:
        lines.append("\t".join(
            [url] + [_cell(decisions[k], ascii_mode) for k in FRAME_KEYS]))
    return "\n".join(lines) + "\n"


def _frame_key(frame) -> str:
    return frame.value if frame != GLOBAL else GLOBAL


def _render_json(rows: List[Tuple[str, Dict]], ascii_mode: bool) -> str:
    out = []
    for url, decisions in rows:
        frames = {}
        for key in FRAME_KEYS:
            d = decisions[key]
            frames[_frame_key(key)] = {
                "decision": round(d.decision, 3),
                "level": d.level.value,
                "glyph": _glyph(d.level, ascii_mode),
                "mass": d.fused.as_dict(),
                "per_source": {name: m.as_dict()
                               for name, m in d.per_source.items()},
            }
        out.append(json.dumps({"url": url, "frames": frames}))
    return "\n".join(out) + "\n"


def cmd_score(args) -> int:
    catalog, w = _load_config(args.catalog, args.weights)
    pages = _read_pages(args.page, catalog)
    rows = []
    for reports in pages:
        decisions = engine.score_page(reports, catalog, w)
        rows.append((reports[0].url, decisions))
    renderer = {"table": _render_table, "tsv": _render_tsv,
                "json": _render_json}[args.format]
    sys.stdout.write(renderer(rows, args.ascii))
    return 0


def cmd_explain(args) -> int:
    catalog, w = _load_config(args.catalog, args.weights)
    frame = resolve_frame(args.frame)
    pages = _read_pages(args.page, catalog)
    out = sys.stdout
    for reports in pages:
        url = reports[0].url
        if any(r.url != url for r in reports):
            raise IndicatorError("reports in one page group differ in URL")
        label = frame.value if frame != GLOBAL else GLOBAL
        out.write(f"page {url}  [frame: {label}]\n")
        sources = []
        for report in reports:
            parts = estimate_parts(report, frame, catalog, w)
            e = parts.triple()
            m = engine.masses_from_estimates(e)
            md = engine.source_mass(report, frame, catalog, w)
            sources.append(md)
            out.write(f"  assessor {report.profile.name} "
                      f"(delta={report.profile.delta})\n")
            out.write(f"    estimates: accessible {parts.num_ac:.4f}/"
                      f"{parts.den_ac:.0f} = {e.e_ac:.4f}, "
                      f"not-accessible {parts.num_nac:.4f}/"
                      f"{parts.den_nac:.0f} = {e.e_nac:.4f}, "
                      f"uncertain {parts.num_omega:.4f}/"
                      f"{parts.den_omega:.0f} = {e.e_omega:.4f}\n")
            out.write(f"    masses:     ac={m.ac:.4f} nac={m.nac:.4f} "
                      f"omega={m.omega:.4f}\n")
            out.write(f"    discounted: ac={md.ac:.4f} nac={md.nac:.4f} "
                      f"omega={md.omega:.4f}\n")
        fused = engine.belief.combine_all(sources)
        out.write(f"  fused: ac={fused.ac:.4f} nac={fused.nac:.4f} "
                  f"omega={fused.omega:.4f} conflict={fused.empty:.4f}\n")
        try:
            d = pignistic(fused)
        except TotalConflict:
            out.write("  decision: TOTAL CONFLICT - sources fully "
                      "contradict each other; no decision value\n")
        else:
            level = engine.discretize(d, w)
            out.write(f"  decision: {d:.3f} {_glyph(level, args.ascii)} "
                      f"({level.value})\n")
    return 0


def cmd_fixtures(args) -> int:
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for i in range(args.count):
            text = generate_fixture(args.seed + i, args.kind)
            (out_dir / f"report-{args.kind}-{args.seed + i}.json").write_text(
                text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write fixtures: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a11yfuse",
        description="Fuse automatic accessibility-assessor reports into "
                    "per-deficiency-frame indicators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--catalog", metavar="PATH",
                       help="criterion catalog JSON (default: packaged "
                            "WCAG 2.0 catalog)")
        p.add_argument("--weights", metavar="PATH",
                       help="weight/threshold overrides JSON")
        p.add_argument("--ascii", action="store_true",
                       help="render levels as ASCII glyphs")
        p.add_argument("--page", metavar="REPORT", nargs="+",
                       action="append", required=True,
                       help="report files for one page; repeat per page")

    p_score = sub.add_parser("score", help="score pages from report files")
    add_common(p_score)
    p_score.add_argument("--format", choices=("table", "json", "tsv"),
                         default="table")
    p_score.set_defaults(func=cmd_score)

    p_explain = sub.add_parser(
        "explain", help="trace estimates, masses and fusion for one frame")
    add_common(p_explain)
    p_explain.add_argument("--frame", required=True,
                           help="visual|hearing|motor|cognitive|global")
    p_explain.set_defaults(func=cmd_explain)

    p_fix = sub.add_parser("fixtures", help="generate synthetic reports")
    p_fix.add_argument("--seed", type=int, required=True)
    p_fix.add_argument("--kind", choices=FIXTURE_KINDS, default="balanced")
    p_fix.add_argument("--count", type=int, default=1)
    p_fix.add_argument("--out", required=True, metavar="DIR")
    p_fix.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IndicatorError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
