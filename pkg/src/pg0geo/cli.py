"""Command-line interface: validate, classify, report, and draw configurations.

Exit codes: 0 success, 1 validation failure (or a section error), 2 parse
error or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from pg0geo import report as report_mod
from pg0geo.config_io import ConfigDocument, ConfigParseError, parse_config
from pg0geo.render import RenderError, render_svg

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2


def _load_document(path: str | None) -> ConfigDocument:
    if path is None:
        raise ConfigParseError(["--input is required for this command"])
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise ConfigParseError([f"cannot read {path}: {exc}"]) from exc
    return parse_config(text)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, "utf-8")


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", out)


def _section_command(token: str):
    def run(args) -> int:
        doc = _load_document(args.input)
        result = report_mod.run_report(doc, [token])
        if result["errors"]:
            _emit_json(result, args.out)
            return EXIT_VALIDATION
        payload = result["sections"][token]
        _emit_json(payload, args.out)
        if token == "validate" and not payload["ok"]:
            return EXIT_VALIDATION
        return EXIT_OK

    return run


def _cmd_node_deform(args) -> int:
    doc = ConfigDocument()
    result = report_mod.run_report(doc, ["node-deform"])
    if result["errors"]:
        _emit_json(result, args.out)
        return EXIT_VALIDATION
    _emit_json(result["sections"]["node-deform"], args.out)
    return EXIT_OK


def _cmd_godeaux(args) -> int:
    doc = _load_document(args.input) if args.input else ConfigDocument()
    result = report_mod.run_report(doc, ["godeaux"])
    if result["errors"]:
        _emit_json(result, args.out)
        return EXIT_VALIDATION
    _emit_json(result["sections"]["godeaux"], args.out)
    return EXIT_OK


def _cmd_render(args) -> int:
    doc = _load_document(args.input)
    try:
        svg = render_svg(doc, chart=args.chart)
    except RenderError as exc:
        sys.stderr.write(f"render failed: {exc}\n")
        return EXIT_VALIDATION
    _emit(svg, args.out)
    return EXIT_OK


def _cmd_report(args) -> int:
    doc = _load_document(args.input)
    sections = args.sections.split(",") if args.sections else None
    try:
        result = report_mod.run_report(doc, sections)
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_PARSE
    _emit_json(result, args.out)

    if args.summary_csv:
        with open(args.summary_csv, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(["key", "value"])
            writer.writerows(report_mod.summary_rows(result))

    if args.figures:
        from pg0geo.figures import render_figure

        figures_dir = Path(args.figures)
        figures_dir.mkdir(parents=True, exist_ok=True)
        stem = doc.name or (Path(args.input).stem if args.input else "configuration")
        title = None
        classify = result["sections"].get("classify")
        if classify:
            title = f"{classify['family']} (K²={classify['K2']})"
        if doc.config is not None:
            render_figure(doc, figures_dir / f"{stem}.svg", chart=args.chart, title=title)
        campedelli = result["sections"].get("campedelli")
        if campedelli:
            bridge_doc = ConfigDocument(
                campedelli=tuple(
                    _line_from_triple(t) for t in campedelli["lines"]
                )
            )
            render_figure(
                bridge_doc,
                figures_dir / f"{stem}_campedelli.svg",
                chart=args.chart,
                title="seven-line cover branch locus",
            )

    validate = result["sections"].get("validate")
    failed = bool(result["errors"]) or (validate is not None and not validate["ok"])
    return EXIT_VALIDATION if failed else EXIT_OK


def _line_from_triple(text: str):
    from pg0geo.plane_geom import ProjLine

    return ProjLine(*text.split(":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pg0geo",
        description="Exact-arithmetic analysis of triangle-plus-pencils line "
        "configurations and their covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, help=None):
        cmd = sub.add_parser(name, help=help)
        if needs_input:
            cmd.add_argument("--input", required=name not in ("godeaux",), help="input JSON document")
        cmd.add_argument("--out", help="output path (default: stdout)")
        cmd.set_defaults(func=func)
        return cmd

    add("validate", _section_command("validate"), help="check configuration invariants")
    add("classify", _section_command("classify"), help="family, dimensions and pi_1 descriptor")
    add("invariants", _section_command("invariants"), help="numerical invariants and the singularity ledger")
    add("lattice", _section_command("lattice"), help="divisor classes and del Pezzo status")
    add("extend", _section_command("extended"), help="extended branch divisor classes")
    add("campedelli", _section_command("campedelli"), help="seven-line cover relations and quadrics")
    add("godeaux", _cmd_godeaux, help="invariant quintic monomials and the free-action test")
    add("node-deform", _cmd_node_deform, needs_input=False, help="local node-deformation lift table")

    render_cmd = add("render", _cmd_render, help="deterministic SVG drawing")
    render_cmd.add_argument("--chart", default="auto", choices=["xy", "xz", "yz", "auto"])

    report_cmd = add("report", _cmd_report, help="full report over all applicable sections")
    report_cmd.add_argument("--sections", help="comma-separated list of sections")
    report_cmd.add_argument("--chart", default="auto", choices=["xy", "xz", "yz", "auto"])
    report_cmd.add_argument("--figures", help="directory for matplotlib figures")
    report_cmd.add_argument("--summary-csv", help="path for the delimited summary")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigParseError as exc:
        for message in exc.errors:
            sys.stderr.write(f"parse error: {message}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
