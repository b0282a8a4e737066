"""Machine-readable reports aggregating every analysis of a document."""

from __future__ import annotations

from itertools import combinations

from pg0geo import burniat as bu
from pg0geo import cover_algebra as ca
from pg0geo import node_deform as nd
from pg0geo import picard_lattice as pl
from pg0geo.config_io import SCHEMA, ConfigDocument

SECTION_TOKENS = (
    "validate",
    "classify",
    "invariants",
    "lattice",
    "extended",
    "campedelli",
    "godeaux",
    "node-deform",
)


def _triple(coords) -> str:
    return ":".join(str(c) for c in coords)


def _class_json(cls: pl.DivisorClass) -> dict:
    return {
        "basis": ["L", *cls.lattice.labels],
        "vector": [cls.degree, *cls.mults],
        "text": repr(cls),
    }


def _validate_section(doc: ConfigDocument) -> dict:
    report = bu.validate_config(doc.config)
    return {"ok": report.ok, "m": report.m, "violations": list(report.violations)}


def _classify_section(doc: ConfigDocument) -> dict:
    fam = bu.classify_family(doc.config)
    inv = bu.burniat_invariants(doc.config)
    return {
        "family": fam.name.value,
        "K2": inv.K2,
        "dim": fam.dim,
        "is_connected_component": fam.is_connected_component,
        "component_note": fam.component_note,
        "pi1": fam.pi1,
        "node_count": fam.node_count,
    }


def _invariants_section(doc: ConfigDocument) -> dict:
    inv = bu.burniat_invariants(doc.config)
    ledger = bu.singularity_ledger(doc.config)
    return {
        "p_g": inv.p_g,
        "q": inv.q,
        "K2": inv.K2,
        "chi": inv.chi,
        "P2": inv.P2,
        "ledger": {
            "entries": [
                {
                    "point": _triple(e.point.coords),
                    "triple": list(e.triple),
                    "kind": e.kind.value,
                }
                for e in ledger.entries
            ],
            "supported": ledger.supported,
            "derived_K2": ledger.k2,
            "derived_pg_minus_q": ledger.pg_minus_q,
        },
    }


def _lattice_section(doc: ConfigDocument) -> dict:
    cfg = doc.config
    lat, _ = bu.config_lattice(cfg)
    k = pl.canonical_class(lat)
    tagged = pl.config_curve_classes(cfg)
    status = pl.del_pezzo_status(cfg)
    branch = bu.branch_divisor_classes(cfg)
    total = branch[0] + branch[1] + branch[2]
    return {
        "basis": ["L", *lat.labels],
        "canonical_class": _class_json(k),
        "K2": pl.intersect(k, k),
        "del_pezzo": {
            "degree": status.degree,
            "node_count": status.node_count,
            "weak": status.weak,
        },
        "curve_classes": [
            {**_class_json(cls), "kind": kind.value} for cls, kind in tagged
        ],
        "branch_classes": [_class_json(cls) for cls in branch],
        "branch_sum_is_minus_3K": total == -3 * k,
    }


def _extended_section(doc: ConfigDocument) -> dict:
    cfg = doc.config
    result = bu.extended_branch_classes(cfg, dict(doc.extended))
    lat = result.classes[0].lattice
    k = pl.canonical_class(lat)
    degenerations = {}
    for index, conic in sorted(result.conics.items()):
        verdict = bu.detect_degeneration(cfg, index, conic)
        degenerations[str(index)] = {
            "kind": verdict.kind.value,
            "warning": verdict.warning,
        }
    section = {
        "extended_indices": sorted(doc.extended),
        "classes": [_class_json(cls) for cls in result.classes],
        "decompositions": [
            [{"name": name, **_class_json(cls)} for name, cls in decomp]
            for decomp in result.decompositions
        ],
        "degenerations": degenerations,
    }
    if cfg.m == 3 and len(doc.extended) == 3:
        n1, n2, n3 = bu.tertiary_n_classes(cfg)
        total = result.classes[0] + result.classes[1] + result.classes[2]
        section["sum_is_minus_3K_plus_sum_N"] = total == -3 * k + n1 + n2 + n3
    return section


def _campedelli_section(doc: ConfigDocument) -> dict:
    if doc.campedelli is not None:
        lines = list(doc.campedelli)
        assignment = ca.CoverAssignment.campedelli(lines)
        source = "input"
    else:
        bridge = bu.campedelli_bridge(doc.config)
        lines = list(bridge.lines)
        assignment = bridge.assignment
        source = "bridge"
    smooth = ca.campedelli_smoothness(lines)
    quadrics = ca.campedelli_quadrics(lines)
    squares = {
        repr(g): ca.square_equation(g, assignment) for g in ca.nonzero_elements(3)
    }
    products = []
    for gi, gj in combinations(ca.nonzero_elements(3), 2):
        rel = ca.product_relation(gi, gj, assignment)
        products.append(
            {
                "gi": list(gi.bits),
                "gj": list(gj.bits),
                "sum": list(rel.sum.bits),
                "factor_lines": list(rel.factor_lines),
            }
        )
    return {
        "source": source,
        "lines": [_triple(line.coeffs) for line in lines],
        "assignment": [
            {"line": _triple(line.coeffs), "char": list(g.bits)}
            for line, g in zip(assignment.lines, assignment.chars)
        ],
        "smooth": smooth.smooth,
        "bad_points": [
            {
                "point": _triple(sp.point.coords),
                "lines": sorted(sp.lines_through),
                "multiplicity": sp.multiplicity,
            }
            for sp in smooth.bad_points
        ],
        "quadrics": [[str(c) for c in vec] for vec in quadrics],
        "relations_consistent": ca.relations_consistent(assignment),
        "square_equations": squares,
        "product_relations": products,
    }


def _godeaux_section(doc: ConfigDocument) -> dict:
    counts = {
        str(r): len(ca.godeaux_invariant_monomials(r)) for r in range(5)
    }
    section = {
        "monomial_counts": counts,
        "invariant_monomials": [
            list(exps) for exps in ca.godeaux_invariant_monomials(0)
        ],
    }
    if doc.godeaux is not None:
        result = ca.godeaux_free_action(doc.godeaux)
        section["free_action"] = {
            "free": result.free,
            "fixed_points_hit": [list(p) for p in result.fixed_points_hit],
        }
    return section


def _node_deform_section(doc: ConfigDocument) -> dict:
    quotient = nd.quotient_invariants()
    table = nd.group_lift_table()
    return {
        "quotient": {
            "generators": {name: repr(poly) for name, poly in quotient.generators},
            "relation": quotient.relation,
            "family_relation": quotient.family_relation,
        },
        "lift_table": [
            {
                "sigma": row.sigma,
                "eps_tau": row.eps_tau,
                "kind": row.classification.kind.value,
                "witness": row.classification.witness,
            }
            for row in table.rows
        ],
        "verdict": {
            "tau_fixing_has_flop": table.verdict.tau_fixing_has_flop,
            "biregular_groups": [list(a) for a in table.verdict.biregular_groups],
            "every_biregular_group_moves_tau": table.verdict.every_biregular_group_moves_tau,
        },
    }


_BUILDERS = {
    "validate": _validate_section,
    "classify": _classify_section,
    "invariants": _invariants_section,
    "lattice": _lattice_section,
    "extended": _extended_section,
    "campedelli": _campedelli_section,
    "godeaux": _godeaux_section,
    "node-deform": _node_deform_section,
}

_NEEDS_CONFIG = {"validate", "classify", "invariants", "lattice", "extended"}


def applicable_sections(doc: ConfigDocument) -> list[str]:
    tokens = []
    for token in SECTION_TOKENS:
        if token in _NEEDS_CONFIG and doc.config is None:
            continue
        if token == "extended":
            cfg = doc.config
            if cfg is None or cfg.m not in (2, 3):
                continue
            if cfg.m == 2 and bu.nodal_vertex_index(cfg) is None:
                continue
        if token == "campedelli" and doc.campedelli is None and (
            doc.config is None or doc.config.m != 4
        ):
            continue
        tokens.append(token)
    return tokens


def run_report(doc: ConfigDocument, sections: list[str] | None = None) -> dict:
    """Run the requested sections (default: all applicable) over a document.

    Module errors never abort the report; they land in the `errors` array.
    """
    if sections is None:
        sections = applicable_sections(doc)
    unknown = [s for s in sections if s not in SECTION_TOKENS]
    if unknown:
        raise ValueError(f"unknown report sections: {', '.join(unknown)}")

    report: dict = {"schema": SCHEMA, "name": doc.name, "sections": {}, "errors": []}
    for token in sections:
        if token in _NEEDS_CONFIG and doc.config is None:
            report["errors"].append(
                {"section": token, "error": "document has no line configuration"}
            )
            continue
        try:
            report["sections"][token] = _BUILDERS[token](doc)
        except Exception as exc:  # noqa: BLE001 - report errors, do not abort
            report["errors"].append({"section": token, "error": str(exc)})
    return report


def summary_rows(report: dict) -> list[tuple[str, str]]:
    """Flat key/value pairs for the delimited summary next to the report."""
    rows: list[tuple[str, str]] = [("schema", report["schema"])]
    if report.get("name"):
        rows.append(("name", report["name"]))
    sections = report["sections"]
    if "validate" in sections:
        rows.append(("valid", str(sections["validate"]["ok"]).lower()))
        rows.append(("m", str(sections["validate"]["m"])))
    if "classify" in sections:
        cls = sections["classify"]
        rows += [
            ("family", cls["family"]),
            ("K2", str(cls["K2"])),
            ("dim", str(cls["dim"])),
            ("is_connected_component", str(cls["is_connected_component"]).lower()),
            ("pi1", cls["pi1"]),
            ("node_count", str(cls["node_count"])),
        ]
    if "invariants" in sections:
        inv = sections["invariants"]
        rows += [
            ("p_g", str(inv["p_g"])),
            ("q", str(inv["q"])),
            ("chi", str(inv["chi"])),
            ("P2", str(inv["P2"])),
        ]
    if "lattice" in sections:
        dp = sections["lattice"]["del_pezzo"]
        rows += [
            ("del_pezzo_degree", str(dp["degree"])),
            ("del_pezzo_nodes", str(dp["node_count"])),
            ("del_pezzo_weak", str(dp["weak"]).lower()),
        ]
    rows.append(("errors", str(len(report["errors"]))))
    return rows
