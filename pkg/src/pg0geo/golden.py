"""Access to the bundled reference configurations, one per family."""

from __future__ import annotations

from importlib import resources

from pg0geo.config_io import ConfigDocument, parse_config

GOLDEN_NAMES = (
    "primary_m0",
    "secondary_k5_m1",
    "secondary_k4_nonnodal_m2",
    "secondary_k4_nodal_m2",
    "tertiary_m3",
    "quaternary_m4",
)


def golden_text(name: str) -> str:
    if name not in GOLDEN_NAMES:
        raise KeyError(f"unknown golden configuration {name!r}")
    return (
        resources.files("pg0geo.data").joinpath(f"{name}.json").read_text("utf-8")
    )


def load_golden(name: str) -> ConfigDocument:
    return parse_config(golden_text(name))


def golden_documents() -> dict[str, ConfigDocument]:
    return {name: load_golden(name) for name in GOLDEN_NAMES}
