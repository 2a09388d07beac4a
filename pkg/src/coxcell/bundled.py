"""Example Coxeter graphs shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .coxeter_core import CoxeterGraph, parse_graph

BUNDLED = ("a1", "a2", "a3", "b2", "g2", "i2_5", "a1xa1", "a1tilde", "a2tilde")
SPHERICAL = ("a1", "a2", "a3", "b2", "g2", "i2_5", "a1xa1")


def bundled_graph(name: str) -> CoxeterGraph:
    """Load a bundled graph by short name, e.g. ``"b2"``."""
    if name not in BUNDLED:
        raise KeyError(f"unknown bundled graph {name!r}; choose from {', '.join(BUNDLED)}")
    text = resources.files("coxcell").joinpath("data", f"{name}.json").read_text()
    return parse_graph(text)


def resolve_graph(arg: str) -> CoxeterGraph:
    """Load a graph from a file path, falling back to a bundled graph of the same stem.

    This makes ``examples/a2.json`` work from any directory.
    """
    path = Path(arg)
    if path.is_file():
        return parse_graph(path.read_text())
    stem = path.name[:-5] if path.name.endswith(".json") else path.name
    if stem in BUNDLED:
        return bundled_graph(stem)
    raise FileNotFoundError(f"no graph file {arg!r} and no bundled graph named {stem!r}")
