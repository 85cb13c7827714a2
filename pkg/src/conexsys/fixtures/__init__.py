"""Bundled fixtures: the lemonade-plant scenario and two knowledge bases.

``lemonade()`` is the running example used throughout the docs and tests:
an eight-reading, nine-failure-mode diagnosis problem for a drink factory
that synthesizes water from hydrogen and oxygen in a fuel cell, squeezes
lemons with part of the electricity, and chills the result with the rest.

``pretrained_kb()`` is a stored integer matrix trained on that scenario,
kept as a golden artifact so inference behavior stays pinned down.
``toy_kb()`` is a three-goal, three-reading matrix small enough to trace
every consultation step by hand.
"""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path

from ..kb import KnowledgeBase, load_kb
from ..scenario import Scenario, load_scenario


def _fixture_path(name: str) -> Path:
    return Path(str(files(__package__) / name))


def lemonade_path() -> Path:
    return _fixture_path("lemonade.json")


def pretrained_kb_path() -> Path:
    return _fixture_path("lemonade_pretrained_kb.json")


def toy_kb_path() -> Path:
    return _fixture_path("toy_kb.json")


def lemonade() -> Scenario:
    """The lemonade-plant diagnosis scenario (8 readings, 9 failure modes)."""
    return load_scenario(lemonade_path())


def pretrained_kb() -> KnowledgeBase:
    """Stored 9x9 integer matrix trained on the lemonade scenario."""
    return load_kb(pretrained_kb_path())


def toy_kb() -> KnowledgeBase:
    """Hand-traceable 3-goal demo matrix."""
    return load_kb(toy_kb_path())
