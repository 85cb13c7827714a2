"""Declarative fault scenario: causal reading patterns plus a noise model.

A scenario describes a diagnosable system twice over.  The deep model is a
table with one row per failure mode giving the readings that mode disturbs
when no measurement is noisy.  The noise model is one flip probability per
reading, independent across readings.  Each failure mode also carries a
frequency (how often it occurs) and an importance (how badly we want to
catch it); their product is the row's sampling weight, so drawing clean
examples "in proportion to weight" behaves exactly like uniform sampling
from a multiset holding weight-many copies of each row.

Training examples are generated dynamically: draw a clean row by weight,
then flip each reading independently with its own probability.  The true
goal is never corrupted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .rng import SplitMix64

NoiseModel = Sequence[float]


class ScenarioError(ValueError):
    """Raised when a scenario file fails validation; messages name the field."""


@dataclass(frozen=True)
class InputVar:
    """One boolean reading: True means the reading indicates a problem."""

    name: str
    noise: float


@dataclass(frozen=True)
class FailureMode:
    """One goal: its noise-free reading pattern and sampling weight factors."""

    name: str
    frequency: int
    importance: int
    pattern: tuple[bool, ...]

    @property
    def ratio(self) -> int:
        """Sampling weight of this mode's clean example."""
        return self.frequency * self.importance


@dataclass(frozen=True)
class Example:
    """Fully specified bipolar input vector with its one true goal."""

    inputs: np.ndarray
    true_goal: int


@dataclass(frozen=True)
class Scenario:
    inputs: tuple[InputVar, ...]
    goals: tuple[FailureMode, ...]

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def m_goals(self) -> int:
        return len(self.goals)

    @property
    def input_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.inputs)

    @property
    def goal_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.goals)

    @property
    def noise(self) -> tuple[float, ...]:
        return tuple(v.noise for v in self.inputs)

    @property
    def total_weight(self) -> int:
        return sum(g.ratio for g in self.goals)

    def clean_example(self, goal: int) -> Example:
        """The noise-free example for one failure mode, encoded +1/-1."""
        pattern = self.goals[goal].pattern
        enc = np.fromiter(
            (1 if bit else -1 for bit in pattern), dtype=np.int64, count=len(pattern)
        )
        return Example(inputs=enc, true_goal=goal)


def _fail(path: str, message: str) -> None:
    raise ScenarioError(f"{path}: {message}")


def _positive_int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        _fail(path, f"must be a positive integer, got {value!r}")
    return value


def _parse_pattern(raw, input_names: Sequence[str], path: str) -> tuple[bool, ...]:
    """Accept either a full boolean vector or a list of reading names."""
    if not isinstance(raw, list):
        _fail(path, "must be a list")
    if all(isinstance(x, str) for x in raw) and raw:
        flags = [False] * len(input_names)
        for i, name in enumerate(raw):
            if name not in input_names:
                _fail(f"{path}[{i}]", f"unknown input variable name {name!r}")
            flags[list(input_names).index(name)] = True
        return tuple(flags)
    if len(raw) != len(input_names):
        _fail(path, f"expected {len(input_names)} entries, got {len(raw)}")
    for i, x in enumerate(raw):
        if not isinstance(x, bool):
            _fail(f"{path}[{i}]", f"expected a boolean, got {x!r}")
    return tuple(raw)


def scenario_from_dict(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("top level must be a JSON object")
    for key in ("inputs", "goals"):
        if key not in doc or not isinstance(doc[key], list):
            raise ScenarioError(f"missing or non-list field {key!r}")
    if not doc["inputs"]:
        raise ScenarioError("inputs: need at least one reading")
    if not doc["goals"]:
        raise ScenarioError("goals: need at least one failure mode")

    inputs = []
    for i, entry in enumerate(doc["inputs"]):
        path = f"inputs[{i}]"
        if not isinstance(entry, dict):
            _fail(path, "must be an object")
        name = entry.get("name")
        if not isinstance(name, str) or not name:
            _fail(f"{path}.name", "must be a non-empty string")
        noise = entry.get("noise", 0.0)
        if isinstance(noise, bool) or not isinstance(noise, (int, float)):
            _fail(f"{path}.noise", f"must be a number, got {noise!r}")
        if not 0.0 <= noise <= 1.0:
            _fail(f"{path}.noise", f"must be within [0, 1], got {noise!r}")
        inputs.append(InputVar(name=name, noise=float(noise)))
    names = [v.name for v in inputs]
    if len(set(names)) != len(names):
        raise ScenarioError("inputs: duplicate reading names")

    goals = []
    for i, entry in enumerate(doc["goals"]):
        path = f"goals[{i}]"
        if not isinstance(entry, dict):
            _fail(path, "must be an object")
        gname = entry.get("name")
        if not isinstance(gname, str) or not gname:
            _fail(f"{path}.name", "must be a non-empty string")
        frequency = _positive_int(entry.get("frequency"), f"{path}.frequency")
        importance = _positive_int(entry.get("importance"), f"{path}.importance")
        pattern = _parse_pattern(entry.get("pattern", []), names, f"{path}.pattern")
        goals.append(
            FailureMode(
                name=gname, frequency=frequency, importance=importance, pattern=pattern
            )
        )
    gnames = [g.name for g in goals]
    if len(set(gnames)) != len(gnames):
        raise ScenarioError("goals: duplicate goal names")

    return Scenario(inputs=tuple(inputs), goals=tuple(goals))


def loads_scenario(text: str) -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"not valid JSON: {exc}") from exc
    return scenario_from_dict(doc)


def load_scenario(path: str | Path) -> Scenario:
    return loads_scenario(Path(path).read_text())


def sample_clean(s: Scenario, rng: SplitMix64) -> Example:
    """Draw one noise-free example, goal g with probability ratio(g)/total.

    One ``next_below(total_weight)`` draw; the result indexes the conceptual
    multiset of ratio-many copies per row, walked in goal order.
    """
    r = rng.next_below(s.total_weight)
    acc = 0
    for g, mode in enumerate(s.goals):
        acc += mode.ratio
        if r < acc:
            return s.clean_example(g)
    raise AssertionError("unreachable: ratios sum to total_weight")


def inject_noise(e: Example, noise: NoiseModel, rng: SplitMix64) -> Example:
    """Flip each input independently with its own probability; goal unchanged.

    Exactly one float is drawn per input, in index order, so the stream
    position is the same no matter which flips occur.
    """
    if len(noise) != len(e.inputs):
        raise ValueError(f"noise model has {len(noise)} entries for {len(e.inputs)} inputs")
    flipped = e.inputs.copy()
    for k, p in enumerate(noise):
        if rng.next_float() < p:
            flipped[k] = -flipped[k]
    return Example(inputs=flipped, true_goal=e.true_goal)


def sample_noisy(s: Scenario, rng: SplitMix64) -> Example:
    """One dynamically corrupted training example: clean draw, then noise."""
    return inject_noise(sample_clean(s, rng), s.noise, rng)
