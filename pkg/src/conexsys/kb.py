"""Integer learning-matrix knowledge base and winner-take-all primitives.

The entire knowledge base of a generated expert system is one matrix of
signed integers: a row per goal (choice cell), a column per input reading,
plus a leading bias column that acts as a weight on a constant +1 input.
Inputs are three-valued at consultation time and enter the weighted sums
in bipolar encoding: True is +1, False is -1, Unknown and Unavailable
both contribute 0 (they differ only in whether the engine may still ask
for them).

Exactly one goal "fires" for a fully specified input vector: the row with
the highest weighted sum, ties going to the lowest goal index.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

_INT64_MAX = np.iinfo(np.int64).max


class KBFormatError(ValueError):
    """Raised when a knowledge-base file is malformed."""


class TruthValue(Enum):
    """Three-valued input state (with Unavailable as a fourth bookkeeping state)."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"
    UNAVAILABLE = "unavailable"

    def encode(self) -> int:
        """Bipolar encoding: True +1, False -1, Unknown/Unavailable 0."""
        if self is TruthValue.TRUE:
            return 1
        if self is TruthValue.FALSE:
            return -1
        return 0

    @classmethod
    def from_token(cls, token: str) -> "TruthValue":
        """Parse user-facing tokens: t/true, f/false, u/unavailable, unknown."""
        t = token.strip().lower()
        if t in ("t", "true", "+1", "1", "y", "yes"):
            return cls.TRUE
        if t in ("f", "false", "-1", "n", "no"):
            return cls.FALSE
        if t in ("u", "unavailable", "na", "n/a"):
            return cls.UNAVAILABLE
        if t in ("unknown", "?"):
            return cls.UNKNOWN
        raise ValueError(f"unrecognized truth token {token!r}")


def encode_assignment(values: Sequence[TruthValue]) -> np.ndarray:
    """Encode a vector of truth values as an int64 array of +1/-1/0."""
    return np.fromiter((v.encode() for v in values), dtype=np.int64, count=len(values))


@dataclass(frozen=True)
class KnowledgeBase:
    """Immutable integer weight matrix with goal and input name tables.

    ``weights`` has shape (m_goals, n_inputs + 1); column 0 is the bias.
    """

    input_names: tuple[str, ...]
    goal_names: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "input_names", tuple(self.input_names))
        object.__setattr__(self, "goal_names", tuple(self.goal_names))
        w = np.asarray(self.weights)
        if not np.issubdtype(w.dtype, np.integer):
            raise ValueError("weights must be integers")
        w = w.astype(np.int64, copy=True)
        n, m = len(self.input_names), len(self.goal_names)
        if n < 1:
            raise ValueError("need at least one input variable")
        if m < 2:
            raise ValueError("a choice group needs at least two goals")
        if w.shape != (m, n + 1):
            raise ValueError(
                f"weights shape {w.shape} does not match "
                f"{m} goals x ({n} inputs + bias)"
            )
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @property
    def n_inputs(self) -> int:
        return len(self.input_names)

    @property
    def m_goals(self) -> int:
        return len(self.goal_names)

    def input_index(self, name: str) -> int:
        try:
            return self.input_names.index(name)
        except ValueError:
            raise KeyError(f"unknown input variable {name!r}") from None

    def goal_index(self, name: str) -> int:
        try:
            return self.goal_names.index(name)
        except ValueError:
            raise KeyError(f"unknown goal {name!r}") from None


def goal_scores(kb: KnowledgeBase, encoded: Sequence[int] | np.ndarray) -> np.ndarray:
    """All weighted sums at once for an already-encoded +1/-1/0 input vector."""
    x = np.asarray(encoded, dtype=np.int64)
    if x.shape != (kb.n_inputs,):
        raise ValueError(f"expected {kb.n_inputs} encoded inputs, got {x.shape}")
    return kb.weights[:, 0] + kb.weights[:, 1:] @ x


def weighted_sum(kb: KnowledgeBase, cell: int, values: Sequence[TruthValue]) -> int:
    """Bias plus the weighted bipolar inputs for one goal cell.

    Unknown and Unavailable inputs contribute exactly 0.
    """
    if not 0 <= cell < kb.m_goals:
        raise IndexError(f"goal index {cell} out of range for {kb.m_goals} goals")
    return int(goal_scores(kb, encode_assignment(values))[cell])


def winner(kb: KnowledgeBase, values: Sequence[TruthValue]) -> int:
    """Index of the goal with the highest weighted sum; ties to the lowest index."""
    return int(np.argmax(goal_scores(kb, encode_assignment(values))))


def kb_fingerprint(kb: KnowledgeBase) -> str:
    """Short stable digest of the canonical serialized form."""
    return hashlib.sha256(dumps_kb(kb).encode()).hexdigest()[:12]


def dumps_kb(kb: KnowledgeBase) -> str:
    """Canonical JSON text: fixed key order, two-space indent, trailing newline."""
    doc = {
        "inputs": list(kb.input_names),
        "goals": list(kb.goal_names),
        "weights": [[int(w) for w in row] for row in kb.weights],
    }
    return json.dumps(doc, indent=2) + "\n"


def save_kb(kb: KnowledgeBase, path: str | Path) -> None:
    Path(path).write_text(dumps_kb(kb))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise KBFormatError(message)


def loads_kb(text: str) -> KnowledgeBase:
    """Parse and validate the JSON knowledge-base format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise KBFormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "top level must be a JSON object")
    for key in ("inputs", "goals", "weights"):
        _require(key in doc, f"missing field {key!r}")
        _require(isinstance(doc[key], list), f"field {key!r} must be a list")
    inputs, goals, rows = doc["inputs"], doc["goals"], doc["weights"]
    for label, names in (("inputs", inputs), ("goals", goals)):
        for i, name in enumerate(names):
            _require(
                isinstance(name, str) and name != "",
                f"{label}[{i}]: names must be non-empty strings",
            )
    _require(len(inputs) >= 1, "need at least one input variable")
    _require(len(goals) >= 2, "need at least two goals")
    n_cols = len(inputs) + 1
    _require(
        len(rows) == len(goals),
        f"expected {len(goals)} weight rows (one per goal), got {len(rows)}",
    )
    for r, row in enumerate(rows):
        _require(isinstance(row, list), f"weights row {r}: must be a list")
        _require(
            len(row) == n_cols,
            f"weights row {r}: expected {n_cols} columns (bias + "
            f"{len(inputs)} inputs), got {len(row)}",
        )
        for c, w in enumerate(row):
            _require(
                isinstance(w, int) and not isinstance(w, bool),
                f"weights row {r} column {c}: expected an integer, got {w!r}",
            )
            _require(
                abs(w) <= _INT64_MAX,
                f"weights row {r} column {c}: {w} does not fit in 64-bit range",
            )
    return KnowledgeBase(tuple(inputs), tuple(goals), np.array(rows, dtype=np.int64))


def load_kb(path: str | Path) -> KnowledgeBase:
    return loads_kb(Path(path).read_text())
