"""Winner-take-all perceptron training with the pocket rule.

Each iteration presents one randomly drawn (optionally noise-corrupted)
example to the current weight matrix.  The matrix classifies by highest
weighted sum; on a miss the example vector (with a constant +1 prepended
for the bias column) is subtracted from the winning row and added to the
correct row, so weights stay integral forever.

On noisy data the current weights never settle down, so the trainer keeps
a second matrix aside: whenever the current matrix's run of consecutive
correct classifications exceeds the best run seen so far, the whole matrix
is copied into the "pocket".  Long lucky runs are exponentially more
likely for matrices with low misclassification probability, which makes
the pocketed matrix the one worth returning.  Run length is tracked for
the choice group as a whole and replacement always copies every row.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kb import KnowledgeBase
from .rng import SplitMix64
from .scenario import Example, Scenario, sample_clean, sample_noisy


@dataclass(frozen=True)
class TrainerConfig:
    iterations: int = 10_000
    seed: int = 0
    noise_enabled: bool = True

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")


@dataclass
class PocketState:
    """Mutable training state: current and pocketed matrices plus run counters."""

    current: np.ndarray
    pocket: np.ndarray
    current_run: int = 0
    best_run: int = 0


@dataclass(frozen=True)
class TrainResult:
    kb: KnowledgeBase
    best_run: int
    iterations: int


def group_perceptron_step(
    current: np.ndarray, e: Example
) -> tuple[np.ndarray, bool]:
    """One perceptron update generalized to a winner-take-all group.

    Returns the (possibly unchanged) weight matrix and whether the example
    was classified correctly.  On an error the augmented example vector is
    subtracted from the mistaken winner's row and added to the true goal's
    row; the input array is never mutated.
    """
    x = np.empty(current.shape[1], dtype=np.int64)
    x[0] = 1
    x[1:] = e.inputs
    pred = int(np.argmax(current @ x))
    if pred == e.true_goal:
        return current, True
    updated = current.copy()
    updated[pred] -= x
    updated[e.true_goal] += x
    return updated, False


def train(s: Scenario, cfg: TrainerConfig = TrainerConfig()) -> TrainResult:
    """Run the pocket algorithm and return the pocketed matrix as a KnowledgeBase.

    Starting weights are all zero.  The draw per iteration is sample_noisy
    when noise is enabled, sample_clean otherwise; identical (scenario,
    config) always reproduces a bit-identical matrix.
    """
    rng = SplitMix64(cfg.seed)
    shape = (s.m_goals, s.n_inputs + 1)
    state = PocketState(
        current=np.zeros(shape, dtype=np.int64),
        pocket=np.zeros(shape, dtype=np.int64),
    )
    for _ in range(cfg.iterations):
        e = sample_noisy(s, rng) if cfg.noise_enabled else sample_clean(s, rng)
        state.current, correct = group_perceptron_step(state.current, e)
        if correct:
            state.current_run += 1
            if state.current_run > state.best_run:
                state.best_run = state.current_run
                state.pocket = state.current.copy()
        else:
            state.current_run = 0
    kb = KnowledgeBase(s.input_names, s.goal_names, state.pocket)
    return TrainResult(kb=kb, best_run=state.best_run, iterations=cfg.iterations)
