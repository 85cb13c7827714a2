"""Scoring a knowledge base against its scenario.

The headline metric is the figure of merit: how many of 1000 noisy
examples, drawn exactly as during training, the matrix classifies
correctly.  It is compared against two analytical baselines (uniform
random guessing and always answering the most frequent goal) and against
accuracy on the noise-free patterns, reported with both natural
denominators (distinct patterns, and patterns weighted by sampling
ratio).

``expected_accuracy`` computes the exact hit probability by enumerating
every input pattern, which pins sampled figures of merit to their true
mean in tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from statistics import mean, pstdev

import numpy as np

from .kb import KnowledgeBase, goal_scores
from .rng import SplitMix64
from .scenario import Scenario, sample_noisy

GROUP_SIZE = 1000


@dataclass(frozen=True)
class EvalReport:
    fom_points: tuple[int, ...]
    fom_mean: float
    fom_std: float
    baseline_random: float
    baseline_majority: float
    clean_accuracy_distinct: float
    clean_accuracy_weighted: float

    def to_dict(self) -> dict:
        return {
            "fom_points": list(self.fom_points),
            "fom_mean": self.fom_mean,
            "fom_std": self.fom_std,
            "baseline_random": self.baseline_random,
            "baseline_majority": self.baseline_majority,
            "clean_accuracy_distinct": self.clean_accuracy_distinct,
            "clean_accuracy_weighted": self.clean_accuracy_weighted,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def format_table(self) -> str:
        lines = [
            f"figure of merit      {self.fom_mean:7.1f} / 1000  "
            f"(std {self.fom_std:.1f} over {len(self.fom_points)} groups)",
            f"baseline: random     {self.baseline_random:7.1f} / 1000",
            f"baseline: majority   {self.baseline_majority:7.1f} / 1000",
            f"clean accuracy       {self.clean_accuracy_distinct:7.3f} distinct"
            f"   {self.clean_accuracy_weighted:.3f} weighted",
        ]
        return "\n".join(lines)

    def summary_line(self) -> str:
        return (
            f"fom_mean={self.fom_mean:.1f}"
            f" baseline_majority={self.baseline_majority:.1f}"
            f" baseline_random={self.baseline_random:.1f}"
        )


def _check_dims(kb: KnowledgeBase, s: Scenario) -> None:
    if kb.n_inputs != s.n_inputs:
        raise ValueError(
            f"kb expects {kb.n_inputs} inputs, scenario has {s.n_inputs}"
        )


def figure_of_merit(
    kb: KnowledgeBase,
    s: Scenario,
    groups: int,
    rng: SplitMix64,
    group_size: int = GROUP_SIZE,
) -> list[int]:
    """Correct classifications per group of noisy draws (one point each)."""
    if groups < 1:
        raise ValueError("need at least one group")
    _check_dims(kb, s)
    points = []
    for _ in range(groups):
        hits = 0
        for _ in range(group_size):
            e = sample_noisy(s, rng)
            if int(np.argmax(goal_scores(kb, e.inputs))) == e.true_goal:
                hits += 1
        points.append(hits)
    return points


def baselines(s: Scenario) -> tuple[float, float]:
    """(random, majority) baselines in points per 1000, computed analytically."""
    random = GROUP_SIZE / s.m_goals
    majority = GROUP_SIZE * max(g.ratio for g in s.goals) / s.total_weight
    return random, majority


def clean_accuracy(kb: KnowledgeBase, s: Scenario) -> tuple[float, float]:
    """Fractions of noise-free patterns classified correctly.

    Returned as (distinct, weighted): each pattern counted once, and each
    pattern counted ratio-many times.
    """
    _check_dims(kb, s)
    correct_distinct = 0
    correct_weight = 0
    for g in range(s.m_goals):
        e = s.clean_example(g)
        if int(np.argmax(goal_scores(kb, e.inputs))) == g:
            correct_distinct += 1
            correct_weight += s.goals[g].ratio
    return correct_distinct / s.m_goals, correct_weight / s.total_weight


def expected_accuracy(kb: KnowledgeBase, s: Scenario) -> float:
    """Exact probability that a noisy draw is classified correctly.

    Enumerates all 2^n input patterns; practical for n up to ~20.
    """
    _check_dims(kb, s)
    n = s.n_inputs
    if n > 20:
        raise ValueError("exact enumeration is limited to 20 inputs")
    patterns = np.array(
        [[1 if (idx >> k) & 1 else -1 for k in range(n)] for idx in range(2**n)],
        dtype=np.int64,
    )
    scores = patterns @ kb.weights[:, 1:].T + kb.weights[:, 0]
    winners = np.argmax(scores, axis=1)
    p = np.asarray(s.noise)
    total = 0.0
    for g, mode in enumerate(s.goals):
        clean = s.clean_example(g).inputs
        flip = patterns != clean
        prob = np.where(flip, p, 1.0 - p).prod(axis=1)
        total += mode.ratio / s.total_weight * prob[winners == g].sum()
    return float(total)


def evaluate(
    kb: KnowledgeBase, s: Scenario, groups: int = 10, seed: int = 0
) -> EvalReport:
    """Full report: sampled figure of merit, baselines, clean accuracies."""
    points = figure_of_merit(kb, s, groups, SplitMix64(seed))
    random, majority = baselines(s)
    distinct, weighted = clean_accuracy(kb, s)
    return EvalReport(
        fom_points=tuple(points),
        fom_mean=mean(points),
        fom_std=pstdev(points),
        baseline_random=random,
        baseline_majority=majority,
        clean_accuracy_distinct=distinct,
        clean_accuracy_weighted=weighted,
    )
