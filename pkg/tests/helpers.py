"""Shared oracles for the test suite, kept deliberately numpy-free where
they double-check numpy code paths."""

import numpy as np

from conexsys import KnowledgeBase


def brute_force_sums(kb: KnowledgeBase, encoded) -> list[int]:
    sums = []
    for row in kb.weights.tolist():
        acc = row[0]
        for w, x in zip(row[1:], encoded):
            acc += w * x
        sums.append(acc)
    return sums


def brute_force_winner(kb: KnowledgeBase, encoded) -> int:
    sums = brute_force_sums(kb, encoded)
    best = 0
    for g, s in enumerate(sums):
        if s > sums[best]:
            best = g
    return best


def random_kb(rng: np.random.Generator, m: int, n: int, span: int = 9) -> KnowledgeBase:
    weights = rng.integers(-span, span + 1, size=(m, n + 1))
    return KnowledgeBase(
        tuple(f"V{k + 1}" for k in range(n)),
        tuple(f"G{g + 1}" for g in range(m)),
        weights,
    )
