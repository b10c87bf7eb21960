"""Shared randomized generators for the test suite (always explicitly seeded)."""

from __future__ import annotations

import random

from seidelchain import BlockString, Graph


def random_block_string(rng: random.Random, max_k: int = 6, max_n: int = 60) -> BlockString:
    k = rng.randint(1, max_k)
    n = rng.randint(2 * k, max_n)
    cuts = sorted(rng.sample(range(1, n), 2 * k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return BlockString(tuple((parts[2 * i], parts[2 * i + 1]) for i in range(k)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_subset_mask(rng: random.Random, n: int) -> int:
    return rng.randrange(1 << n)
