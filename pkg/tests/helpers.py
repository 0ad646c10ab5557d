"""Shared graph builders for the test suite."""

from __future__ import annotations

import numpy as np

from netcover import DirectedGraph, gen_erdos_renyi, gen_preferential


def graph_of(*edges: tuple[str, str], nodes: tuple[str, ...] = ()) -> DirectedGraph:
    return DirectedGraph.from_edges(edges, nodes=nodes)


def star(leaves: int = 4) -> DirectedGraph:
    """All leaves point at the hub."""
    return DirectedGraph.from_edges([(f"l{i}", "hub") for i in range(1, leaves + 1)])


def path(labels: str) -> DirectedGraph:
    return DirectedGraph.from_edges(list(zip(labels, labels[1:])))


def cycle(labels: str) -> DirectedGraph:
    pairs = list(zip(labels, labels[1:])) + [(labels[-1], labels[0])]
    return DirectedGraph.from_edges(pairs)


def bipath(labels: str) -> DirectedGraph:
    """Path with both directions on every edge."""
    fwd = list(zip(labels, labels[1:]))
    return DirectedGraph.from_edges(fwd + [(b, a) for a, b in fwd])


def complete(labels: str) -> DirectedGraph:
    return DirectedGraph.from_edges(
        [(a, b) for a in labels for b in labels if a != b]
    )


def random_digraph(rng: np.random.Generator, max_n: int = 30) -> DirectedGraph:
    """One seeded Erdos-Renyi draw with randomized size and density."""
    n = int(rng.integers(4, max_n + 1))
    p = float(rng.uniform(0.05, 0.5))
    return gen_erdos_renyi(n, p, int(rng.integers(0, 2**32)))


def mixed_digraph(rng: np.random.Generator, max_n: int = 60) -> DirectedGraph:
    """Alternate ER and preferential-attachment draws for ensemble tests."""
    n = int(rng.integers(4, max_n + 1))
    seed = int(rng.integers(0, 2**32))
    if rng.random() < 0.5:
        return gen_erdos_renyi(n, float(rng.uniform(0.02, 0.4)), seed)
    epn = int(rng.integers(1, min(6, n)))
    return gen_preferential(n, epn, seed)


def strongly_connected_digraph(rng: np.random.Generator, max_n: int = 30) -> DirectedGraph:
    """Random Hamiltonian cycle plus extra edges: strongly connected by construction."""
    n = int(rng.integers(3, max_n + 1))
    labels = [f"v{i:03d}" for i in range(n)]
    order = list(rng.permutation(n))
    edges = {(labels[a], labels[b]) for a, b in zip(order, order[1:] + order[:1])}
    for _ in range(2 * n):
        a, b = rng.integers(0, n, size=2)
        if a != b:
            edges.add((labels[a], labels[b]))
    return DirectedGraph.from_edges(sorted(edges))
