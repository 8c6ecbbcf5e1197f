"""Deliberately naive re-implementations used as independent oracles.

Everything here mirrors the public propagation and search semantics with
plain Python sets and exhaustive loops.  No code is shared with the
optimized engine or the ascending-cardinality solver; tests and the
reproduction report compare the two routes on small instances.
"""

from __future__ import annotations

import math
from typing import Iterable

from .topology import PyramidGraph


def _closed(g: PyramidGraph, v: int) -> set[int]:
    nb = set(g.adjacency[v])
    nb.add(v)
    return nb


def naive_round(g: PyramidGraph, k: int, P: set[int]) -> set[int]:
    """Direct set-comprehension transcription of one simultaneous round."""
    out: set[int] = set()
    for v in P:
        nb = _closed(g, v)
        if len(nb - P) <= k:
            out |= nb
    return out


def naive_fixpoint_rounds(g: PyramidGraph, k: int, S: Iterable[int]) -> list[set[int]]:
    """All rounds from N[S] until coverage, or until two equal rounds."""
    P: set[int] = set()
    for v in S:
        P |= _closed(g, v)
    rounds = [set(P)]
    while len(P) < g.n:
        nxt = naive_round(g, k, P)
        rounds.append(set(nxt))
        if nxt == P:
            break
        P = nxt
    return rounds


def naive_is_kpds(g: PyramidGraph, k: int, S: Iterable[int]) -> bool:
    return len(naive_fixpoint_rounds(g, k, S)[-1]) == g.n


def naive_radius(g: PyramidGraph, k: int, S: Iterable[int]) -> int | float:
    rounds = naive_fixpoint_rounds(g, k, S)
    if len(rounds[-1]) != g.n:
        return math.inf
    return len(rounds)


def naive_min_kpds(g: PyramidGraph, k: int) -> tuple[int, list[frozenset[int]], int | float]:
    """Minimum k-power-dominating sets by scanning all 2^n subsets.

    Returns (gamma, all optimal sets sorted, min radius over optimal sets).
    Only sensible for very small graphs.
    """
    n = g.n
    best_size = n + 1
    optimal: list[frozenset[int]] = []
    for mask in range(1 << n):
        members = frozenset(v for v in range(n) if (mask >> v) & 1)
        if len(members) > best_size:
            continue
        if naive_is_kpds(g, k, members):
            if len(members) < best_size:
                best_size = len(members)
                optimal = [members]
            else:
                optimal.append(members)
    gamma = best_size
    optimal.sort(key=sorted)
    radius = min(naive_radius(g, k, S) for S in optimal)
    return gamma, optimal, radius
