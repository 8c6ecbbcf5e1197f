"""Monitored-set propagation and k-power-domination predicates.

Monitoring seeds on the closed neighborhood of a seed set and then runs
simultaneous rounds: every monitored vertex with at most k unmonitored
closed neighbors extends monitoring to its whole closed neighborhood.
Round i+1 is computed entirely from the frozen round i; cascading within a
round would shorten radii and is deliberately not done.

Monitored sets are held as integer bitmasks over vertex ordinals, which
keeps a round at O(|monitored| * words) with no per-round allocation.
An intentionally naive mirror of these semantics lives in ``reference``
and is compared against this engine by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .topology import ParameterDomainError, PyramidGraph

#: Radius / first-step sentinel for "never monitored".
NEVER = math.inf


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(g: PyramidGraph, S: Iterable[int]) -> int:
    mask = 0
    n = g.n
    for v in S:
        if not 0 <= v < n:
            raise ParameterDomainError(f"vertex ordinal {v} out of range for |V|={n}")
        mask |= 1 << v
    return mask


def _check_k(k: int) -> None:
    if k < 0:
        raise ParameterDomainError(f"k must be >= 0, got {k}")


def _seed_neighborhood(masks: tuple[int, ...], seed_mask: int) -> int:
    P = 0
    for v in _iter_bits(seed_mask):
        P |= masks[v]
    return P


def _round(masks: tuple[int, ...], k: int, P: int) -> int:
    """One simultaneous round against the frozen monitored set P."""
    nxt = 0
    not_p = ~P
    for v in _iter_bits(P):
        if (masks[v] & not_p).bit_count() <= k:
            nxt |= masks[v]
    return nxt


def _cover_step(masks: tuple[int, ...], full: int, k: int, seed_mask: int) -> int | None:
    """First round index at which monitoring covers every vertex, else None."""
    P = _seed_neighborhood(masks, seed_mask)
    if P == full:
        return 0
    step = 0
    while True:
        nxt = _round(masks, k, P)
        if nxt == full:
            return step + 1
        if nxt == P:
            return None
        P = nxt
        step += 1


@dataclass(frozen=True)
class MonitorTrace:
    """Round-by-round record of one propagation run.

    ``rounds[0]`` is the closed neighborhood of the seed; rounds grow
    monotonically.  The trace ends either at full coverage or with two
    equal entries witnessing the fixpoint.  ``first_step[v]`` is the round
    at which v became monitored (0 for the seed's closed neighborhood),
    or ``NEVER``.
    """

    k: int
    seed: frozenset[int]
    rounds: tuple[frozenset[int], ...]
    first_step: tuple[int | float, ...]


@dataclass(frozen=True)
class PdsCertificate:
    """A candidate set together with the evidence of what it monitors."""

    members: frozenset[int]
    is_kpds: bool
    radius: int | float
    trace: MonitorTrace
    provenance: str


def closed_neighborhood(g: PyramidGraph, S: Iterable[int]) -> set[int]:
    """Union of closed neighborhoods N[v] over v in S."""
    out = 0
    for v in _iter_bits(_mask_of(g, S)):
        out |= g.closed_masks[v]
    return set(_iter_bits(out))


def propagate_round(g: PyramidGraph, k: int, P: Iterable[int]) -> set[int]:
    """One simultaneous round from monitored set P.

    Returns the union of N[v] over monitored v with at most k unmonitored
    closed neighbors, computed against the input set only.  Callers keep P
    a union of closed neighborhoods, which makes rounds monotone.
    """
    _check_k(k)
    return set(_iter_bits(_round(g.closed_masks, k, _mask_of(g, P))))


def propagate_fixpoint(g: PyramidGraph, k: int, S: Iterable[int]) -> MonitorTrace:
    """Run rounds from the closed neighborhood of S until coverage or fixpoint."""
    _check_k(k)
    seed_mask = _mask_of(g, S)
    masks = g.closed_masks
    full = g.full_mask
    P = _seed_neighborhood(masks, seed_mask)
    first: list[int | float] = [NEVER] * g.n
    for v in _iter_bits(P):
        first[v] = 0
    round_masks = [P]
    step = 0
    while P != full:
        nxt = _round(masks, k, P)
        round_masks.append(nxt)
        if nxt == P:
            break
        step += 1
        for v in _iter_bits(nxt & ~P):
            first[v] = step
        P = nxt
    return MonitorTrace(
        k=k,
        seed=frozenset(_iter_bits(seed_mask)),
        rounds=tuple(frozenset(_iter_bits(m)) for m in round_masks),
        first_step=tuple(first),
    )


def is_kpds(g: PyramidGraph, k: int, S: Iterable[int]) -> bool:
    """True iff the propagation fixpoint of S covers every vertex.

    For k=0 this is exactly the dominating-set predicate.
    """
    _check_k(k)
    return _cover_step(g.closed_masks, g.full_mask, k, _mask_of(g, S)) is not None


def radius_of_set(g: PyramidGraph, k: int, S: Iterable[int]) -> int | float:
    """1 + the first round index with full coverage; NEVER when S is no k-PDS."""
    _check_k(k)
    step = _cover_step(g.closed_masks, g.full_mask, k, _mask_of(g, S))
    return NEVER if step is None else 1 + step


def make_certificate(g: PyramidGraph, k: int, S: Iterable[int],
                     provenance: str = "user") -> PdsCertificate:
    """Run a full trace for S and package the verdict."""
    trace = propagate_fixpoint(g, k, S)
    covered = len(trace.rounds[-1]) == g.n
    radius: int | float = len(trace.rounds) if covered else NEVER
    return PdsCertificate(
        members=frozenset(trace.seed),
        is_kpds=covered,
        radius=radius,
        trace=trace,
        provenance=provenance,
    )


def _address_list(g: PyramidGraph, ordinals: Iterable[int]) -> list[str]:
    return [str(g.vertices[v]) for v in sorted(ordinals)]


def trace_to_json(g: PyramidGraph, trace: MonitorTrace) -> dict:
    """Trace as {k, seed, rounds, radius}; radius is null for a stuck run."""
    covered = len(trace.rounds[-1]) == g.n
    return {
        "k": trace.k,
        "seed": _address_list(g, trace.seed),
        "rounds": [_address_list(g, r) for r in trace.rounds],
        "radius": len(trace.rounds) if covered else None,
    }


def certificate_to_json(g: PyramidGraph, cert: PdsCertificate) -> dict:
    return {
        "set": _address_list(g, cert.members),
        "size": len(cert.members),
        "is_kpds": cert.is_kpds,
        "radius": None if math.isinf(cert.radius) else cert.radius,
        "provenance": cert.provenance,
        "trace": trace_to_json(g, cert.trace),
    }
