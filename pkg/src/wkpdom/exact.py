"""Exhaustive minimum k-power-domination oracle.

Ascending-cardinality search: subsets of size 1, 2, ... are enumerated in
lexicographic ordinal order and checked by the propagation engine.  There
is no pruning and no symmetry reduction; the point of this module is to be
trivially trustworthy at desk scale, not fast.  Budgets cap the number of
propagation fixpoint runs so runaway instances fail loudly with the partial
bound that was established.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .constructions import RegimeError
from .propagation import _cover_step
from .topology import WKP, ParameterDomainError, PyramidGraph

#: How often the progress callback fires, in propagation checks.
PROGRESS_INTERVAL = 5_000

ProgressFn = Callable[[int, int, int], None]


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exhaustive-search call.

    ``max_subset_count`` caps propagation fixpoint runs; ``max_cardinality``
    optionally caps the subset size explored.
    """

    max_subset_count: int = 10_000_000
    max_cardinality: int | None = None

    def __post_init__(self) -> None:
        if self.max_subset_count < 1:
            raise ParameterDomainError("max_subset_count must be positive")
        if self.max_cardinality is not None and self.max_cardinality < 1:
            raise ParameterDomainError("max_cardinality must be positive")


class BudgetExceededError(RuntimeError):
    """Search stopped before it could certify its answer.

    ``gamma_exceeds`` is the largest cardinality that was fully enumerated
    without finding a k-PDS, i.e. the established bound gamma > gamma_exceeds.
    """

    def __init__(self, message: str, *, gamma_exceeds: int, checks_performed: int):
        super().__init__(message)
        self.gamma_exceeds = gamma_exceeds
        self.checks_performed = checks_performed


@dataclass(frozen=True)
class ExactResult:
    """Outcome of ``min_kpds``.

    ``witnesses`` holds optimal sets up to ``witness_cap`` in lexicographic
    order; ``radius`` is minimized over every optimal set found, and
    ``exhausted`` records whether the whole cardinality level of ``gamma``
    was enumerated (required for the radius to be the graph's).
    """

    gamma: int
    witnesses: tuple[frozenset[int], ...]
    witness_cap: int
    radius: int | float
    exhausted: bool
    checks_performed: int


def min_kpds(g: PyramidGraph, k: int, budget: SearchBudget | None = None, *,
             witness_cap: int = 1000, progress: ProgressFn | None = None) -> ExactResult:
    """Minimum k-power-dominating-set size by ascending exhaustive search.

    Finds gamma, collects optimal witnesses (capped), and tracks the minimum
    radius across every optimal set.  Raises ``BudgetExceededError`` when the
    budget runs out before gamma is certified; if it runs out while sweeping
    the rest of gamma's own cardinality level, the result is returned with
    ``exhausted=False`` instead.
    """
    if k < 0:
        raise ParameterDomainError(f"k must be >= 0, got {k}")
    budget = budget or SearchBudget()
    masks = g.closed_masks
    full = g.full_mask
    n = g.n
    checks = 0
    max_size = n if budget.max_cardinality is None else min(n, budget.max_cardinality)
    for size in range(1, max_size + 1):
        total = math.comb(n, size)
        done = 0
        witnesses: list[frozenset[int]] = []
        best_radius: int | float = math.inf
        found = False
        for combo in itertools.combinations(range(n), size):
            if checks >= budget.max_subset_count:
                if found:
                    return ExactResult(
                        gamma=size,
                        witnesses=tuple(witnesses),
                        witness_cap=witness_cap,
                        radius=best_radius,
                        exhausted=False,
                        checks_performed=checks,
                    )
                raise BudgetExceededError(
                    f"budget of {budget.max_subset_count} checks exhausted while "
                    f"enumerating size {size}; established gamma > {size - 1}",
                    gamma_exceeds=size - 1,
                    checks_performed=checks,
                )
            checks += 1
            done += 1
            if progress is not None and checks % PROGRESS_INTERVAL == 0:
                progress(size, done, total)
            seed = 0
            for v in combo:
                seed |= 1 << v
            step = _cover_step(masks, full, k, seed)
            if step is not None:
                found = True
                best_radius = min(best_radius, 1 + step)
                if len(witnesses) < witness_cap:
                    witnesses.append(frozenset(combo))
        if found:
            return ExactResult(
                gamma=size,
                witnesses=tuple(witnesses),
                witness_cap=witness_cap,
                radius=best_radius,
                exhausted=True,
                checks_performed=checks,
            )
    raise BudgetExceededError(
        f"no k-PDS of size <= {max_size} exists (k={k}); established gamma > {max_size}",
        gamma_exceeds=max_size,
        checks_performed=checks,
    )


def propagation_radius(g: PyramidGraph, k: int, budget: SearchBudget | None = None, *,
                       progress: ProgressFn | None = None) -> int:
    """Minimum radius over all minimum k-power-dominating sets.

    Requires the exhaustive sweep of the optimal cardinality level to
    complete within budget.
    """
    result = min_kpds(g, k, budget, progress=progress)
    if not result.exhausted:
        raise BudgetExceededError(
            f"radius needs every size-{result.gamma} set enumerated; budget ran out",
            gamma_exceeds=result.gamma - 1,
            checks_performed=result.checks_performed,
        )
    assert isinstance(result.radius, int)
    return result.radius


def verify_lower_bound(g: PyramidGraph, k: int, bound: int,
                       budget: SearchBudget | None = None, *,
                       progress: ProgressFn | None = None) -> bool:
    """True iff no set of size < bound is a k-PDS, by exhaustive enumeration.

    This is the empirical stand-in for the closed formulas' lower-bound
    arguments; bound=1 is vacuously true.
    """
    if k < 0:
        raise ParameterDomainError(f"k must be >= 0, got {k}")
    budget = budget or SearchBudget()
    masks = g.closed_masks
    full = g.full_mask
    n = g.n
    checks = 0
    for size in range(1, min(bound, n + 1)):
        total = math.comb(n, size)
        done = 0
        for combo in itertools.combinations(range(n), size):
            if checks >= budget.max_subset_count:
                raise BudgetExceededError(
                    f"budget of {budget.max_subset_count} checks exhausted while "
                    f"enumerating size {size}; established gamma > {size - 1}",
                    gamma_exceeds=size - 1,
                    checks_performed=checks,
                )
            checks += 1
            done += 1
            if progress is not None and checks % PROGRESS_INTERVAL == 0:
                progress(size, done, total)
            seed = 0
            for v in combo:
                seed |= 1 << v
            if _cover_step(masks, full, k, seed) is not None:
                return False
    return True


def level1_intersection_check(g: PyramidGraph, k: int,
                              budget: SearchBudget | None = None) -> bool:
    """True iff every minimum k-PDS of WKP(C, 2) contains a level-1 vertex.

    Applies to C >= 3 and k in [C-1]; enumerates the full optimal
    cardinality level.
    """
    if g.family != WKP or g.L != 2:
        raise RegimeError("the level-1 intersection property is about WKP(C, 2)")
    if g.C < 3:
        raise RegimeError(f"the level-1 intersection property needs C >= 3, got C={g.C}")
    if not 1 <= k <= g.C - 1:
        raise RegimeError(f"the level-1 intersection property needs k in [C-1], got k={k}")
    budget = budget or SearchBudget()
    result = min_kpds(g, k, budget)
    if not result.exhausted:
        raise BudgetExceededError(
            f"needs every size-{result.gamma} set enumerated; budget ran out",
            gamma_exceeds=result.gamma - 1,
            checks_performed=result.checks_performed,
        )
    level1 = set(g.level_ordinals(1))
    masks = g.closed_masks
    full = g.full_mask
    checks = result.checks_performed
    for combo in itertools.combinations(range(g.n), result.gamma):
        if checks >= budget.max_subset_count:
            raise BudgetExceededError(
                "budget exhausted while re-scanning the optimal cardinality level",
                gamma_exceeds=result.gamma - 1,
                checks_performed=checks,
            )
        checks += 1
        seed = 0
        for v in combo:
            seed |= 1 << v
        if _cover_step(masks, full, k, seed) is not None and not level1.intersection(combo):
            return False
    return True


def exact_result_to_json(g: PyramidGraph, k: int, result: ExactResult) -> dict:
    witness: Iterable[int] = result.witnesses[0] if result.witnesses else ()
    return {
        "C": g.C,
        "L": g.L,
        "k": k,
        "gamma": result.gamma,
        "witness": [str(g.vertices[v]) for v in sorted(witness)],
        "radius": None if math.isinf(result.radius) else result.radius,
        "exhausted": result.exhausted,
        "checks_performed": result.checks_performed,
    }


__all__ = [
    "SearchBudget",
    "BudgetExceededError",
    "ExactResult",
    "min_kpds",
    "propagation_radius",
    "verify_lower_bound",
    "level1_intersection_check",
    "exact_result_to_json",
]
