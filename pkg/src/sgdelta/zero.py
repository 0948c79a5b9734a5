"""Exact 0-norm delta sets via the support-stability bound.

For a support set I with d = gcd{a_i : i in I}, x has a factorization with
support exactly I iff d | x - sum_I and (x - sum_I)/d lies in the span of
{a_i / d}. Once x clears every support's threshold
    d * (F(<a_i/d : i in I>) + 1) + sum_I,
having any support implies having every superset support, so the 0-length
set is an interval and per-element deltas collapse to {1} or nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .arith import ConeTable
from .budget import DEFAULT_ZERO_BUDGET, Budget
from .errors import BudgetExceeded, NotAMember
from .factorization import DeltaSet
from .semigroup import NumericalSemigroup

MAX_SUBSET_DIM = 24


@dataclass(frozen=True)
class SupportProfile:
    support: tuple[int, ...]  # 1-based generator indices
    gcd: int
    threshold: int


def _cones(s: NumericalSemigroup) -> list[tuple[tuple[int, ...], int, ConeTable]]:
    """(support, sum of its generators, membership oracle) per nonempty I."""
    cached = s._cache.get("zero-cones")
    if cached is not None:
        return cached
    k = s.embedding_dim
    if k > MAX_SUBSET_DIM:
        raise BudgetExceeded(f"2^{k} support subsets exceed the scan budget")
    out = []
    for size in range(1, k + 1):
        for idx in combinations(range(1, k + 1), size):
            gens = tuple(s.generators[i - 1] for i in idx)
            out.append((idx, sum(gens), ConeTable.build(gens)))
    s._cache["zero-cones"] = out
    return out


def support_profiles(s: NumericalSemigroup) -> list[SupportProfile]:
    out = []
    for idx, total, cone in _cones(s):
        thr = cone.gcd * (cone.frobenius_reduced() + 1) + total
        out.append(SupportProfile(idx, cone.gcd, thr))
    return out


def delta0_stability_bound(s: NumericalSemigroup) -> int:
    """Least X0 from the profile table: above it every 0-length set is an
    interval. Taken over all nonempty supports (over-approximation is safe)."""
    return max(p.threshold for p in support_profiles(s))


def support_length_set(s: NumericalSemigroup, x: int) -> tuple[int, ...]:
    """Sorted achievable support sizes of x (empty iff x not in s)."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0:
        return (0,)  # the empty factorization
    sizes = set()
    for idx, total, cone in _cones(s):
        if cone.contains(x - total):
            sizes.add(len(idx))
    return tuple(sorted(sizes))


def check_l0_interval(s: NumericalSemigroup, x: int) -> bool:
    """True iff the 0-length set of x has no holes."""
    sizes = support_length_set(s, x)
    if not sizes:
        raise NotAMember(f"{x} is not in {s}")
    return sizes[-1] - sizes[0] + 1 == len(sizes)


def delta0_of_element(s: NumericalSemigroup, x: int) -> DeltaSet:
    sizes = support_length_set(s, x)
    if not sizes:
        raise NotAMember(f"{x} is not in {s}")
    return DeltaSet.from_iterable(b - a for a, b in zip(sizes, sizes[1:]))


def _delta_union_to(s: NumericalSemigroup, horizon: int) -> set[int]:
    """Union of per-element 0-delta sets over x in [0, horizon], vectorized:
    one membership pass per support subset, then per-x size bitmasks."""
    x = np.arange(horizon + 1, dtype=np.int64)
    masks = np.zeros(horizon + 1, dtype=np.uint32)
    for idx, total, cone in _cones(s):
        hit = cone.contains_array(x - total)
        masks[hit] |= np.uint32(1 << (len(idx) - 1))
    union: set[int] = set()
    for m in np.unique(masks):
        sizes = [b + 1 for b in range(32) if m >> b & 1]
        union.update(b - a for a, b in zip(sizes, sizes[1:]))
    return union


def delta0_semigroup(s: NumericalSemigroup, budget: Budget | None = None) -> DeltaSet:
    """Exact 0-delta set of the whole semigroup: {1} union everything seen
    up to the stability bound (beyond it nothing new can appear)."""
    budget = budget or DEFAULT_ZERO_BUDGET
    x0 = delta0_stability_bound(s)
    if x0 > budget.max_element:
        raise BudgetExceeded(f"stability bound {x0} exceeds element budget {budget.max_element}")
    union = _delta_union_to(s, x0)
    union.add(1)
    return DeltaSet.from_iterable(union)


def delta0_union_brute(s: NumericalSemigroup, horizon: int) -> DeltaSet:
    """Union of 0-deltas up to an arbitrary horizon (cross-check hook)."""
    return DeltaSet.from_iterable(_delta_union_to(s, horizon) | {1})
