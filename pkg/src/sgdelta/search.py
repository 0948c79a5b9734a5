"""Exhaustive realization search: which semigroups in a bounded space have a
prescribed 0- or max-norm delta set.

Candidates are enumerated by ascending embedding dimension, then
lexicographically; non-canonical generator lists are skipped so no semigroup
is tested twice. A search never claims nonexistence beyond its bounds, and
every hit is recomputed from scratch before being reported.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations

from .budget import Budget
from .errors import BudgetExceeded, SemigroupError
from .factorization import P0, PINF, DeltaSet
from .infinity import delta_inf_semigroup
from .parallel import pmap
from .semigroup import make_semigroup
from .zero import delta0_semigroup


@dataclass(frozen=True)
class SearchReport:
    target: tuple[int, ...]
    p: object
    max_dim: int
    max_gen: int
    hits: tuple[tuple[int, ...], ...]
    skipped: tuple[tuple[tuple[int, ...], str], ...]  # budget-limited candidates
    tested: int
    exhausted: bool


def _candidates(max_dim: int, max_gen: int):
    for k in range(2, max_dim + 1):
        for gens in combinations(range(2, max_gen + 1), k):
            g = 0
            for a in gens:
                g = math.gcd(g, a)
            if g != 1:
                continue
            try:
                s = make_semigroup(gens)
            except SemigroupError:
                continue
            if s.generators == gens:
                yield gens


def _delta_of(gens, p, budget):
    s = make_semigroup(gens)
    if p == P0:
        return delta0_semigroup(s, budget=budget)
    return delta_inf_semigroup(s, budget=budget)[0]


def _probe(args):
    gens, p, target, budget = args
    try:
        d = _delta_of(gens, p, budget)
    except BudgetExceeded as e:
        return gens, "budget", str(e)
    return gens, "hit" if d.values == target else "miss", ""


def search_delta(
    target,
    p,
    max_dim: int,
    max_gen: int,
    budget: Budget | None = None,
    workers: int = 1,
) -> SearchReport:
    """Collect every canonical semigroup in the bounded space whose exact
    delta set equals `target`. Requires 1 in the target: a nonempty 0-delta
    set always contains 1 (0-length sets are eventually intervals), and so
    does a max-norm delta set (unit gaps always occur for large elements)."""
    if p not in (P0, PINF):
        raise ValueError("search supports p = 0 and p = inf")
    target = DeltaSet.from_iterable(target)
    if 1 not in target:
        reason = (
            "every nonempty 0-delta set of a numerical semigroup contains 1"
            if p == P0
            else "every max-norm delta set of a numerical semigroup contains 1"
        )
        raise ValueError(f"unrealizable target {list(target.values)}: {reason}")
    deadline = None
    if budget is not None and budget.max_seconds is not None:
        deadline = time.monotonic() + budget.max_seconds
    cands = list(_candidates(max_dim, max_gen))
    hits: list[tuple[int, ...]] = []
    skipped: list[tuple[tuple[int, ...], str]] = []
    tested = 0
    exhausted = True
    chunk = 64
    for base in range(0, len(cands), chunk):
        if deadline is not None and time.monotonic() > deadline:
            exhausted = False
            break
        batch = cands[base : base + chunk]
        results = pmap(_probe, [(g, p, target.values, budget) for g in batch], workers)
        for gens, status, detail in results:
            tested += 1
            if status == "budget":
                skipped.append((gens, detail))
                exhausted = False
            elif status == "hit":
                # re-verify on a fresh instance before emission
                if _delta_of(gens, p, budget).values != target.values:
                    raise SemigroupError(f"re-verification failed for {gens}")
                hits.append(gens)
    return SearchReport(
        target.values, p, max_dim, max_gen, tuple(hits), tuple(skipped), tested, exhausted
    )
