"""Betti elements, minimal presentations and 3-generator gluing analysis.

Connectivity of the factorization graph of x (vertices = factorizations,
edges = overlapping support) is decided on the index graph instead: vertices
are the generator indices i with x - a_i in S, and i ~ j iff
x - a_i - a_j in S. A factorization's support is a clique there, and two
factorizations sharing index i are adjacent, so both graphs have identical
component structure, which keeps Betti scans cheap for large generators.

Every Betti element b satisfies b = a_j + w for some j and some nonzero w in
the Apery table of the smallest generator: pick i, j in different components
of b's graph; then b - a_j is in S but (b - a_j) - a_1 is not (either 1 sits
in i's component, or b - a_1 is not in S at all).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotAMember
from .factorization import factored_value, support
from .semigroup import (
    NumericalSemigroup,
    apery_set,
    contains,
    make_semigroup,
    quotient_data,
)


@dataclass(frozen=True)
class Trade:
    """Two factorizations of the same element with disjoint supports,
    oriented so the lexicographically smaller side comes first."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def sides(self) -> frozenset:
        return frozenset((self.left, self.right))


def make_trade(s: NumericalSemigroup, z1, z2) -> Trade:
    z1, z2 = tuple(z1), tuple(z2)
    if z1 == z2:
        raise ValueError("a trade needs two distinct factorizations")
    if factored_value(s, z1) != factored_value(s, z2):
        raise ValueError("trade sides factor different elements")
    if set(support(z1)) & set(support(z2)):
        raise ValueError("trade sides must have disjoint supports")
    return Trade(*sorted((z1, z2)))


def trade_value(s: NumericalSemigroup, t: Trade) -> int:
    return factored_value(s, t.left)


@dataclass(frozen=True)
class MinimalPresentation:
    trades: tuple[Trade, ...]
    betti: tuple[int, ...]


@dataclass(frozen=True)
class GluingExpression:
    """S = <a_pivot> + scale * S' with S' two-generated; scale is the gcd of
    the non-pivot generators and the pivot sits in S' as a non-generator."""

    pivot_index: int
    scale: int
    quotient: NumericalSemigroup


def index_graph_components(s: NumericalSemigroup, x: int) -> list[tuple[int, ...]]:
    """Connected components (sorted 1-based index tuples) of the index graph
    of x; one component per factorization-graph component."""
    gens = s.generators
    verts = [i for i, a in enumerate(gens, start=1) if x >= a and contains(s, x - a)]
    parent = {i: i for i in verts}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u in range(len(verts)):
        for v in range(u + 1, len(verts)):
            i, j = verts[u], verts[v]
            rest = x - gens[i - 1] - gens[j - 1]
            if rest >= 0 and contains(s, rest):
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in verts:
        comps.setdefault(find(i), []).append(i)
    return sorted(tuple(sorted(c)) for c in comps.values())


def _betti_candidates(s: NumericalSemigroup) -> list[int]:
    w = apery_set(s, s.multiplicity).entries
    cand = {a + v for a in s.generators for v in w if v}
    return sorted(cand)


def betti_elements(s: NumericalSemigroup) -> list[int]:
    """Elements whose factorization graph is disconnected, sorted."""
    cached = s._cache.get("betti")
    if cached is None:
        cached = [x for x in _betti_candidates(s) if len(index_graph_components(s, x)) > 1]
        s._cache["betti"] = cached
    return list(cached)


def _greedy_factorization(s: NumericalSemigroup, y: int) -> list[int]:
    """Some factorization of y: repeatedly take the largest generator that
    leaves a member behind. Deterministic."""
    z = [0] * s.embedding_dim
    while y:
        for j in range(s.embedding_dim - 1, -1, -1):
            a = s.generators[j]
            if a <= y and contains(s, y - a):
                z[j] += 1
                y -= a
                break
        else:
            raise NotAMember(f"{y} has no factorization")
    return z


def _component_factorization(s: NumericalSemigroup, b: int, comp: tuple[int, ...]) -> tuple[int, ...]:
    # any factorization of b containing min(comp) has support inside comp
    i = comp[0]
    z = _greedy_factorization(s, b - s.generators[i - 1])
    z[i - 1] += 1
    return tuple(z)


def _component_representatives(
    s: NumericalSemigroup, b: int, comps: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Lexicographically smallest factorization per component (Betti
    elements have few factorizations, so enumeration is cheap); greedy
    fallback keeps the presentation valid if one is ever enormous."""
    from .errors import CapExceeded
    from .factorization import enumerate_factorizations

    comp_of = {i: n for n, comp in enumerate(comps) for i in comp}
    try:
        best: dict[int, tuple[int, ...]] = {}
        for z in enumerate_factorizations(s, b, cap=200_000):
            n = comp_of[next(i for i, c in enumerate(z, start=1) if c)]
            if n not in best or z < best[n]:
                best[n] = z
        return [best[n] for n in range(len(comps))]
    except CapExceeded:
        return [_component_factorization(s, b, c) for c in comps]


def minimal_presentation(s: NumericalSemigroup) -> MinimalPresentation:
    """One deterministic minimal presentation: per Betti element, a star of
    trades joining one representative factorization per component. The trade
    count (components - 1 summed over Betti elements) is invariant across
    any valid selection."""
    trades = []
    betti = betti_elements(s)
    for b in betti:
        comps = index_graph_components(s, b)
        reps = _component_representatives(s, b, comps)
        root = reps[0]
        for other in reps[1:]:
            trades.append(make_trade(s, root, other))
    return MinimalPresentation(tuple(trades), tuple(betti))


def singleton_support_presentation_exists(s: NumericalSemigroup) -> bool:
    """True iff some minimal presentation uses only trades whose two sides
    are powers of single generators: every component of every Betti
    element's graph must own a divisor of the element."""
    for b in betti_elements(s):
        for comp in index_graph_components(s, b):
            if not any(b % s.generators[i - 1] == 0 for i in comp):
                return False
    return True


def gluing_expressions_3gen(s: NumericalSemigroup) -> list[GluingExpression]:
    """All decompositions of a 3-generated semigroup as pivot + scaled pair.

    For pivot a_i the scale is gcd of the other two; the expression counts
    iff scale >= 2, gcd(scale, a_i) = 1, and a_i lies in the scaled-down
    pair semigroup without being one of its minimal generators.
    """
    if s.embedding_dim != 3:
        raise ValueError("gluing expressions are computed for 3 generators only")
    out = []
    for i in range(1, 4):
        q = quotient_data(s, i)
        t = q.complement_gcd
        a_i = s.generators[i - 1]
        if t < 2 or math.gcd(t, a_i) != 1:
            continue
        if len(q.quotient_generators) != 2:
            continue
        quotient = make_semigroup(q.quotient_generators)
        if a_i in quotient.generators:
            continue
        if contains(quotient, a_i):
            out.append(GluingExpression(i, t, quotient))
    return out


def delta0_3gen(s: NumericalSemigroup):
    """0-delta set of a 3-generated semigroup from its gluing count alone:
    two or more expressions give {1}, otherwise {1, 2}."""
    from .factorization import DeltaSet

    if s.embedding_dim != 3:
        raise ValueError("needs a 3-generated semigroup")
    if len(gluing_expressions_3gen(s)) >= 2:
        return DeltaSet((1,))
    return DeltaSet((1, 2))
