"""Canonical numerical semigroup values.

A numerical semigroup is held by its minimal generator tuple (gcd 1, no
generator a nonnegative combination of the others). Construction normalizes
arbitrary generating sets and reports what it removed. Apery tables and
membership are cached per instance; instances are immutable and all
operations are pure, so concurrent readers are safe (caches are plain dict
writes, atomic under the interpreter lock).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import INT64_MAX, ConeTable, apery_table, modinv
from .errors import InvalidGenerators, NonCoprimeGenerators, NotAMember, PeriodOverflow


@dataclass(frozen=True)
class AperyTable:
    """Least semigroup element in each residue class modulo a nonzero member.

    entries[r] is the least element congruent to r; entries[0] = 0.
    """

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.modulus:
            raise ValueError("need one entry per residue class")

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.entries))

    def maximum(self) -> int:
        return max(self.entries)


@dataclass(frozen=True)
class QuotientData:
    """Per-index residual data: the gcd of all other generators, the minimal
    generators of the scaled-down semigroup they span, and the inverse of the
    chosen generator modulo that gcd (0 when the gcd is 1)."""

    index: int
    complement_gcd: int
    quotient_generators: tuple[int, ...]
    inverse: int


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    generators: tuple[int, ...]
    removed: tuple[int, ...] = field(default=(), compare=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup{self.generators}"

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def gen_sum(self) -> int:
        return sum(self.generators)


def _canonicalize(raw) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(minimal generators, removed inputs); validates positivity and gcd."""
    gens = [int(g) for g in raw]
    if not gens:
        raise InvalidGenerators("generator list is empty")
    if any(g < 1 for g in gens):
        raise InvalidGenerators(f"generators must be positive: {gens}")
    g = 0
    for a in gens:
        g = math.gcd(g, a)
    if g != 1:
        raise NonCoprimeGenerators(f"gcd={g}")
    uniq = sorted(set(gens))
    if uniq[0] == 1:
        raise InvalidGenerators("need at least 2 minimal generators (input spans all of Z>=0)")
    if len(uniq) == 1:
        raise NonCoprimeGenerators(f"gcd={uniq[0]}")
    if uniq[-1] > INT64_MAX:
        # the period is at least the generator sum, so this can never fit
        raise PeriodOverflow(f"generator {uniq[-1]} exceeds the 64-bit contract")
    if len(uniq) == 2:
        # two distinct gcd-1 generators are always minimal; no scan needed
        dup = sorted(set(g for g in gens if gens.count(g) > 1))
        return tuple(uniq), tuple(dup)
    # a generator is redundant iff subtracting some smaller generator lands
    # back in the span; one least-member table over the full span decides this
    w = apery_table(tuple(uniq), uniq[0])
    kept, dropped = [], []
    for gcur in uniq:
        redundant = False
        for a in uniq:
            if a >= gcur:
                break
            r = gcur - a
            if r >= w[r % uniq[0]]:
                redundant = True
                break
        (dropped if redundant else kept).append(gcur)
    dup = sorted(set(g for g in gens if gens.count(g) > 1))
    dropped = sorted(set(dropped) | set(dup))
    if len(kept) < 2:
        raise InvalidGenerators("need at least 2 minimal generators (input spans all of Z>=0)")
    return tuple(kept), tuple(dropped)


def make_semigroup(raw_generators) -> NumericalSemigroup:
    """Normalize a generating set to canonical form.

    Duplicates and non-minimal generators are silently removed and reported
    on the .removed field. gcd > 1 is a hard error. Semigroups whose
    lcm-based period would not fit in 64 signed bits are rejected.
    """
    gens, removed = _canonicalize(raw_generators)
    s = NumericalSemigroup(gens, removed)
    if _period_of(s) > INT64_MAX:
        raise PeriodOverflow(f"period of {gens} exceeds the 64-bit contract")
    return s


def _period_of(s: NumericalSemigroup) -> int:
    g1 = 0
    for a in s.generators[1:]:
        g1 = math.gcd(g1, a)
    return math.lcm(s.generators[0], g1 * s.generators[1], s.gen_sum)


def apery_set(s: NumericalSemigroup, m: int) -> AperyTable:
    """Exact Apery table of s with respect to a nonzero member m."""
    if m <= 0 or not contains(s, m):
        raise NotAMember(f"{m} is not a nonzero element of {s}")
    cached = s._cache.get(("apery", m))
    if cached is None:
        cached = AperyTable(m, tuple(apery_table(s.generators, m)))
        s._cache[("apery", m)] = cached
    return cached


def _least_table(s: NumericalSemigroup) -> list[int]:
    t = s._cache.get("least")
    if t is None:
        t = apery_table(s.generators, s.multiplicity)
        s._cache["least"] = t
    return t


def contains(s: NumericalSemigroup, x: int) -> bool:
    """x has at least one factorization. x must be nonnegative."""
    if x < 0:
        raise ValueError("membership is defined on nonnegative integers")
    w = _least_table(s)
    return x >= w[x % s.multiplicity]


def frobenius(s: NumericalSemigroup) -> int:
    """Largest integer outside s (-1 would mean s is all of Z>=0, which the
    k >= 2 invariant excludes, but the formula degrades gracefully)."""
    w = _least_table(s)
    return max(w) - s.multiplicity


def quotient_data(s: NumericalSemigroup, i: int) -> QuotientData:
    """Residual data for the 1-based generator index i.

    complement_gcd is the gcd of the other generators; quotient_generators
    minimally generate their scaled-down span (possibly (1,) when k = 2);
    inverse solves a_i * inverse = 1 mod complement_gcd, 0 for gcd 1.
    """
    k = s.embedding_dim
    if not 1 <= i <= k:
        raise ValueError(f"index must be in 1..{k}")
    key = ("quotient", i)
    cached = s._cache.get(key)
    if cached is not None:
        return cached
    a_i = s.generators[i - 1]
    others = [a for j, a in enumerate(s.generators, start=1) if j != i]
    g = 0
    for a in others:
        g = math.gcd(g, a)
    scaled = sorted(a // g for a in others)
    if scaled[0] == 1:
        qgens = (1,)
    elif len(scaled) == 1:
        qgens = (scaled[0],)
    else:
        qgens, _ = _canonicalize(scaled)
    inv = modinv(a_i % g, g) if g > 1 else 0
    out = QuotientData(i, g, qgens, inv)
    s._cache[key] = out
    return out


def quotient_cone(s: NumericalSemigroup, i: int) -> ConeTable:
    """Membership oracle for the unscaled span of the generators other than
    the i-th (1-based); used by the max-norm structure checks."""
    key = ("qcone", i)
    cached = s._cache.get(key)
    if cached is None:
        others = [a for j, a in enumerate(s.generators, start=1) if j != i]
        cached = ConeTable.build(others)
        s._cache[key] = cached
    return cached


def span_frobenius(gens: tuple[int, ...]) -> int:
    """Frobenius number of the span of a gcd-1 tuple; (1,) gives -1."""
    return ConeTable.build(gens).frobenius()
