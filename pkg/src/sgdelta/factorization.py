"""Factorization sets and p-length invariants (p in {0, 1, inf}).

A factorization of x is an exponent tuple z with sum(z_i * a_i) = x, aligned
to the generator order. Enumeration recurses from the largest generator down
(tightest branch bound first) and prunes every branch whose remainder cannot
be finished by the remaining prefix of generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import CapExceeded, NotAMember
from .semigroup import NumericalSemigroup, contains

P0 = 0
P1 = 1
PINF = math.inf

DEFAULT_FACTORIZATION_CAP = 10_000_000

Factorization = tuple  # exponent tuple; validated by make_factorization


def make_factorization(s: NumericalSemigroup, exponents, x: int | None = None) -> tuple[int, ...]:
    """Checked constructor: exponents must be nonnegative, aligned to the
    generators, and (when x is given) actually factor x."""
    z = tuple(int(c) for c in exponents)
    if len(z) != s.embedding_dim or any(c < 0 for c in z):
        raise ValueError(f"bad exponent vector {z} for {s}")
    value = sum(c * a for c, a in zip(z, s.generators))
    if x is not None and value != x:
        raise ValueError(f"{z} factors {value}, not {x}")
    return z


def factored_value(s: NumericalSemigroup, z) -> int:
    return sum(c * a for c, a in zip(z, s.generators))


def support(z) -> tuple[int, ...]:
    """1-based indices of the nonzero exponents."""
    return tuple(i for i, c in enumerate(z, start=1) if c)


def p_length(z, p) -> int:
    """0-length = support size, 1-length = exponent sum, inf-length = max."""
    if p == P0:
        return sum(1 for c in z if c)
    if p == P1:
        return sum(z)
    if p == PINF:
        return max(z, default=0)
    raise ValueError(f"p must be 0, 1 or inf, got {p!r}")


def _prefix_reach(gens: tuple[int, ...], x: int) -> list[bytes]:
    """reach[j][y] = 1 iff y is a nonnegative combination of gens[: j + 1].

    Built by or-ing doubled shifts per generator (any multiple of a is a sum
    of distinct power-of-two multiples), then frozen to bytes for fast
    scalar indexing in the recursion.
    """
    cur = np.zeros(x + 1, dtype=bool)
    cur[0] = True
    out = []
    for a in gens:
        step = a
        while step <= x:
            np.logical_or(cur[step:], cur[:-step], out=cur[step:])
            step *= 2
        out.append(cur.tobytes())
    return out


def iter_factorizations(s: NumericalSemigroup, x: int) -> Iterator[tuple[int, ...]]:
    """Yield every factorization of x exactly once (empty iff x not in s)."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    gens = s.generators
    k = len(gens)
    reach = _prefix_reach(gens, x)
    if not reach[-1][x]:
        return
    z = [0] * k

    def rec(j: int, rem: int) -> Iterator[tuple[int, ...]]:
        if j == 0:
            z[0] = rem // gens[0]
            yield tuple(z)
            return
        a = gens[j]
        below = reach[j - 1]
        for c in range(rem // a, -1, -1):
            if below[rem - c * a]:
                z[j] = c
                yield from rec(j - 1, rem - c * a)

    yield from rec(k - 1, x)


def enumerate_factorizations(
    s: NumericalSemigroup, x: int, cap: int | None = DEFAULT_FACTORIZATION_CAP
) -> set[tuple[int, ...]]:
    """The complete factorization set of x as exponent tuples.

    Raises CapExceeded past `cap` tuples, the signal to switch to the
    streaming (length-only) queries instead of materializing.
    """
    out = set()
    for z in iter_factorizations(s, x):
        out.add(z)
        if cap is not None and len(out) > cap:
            raise CapExceeded(f"more than {cap} factorizations of {x}")
    return out


@dataclass(frozen=True)
class LengthSet:
    """Distinct p-lengths over all factorizations of one element, sorted."""

    p: object
    values: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("length values must be strictly increasing")

    @property
    def min_value(self) -> int:
        return self.values[0]

    @property
    def max_value(self) -> int:
        return self.values[-1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class DeltaSet:
    """Successive differences of a sorted length set, deduplicated."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v < 1 for v in self.values):
            raise ValueError("delta values are positive")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("delta values must be strictly increasing")

    @classmethod
    def from_iterable(cls, vals) -> "DeltaSet":
        return cls(tuple(sorted(set(int(v) for v in vals))))

    def as_set(self) -> set[int]:
        return set(self.values)

    def __contains__(self, v) -> bool:
        return v in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def delta_of_sorted_set(values) -> DeltaSet:
    """Deltas of an arbitrary strictly increasing integer sequence."""
    vals = list(values)
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise ValueError("input must be strictly increasing")
    return DeltaSet.from_iterable(b - a for a, b in zip(vals, vals[1:]))


def length_set(s: NumericalSemigroup, x: int, p) -> LengthSet:
    """Sorted distinct p-lengths of x; streaming fold, never materializes."""
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    seen: set[int] = set()
    for z in iter_factorizations(s, x):
        seen.add(p_length(z, p))
    return LengthSet(p, tuple(sorted(seen)))


def delta_set_of_element(s: NumericalSemigroup, x: int, p) -> DeltaSet:
    ls = length_set(s, x, p)
    return delta_of_sorted_set(ls.values)


def dominant_factorizations(
    s: NumericalSemigroup, x: int, i: int, cap: int | None = DEFAULT_FACTORIZATION_CAP
) -> tuple[set[tuple[int, ...]], LengthSet]:
    """Factorizations of x whose i-th exponent (1-based) attains the max,
    together with their max-norm length set.

    Ties count for every index attaining the max, so the union over i of the
    dominant sets is the whole factorization set.
    """
    k = s.embedding_dim
    if not 1 <= i <= k:
        raise ValueError(f"index must be in 1..{k}")
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    picked: set[tuple[int, ...]] = set()
    lengths: set[int] = set()
    for z in iter_factorizations(s, x):
        m = max(z)
        if z[i - 1] == m:
            picked.add(z)
            lengths.add(m)
            if cap is not None and len(picked) > cap:
                raise CapExceeded(f"more than {cap} dominant factorizations of {x}")
    return picked, LengthSet(PINF, tuple(sorted(lengths)))
