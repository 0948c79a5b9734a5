"""Exact max-norm length structure and the finite delta-set certificate.

The engine never materializes factorization sets. For each generator index i
it tabulates, over all y up to a horizon,

    t_i[y] = least possible maximum exponent among representations of y
             by the generators other than a_i (INF if unrepresentable),

because l is a dominant max-norm length of x at i (some factorization has
its maximum exponent l, attained at i) iff t_i[x - l * a_i] <= l. The full
max-norm length set of x is the union over i, and per-element delta sets
follow by differencing. For two residual generators t_i has a closed form:
representations form one residue class of exponents, the max is V-shaped
along it, so only the two lattice points nearest the balance point matter.
For more generators a level search fills t_i: the set reachable with all
exponents <= l+1 is the union of subset-sum shifts of the level-l set.

The semigroup-level delta set is the union of per-element delta sets up to
start + W * period, where start either comes from the explicit shift-identity
validity bounds (theorem-backed) or from the first observed window of exact
periodicity (empirical). Either way the window is re-verified by direct
computation and recorded in the certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .arith import INF, INT64_MAX, ceil_div, modinv
from .budget import DEFAULT_INF_BUDGET, Budget
from .errors import BudgetExceeded, NotAMember, PeriodOverflow, ThresholdNotMet, VerificationError
from .factorization import PINF, DeltaSet, LengthSet
from .semigroup import (
    NumericalSemigroup,
    contains,
    frobenius,
    quotient_cone,
    quotient_data,
    span_frobenius,
)


@dataclass(frozen=True)
class IndexRecord:
    """Residual constants for one generator: gcd of the others, their
    scaled-down minimal generators, the inverse of a_i modulo that gcd, and
    the fill margin: how far below x / a_i the dominant lengths are
    guaranteed to fill their residue class."""

    index: int
    complement_gcd: int
    quotient_generators: tuple[int, ...]
    inverse: int
    margin: int


@dataclass(frozen=True)
class StructureConstants:
    gen_sum: int
    period: int
    records: tuple[IndexRecord, ...]


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Evidence that per-element delta sets repeat with the stated period
    from `start` on: verified by direct computation for every x in
    [start, start + window_periods * period)."""

    start: int
    period: int
    window_periods: int
    mode: str  # "theorem-backed" | "empirical"
    union_horizon: int


def structure_constants(s: NumericalSemigroup) -> StructureConstants:
    cached = s._cache.get("structure")
    if cached is not None:
        return cached
    gens = s.generators
    records = []
    for i in range(1, len(gens) + 1):
        q = quotient_data(s, i)
        f = span_frobenius(q.quotient_generators)
        margin = ceil_div(q.complement_gcd * (f + 1), gens[i - 1])
        records.append(IndexRecord(i, q.complement_gcd, q.quotient_generators, q.inverse, margin))
    g1 = records[0].complement_gcd
    period = math.lcm(gens[0], g1 * gens[1], s.gen_sum)
    if period > INT64_MAX:
        raise PeriodOverflow(f"period {period} exceeds the 64-bit contract")
    out = StructureConstants(s.gen_sum, period, tuple(records))
    s._cache["structure"] = out
    return out


# ---------------------------------------------------------------------------
# min-max exponent tables


def _minmax_single(a: int, horizon: int) -> np.ndarray:
    t = np.full(horizon + 1, INF, dtype=np.int64)
    t[::a] = np.arange(horizon // a + 1)
    return t


def _minmax_pair(b: int, c: int, horizon: int) -> np.ndarray:
    """Closed form for two residual generators b != c."""
    g = math.gcd(b, c)
    bp, cp = b // g, c // g
    t = np.full(horizon + 1, INF, dtype=np.int64)
    y = np.arange(0, horizon + 1, g, dtype=np.int64)
    yp = y // g
    inv = modinv(bp % cp, cp)
    r = (yp % cp) * inv % cp  # exponent of b is r mod cp
    bmax = yp // bp
    feasible = r <= bmax
    kmax = np.where(feasible, (bmax - r) // cp, 0)
    k1 = (yp // (bp + cp) - r) // cp  # lattice point at/below the balance
    best = np.full(len(yp), INF, dtype=np.int64)
    for k in (np.clip(k1, 0, kmax), np.clip(k1 + 1, 0, kmax)):
        beta = r + cp * k
        gamma = (yp - beta * bp) // cp
        np.minimum(best, np.maximum(beta, gamma), out=best)
    t[y[feasible]] = best[feasible]
    return t


def _minmax_bfs(gens: tuple[int, ...], horizon: int, cap: int) -> np.ndarray:
    """Level search for >= 3 residual generators: going from exponent bound
    l to l + 1 adds at most one copy of each generator, i.e. a subset-sum
    shift. Values above `cap` are never consulted and stay INF."""
    sums = sorted(
        {sum(t) for r in range(1, len(gens) + 1) for t in combinations(gens, r)}
    )
    sums = [v for v in sums if v <= horizon]
    reach = np.zeros(horizon + 1, dtype=bool)
    reach[0] = True
    t = np.full(horizon + 1, INF, dtype=np.int64)
    t[0] = 0
    for level in range(1, cap + 1):
        new = reach.copy()
        for v in sums:
            np.logical_or(new[v:], reach[:-v], out=new[v:])
        newly = new & ~reach
        if not newly.any():
            break
        t[newly] = level
        reach = new
    return t


def _minmax_table(gens: tuple[int, ...], horizon: int, cap: int) -> np.ndarray:
    if len(gens) == 1:
        return _minmax_single(gens[0], horizon)
    if len(gens) == 2:
        return _minmax_pair(gens[0], gens[1], horizon)
    return _minmax_bfs(gens, horizon, cap)


# int64 tables per generator; past this the tables alone reach GB scale
MAX_ENGINE_HORIZON = 20_000_000


class _Engine:
    """Per-semigroup max-norm length oracle valid for all x <= horizon."""

    def __init__(self, s: NumericalSemigroup, horizon: int):
        if horizon > MAX_ENGINE_HORIZON:
            raise BudgetExceeded(f"length tables to {horizon} exceed the engine budget")
        self.s = s
        self.horizon = horizon
        gens = s.generators
        self.tables = []
        for i in range(len(gens)):
            others = gens[:i] + gens[i + 1 :]
            self.tables.append(_minmax_table(others, horizon, horizon // gens[i]))
        self._asc = np.arange(horizon // gens[0] + 1, dtype=np.int64)

    def _dominant_mask(self, x: int, i: int) -> np.ndarray:
        """Boolean over l = 0..x//a_i: l is a dominant length of x at i.
        Entry j corresponds to l = j."""
        a = self.s.generators[i - 1]
        n = x // a
        sub = self.tables[i - 1][x % a : x + 1 : a]  # y ascending <-> l descending
        cond = sub <= self._asc[n::-1]
        return cond[::-1]

    def dominant_values(self, x: int, i: int) -> np.ndarray:
        return np.flatnonzero(self._dominant_mask(x, i))

    def length_mask(self, x: int) -> np.ndarray:
        # fresh buffer per call: engines are shared by concurrent readers
        buf = np.zeros(x // self.s.generators[0] + 1, dtype=bool)
        for i in range(1, self.s.embedding_dim + 1):
            m = self._dominant_mask(x, i)
            np.logical_or(buf[: len(m)], m, out=buf[: len(m)])
        return buf

    def lengths(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.length_mask(x))

    def delta_tuple(self, x: int) -> tuple[int, ...] | None:
        ach = self.lengths(x)
        if ach.size == 0:
            return None
        return tuple(np.unique(np.diff(ach)).tolist())


def _get_engine(s: NumericalSemigroup, horizon: int) -> _Engine:
    eng = s._cache.get("inf-engine")
    if eng is None or eng.horizon < horizon:
        eng = _Engine(s, horizon)
        s._cache["inf-engine"] = eng
    return eng


# ---------------------------------------------------------------------------
# public per-element queries


def infinity_length_set(s: NumericalSemigroup, x: int) -> LengthSet:
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    eng = _get_engine(s, x)
    return LengthSet(PINF, tuple(eng.lengths(x).tolist()))


def dominant_length_set(s: NumericalSemigroup, x: int, i: int) -> LengthSet:
    """Max-norm lengths over factorizations whose max is attained at index i
    (1-based); may be empty."""
    if not 1 <= i <= s.embedding_dim:
        raise ValueError(f"index must be in 1..{s.embedding_dim}")
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    eng = _get_engine(s, x)
    return LengthSet(PINF, tuple(eng.dominant_values(x, i).tolist()))


def delta_inf_of_element(s: NumericalSemigroup, x: int) -> DeltaSet:
    ls = infinity_length_set(s, x)
    return DeltaSet.from_iterable(b - a for a, b in zip(ls.values, ls.values[1:]))


# ---------------------------------------------------------------------------
# shift-identity validity bounds


def shift_threshold_index(s: NumericalSemigroup, i: int, bound: int) -> int:
    """Least x from which the index-i step identity with window `bound` is
    guaranteed. The inner constant is maximized over the other generators
    (the loosest instantiation that the argument supports)."""
    a_i = s.generators[i - 1]
    c = max(ceil_div(bound + 1, a) for j, a in enumerate(s.generators, 1) if j != i)
    return a_i * a_i * c + a_i * bound + 1


def shift_threshold_sum(s: NumericalSemigroup, bound: int) -> int:
    """Least x from which the all-generators step identity with window
    `bound` is guaranteed; maximized over the coordinate that could vanish,
    i.e. attained at the smallest generator."""
    a1 = s.generators[0]
    total = s.gen_sum
    return total * (total - a1) * bound // a1 + 1


def _theorem_start(s: NumericalSemigroup, consts: StructureConstants) -> int | None:
    """Explicit start for the periodicity window, k >= 3 only: the step
    identities behind the period proof plus the two gap-region width
    conditions. None for k = 2 (the region analysis needs a third
    generator), where the engine falls back to an empirical start."""
    if s.embedding_dim < 3:
        return None
    a = s.generators
    g1 = consts.records[0].complement_gcd
    g2 = consts.records[1].complement_gcd
    b1 = consts.records[0].margin
    b2 = consts.records[1].margin
    cands = [
        shift_threshold_index(s, 1, b1 + g1),
        shift_threshold_index(s, 2, b2 + g1),
        shift_threshold_sum(s, a[-1] + g1),
        a[0] * a[1] * (3 * g1 + b1) // (a[1] - a[0]) + 1,
        a[1] * a[2] * (2 * g1 * g2 + b2) // (a[2] - a[1]) + 1,
    ]
    return max(cands)


def _delta_run(eng: _Engine, upto: int) -> list[tuple[int, ...] | None]:
    return [eng.delta_tuple(x) for x in range(upto + 1)]


def delta_inf_semigroup(
    s: NumericalSemigroup,
    window_periods: int = 2,
    budget: Budget | None = None,
) -> tuple[DeltaSet, PeriodicityCertificate]:
    """Exact max-norm delta set of the semigroup with its certificate.

    Returns the union of per-element delta sets for x <= start + W * period.
    With a theorem-backed start nothing new appears later; the empirical
    mode (k = 2, or explicit bounds beyond budget) reports the verified
    window as evidence.
    """
    budget = budget or DEFAULT_INF_BUDGET
    w = window_periods
    if w < 1:
        raise ValueError("need at least one window period")
    consts = structure_constants(s)
    p = consts.period
    start = _theorem_start(s, consts)
    mode = "theorem-backed"
    if start is None or start + (w + 1) * p > budget.max_element:
        return _empirical_delta_inf(s, p, w, budget)
    horizon = start + (w + 1) * p
    eng = _get_engine(s, horizon)
    deltas = _delta_run(eng, horizon)
    for x in range(start, start + w * p):
        if deltas[x] != deltas[x + p]:
            raise VerificationError(
                f"periodicity falsified at x={x} (period {p}) on {s}; "
                "this contradicts the structure analysis"
            )
    union_to = start + w * p
    union: set[int] = set()
    for d in deltas[: union_to + 1]:
        if d:
            union.update(d)
    cert = PeriodicityCertificate(start, p, w, mode, union_to)
    return DeltaSet.from_iterable(union), cert


def _empirical_delta_inf(
    s: NumericalSemigroup, p: int, w: int, budget: Budget
) -> tuple[DeltaSet, PeriodicityCertificate]:
    floor_start = frobenius(s) + 1  # all x beyond are members
    horizon = floor_start + (w + 2) * p
    while True:
        if horizon > budget.max_element:
            raise BudgetExceeded(
                f"no verified periodicity window within element budget {budget.max_element}"
            )
        eng = _get_engine(s, horizon)
        deltas = _delta_run(eng, horizon)
        limit = horizon - (w + 1) * p
        run = 0
        found = None
        # smallest x0 >= floor_start whose whole window checks out
        for x in range(limit + w * p - 1, floor_start - 1, -1):
            run = run + 1 if deltas[x] == deltas[x + p] else 0
            if run >= w * p and x <= limit:
                found = x
        if found is not None:
            union_to = found + w * p
            union: set[int] = set()
            for d in deltas[: union_to + 1]:
                if d:
                    union.update(d)
            cert = PeriodicityCertificate(found, p, w, "empirical", union_to)
            return DeltaSet.from_iterable(union), cert
        horizon = min(budget.max_element, horizon * 2) if horizon < budget.max_element else budget.max_element + 1


# ---------------------------------------------------------------------------
# structural checks


def verify_linf_bounds(s: NumericalSemigroup, x: int) -> bool:
    """Sandwich bounds: the least max-norm length sits within a_k of x / A,
    and each nonempty dominant set tops out within k * a_k of x / a_i."""
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    a = s.generators
    k = len(a)
    total = s.gen_sum
    eng = _get_engine(s, x)
    ach = eng.lengths(x)
    lmin = int(ach[0])
    if lmin * total < x or (lmin - a[-1]) * total > x:
        return False
    for i in range(1, k + 1):
        dom = eng.dominant_values(x, i)
        if dom.size == 0:
            continue
        top = int(dom[-1])
        if top * a[i - 1] > x or x > a[i - 1] * (top + k * a[-1]):
            return False
    return True


def verify_aap(s: NumericalSemigroup, x: int, i: int) -> bool:
    """Dominant lengths at i lie in one residue class mod the complement
    gcd, and fill that class on [x/A + a_k, x/a_i - margin]."""
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    consts = structure_constants(s)
    rec = consts.records[i - 1]
    a_i = s.generators[i - 1]
    g = rec.complement_gcd
    eng = _get_engine(s, x)
    dom = set(eng.dominant_values(x, i).tolist())
    res = (rec.inverse * x) % g if g > 1 else 0
    if g > 1 and any(l % g != res for l in dom):
        return False
    lo = ceil_div(x, consts.gen_sum) + s.generators[-1]
    hi = x // a_i - rec.margin
    if g > 1:
        lo += (res - lo) % g
    for l in range(lo, hi + 1, g):
        if l not in dom:
            return False
    return True


def verify_shift(s: NumericalSemigroup, x: int, i: int, bound: int, sum_bound: int) -> bool:
    """Both step identities at x: adding a_i shifts the top `bound` window
    of the dominant set by one, and adding every generator shifts the bottom
    `sum_bound` window of the full length set by one. Raises below the
    validity thresholds instead of reporting a falsification."""
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    t_index = shift_threshold_index(s, i, bound)
    t_sum = shift_threshold_sum(s, sum_bound)
    if x < max(t_index, t_sum):
        raise ThresholdNotMet(f"x={x} below validity bounds {t_index}/{t_sum}")
    a_i = s.generators[i - 1]
    total = s.gen_sum
    eng = _get_engine(s, x + total)

    cut = ceil_div(x, a_i) - bound
    before = {l for l in eng.dominant_values(x, i).tolist() if l >= cut}
    after = {l for l in eng.dominant_values(x + a_i, i).tolist() if l >= cut + 1}
    if after != {l + 1 for l in before}:
        return False

    cap = x // total + sum_bound
    low_before = {l for l in eng.lengths(x).tolist() if l <= cap}
    low_after = {l for l in eng.lengths(x + total).tolist() if l <= cap + 1}
    return low_after == {l + 1 for l in low_before}


def verify_interval_decomposition(s: NumericalSemigroup, x: int) -> bool:
    """Every gap size in [1, min(g_1, g_2)] and g_1 itself occurs in the
    delta set of x, and any other gap touches one of the three boundary
    regions (near x/A, near x/a_2, near x/a_1). Caller supplies x large
    enough that the regions separate."""
    if s.embedding_dim < 3:
        raise ValueError("interval decomposition references the third generator")
    if x < 0 or not contains(s, x):
        raise NotAMember(f"{x} is not in {s}")
    consts = structure_constants(s)
    a = s.generators
    total = consts.gen_sum
    g1 = consts.records[0].complement_gcd
    g2 = consts.records[1].complement_gcd
    b1 = consts.records[0].margin
    b2 = consts.records[1].margin
    eng = _get_engine(s, x)
    ach = eng.lengths(x).tolist()
    gaps = {b - a2 for a2, b in zip(ach, ach[1:])}
    base = set(range(1, min(g1, g2) + 1)) | {g1}
    if not base <= gaps:
        return False

    def in_regions(l: int) -> bool:
        if l * total >= x and (l - a[-1]) * total <= x:
            return True
        if a[1] * (l + b2) >= x and a[1] * l <= x:
            return True
        return a[0] * (l + b1) >= x and a[0] * l <= x

    for lo, hi in zip(ach, ach[1:]):
        if hi - lo in base:
            continue
        if not (in_regions(lo) or in_regions(hi)):
            return False
    return True


def residue_delta_subset(
    s: NumericalSemigroup,
    j: int,
    bound: int,
    delta_inf: DeltaSet | None = None,
    budget: Budget | None = None,
) -> bool:
    """Classical delta of the residual span restricted to one residue class
    mod a_1, rescaled by a_1 (consecutive class members differ by multiples
    of a_1, each multiple witnessing a top-window max-norm gap), contained
    in the semigroup's max-norm delta set."""
    a1 = s.generators[0]
    if not 0 <= j < a1:
        raise ValueError(f"residue must be in 0..{a1 - 1}")
    cone = quotient_cone(s, 1)
    members = [y for y in range(j, bound + 1, a1) if cone.contains(y)]
    if len(members) <= 1:
        return True
    if delta_inf is None:
        delta_inf = delta_inf_semigroup(s, budget=budget)[0]
    diffs = {(b - a) // a1 for a, b in zip(members, members[1:])}
    return diffs <= delta_inf.as_set()
