import pytest

from sgdelta import (
    InvalidGenerators,
    NonCoprimeGenerators,
    NotAMember,
    PeriodOverflow,
    apery_set,
    contains,
    frobenius,
    make_semigroup,
    quotient_data,
)

from _oracles import member_brute


def test_make_semigroup_keeps_minimal_generators():
    s = make_semigroup([6, 9, 20])
    assert s.generators == (6, 9, 20)
    assert s.removed == ()
    assert s.embedding_dim == 3
    assert s.gen_sum == 35


def test_make_semigroup_reduces_and_reports():
    s = make_semigroup([2, 3, 4])
    assert s.generators == (2, 3)
    assert s.removed == (4,)


def test_make_semigroup_drops_duplicates():
    s = make_semigroup([3, 5, 5, 7, 12])
    assert s.generators == (3, 5, 7)
    assert set(s.removed) == {5, 12}


def test_make_semigroup_rejects_gcd():
    with pytest.raises(NonCoprimeGenerators):
        make_semigroup([4, 6])


def test_make_semigroup_rejects_bad_input():
    with pytest.raises(InvalidGenerators):
        make_semigroup([])
    with pytest.raises(InvalidGenerators):
        make_semigroup([0, 3])
    with pytest.raises(InvalidGenerators):
        make_semigroup([1, 5])


def test_make_semigroup_idempotent():
    for gens in [(2, 3, 4), (6, 9, 20), (5, 13, 16), (2, 7, 12, 13)]:
        s = make_semigroup(gens)
        again = make_semigroup(s.generators)
        assert again.generators == s.generators
        assert again.removed == ()


def test_semigroup_value_semantics():
    a = make_semigroup([3, 10, 11])
    b = make_semigroup([3, 10, 11, 13])  # 13 reduces away
    assert a == b and hash(a) == hash(b)
    assert b.removed == (13,)
    assert len({a, b}) == 1
    # caches are per instance and never leak across equal values
    frobenius(a)
    assert "least" in a._cache and "least" not in b._cache


def test_period_overflow_guard():
    big = (1 << 62) - 1
    with pytest.raises(PeriodOverflow):
        make_semigroup([big - 2, big])


def test_contains_small(med3):
    assert not contains(med3, 8)
    assert contains(med3, 21)
    assert contains(med3, 0)
    with pytest.raises(ValueError):
        contains(med3, -1)


def test_contains_matches_brute_force():
    for gens in [(3, 10, 11), (6, 9, 20), (4, 6, 9)]:
        s = make_semigroup(gens)
        hi = frobenius(s) + s.generators[0]
        for x in range(hi + 1):
            assert contains(s, x) == member_brute(gens, x), (gens, x)


def test_apery_examples():
    assert apery_set(make_semigroup([2, 3]), 2).entries == (0, 3)
    assert apery_set(make_semigroup([3, 10, 11]), 3).entries == (0, 10, 11)


def test_apery_first_entry_always_zero(mcnugget):
    assert apery_set(mcnugget, 6).entries[0] == 0
    assert apery_set(mcnugget, 20).entries[0] == 0


def test_apery_invariants(mcnugget):
    for m in (6, 9, 20):
        t = apery_set(mcnugget, m)
        assert len(t.entries) == m
        for r, w in enumerate(t.entries):
            assert w % m == r
            assert contains(mcnugget, w)
            assert w < m or not contains(mcnugget, w - m)


def test_apery_requires_member(mcnugget):
    with pytest.raises(NotAMember):
        apery_set(mcnugget, 7)
    with pytest.raises(NotAMember):
        apery_set(mcnugget, 0)


def test_frobenius_values():
    assert frobenius(make_semigroup([2, 3])) == 1
    assert frobenius(make_semigroup([3, 10, 11])) == 8
    assert frobenius(make_semigroup([6, 9, 20])) == 43
    # conductor sanity: the next element is always in
    s = make_semigroup([2, 3])
    assert contains(s, frobenius(s) + 1)


def test_quotient_data_examples(geo, med3):
    q1 = quotient_data(geo, 1)
    assert (q1.complement_gcd, q1.quotient_generators, q1.inverse) == (3, (2, 3), 1)
    q3 = quotient_data(geo, 3)
    assert (q3.complement_gcd, q3.quotient_generators, q3.inverse) == (2, (2, 3), 1)
    q2 = quotient_data(med3, 2)
    assert (q2.complement_gcd, q2.quotient_generators, q2.inverse) == (1, (3, 11), 0)


def test_quotient_data_k2():
    s = make_semigroup([2, 3])
    q1 = quotient_data(s, 1)
    assert (q1.complement_gcd, q1.quotient_generators) == (3, (1,))
    q2 = quotient_data(s, 2)
    assert (q2.complement_gcd, q2.quotient_generators) == (2, (1,))


def test_quotient_data_reconstructs_and_is_coprime():
    import math

    for gens in [(4, 6, 9), (6, 9, 20), (8, 12, 14, 17)]:
        s = make_semigroup(gens)
        for i in range(1, s.embedding_dim + 1):
            q = quotient_data(s, i)
            others = [a for j, a in enumerate(gens, 1) if j != i]
            assert math.gcd(*q.quotient_generators) if len(q.quotient_generators) > 1 else True
            g = 0
            for a in others:
                g = math.gcd(g, a)
            assert g == q.complement_gcd
            if q.complement_gcd > 1:
                assert q.inverse * gens[i - 1] % q.complement_gcd == 1
            else:
                assert q.inverse == 0
