import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilcert import (
    QuadForm,
    ResourceLimitError,
    class_number,
    is_reduced,
    legendre_symbol,
    properly_representable,
    reduced_forms,
    represent_x2_ny2,
)
from oracles import full_scan_min_y, naive_class_number, primes_upto


class TestIsReduced:
    def test_examples(self):
        assert is_reduced(QuadForm(1, 0, 23))
        assert is_reduced(QuadForm(3, -2, 4))
        # reduced but imprimitive: counted nowhere
        f = QuadForm(2, 2, 6)
        assert is_reduced(f) and not f.is_primitive

    def test_boundary_sign_rules(self):
        assert not is_reduced(QuadForm(3, -3, 5))  # |b| = a needs b >= 0
        assert is_reduced(QuadForm(3, 3, 5))
        assert not is_reduced(QuadForm(2, -1, 2))  # a = c needs b >= 0
        assert is_reduced(QuadForm(2, 1, 2))
        assert not is_reduced(QuadForm(5, 1, 3))  # a > c

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError):
            is_reduced(QuadForm(1, 5, 1))
        with pytest.raises(ValueError):
            is_reduced(QuadForm(-1, 0, -3))


class TestClassNumber:
    def test_known_values(self):
        assert class_number(-92) == 3
        assert class_number(-44) == 3
        assert class_number(-4) == 1
        assert class_number(-3) == 1

    def test_disc_44_forms(self):
        got = sorted((f.a, f.b, f.c) for f in reduced_forms(-44))
        assert got == [(1, 0, 11), (3, -2, 4), (3, 2, 4)]

    def test_forms_are_what_they_claim(self):
        for d in range(-400, 0):
            if d % 4 not in (0, 1):
                continue
            for f in reduced_forms(d):
                assert f.discriminant == d
                assert f.is_positive_definite
                assert f.is_primitive
                assert is_reduced(f)

    def test_rejects_bad_discriminant(self):
        for d in (0, 4, -6, -1, -2):
            with pytest.raises(ValueError):
                class_number(d)
        assert class_number(-7) == 1  # 1 mod 4 is fine

    def test_matches_naive_double_loop(self):
        for n in range(1, 201):
            assert class_number(-4 * n) == naive_class_number(-4 * n), n

    def test_count_independent_of_order(self):
        # same multiset of forms whichever way the enumeration runs
        for d in (-44, -92, -388, -523):
            forms = reduced_forms(d)
            assert len(set(forms)) == len(forms) == class_number(d)


class TestRepresent:
    def test_known_witnesses(self):
        r = represent_x2_ny2(47, 11)
        assert (r.x, r.y) == (6, 1)
        r = represent_x2_ny2(101, 23)
        assert (r.x, r.y) == (3, 2)
        assert represent_x2_ny2(61, 23) is None

    def test_smallest_y_is_first_hit(self):
        # 853 - 23*y^2 is square first at y = 6
        r = represent_x2_ny2(853, 23)
        assert (r.x, r.y) == (5, 6)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            represent_x2_ny2(47, 0)

    def test_matches_full_scan(self):
        primes = primes_upto(10**4)
        for n in (11, 23, 47, 59):
            for p in primes:
                got = represent_x2_ny2(p, n)
                want = full_scan_min_y(p, n)
                if want is None:
                    assert got is None
                else:
                    assert (got.x, got.y) == want

    def test_witness_implies_residue(self):
        for n in (11, 23):
            for p in primes_upto(2000):
                r = represent_x2_ny2(p, n)
                if r is not None and p % (4 * n) != 0 and p not in (2, n):
                    assert r.x**2 + n * r.y**2 == p
                    assert legendre_symbol(-n, p) == 1


class TestProperlyRepresentable:
    def test_examples(self):
        assert properly_representable(47, -44)
        assert not properly_representable(61, -92)
        assert represent_x2_ny2(61, 23) is None  # consistent with the above

    def test_m_1_always(self):
        for d in (-3, -4, -44, -92, -163):
            assert properly_representable(1, d)

    def test_principal_form_direction(self):
        # primes represented by x^2 + n*y^2 are properly represented by
        # some form of discriminant -4n
        for n in (11, 23):
            for p in primes_upto(1500):
                if p % (4 * n) == 0:
                    continue
                if represent_x2_ny2(p, n) is not None:
                    assert properly_representable(p, -4 * n)

    def test_validation(self):
        with pytest.raises(ValueError):
            properly_representable(0, -44)
        with pytest.raises(ValueError):
            properly_representable(5, -45)
        with pytest.raises(ResourceLimitError):
            properly_representable(10**9, -44)

    @settings(max_examples=60)
    @given(
        st.integers(min_value=1, max_value=300),
        st.integers(min_value=1, max_value=150),
    )
    def test_scan_symmetric_half_suffices(self, m, k):
        # full-residue scan agrees with the half scan the implementation uses
        d = -4 * k
        full = any((t * t - d) % (4 * m) == 0 for t in range(4 * m))
        assert properly_representable(m, d) == full
