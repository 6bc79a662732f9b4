import pytest
from hypothesis import given, strategies as st

from nicom import closed_forms as cf
from nicom.fib_lucas import fib
from nicom.moment_sums import MomentTable
from nicom.recurrence_prover import (
    EVEN_PHI_POWERS,
    QUARTIC_PHI_POWERS,
    SIGNED_PHI_POWERS,
    TWICE_ODD_PHI_POWERS,
    GoldenNumber,
    IntPolynomial,
    RootSetSpec,
    annihilates,
    certify_identity,
    char_poly,
    golden_power,
)


class TestGoldenNumber:
    def test_defining_relation(self):
        phi = GoldenNumber(0, 1)
        assert phi * phi == GoldenNumber(1, 1)  # phi^2 = 1 + phi

    def test_power_examples(self):
        assert golden_power(2) == GoldenNumber(1, 1)
        assert golden_power(0) == GoldenNumber(1, 0)
        assert golden_power(-2) == GoldenNumber(2, -1)

    def test_power_of_negative_exponent_inverts(self):
        for l in range(-8, 9):
            assert golden_power(l) * golden_power(-l) == GoldenNumber(1, 0)

    def test_powers_carry_fibonacci_coefficients(self):
        # phi^n = F_{n-1} + F_n * phi
        for n in range(1, 30):
            assert golden_power(n) == GoldenNumber(fib(n - 1), fib(n))

    @given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50),
           st.integers(-50, 50))
    def test_multiplication_commutes(self, a, b, c, d):
        x, y = GoldenNumber(a, b), GoldenNumber(c, d)
        assert x * y == y * x


class TestRootSetSpec:
    def test_cardinalities(self):
        assert RootSetSpec(SIGNED_PHI_POWERS, 2).cardinality == 10
        assert RootSetSpec(EVEN_PHI_POWERS, 4).cardinality == 9
        assert RootSetSpec(QUARTIC_PHI_POWERS, 10).cardinality == 21
        assert RootSetSpec(TWICE_ODD_PHI_POWERS, 21).cardinality == 22

    def test_roots_match_cardinality(self):
        for spec in (
            RootSetSpec(SIGNED_PHI_POWERS, 3),
            RootSetSpec(EVEN_PHI_POWERS, 5),
            RootSetSpec(QUARTIC_PHI_POWERS, 4),
            RootSetSpec(TWICE_ODD_PHI_POWERS, 7),
        ):
            roots = spec.roots()
            assert len(roots) == spec.cardinality
            assert len(set(roots)) == len(roots)

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            RootSetSpec("cubic-phi-powers", 2)
        with pytest.raises(ValueError):
            RootSetSpec(SIGNED_PHI_POWERS, -1)
        with pytest.raises(ValueError):
            RootSetSpec(TWICE_ODD_PHI_POWERS, 4)  # bound must be odd


class TestCharPoly:
    def test_examples(self):
        assert char_poly(RootSetSpec(EVEN_PHI_POWERS, 1)).coeffs == (-1, 4, -4, 1)
        assert char_poly(RootSetSpec(EVEN_PHI_POWERS, 0)).coeffs == (-1, 1)
        assert char_poly(RootSetSpec(SIGNED_PHI_POWERS, 0)).coeffs == (-1, 0, 1)

    def test_degree_matches_cardinality(self):
        for shape, bound in [
            (SIGNED_PHI_POWERS, 2),
            (EVEN_PHI_POWERS, 4),
            (QUARTIC_PHI_POWERS, 10),
            (TWICE_ODD_PHI_POWERS, 21),
        ]:
            spec = RootSetSpec(shape, bound)
            assert char_poly(spec).degree == spec.cardinality

    def test_reciprocal_root_sets_give_palindromes(self):
        # roots come in reciprocal pairs with product 1, so the coefficient
        # list is palindromic up to the sign pattern; for even bounds of the
        # even-power family it is exactly palindromic
        for bound in range(5):
            coeffs = char_poly(RootSetSpec(EVEN_PHI_POWERS, bound)).coeffs
            assert coeffs == tuple(reversed(coeffs)) or coeffs == tuple(
                -c for c in reversed(coeffs)
            )


class TestAnnihilates:
    def test_fibonacci(self):
        p = IntPolynomial((-1, -1, 1))  # x^2 - x - 1
        assert annihilates(p, [fib(n) for n in range(1, 11)])

    def test_constant(self):
        p = IntPolynomial((-1, 1))  # x - 1
        assert annihilates(p, [5, 5, 5, 5])
        assert not annihilates(p, [1, 2])

    def test_short_input_rejected(self):
        with pytest.raises(ValueError):
            annihilates(IntPolynomial((-1, -1, 1)), [1, 1])

    def test_leading_zero_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, 1, 0))


class TestCertify:
    def table(self):
        return MomentTable()

    def test_first_moment_certifies(self):
        table = self.table()
        cert = certify_identity(
            "first-moment",
            lambda k: table.a(k, 1, 0),
            cf.lemma2_a,
            RootSetSpec(SIGNED_PHI_POWERS, 2),
        )
        assert cert.certified
        assert cert.degree == 10
        assert cert.agreed_terms == 10
        assert cert.window == 20

    def test_first_moment_closed_form_in_claimed_span(self):
        p = char_poly(RootSetSpec(SIGNED_PHI_POWERS, 2))
        assert annihilates(p, [cf.lemma2_a(k) for k in range(1, 41)])

    def test_wider_window_stays_certified(self):
        table = self.table()
        for window in (25, 40, 60):
            cert = certify_identity(
                "first-moment",
                lambda k: table.a(k, 1, 0),
                cf.lemma2_a,
                RootSetSpec(SIGNED_PHI_POWERS, 2),
                extra_window=window,
            )
            assert cert.certified

    def test_mutated_closed_form_is_refuted(self):
        table = self.table()
        cert = certify_identity(
            "first-moment-broken",
            lambda k: table.a(k, 1, 0),
            lambda k: cf.lemma2_a(k) + (1 if k == 4 else 0),
            RootSetSpec(SIGNED_PHI_POWERS, 2),
        )
        assert not cert.certified
        assert cert.verdict == "refuted at index 4"
        assert cert.agreed_terms == 3

    def test_mutated_coefficient_refuted_within_degree(self):
        # perturb the constant inside the third-moment closed form
        table = self.table()

        def broken(k):
            from nicom.fib_lucas import fib as F, lucas as L

            num = (F(k) - 1) * (F(k + 2) - 1) * (L(2 * k + 4) - 5 * L(k + 3) + 12)
            return num // 20

        cert = certify_identity(
            "third-moment-broken",
            lambda k: broken(2 * k),
            lambda k: cf.lemma4_a_prime3(2 * k),
            RootSetSpec(EVEN_PHI_POWERS, 4),
        )
        assert not cert.certified
        refuted_at = int(cert.verdict.rsplit(" ", 1)[1])
        assert refuted_at <= cert.degree

    def test_certificate_serialization(self):
        table = self.table()
        cert = certify_identity(
            "first-moment",
            lambda k: table.a(k, 1, 0),
            cf.lemma2_a,
            RootSetSpec(SIGNED_PHI_POWERS, 2),
        )
        d = cert.to_dict()
        assert d["claim"] == "first-moment"
        assert d["shape"] == SIGNED_PHI_POWERS
        assert d["bound"] == 2
        assert d["degree"] == 10
        assert d["verdict"] == "certified"
