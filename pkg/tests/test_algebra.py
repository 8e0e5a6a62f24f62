import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from twistspun.algebra import (
    ChordGen,
    DGA,
    DGAMorphism,
    NCPoly,
    check_d_squared,
    check_morphism,
    degree_violations,
    action_violations,
    eval_coefficients,
    extend_leibniz,
    identity_morphism,
    nc_multiply,
)
from twistspun.errors import (
    InvalidPointError,
    RingMismatchError,
    UndeclaredGeneratorError,
)


def mono(p, c=1, mu=0, lam=0, word=()):
    return NCPoly.monomial(p, c=c, mu=mu, lam=lam, word=word)


def unknot_dga(p=2):
    # one chord a of degree 1 and length 1, d(a) = 1 + mu
    a = ChordGen("a", 1, Fraction(1))
    da = mono(p) + mono(p, mu=1)
    return DGA(p, [a], {"a": da}, name="unknot")


class TestMultiply:
    def test_monomial_concatenation(self):
        p = 5
        lhs = mono(p, mu=1, word=("x",))
        rhs = mono(p, lam=1, word=("y",))
        assert nc_multiply(lhs, rhs) == mono(p, mu=1, lam=1, word=("x", "y"))

    def test_char2_binomial(self):
        p = 2
        one_plus_mu = mono(p) + mono(p, mu=1)
        sq = nc_multiply(one_plus_mu, one_plus_mu)
        assert sq == mono(p) + mono(p, mu=2)

    def test_distributivity_over_sum(self):
        p = 2
        x, y, z = (NCPoly.gen(p, n) for n in "xyz")
        assert (x + y) * z == x * z + y * z

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            nc_multiply(mono(2), mono(3))


class TestCanonicalForm:
    @given(st.lists(st.tuples(st.integers(1, 6), st.integers(-3, 3), st.integers(-3, 3),
                              st.lists(st.sampled_from("xyz"), max_size=3)),
                    max_size=8))
    def test_normalisation_is_idempotent(self, raw):
        p = 7
        poly = NCPoly.zero(p)
        for c, i, j, w in raw:
            poly = poly + mono(p, c=c, mu=i, lam=j, word=tuple(w))
        rebuilt = NCPoly(p, {w: dict(b.items()) for w, b in poly._terms.items()})
        assert rebuilt == poly
        assert hash(rebuilt) == hash(poly)

    @given(st.lists(st.tuples(st.integers(0, 6), st.integers(-2, 2),
                              st.lists(st.sampled_from("xy"), max_size=2)), max_size=6),
           st.lists(st.tuples(st.integers(0, 6), st.integers(-2, 2),
                              st.lists(st.sampled_from("xy"), max_size=2)), max_size=6))
    def test_product_distributes(self, raw1, raw2):
        p = 7
        def build(raw):
            poly = NCPoly.zero(p)
            for c, i, w in raw:
                poly = poly + mono(p, c=c, mu=i, word=tuple(w))
            return poly
        f, g = build(raw1), build(raw2)
        h = mono(p, c=3, lam=1, word=("x",))
        assert (f + g) * h == f * h + g * h

    def test_zero_terms_never_materialise(self):
        p = 3
        poly = mono(p, c=1, word=("x",)) + mono(p, c=2, word=("x",))
        assert poly.is_zero
        assert len(poly) == 0


class TestLeibniz:
    def test_right_factor_closed(self):
        # d(a) = 1 + mu, d(b) = 0, word ab -> (1 + mu) b
        p = 2
        gens = [ChordGen("a", 1, 1), ChordGen("b", 1, 1)]
        dga = DGA(p, gens, {"a": mono(p) + mono(p, mu=1)})
        got = extend_leibniz(dga, ("a", "b"))
        assert got == mono(p, word=("b",)) + mono(p, mu=1, word=("b",))

    def test_square_word(self):
        # d(x) = yz, d(y) = d(z) = 0, word xx -> yzx + xyz over F_2
        p = 2
        gens = [ChordGen("x", 2, 3), ChordGen("y", 1, 1), ChordGen("z", 0, 1)]
        dga = DGA(p, gens, {"x": mono(p, word=("y", "z"))})
        got = extend_leibniz(dga, ("x", "x"))
        assert got == mono(p, word=("y", "z", "x")) + mono(p, word=("x", "y", "z"))

    def test_empty_word(self):
        dga = unknot_dga()
        assert extend_leibniz(dga, ()).is_zero

    def test_unknown_generator(self):
        dga = unknot_dga()
        with pytest.raises(UndeclaredGeneratorError):
            extend_leibniz(dga, ("a", "ghost"))

    def test_koszul_sign_in_odd_characteristic(self):
        # d on the second letter of an odd-degree prefix picks up a minus sign
        p = 3
        gens = [ChordGen("u", 1, 2), ChordGen("v", 1, 1)]
        dga = DGA(p, gens, {"v": mono(p)})
        got = extend_leibniz(dga, ("u", "v"))
        assert got == mono(p, c=-1, word=("u",))

    def test_char_two_matches_signed_version(self):
        p = 2
        gens = [ChordGen("u", 1, 2), ChordGen("v", 1, 1)]
        dga = DGA(p, gens, {"v": mono(p)})
        assert extend_leibniz(dga, ("u", "v")) == mono(p, word=("u",))


class TestDSquared:
    def test_unknot_passes(self):
        assert check_d_squared(unknot_dga()) == []

    def test_tampered_dga_fails_at_a(self):
        p = 2
        gens = [ChordGen("a", 2, 2), ChordGen("b", 1, 1)]
        dga = DGA(p, gens, {"a": NCPoly.gen(p, "b"), "b": mono(p)})
        assert check_d_squared(dga) == ["a"]

    def test_degree_and_action_diagnostics(self):
        dga = unknot_dga()
        assert degree_violations(dga) == []
        assert action_violations(dga) == []
        # corrupt the degree
        bad = DGA(2, [ChordGen("a", 2, 1)], {"a": dga.d_of("a")})
        assert degree_violations(bad) == [("a", ()), ("a", ())]


class TestMorphism:
    def test_identity_passes(self):
        dga = unknot_dga()
        assert check_morphism(identity_morphism(dga)) == []

    def test_mu_scaling_fails(self):
        # f(a) = mu * a is degree preserving but not a chain map over F_2
        dga = unknot_dga()
        f = DGAMorphism(dga, dga, {"a": mono(2, mu=1, word=("a",))})
        assert check_morphism(f) == ["a"]

    def test_plain_a_passes(self):
        dga = unknot_dga()
        f = DGAMorphism(dga, dga, {"a": NCPoly.gen(2, "a")})
        assert check_morphism(f) == []

    def test_degree_violation_detected(self):
        # f(a) = a + 1 is a chain map but not degree preserving
        dga = unknot_dga()
        f = DGAMorphism(dga, dga, {"a": NCPoly.gen(2, "a") + mono(2)})
        assert check_morphism(f) == ["a"]


class TestEval:
    def test_kill_lambda_term_at_mu_minus_one(self):
        p = 5
        f = mono(p) + mono(p, lam=1) + mono(p, mu=1, lam=1)  # 1 + la(1 + mu)
        got = eval_coefficients(f, -1, 3)
        assert got == mono(p)

    def test_f5_point(self):
        p = 5
        f = mono(p) + mono(p, lam=1) + mono(p, mu=1, lam=1)
        assert eval_coefficients(f, 1, 2).is_zero  # 1 + 2*(1+1) = 5 = 0

    def test_negative_exponent_inverse(self):
        p = 7
        f = mono(p, mu=2, lam=-1, word=("x",))
        got = eval_coefficients(f, 2, 3)
        assert got == mono(p, c=6, word=("x",))  # 4 * 3^{-1} = 4*5 = 20 = 6

    def test_zero_point_rejected(self):
        with pytest.raises(InvalidPointError):
            eval_coefficients(mono(5), 5, 1)

    @given(st.integers(1, 4), st.integers(1, 4))
    def test_evaluation_is_multiplicative(self, m0, l0):
        p = 5
        f = mono(p, c=2, mu=1) + mono(p, lam=-1, word=("x",))
        g = mono(p, mu=-2, word=("y",)) + mono(p, c=3)
        lhs = eval_coefficients(f * g, m0, l0)
        rhs = eval_coefficients(f, m0, l0) * eval_coefficients(g, m0, l0)
        assert lhs == rhs


class TestDGAConstruction:
    def test_undeclared_letter_rejected(self):
        with pytest.raises(UndeclaredGeneratorError):
            DGA(2, [ChordGen("a", 1, 1)], {"a": NCPoly.gen(2, "b")})

    def test_differential_for_unknown_generator_rejected(self):
        with pytest.raises(UndeclaredGeneratorError):
            DGA(2, [ChordGen("a", 1, 1)], {"zz": NCPoly.zero(2)})

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            DGA(2, [ChordGen("a", 1, 1), ChordGen("a", 0, 2)], {})

    def test_missing_differential_defaults_to_zero(self):
        dga = DGA(2, [ChordGen("a", 1, 1)], {})
        assert dga.d_of("a").is_zero

    def test_degree_offsets_enter_term_degree(self):
        dga = DGA(2, [ChordGen("a", 1, 1)], {}, degree_offsets=(2, 0))
        from twistspun.algebra import CoefMonomial
        assert dga.term_degree(("a",), CoefMonomial(1, 1, 0)) == 3
