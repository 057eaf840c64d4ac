from fractions import Fraction as F
from math import gcd

import pytest

from seifert_orbifolds.core import FiberedOrbifold, Surface, normalize
from seifert_orbifolds.lens import (
    ClassicalSeifert,
    LensSpace,
    Mode,
    _lens_label,
    _match_fibration,
    classical_from_fibration,
    lens_equiv,
    lens_from_classical,
)

S2 = Surface.SPHERE


def mk(cones, e):
    return normalize(FiberedOrbifold.from_data(S2, cones, [], e))


class TestLensSpaceNormalForm:
    def test_simultaneous_sign_flip(self):
        assert LensSpace(-4, -1) == LensSpace(4, 1)
        assert LensSpace(-3, 1) == LensSpace(3, 2)

    def test_q_reduced(self):
        assert LensSpace(5, 12).q == 2

    def test_p_zero_rejected(self):
        with pytest.raises(ValueError):
            LensSpace(0, 1)


class TestClassicalFromFibration:
    def test_integral_invariants(self):
        c, i1, i2 = classical_from_fibration(mk([(0, 2), (0, 2)], -1))
        assert (i1, i2) == (2, 2)
        assert c.fractions == (F(1), F(0))
        assert c.euler == -1

    def test_index_two_cores(self):
        c, i1, i2 = classical_from_fibration(mk([(2, 4), (2, 4)], -1))
        assert (i1, i2) == (2, 2)
        assert c.fractions == (F(1, 2), F(1, 2))

    def test_padding(self):
        c, i1, i2 = classical_from_fibration(mk([(1, 3)], F(-1, 3)))
        assert (i1, i2) == (1, 1)
        assert c.fractions == (F(1, 3), F(0))

    def test_rejects_three_cones(self):
        with pytest.raises(ValueError):
            classical_from_fibration(mk([(1, 2), (1, 3), (1, 5)], F(-1, 30)))


class TestLensFromClassical:
    def test_s3(self):
        assert lens_from_classical(ClassicalSeifert((F(1), F(0)))) == LensSpace(1, 0)

    def test_half_half(self):
        assert lens_from_classical(ClassicalSeifert((F(1, 2), F(1, 2)))) == LensSpace(4, 3)

    def test_one_one(self):
        assert lens_from_classical(ClassicalSeifert((F(1), F(1)))) == LensSpace(2, 1)

    def test_euler_zero_rejected(self):
        with pytest.raises(ValueError):
            lens_from_classical(ClassicalSeifert((F(1, 2), F(-1, 2))))

    def test_representation_move_invariance(self):
        # shifting the fractions by integers with zero sum fixes the label
        base = ClassicalSeifert((F(1, 3), F(1, 5)))
        ref = lens_from_classical(base)
        for k in (-2, -1, 1, 2):
            shifted = ClassicalSeifert((base.fractions[0] + k, base.fractions[1] - k))
            assert lens_from_classical(shifted) == ref

    def test_swap_inverts_q(self):
        c = ClassicalSeifert((F(1, 3), F(1, 5)))
        x = lens_from_classical(c)
        y = lens_from_classical(ClassicalSeifert((F(1, 5), F(1, 3))))
        assert x.p == y.p
        assert lens_equiv(x, y, Mode.ORIENTED)

    def test_same_manifold_across_fibrations(self):
        # two fibrations of one quotient of S^3 must get the same label
        a = lens_from_classical(ClassicalSeifert((F(-4), F(0))))   # (S2; ; 4)
        b = lens_from_classical(ClassicalSeifert((F(1, 2), F(1, 2))))
        assert a == b == LensSpace(4, 3)
        am = lens_from_classical(ClassicalSeifert((F(4), F(0))))   # mirror
        bm = lens_from_classical(ClassicalSeifert((F(-3, 2), F(1, 2))))
        assert am == bm == LensSpace(4, 1)
        assert not lens_equiv(a, am)


class TestLensEquiv:
    def test_inverse_residue(self):
        assert lens_equiv(LensSpace(5, 2), LensSpace(5, 3))

    def test_fixed_cores_stricter(self):
        assert not lens_equiv(LensSpace(5, 2), LensSpace(5, 3), Mode.FIXED_CORES)

    def test_identity(self):
        assert lens_equiv(LensSpace(7, 3), LensSpace(7, 3), Mode.FIXED_CORES)

    def test_different_p(self):
        assert not lens_equiv(LensSpace(5, 2), LensSpace(7, 2))

    def test_oracle_partition(self):
        # brute-force classes by q' in {q, q^-1} mod p, independently coded
        for p in range(1, 31):
            qs = [q for q in range(p) if gcd(p, q) == 1] or [0]
            classes = {}
            for q in qs:
                orbit = {q % p}
                if gcd(q, p) == 1 and p > 1:
                    orbit.add(pow(q, -1, p))
                classes[q] = frozenset(orbit)
            for q1 in qs:
                for q2 in qs:
                    expected = classes[q1] == classes[q2] or q2 in classes[q1]
                    got = lens_equiv(LensSpace(p, q1), LensSpace(p, q2))
                    assert got == expected, (p, q1, q2)


class TestRecognizerRoundTrip:
    def test_all_small_lens_fibrations(self):
        # every fibration of L(p, q) must be recognized as L(p, q)
        for p in range(2, 13):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                for alpha in range(1, 5):
                    for beta in range(-4, 5):
                        if gcd(alpha, beta) != 1:
                            continue
                        w1, w2 = alpha, alpha * q + beta * p
                        if w2 == 0:
                            continue
                        e = F(-p, w1 * w2)
                        for a1 in range(w1):
                            for a2 in range(abs(w2)):
                                if _match_fibration(p, q, ((a1, w1), (a2, abs(w2))), e):
                                    lab = _lens_label(((a1, w1), (a2, abs(w2))), e)
                                    assert lab == LensSpace(p, q), (p, q, w1, w2)
