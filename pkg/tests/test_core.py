from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seifert_orbifolds.core import (
    FiberedOrbifold,
    LocalInvariant,
    Surface,
    TwoOrbifold,
    euler_characteristic,
    is_bad,
    is_spherical,
    normalize,
    relation_sum,
    reverse_orientation,
    s3_fibration,
    solve_xi,
    validate,
)

S2, RP2, D2 = Surface.SPHERE, Surface.PROJECTIVE_PLANE, Surface.DISK


def mk(surface, cones, corners, e, xi=None):
    return FiberedOrbifold.from_data(surface, cones, corners, e, xi)


class TestTwoOrbifold:
    def test_label_one_dropped(self):
        assert TwoOrbifold(S2, (1, 2, 2)).cone_labels == (2, 2)

    def test_corner_reflectors_need_disk(self):
        with pytest.raises(ValueError):
            TwoOrbifold(S2, (), (2, 2))
        with pytest.raises(ValueError):
            TwoOrbifold(RP2, (3,), (2,))

    def test_labels_sorted(self):
        assert TwoOrbifold(S2, (5, 2, 3)).cone_labels == (2, 3, 5)


class TestEulerCharacteristic:
    def test_sphere(self):
        assert euler_characteristic(TwoOrbifold(S2)) == 2

    def test_235(self):
        assert euler_characteristic(TwoOrbifold(S2, (2, 3, 5))) == F(1, 30)

    def test_disk_with_cone_and_corner(self):
        assert euler_characteristic(TwoOrbifold(D2, (3,), (2,))) == F(1, 12)

    def test_disk_corners(self):
        assert euler_characteristic(TwoOrbifold(D2, (), (2, 2, 4))) == F(1, 8)

    def test_double_of_disk_doubles_chi(self):
        for corners in [(), (3, 3), (2, 2, 5), (2, 3, 4)]:
            disk = TwoOrbifold(D2, (), corners)
            doubled = TwoOrbifold(S2, corners, ())
            assert euler_characteristic(doubled) == 2 * euler_characteristic(disk)


class TestIsBad:
    def test_distinct_sphere_labels(self):
        assert is_bad(TwoOrbifold(S2, (2, 3)))

    def test_teardrop(self):
        assert is_bad(TwoOrbifold(S2, (7,)))

    def test_equal_labels_good(self):
        assert not is_bad(TwoOrbifold(S2, (3, 3)))
        assert not is_bad(TwoOrbifold(D2, (), (5, 5)))

    def test_distinct_corners_bad(self):
        assert is_bad(TwoOrbifold(D2, (), (2, 5)))

    def test_rejects_nonpositive_chi(self):
        with pytest.raises(ValueError):
            is_bad(TwoOrbifold(S2, (2, 3, 7)))


class TestLocalInvariant:
    def test_canonical_representative(self):
        assert LocalInvariant(5, 3) == LocalInvariant(2, 3)
        assert LocalInvariant(-1, 4).a == 3

    def test_index(self):
        assert LocalInvariant(0, 2).index == 2
        assert LocalInvariant(1, 4).index == 1
        assert LocalInvariant(2, 4).index == 2


class TestValidate:
    def test_table_row_ok(self):
        f = mk(S2, [(1, 3), (1, 2), (1, 2)], [], F(-1, 3))
        assert validate(f).ok

    def test_hopf_ok(self):
        assert validate(mk(S2, [], [], -1)).ok

    def test_violation_residue(self):
        f = FiberedOrbifold(
            TwoOrbifold(S2, (2, 2, 3)),
            (LocalInvariant(0, 2), LocalInvariant(0, 2), LocalInvariant(1, 3)),
            (),
            F(-1, 2),
        )
        res = validate(f)
        assert not res.ok
        assert res.residue == F(-1, 6)

    def test_mismatched_labels(self):
        f = FiberedOrbifold(
            TwoOrbifold(S2, (2, 2)), (LocalInvariant(1, 2),), (), F(-1, 2)
        )
        res = validate(f)
        assert not res.ok and res.residue is None


class TestNormalize:
    def test_mod_one_reduction_at_construction(self):
        f = mk(S2, [(5, 3), (1, 2), (1, 2)], [], F(-5, 3))
        assert LocalInvariant(2, 3) in f.cone_invariants

    def test_order_one_point_dropped(self):
        f = mk(S2, [(0, 1), (1, 2), (1, 2)], [], -1)
        assert normalize(f).base == TwoOrbifold(S2, (2, 2))

    def test_sorting(self):
        f = mk(S2, [(1, 3), (1, 2), (0, 2)], [], F(-11, 6))
        g = normalize(f)
        assert [(i.a, i.b) for i in g.cone_invariants] == [(0, 2), (1, 2), (1, 3)]
        assert g.euler == f.euler

    def test_idempotent_and_residue_preserving(self):
        f = mk(D2, [(1, 2)], [(2, 5)], F(3, 10), 1)
        g = normalize(f)
        assert normalize(g) == g
        assert relation_sum(g) - relation_sum(f) == int(relation_sum(g) - relation_sum(f))


class TestReverseOrientation:
    def test_example(self):
        f = mk(S2, [(1, 2), (1, 2), (1, 3)], [], F(-4, 3))
        assert reverse_orientation(f) == normalize(
            mk(S2, [(1, 2), (1, 2), (2, 3)], [], F(4, 3))
        )

    def test_hopf(self):
        assert reverse_orientation(mk(S2, [], [], -1)) == mk(S2, [], [], 1)

    def test_disk_no_corners_keeps_xi(self):
        f = mk(D2, [], [], -1, 0)
        assert reverse_orientation(f) == mk(D2, [], [], 1, 0)

    def test_involution(self):
        f = mk(D2, [(1, 3)], [(1, 2)], F(-1, 12), 1)
        assert reverse_orientation(reverse_orientation(f)) == normalize(f)

    def test_result_validates_with_odd_corner_count(self):
        # one nonzero corner invariant: the boundary bit flips
        f = mk(D2, [(1, 2)], [(1, 3)], F(-1, 6))
        assert f.xi == (1,)
        g = reverse_orientation(f)
        assert validate(g).ok and g.xi == (0,)


class TestSpherical:
    def test_table_row(self):
        assert is_spherical(mk(S2, [(1, 2), (1, 3), (1, 5)], [], F(-1, 30)))

    def test_zero_euler(self):
        assert not is_spherical(mk(S2, [], [], 0))

    def test_negative_chi(self):
        f = mk(S2, [(1, 2), (1, 3), (6, 7)], [], F(-85, 42) + 2)
        assert not is_spherical(f)


class TestS3Fibration:
    def test_hopf(self):
        assert s3_fibration(1, 1, 1) == mk(S2, [], [], -1)

    def test_2_3(self):
        assert s3_fibration(2, 3, 1) == normalize(
            mk(S2, [(1, 2), (2, 3)], [], F(-1, 6))
        )

    def test_1_2(self):
        assert s3_fibration(1, 2, 1) == normalize(mk(S2, [(1, 2)], [], F(-1, 2)))

    def test_rejects_common_factor(self):
        with pytest.raises(ValueError):
            s3_fibration(2, 4)

    def test_base_bad_except_hopf(self):
        for u in range(1, 7):
            for v in range(1, 7):
                from math import gcd

                if gcd(u, v) != 1:
                    continue
                f = s3_fibration(u, v, 1)
                assert validate(f).ok
                if (u, v) == (1, 1):
                    assert not f.base.cone_labels
                else:
                    assert is_bad(f.base)


# -- property tests ----------------------------------------------------------

surfaces = st.sampled_from([S2, RP2, D2])
orders = st.integers(min_value=2, max_value=12)


@st.composite
def fibrations(draw):
    surface = draw(surfaces)
    n_cones = draw(st.integers(0, 3))
    cones = [(draw(st.integers(-15, 15)), draw(orders)) for _ in range(n_cones)]
    corners = []
    if surface is D2:
        n_corners = draw(st.integers(0, 3))
        corners = [(draw(st.integers(-15, 15)), draw(orders)) for _ in range(n_corners)]
    if surface is RP2:
        cones = cones[:1]
    # choose e as the unique value closing the relation, shifted by an integer
    s = sum(F(a % b, b) for a, b in cones) + F(1, 2) * sum(
        F(a % b, b) for a, b in corners
    )
    xi = None
    if surface is D2:
        xi = draw(st.integers(0, 1))
        s += F(xi, 2)
    e = -s + draw(st.integers(-3, 3))
    if e == 0:
        e = -s + 4
    return FiberedOrbifold.from_data(surface, cones, corners, e, xi)


@given(fibrations())
@settings(max_examples=250, deadline=None)
def test_constructed_fibrations_satisfy_relation(f):
    assert validate(f).ok
    assert relation_sum(f).denominator == 1


@given(fibrations())
@settings(max_examples=250, deadline=None)
def test_normalize_idempotent(f):
    g = normalize(f)
    assert normalize(g) == g


@given(fibrations())
@settings(max_examples=250, deadline=None)
def test_reverse_is_involution(f):
    assert reverse_orientation(reverse_orientation(f)) == normalize(f)
    assert validate(reverse_orientation(f)).ok


@given(st.integers(1, 30), st.integers(1, 30))
@settings(max_examples=120, deadline=None)
def test_s3_fibration_validates(u, v):
    from math import gcd

    if gcd(u, v) != 1:
        return
    for sign in (1, -1):
        f = s3_fibration(u, v, sign)
        assert validate(f).ok
        assert f.euler == F(-sign, u * v)


def test_solve_xi_unique():
    assert solve_xi([(1, 2)], [(1, 3)], F(-1, 6)) == 1
    assert solve_xi([], [], -1) == 0
    with pytest.raises(ValueError):
        solve_xi([], [(1, 3)], F(-1, 2))
