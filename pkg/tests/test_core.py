from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcay.core import (
    NEG_INF,
    POS_INF,
    Orientation,
    ProjectivePoint,
    TropMatrix,
    TropNum,
    exact,
    hilbert_dist,
    mat_vec,
    sharp,
    t_add,
    t_mul,
    tropical,
)
from tropcay.errors import (
    DimensionMismatchError,
    OrientationError,
    UndefinedProductError,
)

rationals = st.fractions(
    min_value=-10**6, max_value=10**6, max_denominator=10**4
)


def finite(x):
    return TropNum(Fraction(x))


class TestTropNum:
    def test_total_order(self):
        assert NEG_INF < finite(-100) < finite(0) < finite("1/3") < POS_INF
        assert not POS_INF < POS_INF

    def test_addition_is_classical(self):
        assert finite(2) + finite("1/2") == finite("5/2")
        assert POS_INF + finite(5) == POS_INF
        assert NEG_INF + finite(5) == NEG_INF
        assert POS_INF + POS_INF == POS_INF

    def test_opposite_infinities_have_no_sum(self):
        with pytest.raises(UndefinedProductError):
            POS_INF + NEG_INF
        with pytest.raises(UndefinedProductError):
            NEG_INF - NEG_INF

    def test_negation(self):
        assert -POS_INF == NEG_INF
        assert -finite("3/7") == finite("-3/7")

    def test_coercion_rejects_floats(self):
        with pytest.raises(TypeError):
            tropical(0.5)
        with pytest.raises(TypeError):
            tropical(True)

    def test_string_forms(self):
        assert tropical("inf") == POS_INF
        assert tropical("-inf") == NEG_INF
        assert tropical("-3/2") == finite("-3/2")
        assert tropical("0.25") == finite("1/4")

    def test_exact_rejects_infinity(self):
        with pytest.raises(OrientationError):
            exact(POS_INF)
        assert exact(tropical(7)) == Fraction(7)


class TestOrientation:
    def test_identities(self):
        assert Orientation.MIN.identity == POS_INF
        assert Orientation.MAX.identity == NEG_INF
        assert Orientation.MIN.one == finite(0)

    def test_legality(self):
        assert Orientation.MIN.legal(POS_INF)
        assert not Orientation.MIN.legal(NEG_INF)
        assert Orientation.MAX.legal(NEG_INF)
        with pytest.raises(OrientationError):
            Orientation.MAX.require_legal(POS_INF)

    def test_duality(self):
        assert Orientation.MIN.dual is Orientation.MAX

    @given(rationals, rationals)
    def test_pick(self, a, b):
        x, y = finite(a), finite(b)
        assert t_add(x, y, Orientation.MIN) == min(x, y)
        assert t_add(x, y, Orientation.MAX) == max(x, y)


@given(rationals, rationals, rationals)
def test_semiring_laws_min(a, b, c):
    x, y, z = finite(a), finite(b), finite(c)
    o = Orientation.MIN
    assert t_add(t_add(x, y, o), z, o) == t_add(x, t_add(y, z, o), o)
    assert t_add(x, y, o) == t_add(y, x, o)
    assert t_mul(t_mul(x, y), z) == t_mul(x, t_mul(y, z))
    # multiplication distributes over the tropical sum
    assert t_mul(x, t_add(y, z, o)) == t_add(t_mul(x, y), t_mul(x, z), o)
    assert t_add(x, o.identity, o) == x
    assert t_mul(x, o.one) == x


@given(rationals, rationals)
def test_identity_absorbs_in_product(a, b):
    x = finite(a)
    assert t_mul(x, POS_INF) == POS_INF
    assert t_mul(x, NEG_INF) == NEG_INF


class TestTropMatrix:
    def test_shape_and_access(self):
        m = TropMatrix([[0, 1], [2, 3], ["inf", 4]])
        assert (m.d, m.n) == (3, 2)
        assert m.row(2) == (POS_INF, finite(4))
        assert m.column(1) == (finite(1), finite(3), finite(4))

    def test_all_infinite_column_rejected(self):
        with pytest.raises(DimensionMismatchError):
            TropMatrix([["inf", 0], ["inf", 1]])

    def test_ragged_rejected(self):
        with pytest.raises(DimensionMismatchError):
            TropMatrix([[0, 1], [2]])

    def test_sharp_is_negated_transpose(self):
        m = TropMatrix([[0, 1], [2, "inf"], [5, 3]])
        s = sharp(m)
        assert (s.d, s.n) == (2, 3)
        assert s.entries[0][1] == finite(-2)
        assert s.entries[1][1] == NEG_INF
        assert s == m.sharp()
        assert sharp(sharp(m).sharp().sharp()) == m

    def test_mat_vec_min(self):
        m = TropMatrix([[0, 1], [2, 0]])
        y = mat_vec(m, [finite(0), finite(0)], Orientation.MIN)
        assert y == (finite(0), finite(0))
        y = mat_vec(m, [finite(10), finite(0)], Orientation.MIN)
        assert y == (finite(1), finite(0))

    def test_mat_vec_orientation_guard(self):
        m = TropMatrix([[0, "inf"], [1, 0]])
        with pytest.raises(OrientationError):
            mat_vec(m, [finite(0), finite(0)], Orientation.MAX)


def test_hilbert_dist():
    assert hilbert_dist([0, 1, 3], [0, 1, 3]) == 0
    assert hilbert_dist([0, 1, 3], [5, 6, 8]) == 0  # same projective point
    assert hilbert_dist([0, 0], [0, 3]) == 3


def test_projective_point_canonicalizes():
    p = ProjectivePoint.of([finite(2), finite(3), finite(5)])
    q = ProjectivePoint.of([finite(0), finite(1), finite(3)])
    assert p == q
    assert hash(p) == hash(q)
