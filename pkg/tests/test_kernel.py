from fractions import Fraction

import pytest

from qhom.errors import HomogeneityError, LiftingError, ParseError
from qhom.fields import Field
from qhom.groebner import (
    groebner_basis,
    is_regular_sequence,
    kernel_of_matrix,
    lift_columns,
    normal_form,
    syzygies,
)
from qhom.hilbert import HilbertSeries, laurent_divide, monomial_quotient_numerator
from qhom.linalg import EchelonSpace, nullspace, rank
from qhom.matrices import PolyMatrix
from qhom.modules import GradedModule
from qhom.polynomials import PolyRing


def test_field_arithmetic():
    F = Field.prime(101)
    assert F.mul(50, 3) == 49
    assert F.mul(F.inv(7), 7) == 1
    Q = Field.rationals()
    assert Q.div(1, 3) == Fraction(1, 3)
    assert Field.parse("GF(7)") == Field.prime(7)
    assert Field.parse("QQ") == Q
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_polynomial_text_is_canonical(F):
    P = PolyRing(F, ["x", "y", "z"])
    f = P("3*x*y^2 - z^3 + x^3")
    assert str(f) == "x^3 + 3*x*y^2 - z^3"
    assert P(str(f)) == f
    assert f.degree() == 3


def test_polynomial_parse_error_position(F):
    P = PolyRing(F, ["x", "y"])
    with pytest.raises(ParseError) as err:
        P("x + w")
    assert err.value.column == 5


def test_quotient_reduction_and_equality(F):
    P = PolyRing(F, ["x", "y"])
    R = P.quotient(["x^2", "x*y"])
    assert R("x^3 + x*y + y") == P("y")
    assert R == P.quotient(["x*y", "x^2", "x^2 + x*y"])
    assert R != P.quotient(["x^2"])
    with pytest.raises(HomogeneityError):
        P.quotient(["x^2 + y"])


def test_groebner_example(F):
    P = PolyRing(F, ["x", "y"])
    gb = groebner_basis([P("x^2 - y^2"), P("x*y")], P)
    assert sorted(str(g) for g in gb) == sorted(["y^3", "x^2 - y^2", "x*y"])
    assert normal_form(P("x^3"), gb, P).is_zero()


def test_kernel_of_row(kxy):
    x, y = kxy.gens
    A = PolyMatrix(kxy, [[x, y]], [0], [1, 1])
    K = kernel_of_matrix(A)
    assert K.ncols == 1 and K.col_twists == [2]
    assert (A @ K).is_zero()


def test_kernel_over_dual_numbers(dual_numbers):
    x, = dual_numbers.gens
    A = PolyMatrix(dual_numbers, [[x]], [0], [1])
    K = syzygies(A)
    assert K.ncols == 1 and str(K.entries[0][0]) == "x"


def test_kernel_of_identity_is_zero(kxy):
    I = PolyMatrix.identity(kxy, [0, 1])
    assert kernel_of_matrix(I).ncols == 0


def test_lift_columns(kxy):
    x, y = kxy.gens
    A = PolyMatrix(kxy, [[x, y]], [0], [1, 1])
    B = PolyMatrix(kxy, [[x * y]], [0], [2])
    X = lift_columns(A, B)
    assert A @ X == B
    with pytest.raises(LiftingError):
        lift_columns(A, PolyMatrix(kxy, [[kxy.one]], [0], [0]))


def test_regular_sequences(kxy, type2):
    x, y = kxy.gens
    assert is_regular_sequence([x ** 2, y ** 2], kxy)
    assert not is_regular_sequence([x * y, x ** 2], kxy)
    assert is_regular_sequence([type2.gens[0]], type2)
    assert not is_regular_sequence([type2.gens[1]], type2)


def test_echelon_space_and_nullspace(F):
    sp = EchelonSpace(F)
    assert sp.add({0: 1, 1: 2})
    assert not sp.add({0: 2, 1: 4})
    assert sp.contains({0: 3, 1: 6})
    assert rank([{0: 1}, {1: 1}, {0: 1, 1: 1}], F) == 2
    ns = nullspace([{0: 1, 1: 1}], 2, F)
    assert len(ns) == 1


def test_matrix_twists_and_json(kxy):
    x, y = kxy.gens
    A = PolyMatrix(kxy, [[x, y], [y, kxy.zero]], [0, 0], [1, 1])
    assert PolyMatrix.from_json(kxy, A.to_json()) == A
    assert A.twisted(2).col_twists == [3, 3]
    with pytest.raises(HomogeneityError):
        PolyMatrix(kxy, [[x * y]], [0], [1])
    T = A.transpose()
    assert T.row_twists == [-1, -1] and T.col_twists == [0, 0]


def test_laurent_division():
    assert laurent_divide({0: 1, 2: -1}, {0: 1, 1: -1}) == {0: 1, 1: 1}
    assert laurent_divide({0: 1}, {0: 1, 1: -1}) is None


def test_hilbert_series_monomial(F):
    # k[x,y]/(x^2, xy)
    num = monomial_quotient_numerator([(2, 0), (1, 1)], (1, 1))
    hs = HilbertSeries(num, (1, 1))
    assert hs.values(0, 4) == [1, 2, 1, 1, 1]
    assert hs.dimension() == 1


def test_hilbert_of_example_ring(type2):
    R = GradedModule.free(type2, [0])
    assert str(R.hilbert()) == "(1 + 2*t) / (1-t)"
    m = GradedModule.ideal(type2, type2.gens)
    assert str(m.hilbert()) == "(3*t) / (1-t)"
    assert m.hilbert().values(0, 3) == [0, 3, 3, 3]


def test_zero_module_dimension(kx):
    Z = GradedModule.zero(kx)
    assert Z.hilbert().dimension() == float("-inf")
    assert Z.is_zero()


def test_weighted_grading(F):
    P = PolyRing(F, ["x", "y"], [1, 2])
    R = P.quotient(["y^2"])
    hs = GradedModule.free(R, [0]).hilbert()
    assert hs.values(0, 5) == [1, 1, 2, 2, 2, 2]
    assert hs.dimension() == 1
