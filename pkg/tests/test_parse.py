"""Parser tests: expressions in both contexts, family specs, object specs."""

import pytest

from hopfid.commpoly import CommPoly, ParamVar
from hopfid.comodule import Symbolic, galois_object, taft_object_spec
from hopfid.cyclotomic import CyclotomicNumber, primitive_root
from hopfid.exprparse import (
    MatrixSpec,
    ParseError,
    parse_expression,
    parse_hopf_spec,
    parse_object_spec,
)
from hopfid.hopf import en, taft
from hopfid.identities import FreeComodulePoly, mu, taft_identity, x_symbol


def test_scalar_arithmetic_and_precedence():
    alg = taft(3).algebra
    one = alg.one()
    assert parse_expression("2 + 3*4", alg) == one * 14
    assert parse_expression("(2 + 3)*4", alg) == one * 20
    assert parse_expression("-2^2", alg) == one * (-4)
    assert parse_expression("2^-2", alg) == one * CommPoly.scalar(3, 1) * (
        CommPoly.constant(CyclotomicNumber.from_rational(3, 1) / 4)
    )
    assert parse_expression("7/2 - 3/2", alg) == one * 2


def test_q_and_z_track_the_context_order():
    assert parse_expression("q", taft(3).algebra) == taft(3).algebra.one() * (
        CommPoly.constant(primitive_root(3))
    )
    # en lives in the order-2 field where q = -1
    assert parse_expression("q", en(2).algebra) == en(2).algebra.one() * (-1)
    z = CyclotomicNumber.zeta(4)
    assert parse_expression("z^2", taft(4).algebra) == taft(4).algebra.one() * (
        CommPoly.constant(z * z)
    )


def test_element_mode_normalizes():
    H = taft(3)
    alg = H.algebra
    x, y = alg.gen("x"), alg.gen("y")
    assert parse_expression("y*x", alg) == alg.one() * CommPoly.constant(H.q) * x * y
    assert parse_expression("y * x - q*x*y", alg).is_zero()
    assert parse_expression("x^3", alg) == alg.one()
    assert parse_expression("y^3", alg).is_zero()
    assert parse_expression("x^0", alg) == alg.one()
    assert str(parse_expression("(x + y)^2", alg)) == "x^2 + (1 + z)*x*y + y^2"


def test_element_mode_against_object_algebra():
    A = galois_object(taft_object_spec(3))
    got = parse_expression("y^3", A.algebra)
    a = CommPoly.variable(3, ParamVar("a"))
    c = CommPoly.variable(3, ParamVar("c"))
    # in the object, y^3 collapses to the scalar c
    assert got == A.algebra.one() * c
    assert parse_expression("x^3", A.algebra) == A.algebra.one() * a


def test_t_variables_resolve_against_the_hopf_basis():
    A = galois_object(taft_object_spec(3))
    P = taft_identity(3)
    image = mu(P, A)
    again = parse_expression(str(image), A.algebra)
    assert again == image
    assert parse_expression("t[2,x*y]", A.algebra) == A.algebra.one() * (
        parse_expression("t[2,x*y]", A.algebra).coefficient(())
    )
    with pytest.raises(ParseError, match="single basis word"):
        parse_expression("t[1,x + y]", A.algebra)
    with pytest.raises(ParseError, match="single basis word"):
        parse_expression("t[1,2*x]", A.algebra)


def test_t_variables_are_rejected_in_free_mode():
    with pytest.raises(ParseError, match="structure parameters only"):
        parse_expression("t[1,x]*E", taft(2))


def test_free_mode_aliases():
    H = taft(2)
    alg = H.algebra
    assert parse_expression("E", H) == x_symbol(1, alg.one())
    assert parse_expression("X", H) == x_symbol(1, alg.gen("x"))
    assert parse_expression("Y", H) == x_symbol(1, alg.gen("y"))
    assert parse_expression("X[2,x*y]", H) == x_symbol(2, alg.gen("x") * alg.gen("y"))
    # bracket contents are full element expressions
    assert parse_expression("X[1,x + q*y]", H) == x_symbol(
        1, alg.gen("x") + alg.gen("y") * CommPoly.constant(H.q)
    )
    got = parse_expression("(Y*X - q*X*Y)^2 - (1-q)^2*X^2*Y^2", H)
    assert isinstance(got, FreeComodulePoly)
    assert got.degree() == 4


def test_free_mode_en_aliases():
    H = en(2)
    alg = H.algebra
    assert parse_expression("Y1", H) == x_symbol(1, alg.gen("y1"))
    assert parse_expression("Y2*X", H) == x_symbol(1, alg.gen("y2")) * x_symbol(
        1, alg.gen("x")
    )
    with pytest.raises(ParseError, match="Y1, Y2"):
        parse_expression("Y", H)
    with pytest.raises(ParseError, match="no generator y3"):
        parse_expression("Y3", H)


def test_free_mode_scalar_promotion():
    H = taft(2)
    got = parse_expression("c - c'", H)
    assert isinstance(got, FreeComodulePoly)
    assert got.degree() == 0
    assert parse_expression("a*E - a*E", H).is_zero()


def test_parameters_and_primes():
    alg = taft(2).algebra
    one = alg.one()
    c1 = CommPoly.variable(2, ParamVar("c", (1,)))
    assert parse_expression("c1", alg) == one * c1
    assert parse_expression("c[1]", alg) == one * c1
    d12 = CommPoly.variable(2, ParamVar("d", (1, 2)))
    assert parse_expression("d12", alg) == one * d12
    assert parse_expression("d[1,2]", alg) == one * d12
    assert parse_expression("a''", alg) == one * CommPoly.variable(
        2, ParamVar("a", (), 2)
    )
    # the diagonal d[i,i] is a legal variable in raw expressions
    assert parse_expression("d[1,1]", alg) == one * CommPoly.variable(
        2, ParamVar("d", (1, 1))
    )
    with pytest.raises(ParseError, match="1 <= i <= j"):
        parse_expression("d21", alg)
    with pytest.raises(ParseError, match="start at 1"):
        parse_expression("c[0]", alg)


def test_division_rules():
    alg = taft(2).algebra
    x = alg.gen("x")
    assert parse_expression("x/2", alg) == x * CommPoly.constant(
        CyclotomicNumber.from_rational(2, 1) / 2
    )
    with pytest.raises(ParseError, match="scalars only"):
        parse_expression("1/x", alg)
    with pytest.raises(ParseError, match="constant scalar"):
        parse_expression("1/c", alg)
    with pytest.raises(ParseError, match="division by zero"):
        parse_expression("1/0", alg)


def test_negative_power_rules():
    alg = taft(3).algebra
    q = primitive_root(3)
    assert parse_expression("q^-1", alg) == alg.one() * CommPoly.constant(
        q.inverse()
    )
    assert parse_expression("(1+z)^(-1)", alg) == alg.one() * CommPoly.constant(
        (CyclotomicNumber.one(3) + CyclotomicNumber.zeta(3)).inverse()
    )
    with pytest.raises(ParseError, match="scalars only"):
        parse_expression("x^-1", alg)
    with pytest.raises(ParseError, match="constant scalar"):
        parse_expression("c^-2", alg)
    with pytest.raises(ParseError, match="negative power of zero"):
        parse_expression("0^-1", alg)


def test_expansion_guard():
    alg = taft(5).algebra
    parse_expression("y^2 * y^2", alg, max_degree=4)
    with pytest.raises(ParseError, match="expansion guard"):
        parse_expression("y^2 * y^2", alg, max_degree=3)
    with pytest.raises(ParseError, match="expansion guard"):
        parse_expression("y^4", alg, max_degree=3)
    with pytest.raises(ParseError, match="expansion guard"):
        parse_expression("(X*Y)^5", taft(2), max_degree=4)
    # the guard sees reduced operands, so collapsing products stay cheap
    parse_expression("x^2*x^2", taft(2).algebra, max_degree=2)


def test_parse_errors_carry_position():
    alg = taft(2).algebra
    with pytest.raises(ParseError) as err:
        parse_expression("x + ", alg)
    assert "position" in str(err.value)
    with pytest.raises(ParseError, match="unexpected character"):
        parse_expression("x @ y", alg)
    with pytest.raises(ParseError, match="after expression"):
        parse_expression("x y", alg)
    with pytest.raises(ParseError, match=r"expected '\)'"):
        parse_expression("(x + y", alg)
    with pytest.raises(ParseError, match="unknown generator 'w'"):
        parse_expression("w", alg)
    with pytest.raises(ParseError, match="unknown symbol 'W'"):
        parse_expression("W", taft(2))
    with pytest.raises(ParseError, match="copy indices start at 1"):
        parse_expression("X[0,x]", taft(2))
    with pytest.raises(ParseError):
        parse_expression("", alg)


def test_parse_hopf_spec():
    assert parse_hopf_spec("taft:3") is taft(3)
    assert parse_hopf_spec(" en:2 ") is en(2)
    with pytest.raises(ParseError, match="n >= 2"):
        parse_hopf_spec("taft:1")
    with pytest.raises(ParseError, match="n >= 1"):
        parse_hopf_spec("en:0")
    with pytest.raises(ParseError, match="malformed size"):
        parse_hopf_spec("taft")
    with pytest.raises(ParseError, match="unknown family"):
        parse_hopf_spec("sweedler:2")
    with pytest.raises(ParseError, match="plain family spec"):
        parse_hopf_spec("taft:3;a=1")


def test_parse_object_spec_taft():
    spec = parse_object_spec("taft:3")
    assert spec.family == "taft"
    assert spec.n == 3
    assert spec.value("a") == Symbolic()
    assert spec.value("c") == Symbolic()
    spec = parse_object_spec("taft:2;a=1;c=sym'")
    assert spec.value("a") == CyclotomicNumber.from_rational(2, 1)
    assert spec.value("c") == Symbolic(1)
    assert parse_object_spec(spec.render()) == spec
    # values may use the field constants
    spec = parse_object_spec("taft:3;c=q")
    assert spec.value("c") == primitive_root(3)
    spec = parse_object_spec("taft:2;a=3/2")
    assert spec.value("a") == CyclotomicNumber.from_rational(2, 3) / 2


def test_parse_object_spec_en():
    spec = parse_object_spec("en:2;a=1;c1=0;c2=1;d1,2=5")
    assert spec.family == "en"
    assert spec.value("c2") == CyclotomicNumber.from_rational(2, 1)
    assert spec.value("d1,2") == CyclotomicNumber.from_rational(2, 5)
    assert parse_object_spec("en:2;d12=5").value("d1,2") == spec.value("d1,2")
    assert parse_object_spec(spec.render()) == spec
    galois_object(spec)  # parsed specs feed straight into object construction


def test_parse_object_spec_rejections():
    with pytest.raises(ParseError, match="derived or out of range"):
        parse_object_spec("en:2;d1,1=0")
    with pytest.raises(ParseError, match="derived or out of range"):
        parse_object_spec("en:2;d2,1=0")
    with pytest.raises(ParseError, match="out of range"):
        parse_object_spec("en:2;c3=0")
    with pytest.raises(ParseError, match="duplicate"):
        parse_object_spec("taft:2;a=1;a=2")
    with pytest.raises(ParseError, match="unknown Taft parameters"):
        parse_object_spec("taft:2;c1=0")
    with pytest.raises(ParseError, match="unknown E"):
        parse_object_spec("en:2;b=1")
    with pytest.raises(ParseError, match="key=value"):
        parse_object_spec("taft:2;a")
    with pytest.raises(ParseError, match="primes apply to sym"):
        parse_object_spec("taft:2;a=1'")
    with pytest.raises(ParseError, match="constant scalar"):
        parse_object_spec("taft:2;a=c")
    with pytest.raises(ParseError, match="scalar value"):
        parse_object_spec("taft:2;a=x")
    with pytest.raises(ParseError, match="empty"):
        parse_object_spec("  ")
    with pytest.raises(ParseError, match="needs n >= 2"):
        parse_object_spec("taft:1;a=1")


def test_parse_matrix_spec():
    spec = parse_object_spec("matrix:2")
    assert spec == MatrixSpec(2)
    assert spec.render() == "matrix:2"
    with pytest.raises(ParseError, match="no parameters"):
        parse_object_spec("matrix:2;a=1")
    with pytest.raises(ParseError, match=">= 1"):
        parse_object_spec("matrix:0")


def test_parse_context_type_check():
    with pytest.raises(TypeError):
        parse_expression("x", object())
