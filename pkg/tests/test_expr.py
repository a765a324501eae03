import pytest

from grlie.expr import ExpressionSyntaxError, UnknownGenerator, parse_lie_expr
from grlie.families import bezrukavnikov, free_lie, kv_sphere, surface_group
from grlie.lyndon import InhomogeneousExpression, LieElement, bracket

KV4 = kv_sphere(4)


def g(p, name):
    return LieElement.generator(p.alphabet, name)


def test_generator():
    assert parse_lie_expr("A[1,2]", KV4) == g(KV4, "A[1,2]")
    assert parse_lie_expr(" A[ 1 , 2 ] ", KV4) == g(KV4, "A[1,2]")


def test_bracket_sum():
    e = parse_lie_expr("[A[1,2], A[1,3]] + [A[2,3], A[1,2]]", KV4)
    a12, a13, a23 = (g(KV4, s) for s in ("A[1,2]", "A[1,3]", "A[2,3]"))
    assert e.degree == 2
    assert e == bracket(a12, a13) + bracket(a23, a12)


def test_precedence_and_scalars():
    p = free_lie(["x", "y"])
    x, y = g(p, "x"), g(p, "y")
    assert parse_lie_expr("-x + 2*y*3", p) == -x + y * 6
    assert parse_lie_expr("2*(x - y)", p) == x * 2 - y * 2
    assert parse_lie_expr("- -x", p) == x
    assert parse_lie_expr("[x, [x, y]] - 2*[[x, y], x]", p) == bracket(x, bracket(x, y)) * 3


def test_surface_names():
    p = bezrukavnikov(2, 2)
    e = parse_lie_expr("[a[1,1], b[1,2]] - [a[2,1], b[2,2]]", p)
    assert e.degree == 2 and len(e.coeffs) == 2
    s = surface_group(1, 2)
    assert parse_lie_expr("u[1] + [a[1], c[1]]", s).degree == 2


def test_inhomogeneous():
    with pytest.raises(InhomogeneousExpression):
        parse_lie_expr("A[1,2] + [A[1,2], A[1,3]]", KV4)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as err:
        parse_lie_expr("A[1,2] + A[1,4]", KV4)
    assert err.value.offset == 9 and err.value.name == "A[1,4]"


@pytest.mark.parametrize(
    "text, offset",
    [
        ("[A[1,2] A[1,3]]", 8),
        ("A[1,2] +", 8),
        ("A[1,2] $ A[1,3]", 7),
        ("(A[1,2]", 7),
        ("3", 0),
        ("A[1,2] * A[1,3]", 7),
        ("A[1,2] + 1", 7),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_lie_expr(text, KV4)
    assert err.value.offset == offset


def test_offsets_are_bytes():
    p = free_lie(["x", "y"])
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_lie_expr("x + é", p)
    assert err.value.offset == 4
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_lie_expr("(x)é", p)
    assert err.value.offset == 3
