import pytest

from pysrone.base import LiteralError, RingSpecError
from pysrone.codec import parse_literal, render_literal
from pysrone.ring import parse_ring_spec
from pysrone.ring.spec import CornerSpec, MatrixSpec, ModularSpec, ProductSpec, QuotientSpec


def test_canonical_rendering() -> None:
    cases = [
        ("Z/6", "Z/6"),
        ("M( 2 , Z/4 )", "M(2,Z/4)"),
        ("T(2,Z/3)", "T(2,Z/3)"),
        ("Z/2 x Z/3 x Z/5", "Z/2 x Z/3 x Z/5"),
        ("(Z/2 x Z/3) x Z/5", "(Z/2 x Z/3) x Z/5"),
        ("M(2,Z/2) x Z/2", "M(2,Z/2) x Z/2"),
        ("op(M(2,Z/3))", "op(M(2,Z/3))"),
        ("tr(M(2,Z/3))", "tr(M(2,Z/3))"),
        ("corner(M(2,Z/2), [[1,0],[0,0]])", "corner(M(2,Z/2),[[1,0],[0,0]])"),
        ("corner(M(2,Z/2),E11)", "corner(M(2,Z/2),E11)"),
        ("quot(M(2,Z/4), [[2,0],[0,0]], E12)", "quot(M(2,Z/4),[[2,0],[0,0]],E12)"),
    ]
    for text, canonical in cases:
        assert str(parse_ring_spec(text)) == canonical
        # The canonical form is a fixed point.
        assert str(parse_ring_spec(canonical)) == canonical


def test_syntax_tree() -> None:
    assert parse_ring_spec("M(2,Z/4)") == MatrixSpec(2, ModularSpec(4))
    assert parse_ring_spec("Z/2 x Z/4") == ProductSpec((ModularSpec(2), ModularSpec(4)))

    corner = parse_ring_spec("corner(M(2,Z/2),[[1,0],[0,0]])")
    assert isinstance(corner, CornerSpec)
    assert corner.idempotent == [[1, 0], [0, 0]]

    quotient = parse_ring_spec("quot(Z/8,4,2)")
    assert isinstance(quotient, QuotientSpec)
    assert quotient.generators == (4, 2)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("M(2 Z/4", 4),
        ("M(2,Z/4", 7),
        ("Q/4", 0),
        ("Z/", 2),
        ("Z/4 Z/5", 4),
        ("corner(M(2,Z/2),[[1,0],[0,0])", 28),
        ("", 0),
    ],
)
def test_parse_errors_carry_offsets(text: str, offset: int) -> None:
    with pytest.raises(RingSpecError) as err:
        parse_ring_spec(text)
    assert err.value.offset == offset


def test_literals() -> None:
    assert parse_literal("5") == 5
    assert parse_literal(" (1, 2) ") == (1, 2)
    assert parse_literal("[[1,0],[0,1]]") == [[1, 0], [0, 1]]
    assert parse_literal("E12") == "E12"
    assert parse_literal("-3") == -3

    assert render_literal((1, [[0, 1], [1, 0]])) == "(1,[[0,1],[1,0]])"

    for bad in ["", "[1,", "[]", "(1 2)", "x", "1 1"]:
        with pytest.raises(LiteralError):
            parse_literal(bad)
