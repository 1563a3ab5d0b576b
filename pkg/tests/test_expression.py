"""Tests for the construction expression language."""

from __future__ import annotations

import pytest

from polylink.exceptions import ExpressionSyntaxError, InvalidInputError
from polylink.expression import (
    Atom,
    Call,
    CanonicalCall,
    build,
    parse,
    to_text,
    tokenize,
)
from polylink.lattice import is_combinatorially_equivalent
from polylink.polytope import (
    builtin,
    cross_polytope,
    pyramid,
    quadrilateral_join,
    simplex,
)


def test_tokenize_records_positions() -> None:
    tokens = tokenize("pyr( square ,3)")
    assert [(token.kind, token.position) for token in tokens] == [
        ("name", 0),
        ("punct", 3),
        ("name", 5),
        ("punct", 12),
        ("int", 13),
        ("punct", 14),
        ("end", 15),
    ]


def test_parse_builds_the_tree() -> None:
    assert parse("pyr(square, 3)") == Call("pyr", (Atom("square"), 3))
    assert parse("P(1; 1,2, 2,3)") == CanonicalCall(1, ((1, 2), (2, 3)))
    assert parse("P(4)") == CanonicalCall(4)


def test_parse_ignores_whitespace() -> None:
    assert parse(" join ( simplex( 2 ) ,square )") == parse("join(simplex(2),square)")


@pytest.mark.parametrize(
    "text",
    [
        "square",
        "simplex(3)",
        "join(simplex(2), square, square)",
        "sum(cross(2), interval)",
        "pyr(stack(pyr(square), 1), 3)",
        "bipyr(prism3)",
        "Pnm(3, 2)",
        "P(0; 2,1)",
        "P(2)",
    ],
)
def test_to_text_reparses(text: str) -> None:
    node = parse(text)
    assert parse(to_text(node)) == node


def test_to_text_format() -> None:
    assert to_text(parse("P(1;1,2,2,3)")) == "P(1; 1,2, 2,3)"
    assert to_text(parse("pyr(square,3)")) == "pyr(square, 3)"


def test_build_pyramids() -> None:
    polytope = build("pyr(square, 3)")
    assert polytope == pyramid(builtin("square"), 3)
    assert (polytope.dim, polytope.n_vertices) == (5, 7)


def test_canonical_call_matches_quadrilateral_join() -> None:
    assert build("P(1; 1,1, 1,1)") == build("Pnm(1, 2)") == quadrilateral_join(1, 2)


def test_builtin_square_is_equivalent_to_a_quadrilateral() -> None:
    assert is_combinatorially_equivalent(
        build("join(simplex(2), square, square)"), quadrilateral_join(3, 2)
    )


def test_build_atoms_and_families() -> None:
    assert build("point") == simplex(0)
    assert build("cross(3)") == cross_polytope(3)
    assert build("bipyr(interval)") == cross_polytope(2)


def test_stacking_a_square_gives_a_pentagon() -> None:
    polytope = build("stack(square, 1)")
    assert (polytope.dim, polytope.n_vertices) == (2, 5)
    assert len(polytope.facets) == 5


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("simplex(2", 9),
        ("square$", 6),
        ("foo(1)", 0),
        ("join(square, bar)", 13),
        ("", 0),
        ("square square", 7),
    ],
)
def test_syntax_error_positions(text: str, position: int) -> None:
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


@pytest.mark.parametrize(
    "text",
    [
        "join(square)",
        "cross(0)",
        "simplex(square)",
        "Pnm(0, 0)",
        "Pnm(1)",
        "P(0)",
        "P(1; 0,1)",
        "pyr(2)",
        "stack(square, square)",
        "bipyr(square, 1)",
    ],
)
def test_arity_and_range_errors(text: str) -> None:
    with pytest.raises(ExpressionSyntaxError):
        parse(text)


def test_construction_errors_are_invalid_input() -> None:
    with pytest.raises(InvalidInputError):
        build("stack(interval, 1)")
