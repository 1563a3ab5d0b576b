"""Linkedness bound formulas, witness polytopes and the k(d) table."""

from __future__ import annotations

import logging
from functools import reduce

from .const import IMPORTED_SMALL_K, TABLE_MAX_DIM
from .data import BoundsRow, Pairing
from .exceptions import InvalidInputError
from .lattice import graph_of
from .linkage import complement_pairing
from .polytope import (
    CombinatorialPolytope,
    builtin,
    cross_polytope,
    join,
    pyramid,
    quadrilateral_join,
    simplex,
    stack,
)

_LOGGER = logging.getLogger(__name__)

TABLE_DISCREPANCIES = {
    15: "literature lists 5,6,7 but floor((2d + 3) / 5) = 6",
}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInputError(message)


def k_lower_general(d: int) -> int:
    """Return floor((d + 2) / 3), a lower bound for every d-polytope."""
    _require(d >= 1, f"Dimension must be >= 1, got {d}")
    return (d + 2) // 3


def k_upper_bound(d: int) -> int:
    """Return floor((2d + 3) / 5), an upper bound for k(d)."""
    _require(d >= 1, f"Dimension must be >= 1, got {d}")
    return (2 * d + 3) // 5


def k_few_lower_bound(d: int, gamma: int) -> int:
    """Return floor((d - gamma + 1) / 2), a lower bound for k(d, gamma)."""
    _require(
        d >= gamma >= 0, f"Need d >= gamma >= 0, got d = {d}, gamma = {gamma}"
    )
    return (d - gamma + 1) // 2


def k_gamma_upper_bound(d: int, gamma: int) -> int:
    """Return floor(d / 2), an upper bound for k(d, gamma) once gamma >= 1."""
    _require(d >= 2, f"Dimension must be >= 2, got {d}")
    _require(gamma >= 1, f"gamma must be >= 1, got {gamma}")
    return d // 2


def k_few_exact(d: int, gamma: int) -> int | None:
    """Return k(d, gamma) where the few-vertex lower bound is known to be exact."""
    if gamma < 0 or 5 * gamma > d + 2:
        return None
    return k_few_lower_bound(d, gamma)


def k_pnm(n: int, m: int) -> int:
    """Return the linkedness of simplex(n - 1) joined with m quadrilaterals."""
    _require(n >= 0 and m >= 0, f"Need n, m >= 0, got n = {n}, m = {m}")
    _require(4 * m + n >= 2, f"Need 4m + n >= 2, got n = {n}, m = {m}")
    if n <= 2 * m - 1:
        return (4 * m + n) // 3
    return (2 * m + n) // 2


def failing_pairing_pnm(n: int, m: int) -> Pairing | None:
    """Return a (k + 1)-pairing that has no linkage in the quadrilateral join.

    Square diagonals are paired first, then the pyramid vertices. Returns
    None when there are fewer than 2(k + 1) vertices; the vertex count alone
    then rules out (k + 1)-linkedness.
    """
    k = k_pnm(n, m)
    return complement_pairing(graph_of(quadrilateral_join(n, m)), k + 1)


def pyramid_stack_witness(d: int, gamma: int) -> CombinatorialPolytope:
    """Return a d-polytope on d + gamma + 1 vertices that is not (d//2 + 1)-linked.

    It is the (d - 3)-fold pyramid over the square pyramid stacked gamma - 1
    times. Vertices 0-3 are the square, 4 its apex, then the stacked vertices,
    then the pyramid apices.
    """
    _require(d >= 3, f"Dimension must be >= 3, got {d}")
    _require(gamma >= 1, f"gamma must be >= 1, got {gamma}")
    base = stack(pyramid(builtin("square")), gamma - 1)
    return pyramid(base, d - 3)


def pyramid_stack_pairing(d: int, gamma: int) -> Pairing:
    """Return the failing pairing for ``pyramid_stack_witness``.

    Both square diagonals, then the pyramid apices two by two; in even
    dimension the last apex is paired with the square pyramid's apex.
    """
    _require(d >= 3, f"Dimension must be >= 3, got {d}")
    _require(gamma >= 1, f"gamma must be >= 1, got {gamma}")
    apices = list(range(4 + gamma, d + gamma + 1))
    pairs = [(0, 2), (1, 3)]
    if len(apices) % 2:
        pairs.append((4, apices.pop()))
    pairs += list(zip(apices[::2], apices[1::2], strict=True))
    return Pairing(tuple(pairs))


def _family_parameters(d: int) -> tuple[int, int, int]:
    """Return (squares, simplex dimension, cross factors) for a family dimension."""
    if d >= 8 and (d - 8) % 4 == 0:
        return 2, 2, (d - 8) // 4
    if d >= 13 and (d - 13) % 4 == 0:
        return 3, 4, (d - 13) // 4
    msg = f"No crosspolytope family member in dimension {d}"
    raise InvalidInputError(msg)


def crosspolytope_family_witness(d: int) -> CombinatorialPolytope:
    """Return simplex * squares * octahedra meeting the upper bound in dimension d.

    d = 4m + 8 gives simplex(2) * square^2 * octahedron^m (6m + 11 vertices);
    d = 4m + 13 gives simplex(4) * square^3 * octahedron^m (6m + 17 vertices).
    """
    squares, simplex_dim, crosses = _family_parameters(d)
    factors = [simplex(simplex_dim)]
    factors += [builtin("square")] * squares
    factors += [cross_polytope(3)] * crosses
    return reduce(join, factors)


def crosspolytope_family_k(d: int) -> int:
    """Return the linkedness claimed for the crosspolytope family member."""
    squares, _, crosses = _family_parameters(d)
    return 2 * crosses + (3 if squares == 2 else 5)


def crosspolytope_family_pairing(d: int) -> Pairing:
    """Return a (k + 1)-pairing that defeats the crosspolytope family member."""
    k = crosspolytope_family_k(d)
    pairing = complement_pairing(graph_of(crosspolytope_family_witness(d)), k + 1)
    if pairing is None:
        msg = f"Family member in dimension {d} is too small for {k + 1} pairs"
        raise InvalidInputError(msg)
    return pairing


def minimal_linkedness_witness(d: int) -> CombinatorialPolytope:
    """Return the quadrilateral join realising the upper bound for k(d)."""
    _require(d >= 1, f"Dimension must be >= 1, got {d}")
    gamma = (d + 2) // 5
    return quadrilateral_join(d - 3 * gamma + 1, gamma)


def bounds_row(d: int) -> BoundsRow:
    """Return the known range of k(d)."""
    _require(d >= 1, f"Dimension must be >= 1, got {d}")
    lower = max(k_lower_general(d), IMPORTED_SMALL_K.get(d, 0))
    upper = (d + 1) // 2 if d <= 2 else k_upper_bound(d)
    if d in IMPORTED_SMALL_K:
        lower = upper = IMPORTED_SMALL_K[d]
    return BoundsRow(
        d,
        lower,
        upper,
        exact=lower if lower == upper else None,
        paper_discrepancy=TABLE_DISCREPANCIES.get(d),
    )


def k_table(max_dim: int = TABLE_MAX_DIM) -> list[BoundsRow]:
    """Return the k(d) ranges for d = 1..max_dim."""
    rows = [bounds_row(d) for d in range(1, max_dim + 1)]
    for row in rows:
        if row.paper_discrepancy:
            _LOGGER.warning("Row d = %s: %s", row.d, row.paper_discrepancy)
    return rows
