"""Triangular-grid geometry: hexagons, symmetry-axis rhombi, and half-regions.

Frame of reference
------------------
A semi-regular hexagon with side sequence (b, a, c, b, a, c) is drawn with
its two sides of length b vertical (far left and far right), the sides of
length a as the upper-left / lower-right slants and the sides of length c as
the upper-right / lower-left slants.  The triangular grid then consists of
left- and right-pointing unit triangles stacked in vertical strips.

A cell is addressed as ``Cell(row2, col, orient)``:

* ``col``    index of the vertical strip, 0-based, left to right;
* ``row2``   twice the height of the midpoint of the cell's vertical edge
             (doubling keeps every coordinate an integer);
* ``orient`` ``"right"`` when the vertical edge is the cell's left side
             (apex points right), ``"left"`` for the mirror image.

For the symmetric hexagons treated here (a == c == side_a, b == side_m) the
horizontal symmetry axis sits at ``row2 == side_m``.  The rhombi bisected by
the axis are exactly the adjacent left/right cell pairs with
``row2 == side_m``; position ``l`` counts them left to right.  All values are
immutable and all functions are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional


class Cell(NamedTuple):
    row2: int
    col: int
    orient: str


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class RegionKind(enum.Enum):
    FULL_HEXAGON = "full-hexagon"
    UPPER_HALF = "upper-half"
    UPPER_TRIMMED = "upper-trimmed"
    LOWER_HALF = "lower-half"


@dataclass(frozen=True)
class HexagonSpec:
    """Literal hexagon sides: four of length side_a, two of length side_m."""

    side_a: int
    side_m: int

    def __post_init__(self):
        if self.side_a < 1:
            raise ValueError("side_a must be a positive integer")
        if self.side_m < 1:
            raise ValueError("side_m must be a positive integer")


@dataclass(frozen=True)
class NormalizedParams:
    """Parity-normalized hexagon parameters (n, m).

    EVEN represents the hexagon with sides (n, 2m); ODD the hexagon with
    sides (n+1, 2m-1).  Both have n admissible axis-rhombus positions.
    """

    parity: Parity
    n: int
    m: int

    def __post_init__(self):
        if self.parity is Parity.EVEN:
            if self.n < 1 or self.m < 0:
                raise ValueError("even parity needs n >= 1, m >= 0")
        else:
            if self.n < 0 or self.m < 1:
                raise ValueError("odd parity needs n >= 0, m >= 1")

    @property
    def side_a(self) -> int:
        return self.n if self.parity is Parity.EVEN else self.n + 1

    @property
    def side_m(self) -> int:
        return 2 * self.m if self.parity is Parity.EVEN else 2 * self.m - 1


@dataclass(frozen=True)
class Region:
    """A concrete cell set together with its provenance.

    ``weighted_pairs`` lists the axis-rhombus cell pairs that count with
    weight 1/2 in weighted enumeration; it is nonempty only for lower halves.
    """

    kind: RegionKind
    params: Optional[NormalizedParams]
    axis: Optional[int]
    cells: frozenset
    weighted_pairs: frozenset


@dataclass(frozen=True)
class PathFamilySpec:
    """Endpoints of the nonintersecting lattice-path family tied to a region.

    Paths take unit steps right / down.  ``half_weight_if_vertical_end[i]``
    marks paths that count with weight 1/2 when their final step is vertical.
    """

    starts: tuple
    ends: tuple
    half_weight_if_vertical_end: tuple


def hexagon_cells(a: int, b: int, c: int) -> frozenset:
    """All unit-triangle cells of the hexagon with side sequence (b, a, c, b, a, c).

    Degenerate sides of length 0 are allowed; the cell set may then describe
    a parallelogram, triangle or the empty region.
    """
    if min(a, b, c) < 0:
        raise ValueError("hexagon sides must be nonnegative")

    def top2(col: int) -> int:
        return 2 * b + (col if col <= a else 2 * a - col)

    def bot2(col: int) -> int:
        return -(col if col <= c else 2 * c - col)

    cells = []
    for s in range(a + c):
        # right-pointing: vertical edge on column s, apex on column s+1
        lo = max(bot2(s) + 1, bot2(s + 1))
        hi = min(top2(s) - 1, top2(s + 1))
        for r2 in range(lo, hi + 1):
            if (r2 + s) % 2 == 1:
                cells.append(Cell(r2, s, "right"))
        # left-pointing: vertical edge on column s+1, apex on column s
        lo = max(bot2(s + 1) + 1, bot2(s))
        hi = min(top2(s + 1) - 1, top2(s))
        for r2 in range(lo, hi + 1):
            if (r2 + s) % 2 == 0:
                cells.append(Cell(r2, s, "left"))
    return frozenset(cells)


def cell_neighbors(cell: Cell) -> tuple:
    """The up-to-three cells sharing an edge with ``cell`` on the full grid."""
    r2, s, orient = cell
    if orient == "right":
        return (
            Cell(r2, s - 1, "left"),
            Cell(r2 - 1, s, "left"),
            Cell(r2 + 1, s, "left"),
        )
    return (
        Cell(r2, s + 1, "right"),
        Cell(r2 - 1, s, "right"),
        Cell(r2 + 1, s, "right"),
    )


def normalize(spec: HexagonSpec) -> NormalizedParams:
    """Split the literal sides by the parity of side_m.

    Even side_m = 2m keeps n = side_a; odd side_m = 2m-1 gives n = side_a - 1
    (so a hexagon with side_a == 1 and odd side_m has no axis rhombus at all).
    """
    if spec.side_m % 2 == 0:
        return NormalizedParams(Parity.EVEN, spec.side_a, spec.side_m // 2)
    return NormalizedParams(Parity.ODD, spec.side_a - 1, (spec.side_m + 1) // 2)


def hexagon_of(params: NormalizedParams) -> HexagonSpec:
    """Literal hexagon represented by normalized parameters."""
    return HexagonSpec(params.side_a, params.side_m)


def axis_positions(params: NormalizedParams) -> int:
    """Number of admissible axis-rhombus positions (always n)."""
    if params.n == 0:
        raise ValueError("this hexagon has no rhombus on its symmetry axis")
    return params.n


def _validate_axis(params: NormalizedParams, l: int) -> None:
    n = axis_positions(params)
    if not 1 <= l <= n:
        raise ValueError(f"axis position must satisfy 1 <= l <= {n}, got {l}")


def axis_rhombus_cells(params: NormalizedParams, l: int) -> tuple:
    """The two cells forming the l-th axis rhombus, left cell first.

    This single definition is shared by the counting formulas and by the
    brute-force oracle, so the two can never disagree on indexing.
    """
    _validate_axis(params, l)
    m_side = params.side_m
    col = 2 * l - 1 if m_side % 2 == 0 else 2 * l
    return (Cell(m_side, col - 1, "left"), Cell(m_side, col, "right"))


def axis_pair(params: NormalizedParams, l: int) -> tuple:
    """Axis rhombus as a normalized (sorted) cell pair, as stored in tilings."""
    a, b = axis_rhombus_cells(params, l)
    return (a, b) if a <= b else (b, a)


def build_region(
    params: NormalizedParams,
    kind: RegionKind,
    axis: Optional[int] = None,
) -> Region:
    """Construct the cell set for one of the four region kinds.

    * FULL_HEXAGON: every cell; an optional ``axis`` only marks a rhombus.
    * UPPER_HALF:   all cells strictly above the symmetry axis.
    * UPPER_TRIMMED: the upper half with its two forced vertical end strips
      removed (even parity).  For odd parity the upper half has no forced
      strips, so trimming is the identity.
    * LOWER_HALF:   all cells strictly below the axis, plus every cell ON the
      axis except the two forming the marked rhombus ``axis``.  The remaining
      axis rhombi become the weight-1/2 pairs.
    """
    a, m_side = params.side_a, params.side_m
    cells = hexagon_cells(a, m_side, a)

    if kind is RegionKind.FULL_HEXAGON:
        if axis is not None:
            _validate_axis(params, axis)
        return Region(kind, params, axis, cells, frozenset())

    if kind in (RegionKind.UPPER_HALF, RegionKind.UPPER_TRIMMED):
        if axis is not None:
            raise ValueError("upper regions take no axis mark")
        upper = {c for c in cells if c.row2 > m_side}
        if kind is RegionKind.UPPER_TRIMMED and params.parity is Parity.EVEN:
            upper = {c for c in upper if c.col not in (0, 2 * a - 1)}
        return Region(kind, params, None, frozenset(upper), frozenset())

    if kind is RegionKind.LOWER_HALF:
        if axis is None:
            raise ValueError("lower regions require the marked axis position")
        _validate_axis(params, axis)
        removed = set(axis_rhombus_cells(params, axis))
        keep = {c for c in cells if c.row2 < m_side}
        keep.update(c for c in cells if c.row2 == m_side and c not in removed)
        pairs = frozenset(
            axis_pair(params, k)
            for k in range(1, axis_positions(params) + 1)
            if k != axis
        )
        return Region(kind, params, axis, frozenset(keep), pairs)

    raise ValueError(f"unknown region kind: {kind!r}")


def full_hexagon_region(spec: HexagonSpec, axis: Optional[int] = None) -> Region:
    return build_region(normalize(spec), RegionKind.FULL_HEXAGON, axis)


def box_region(a: int, b: int, c: int) -> Region:
    """Full hexagon for an arbitrary a x b x c box (no symmetry assumed)."""
    return Region(
        RegionKind.FULL_HEXAGON, None, None, hexagon_cells(a, b, c), frozenset()
    )


def region_from_cells(cells: Iterable, kind: RegionKind = RegionKind.FULL_HEXAGON) -> Region:
    """Wrap a bare cell set (e.g. parsed from text) for the enumerator."""
    return Region(kind, None, None, frozenset(cells), frozenset())


def pentagon_region(n: int, m: int) -> Region:
    """Standalone trimmed upper pentagon with n path slots and width offset m.

    Realized as the trimmed upper half of the hexagon with sides (n+1, 2m);
    n == 0 yields the empty region (which has exactly one empty tiling).
    """
    if n < 0 or m < 0:
        raise ValueError("pentagon parameters must be nonnegative")
    return build_region(
        NormalizedParams(Parity.EVEN, n + 1, m), RegionKind.UPPER_TRIMMED
    )


def pentagon_path_family(n: int, m: int) -> PathFamilySpec:
    """Path endpoints for the trimmed upper pentagon: path i runs from
    (i, i) to (i+m, 2i-n-1), i = 1..n, unweighted."""
    starts = tuple((i, i) for i in range(1, n + 1))
    ends = tuple((i + m, 2 * i - n - 1) for i in range(1, n + 1))
    return PathFamilySpec(starts, ends, (False,) * n)


def marked_path_family(n: int, m: int, l: int) -> PathFamilySpec:
    """Path endpoints for the lower half-region with marked position l.

    Path l ends one row higher, at (l+m, 2l-n); every other path carries
    weight 1/2 when it ends with a vertical step.
    """
    if not 1 <= l <= n:
        raise ValueError("marked path index out of range")
    starts = tuple((i, i) for i in range(1, n + 1))
    ends = tuple(
        (i + m, 2 * i - n) if i == l else (i + m, 2 * i - n - 1)
        for i in range(1, n + 1)
    )
    flags = tuple(i != l for i in range(1, n + 1))
    return PathFamilySpec(starts, ends, flags)


def path_family(
    params: NormalizedParams,
    kind: RegionKind,
    axis: Optional[int] = None,
) -> PathFamilySpec:
    """Lattice-path translation of a region built from ``params``.

    Only the trimmed upper pentagon and the lower half admit one.
    """
    if kind is RegionKind.UPPER_TRIMMED:
        if params.parity is Parity.EVEN:
            return pentagon_path_family(params.n - 1, params.m)
        return pentagon_path_family(params.n + 1, params.m - 1)
    if kind is RegionKind.LOWER_HALF:
        if axis is None:
            raise ValueError("lower paths require the marked axis position")
        _validate_axis(params, axis)
        return marked_path_family(params.n, params.m, axis)
    raise ValueError("no lattice-path translation for this region kind")


def region_to_text(region: Region) -> str:
    """One cell per line: ``row2 col orient`` (rows doubled, see module doc)."""
    lines = [f"{c.row2} {c.col} {c.orient}" for c in sorted(region.cells)]
    return "\n".join(lines)


def cells_from_text(text: str) -> frozenset:
    """Parse the plain-text cell list emitted by :func:`region_to_text`."""
    cells = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        r2, col, orient = line.split()
        if orient not in ("left", "right"):
            raise ValueError(f"bad orientation {orient!r}")
        cells.append(Cell(int(r2), int(col), orient))
    return frozenset(cells)
