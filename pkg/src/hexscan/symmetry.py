"""The 12-element point group of the hexagon acting on hexagonal pictures.

Operations are named R0..R5 (rotations by multiples of 60 degrees, R0 the
identity) and r0..r5 (reflections, axes 30 degrees apart).  Each is realised
as a signed permutation of cube coordinates (x, y, z) = (q, -q-r, r), so all
actions are exact cell relabelings.

Anchoring:

  * r0 maps every {q constant} scan line to itself, reversing it.
  * r3 reverses the left-to-right order of the {q constant} lines while
    keeping the top-to-bottom orientation within each line.
  * R1 is the 60-degree rotation with r1 = R1 after r0; R3 = r0 after r3 is
    the central 180-degree rotation.

Composition convention: compose(g, h) applies h first, then g, and agrees
with the group's multiplication table entry at row g, column h.
"""

from __future__ import annotations

from functools import lru_cache

from .hexgrid import Cell, HexPicture, HexSize, cells, picture_from_cells

OP_NAMES: tuple[str, ...] = (
    "R0", "R1", "R2", "R3", "R4", "R5",
    "r0", "r1", "r2", "r3", "r4", "r5",
)

OpWord = tuple[str, ...]

# Signed cube-coordinate permutations: (indices, negate) with
# image[i] = (-1 if negate else 1) * source[indices[i]].
_CUBE_MAPS: dict[str, tuple[tuple[int, int, int], bool]] = {
    "R0": ((0, 1, 2), False),
    "R1": ((1, 2, 0), True),
    "R2": ((2, 0, 1), False),
    "R3": ((0, 1, 2), True),
    "R4": ((1, 2, 0), False),
    "R5": ((2, 0, 1), True),
    "r0": ((0, 2, 1), False),
    "r1": ((2, 1, 0), True),
    "r2": ((1, 0, 2), False),
    "r3": ((0, 2, 1), True),
    "r4": ((2, 1, 0), False),
    "r5": ((1, 0, 2), True),
}

# Normal forms over the generators {R1, r1}; words are written outermost
# first, so evaluation applies the rightmost letter first.
NORMAL_FORMS: dict[str, OpWord] = {
    "R0": ("r1", "r1"),
    "R1": ("R1",),
    "R2": ("R1", "R1"),
    "R3": ("R1", "R1", "R1"),
    "R4": ("R1", "R1", "R1", "R1"),
    "R5": ("R1", "R1", "R1", "R1", "R1"),
    "r0": ("r1", "R1"),
    "r1": ("r1",),
    "r2": ("r1", "R1", "R1", "R1", "R1", "R1"),
    "r3": ("r1", "R1", "R1", "R1", "R1"),
    "r4": ("r1", "R1", "R1", "R1"),
    "r5": ("r1", "R1", "R1"),
}


def check_op(op: str) -> str:
    if op not in _CUBE_MAPS:
        raise ValueError(f"unknown symmetry op {op!r}; expected one of {', '.join(OP_NAMES)}")
    return op


def is_rotation(op: str) -> bool:
    return check_op(op)[0] == "R"


def _op_index(op: str) -> int:
    return int(check_op(op)[1])


def compose(g: str, h: str) -> str:
    """The op equal to applying h first, then g."""
    gi, hi = _op_index(g), _op_index(h)
    if is_rotation(g) and is_rotation(h):
        return f"R{(gi + hi) % 6}"
    if is_rotation(g):
        return f"r{(gi + hi) % 6}"
    if is_rotation(h):
        return f"r{(gi - hi) % 6}"
    return f"R{(gi - hi) % 6}"


def invert(op: str) -> str:
    if is_rotation(op):
        return f"R{(-_op_index(op)) % 6}"
    return op


def normal_form(op: str) -> OpWord:
    """Word over {R1, r1} equal to op; leftmost letter is applied last."""
    return NORMAL_FORMS[check_op(op)]


def _apply_cube(op: str, cell: Cell) -> tuple[int, int]:
    """Map a cell through op's cube permutation; returns raw (r, q)."""
    x, z = cell.q, cell.r
    cube = (x, -x - z, z)
    perm, neg = _CUBE_MAPS[op]
    sign = -1 if neg else 1
    out = (sign * cube[perm[0]], sign * cube[perm[1]], sign * cube[perm[2]])
    return out[2], out[0]


def transform_size(op: str, size: HexSize) -> HexSize:
    """Size of the image of a picture of the given size under op.

    The extents along the three axis families (l+m-1, m+n-1, l+n-1) permute
    with the cube axes; solving the permuted extents recovers the sides.
    """
    check_op(op)
    l, m, n = size.l, size.m, size.n
    extents = (l + m - 1, m + n - 1, l + n - 1)
    perm, _ = _CUBE_MAPS[op]
    ex, ey, ez = (extents[perm[0]], extents[perm[1]], extents[perm[2]])
    return HexSize((ex + ez - ey + 1) // 2, (ex + ey - ez + 1) // 2, (ey + ez - ex + 1) // 2)


@lru_cache(maxsize=4096)
def cell_map(op: str, size: HexSize) -> dict[Cell, Cell]:
    """Bijection from cells of `size` onto cells of `transform_size(op, size)`.

    The linear image is translated so the target hexagon sits in canonical
    position (rows from 0, leftmost column -(l'-1)); that translation is
    unique, which makes the maps compose exactly with `compose`.
    """
    target = transform_size(op, size)
    raw = {cell: _apply_cube(op, cell) for cell in cells(size)}
    min_r = min(r for r, _ in raw.values())
    min_q = min(q for _, q in raw.values())
    dr = -min_r
    dq = -(target.l - 1) - min_q
    return {cell: Cell(r + dr, q + dq) for cell, (r, q) in raw.items()}


def apply_op(op: str, picture: HexPicture) -> HexPicture:
    """The geometrically transformed picture (pure cell relabeling)."""
    mapping = cell_map(op, picture.size)
    image = {mapping[cell]: picture.get(cell) for cell in picture.cells()}
    return picture_from_cells(transform_size(op, picture.size), image)


def evaluate_word(word: OpWord, picture: HexPicture) -> HexPicture:
    """Apply a word over {R1, r1}, rightmost letter first."""
    for op in reversed(word):
        picture = apply_op(op, picture)
    return picture
