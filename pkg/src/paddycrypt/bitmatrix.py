"""The transposition stage: lane bits -> 2Nx8 matrix -> interleaved ciphertext.

Placement fills the matrix the way a paddy field is planted, row by row in
alternating directions: row 2i-1 (1-indexed) holds the i-th affine-lane
byte left to right, row 2i holds the i-th caesar-lane byte right to left.
Harvest walks the columns the same way: odd columns top to bottom, even
columns bottom to top, concatenating as it goes.

For one pair of lane bytes (a1..a8 affine, c1..c8 caesar):

        col:   1   2   3   4   5   6   7   8
    row 1:    a1  a2  a3  a4  a5  a6  a7  a8
    row 2:    c8  c7  c6  c5  c4  c3  c2  c1

    harvest:  a1 c8 | c7 a2 | a3 c6 | c5 a4 | a5 c4 | c3 a6 | a7 c2 | c1 a8

Both directions are also exposed as one explicit bit permutation
(build_permutation), so callers can apply or invert the whole stage as an
index map.  The permutation depends only on the symbol count, never on the
bit values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadLength, LengthMismatch

COLS = 8

_BYTE_BITS = tuple(tuple((v >> (7 - i)) & 1 for i in range(8)) for v in range(256))


def symbol_to_bits(s: int) -> list[int]:
    """8 bits of s, most significant first."""
    if not 0 <= s < 256:
        raise ValueError(f"symbol {s} outside [0, 256)")
    return list(_BYTE_BITS[s])


def bits_to_symbol(bits) -> int:
    """Inverse of symbol_to_bits."""
    if len(bits) != 8:
        raise BadLength(f"need exactly 8 bits, got {len(bits)}")
    value = 0
    for bit in bits:
        value = value << 1 | bit
    return value


def symbols_to_bits(symbols) -> list[int]:
    out = []
    for s in symbols:
        if not 0 <= s < 256:
            raise ValueError(f"symbol {s} outside [0, 256)")
        out.extend(_BYTE_BITS[s])
    return out


def bits_to_symbols(bits) -> list[int]:
    if len(bits) % 8:
        raise BadLength(f"bit count {len(bits)} is not a multiple of 8")
    return [bits_to_symbol(bits[i:i + 8]) for i in range(0, len(bits), 8)]


@dataclass(frozen=True)
class BitMatrix:
    """2N x 8 grid of cells.

    Rows with even 0-indexed position (1-indexed odd) carry affine-lane
    bits left to right; the others carry caesar-lane bits right to left.
    Cells normally hold bits, but place() is content-agnostic on purpose:
    build_permutation places bit *indices* to derive the index map.
    """

    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        if len(self.rows) % 2:
            raise LengthMismatch(f"row count must be even, got {len(self.rows)}")
        for row in self.rows:
            if len(row) != COLS:
                raise LengthMismatch(f"rows must have {COLS} cells, got {len(row)}")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_symbols(self) -> int:
        return len(self.rows) // 2

    def lane_of_row(self, row: int) -> str:
        """Lane tag for a 0-indexed row."""
        return "affine" if row % 2 == 0 else "caesar"


def place(lane_a, lane_b) -> BitMatrix:
    """Interleave the two lane bit strings into the planting layout.

    Each 8-bit group becomes one row: affine groups in bit order, caesar
    groups reversed, alternating affine/caesar from the top.
    """
    a = list(lane_a)
    b = list(lane_b)
    if len(a) != len(b):
        raise LengthMismatch(f"lanes differ: {len(a)} vs {len(b)} cells")
    if len(a) % COLS:
        raise LengthMismatch(f"lane length {len(a)} is not a multiple of {COLS}")
    rows = []
    for i in range(0, len(a), COLS):
        rows.append(tuple(a[i:i + COLS]))
        rows.append(tuple(b[i:i + COLS][::-1]))
    return BitMatrix(tuple(rows))


def harvest(matrix: BitMatrix) -> list:
    """Read the matrix column-serpentine: odd columns down, even columns up."""
    rows = matrix.rows
    n_rows = len(rows)
    out = []
    for col in range(COLS):
        order = range(n_rows) if col % 2 == 0 else range(n_rows - 1, -1, -1)
        out.extend(rows[r][col] for r in order)
    return out


@dataclass(frozen=True)
class PermutationMap:
    """Bijection from lane-pair bit index to ciphertext bit index.

    Index i < 8N addresses affine-lane bit i; index 8N + i addresses
    caesar-lane bit i.  forward[i] is where that bit lands in the
    ciphertext; inverse undoes it.
    """

    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.forward)

    def apply(self, bits) -> list:
        """Scatter lane-pair cells into ciphertext order (harvest of place)."""
        if len(bits) != self.size:
            raise BadLength(f"expected {self.size} cells, got {len(bits)}")
        return [bits[i] for i in self.inverse]

    def invert(self, bits) -> list:
        """Gather ciphertext cells back into lane-pair order."""
        if len(bits) != self.size:
            raise BadLength(f"expected {self.size} cells, got {len(bits)}")
        return [bits[i] for i in self.forward]

    def symbol_positions(self, index: int) -> frozenset[int]:
        """Ciphertext bit positions fed by plaintext symbol `index`.

        Sixteen positions: eight from its affine row, eight from its
        caesar row.
        """
        n_sym = self.size // 16
        if not 0 <= index < n_sym:
            raise IndexError(f"symbol index {index} outside [0, {n_sym})")
        base_a = COLS * index
        base_b = COLS * (n_sym + index)
        return frozenset(
            [self.forward[base_a + j] for j in range(COLS)]
            + [self.forward[base_b + j] for j in range(COLS)]
        )


@lru_cache(maxsize=256)
def build_permutation(n_symbols: int) -> PermutationMap:
    """Compose placement and harvest into one index bijection for N symbols.

    Built by pushing the lane-pair indices themselves through
    place/harvest, so apply() agrees with the matrix route by
    construction for any cell content.
    """
    if n_symbols < 0:
        raise ValueError(f"symbol count must be >= 0, got {n_symbols}")
    half = COLS * n_symbols
    ids = list(range(2 * half))
    shuffled = harvest(place(ids[:half], ids[half:]))
    forward = [0] * len(ids)
    for position, lane_index in enumerate(shuffled):
        forward[lane_index] = position
    inverse = [0] * len(ids)
    for lane_index, position in enumerate(forward):
        inverse[position] = lane_index
    return PermutationMap(tuple(forward), tuple(inverse))


def unharvest(bits) -> tuple[list, list]:
    """Undo harvest and placement: ciphertext bits -> (affine, caesar) lanes."""
    bits = list(bits)
    if len(bits) % 16:
        raise BadLength(f"ciphertext bit count {len(bits)} is not a multiple of 16")
    perm = build_permutation(len(bits) // 16)
    lane_pair = perm.invert(bits)
    half = len(bits) // 2
    return lane_pair[:half], lane_pair[half:]
