"""Unit tests for the planting/harvest transposition stage."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paddycrypt.bitmatrix import (
    BitMatrix,
    bits_to_symbol,
    bits_to_symbols,
    build_permutation,
    harvest,
    place,
    symbol_to_bits,
    symbols_to_bits,
    unharvest,
)
from paddycrypt.errors import BadLength, LengthMismatch


def naive_interleave(lane_a, lane_b):
    """Oracle: cell-by-cell simulation with explicit index arithmetic,
    written independently of the library's matrix code."""
    assert len(lane_a) == len(lane_b)
    n_sym = len(lane_a) // 8
    cells = {}
    for i in range(n_sym):
        for j in range(8):
            cells[(2 * i, j)] = lane_a[8 * i + j]
            cells[(2 * i + 1, j)] = lane_b[8 * i + (7 - j)]
    out = []
    for col in range(8):
        rows = range(2 * n_sym)
        if col % 2 == 1:
            rows = reversed(rows)
        for row in rows:
            out.append(cells[(row, col)])
    return out


class TestBitConversion:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (0, [0, 0, 0, 0, 0, 0, 0, 0]),
            (255, [1, 1, 1, 1, 1, 1, 1, 1]),
            (65, [0, 1, 0, 0, 0, 0, 0, 1]),
        ],
    )
    def test_symbol_to_bits(self, value, expected):
        assert symbol_to_bits(value) == expected

    def test_bits_to_symbol_values(self):
        assert bits_to_symbol([0] * 8) == 0
        assert bits_to_symbol([0, 1, 0, 0, 0, 0, 0, 1]) == 65

    def test_round_trip_exhaustive(self):
        for value in range(256):
            assert bits_to_symbol(symbol_to_bits(value)) == value

    def test_symbol_range_checked(self):
        with pytest.raises(ValueError):
            symbol_to_bits(256)
        with pytest.raises(ValueError):
            symbol_to_bits(-1)

    def test_bits_to_symbol_bad_length(self):
        with pytest.raises(BadLength):
            bits_to_symbol([0, 1])

    def test_stream_helpers(self):
        values = [0, 65, 255, 3]
        assert bits_to_symbols(symbols_to_bits(values)) == values
        with pytest.raises(BadLength):
            bits_to_symbols([0] * 9)


class TestPlace:
    def test_single_symbol_rows(self):
        m = place([1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1])
        assert m.rows == ((1, 0, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0))

    def test_row_structure_and_lanes(self):
        lane_a = [f"a{i + 1}" for i in range(16)]
        lane_b = [f"c{i + 1}" for i in range(16)]
        m = place(lane_a, lane_b)
        assert m.n_rows == 4
        assert m.n_symbols == 2
        assert m.rows[0] == tuple(lane_a[:8])
        assert m.rows[1] == tuple(lane_b[:8][::-1])
        assert m.rows[2] == tuple(lane_a[8:])
        assert m.lane_of_row(0) == "affine"
        assert m.lane_of_row(1) == "caesar"

    def test_empty(self):
        assert place([], []).rows == ()

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            place([0] * 8, [0] * 16)
        with pytest.raises(LengthMismatch):
            place([0] * 7, [0] * 7)

    def test_matrix_shape_validated(self):
        with pytest.raises(LengthMismatch):
            BitMatrix(((0,) * 8,))
        with pytest.raises(LengthMismatch):
            BitMatrix(((0,) * 7, (0,) * 7))


class TestHarvest:
    def test_single_symbol_order(self):
        lane_a = [f"a{i + 1}" for i in range(8)]
        lane_b = [f"c{i + 1}" for i in range(8)]
        got = harvest(place(lane_a, lane_b))
        assert got == ["a1", "c8", "c7", "a2", "a3", "c6", "c5", "a4",
                       "a5", "c4", "c3", "a6", "a7", "c2", "c1", "a8"]

    def test_five_symbol_prefix(self):
        lane_a = [f"C{i + 1}A" for i in range(40)]
        lane_b = [f"C{i + 1}B" for i in range(40)]
        got = harvest(place(lane_a, lane_b))
        assert got[:10] == ["C1A", "C8B", "C9A", "C16B", "C17A",
                            "C24B", "C25A", "C32B", "C33A", "C40B"]
        assert got[10:20] == ["C39B", "C34A", "C31B", "C26A", "C23B",
                              "C18A", "C15B", "C10A", "C7B", "C2A"]

    def test_all_zero_content(self):
        for n_sym in (1, 3, 8):
            assert harvest(place([0] * 8 * n_sym, [0] * 8 * n_sym)) == [0] * 16 * n_sym

    def test_length_law(self):
        rng = random.Random(9)
        for n_sym in (0, 1, 2, 7, 16):
            a = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            b = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            assert len(harvest(place(a, b))) == len(a) + len(b) == 16 * n_sym

    def test_matches_naive_oracle(self):
        rng = random.Random(42)
        for _ in range(1000):
            n_sym = rng.randrange(0, 17)
            a = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            b = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            expected = naive_interleave(a, b)
            assert harvest(place(a, b)) == expected
            assert build_permutation(n_sym).apply(a + b) == expected


class TestPermutation:
    def test_bijective_up_to_64(self):
        for n_sym in range(65):
            perm = build_permutation(n_sym)
            assert sorted(perm.forward) == list(range(16 * n_sym))
            assert all(perm.inverse[perm.forward[i]] == i for i in range(perm.size))

    def test_apply_invert_identity(self):
        rng = random.Random(5)
        for n_sym in (0, 1, 4, 9):
            perm = build_permutation(n_sym)
            bits = [rng.getrandbits(1) for _ in range(16 * n_sym)]
            assert perm.invert(perm.apply(bits)) == bits
            assert perm.apply(perm.invert(bits)) == bits

    def test_value_independent(self):
        # same permutation object regardless of what it will carry
        assert build_permutation(5) is build_permutation(5)

    def test_size_checked(self):
        with pytest.raises(BadLength):
            build_permutation(2).apply([0] * 16)
        with pytest.raises(ValueError):
            build_permutation(-1)

    def test_lane_separation(self):
        # flipping one affine-lane bit flips exactly the forward-mapped
        # ciphertext bit, never anything fed by the caesar lane
        rng = random.Random(11)
        n_sym = 6
        perm = build_permutation(n_sym)
        a = [rng.getrandbits(1) for _ in range(8 * n_sym)]
        b = [rng.getrandbits(1) for _ in range(8 * n_sym)]
        base = perm.apply(a + b)
        for i in range(8 * n_sym):
            flipped = list(a)
            flipped[i] ^= 1
            out = perm.apply(flipped + b)
            diff = [j for j in range(len(base)) if base[j] != out[j]]
            assert diff == [perm.forward[i]]

    def test_symbol_positions_partition(self):
        n_sym = 7
        perm = build_permutation(n_sym)
        seen = set()
        for i in range(n_sym):
            positions = perm.symbol_positions(i)
            assert len(positions) == 16
            assert not positions & seen
            seen |= positions
        assert seen == set(range(16 * n_sym))
        with pytest.raises(IndexError):
            perm.symbol_positions(n_sym)


class TestUnharvest:
    def test_round_trip_random(self):
        rng = random.Random(77)
        for n_sym in range(1, 17):
            a = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            b = [rng.getrandbits(1) for _ in range(8 * n_sym)]
            got_a, got_b = unharvest(harvest(place(a, b)))
            assert (got_a, got_b) == (a, b)

    def test_all_zero(self):
        a, b = unharvest([0] * 48)
        assert a == [0] * 24 and b == [0] * 24

    def test_bad_length(self):
        with pytest.raises(BadLength):
            unharvest([0] * 24)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_round_trip_property(self, data):
        n_sym = data.draw(st.integers(0, 12))
        bits = st.lists(st.integers(0, 1), min_size=8 * n_sym, max_size=8 * n_sym)
        a = data.draw(bits)
        b = data.draw(bits)
        got_a, got_b = unharvest(harvest(place(a, b)))
        assert (got_a, got_b) == (a, b)
