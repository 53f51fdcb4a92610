"""End-to-end encryption/decryption plus the key and ciphertext file formats.

Both lanes encrypt the same plaintext, so the ciphertext carries the
message twice (16 bits per symbol).  decrypt() turns that redundancy into
an integrity check: the two recovered plaintexts must agree bit for bit,
otherwise the data was corrupted or the key is wrong.

Byte mode (n=256) operates on raw bytes.  Letters mode (n=26) accepts only
letters, folds them to uppercase, and carries lane symbols as the letter's
character code so they survive the 8-bit matrix stage.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .bitmatrix import bits_to_symbols, build_permutation, symbols_to_bits, unharvest
from .ciphers import (
    ALPHABET_SIZES,
    LANE_AFFINE,
    LANE_CAESAR,
    CipherParams,
    iterate_decrypt,
    iterate_encrypt,
)
from .errors import (
    BadLength,
    IntegrityMismatch,
    InvalidKey,
    NonLetterInput,
    NonLetterOutput,
    ParseError,
)

KEY_FIELDS = ("mode", "n", "m", "b", "k", "ra", "rc")

CIPHERTEXT_HEX_HEADER = "fmt=hex"

_HEX_DIGITS = "0123456789abcdef"


@dataclass(frozen=True)
class CipherText:
    """An encrypted message: 16 bits per plaintext symbol."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) % 16:
            raise BadLength(f"ciphertext bit count {len(self.bits)} is not a multiple of 16")

    @property
    def n_symbols(self) -> int:
        return len(self.bits) // 16

    def to_bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def to_hex(self) -> str:
        digits = []
        for i in range(0, len(self.bits), 4):
            b0, b1, b2, b3 = self.bits[i:i + 4]
            digits.append(_HEX_DIGITS[b0 << 3 | b1 << 2 | b2 << 1 | b3])
        return "".join(digits)

    @classmethod
    def from_bitstring(cls, text: str) -> "CipherText":
        bits = []
        for ch in text:
            if ch not in "01":
                raise ParseError(f"ciphertext may contain only 0 and 1, got {ch!r}")
            bits.append(ch == "1")
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def from_hex(cls, text: str) -> "CipherText":
        bits = []
        for ch in text.lower():
            if ch not in _HEX_DIGITS:
                raise ParseError(f"invalid hex digit {ch!r}")
            v = _HEX_DIGITS.index(ch)
            bits.extend(((v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1))
        return cls(tuple(bits))


def _plaintext_to_symbols(plaintext, params: CipherParams) -> list[int]:
    if params.mode == "byte":
        return list(plaintext)
    out = []
    for byte in plaintext:
        if 65 <= byte <= 90:
            out.append(byte - 65)
        elif 97 <= byte <= 122:
            out.append(byte - 97)
        else:
            raise NonLetterInput(f"byte {byte:#04x} is not a letter")
    return out


def _symbols_to_plaintext(symbols, params: CipherParams) -> bytes:
    if params.mode == "byte":
        return bytes(symbols)
    return bytes(65 + s for s in symbols)


def _lane_codes(symbols, params: CipherParams) -> list[int]:
    # Byte value whose 8 bits will represent each lane symbol in the matrix.
    if params.mode == "byte":
        return list(symbols)
    return [65 + s for s in symbols]


def _codes_to_lane(codes, params: CipherParams) -> list[int]:
    if params.mode == "byte":
        return list(codes)
    out = []
    for code in codes:
        if not 65 <= code <= 90:
            raise NonLetterOutput(f"lane byte {code:#04x} is outside A-Z")
        out.append(code - 65)
    return out


def encrypt(plaintext, key: CipherParams) -> CipherText:
    """Encrypt plaintext bytes under key.

    The affine and caesar lanes each encrypt the whole message; their bit
    expansions are interleaved through the planting/harvest permutation.
    """
    symbols = _plaintext_to_symbols(plaintext, key)
    lane_a = iterate_encrypt(symbols, key, LANE_AFFINE)
    lane_b = iterate_encrypt(symbols, key, LANE_CAESAR)
    bits_a = symbols_to_bits(_lane_codes(lane_a, key))
    bits_b = symbols_to_bits(_lane_codes(lane_b, key))
    perm = build_permutation(len(symbols))
    return CipherText(tuple(perm.apply(bits_a + bits_b)))


def decrypt(ciphertext: CipherText, key: CipherParams) -> bytes:
    """Decrypt and cross-check both lanes.

    Raises IntegrityMismatch when the lanes disagree, which any single
    corrupted bit or wrong key causes.
    """
    bits_a, bits_b = unharvest(ciphertext.bits)
    lane_a = _codes_to_lane(bits_to_symbols(bits_a), key)
    lane_b = _codes_to_lane(bits_to_symbols(bits_b), key)
    plain_a = iterate_decrypt(lane_a, key, LANE_AFFINE)
    plain_b = iterate_decrypt(lane_b, key, LANE_CAESAR)
    if plain_a != plain_b:
        raise IntegrityMismatch("affine and caesar lanes disagree (corrupt data or wrong key)")
    return _symbols_to_plaintext(plain_a, key)


def keygen(mode: str = "byte", seed=None) -> CipherParams:
    """Sample a uniformly random valid key for the given mode.

    Without a seed the system RNG is used; pass a seed for reproducible
    keys (test harnesses, the CLI --seed flag).
    """
    try:
        n = ALPHABET_SIZES[mode]
    except KeyError:
        raise ValueError(f"mode must be one of {sorted(ALPHABET_SIZES)}, got {mode!r}") from None
    rng = random.Random(seed) if seed is not None else random.SystemRandom()
    m = rng.randrange(1, n)
    while gcd(m, n) != 1:
        m = rng.randrange(1, n)
    b = rng.randrange(1, n)
    k = rng.randrange(1, n)
    return CipherParams(n=n, m=m, b=b, k=k, ra=rng.randint(1, b), rc=rng.randint(1, k))


def serialize_key(key: CipherParams) -> str:
    """Render a key in the line-based key-file format."""
    return (
        f"mode={key.mode}\n"
        f"n={key.n}\n"
        f"m={key.m}\n"
        f"b={key.b}\n"
        f"k={key.k}\n"
        f"ra={key.ra}\n"
        f"rc={key.rc}\n"
    )


def parse_key(text: str) -> CipherParams:
    """Parse key-file text.

    One name=value pair per line, any order; '#' starts a comment.  Raises
    ParseError for malformed text and InvalidKey for well-formed text whose
    values violate a key constraint.
    """
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"line {lineno}: expected name=value, got {raw.strip()!r}")
        name = name.strip()
        if name not in KEY_FIELDS:
            raise ParseError(f"line {lineno}: unknown field {name!r}")
        if name in fields:
            raise ParseError(f"line {lineno}: duplicate field {name!r}")
        fields[name] = value.strip()
    missing = [f for f in KEY_FIELDS if f not in fields]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    mode = fields["mode"]
    if mode not in ALPHABET_SIZES:
        raise ParseError(f"mode must be 'byte' or 'letters', got {mode!r}")
    numbers = {}
    for name in ("n", "m", "b", "k", "ra", "rc"):
        try:
            numbers[name] = int(fields[name])
        except ValueError:
            raise ParseError(f"field {name}: not an integer: {fields[name]!r}") from None
    if numbers["n"] != ALPHABET_SIZES[mode]:
        raise InvalidKey(f"mode={mode} requires n={ALPHABET_SIZES[mode]}, got n={numbers['n']}")
    return CipherParams(**numbers)


def format_ciphertext(ciphertext: CipherText, fmt: str = "bits") -> str:
    """Ciphertext file body: a line of 0/1 digits, or a hex line after a
    'fmt=hex' header."""
    if fmt == "bits":
        return ciphertext.to_bitstring() + "\n"
    if fmt == "hex":
        return CIPHERTEXT_HEX_HEADER + "\n" + ciphertext.to_hex() + "\n"
    raise ValueError(f"format must be 'bits' or 'hex', got {fmt!r}")


def parse_ciphertext(text: str) -> CipherText:
    """Inverse of format_ciphertext; detects the hex header automatically."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if lines and lines[0] == CIPHERTEXT_HEX_HEADER:
        return CipherText.from_hex("".join(lines[1:]))
    return CipherText.from_bitstring("".join(lines))
