"""Dual-lane affine/Caesar cipher with a rice-paddy bit transposition.

A classical, deterministic symmetric scheme: the plaintext is encrypted
twice (an iterated affine lane and an iterated caesar lane), both lanes
are expanded to bits and interleaved through a boustrophedon matrix, and
decryption cross-checks the lanes as an integrity test.  The analysis
module measures the scheme's diffusion and demonstrates its small-keyspace
weaknesses.  Educational; do not protect real secrets with it.
"""

from .analysis import (
    AttackResult,
    DiffusionReport,
    avalanche,
    brute_force,
    caesar_lane_attack,
    chi_squared_english,
    english_score,
    frequency_profile,
    is_degenerate_key,
    keyspace_size,
    mean_fraction,
    printable_ratio,
)
from .bitmatrix import (
    BitMatrix,
    PermutationMap,
    bits_to_symbol,
    bits_to_symbols,
    build_permutation,
    harvest,
    place,
    symbol_to_bits,
    symbols_to_bits,
    unharvest,
)
from .ciphers import (
    ALPHABET_SIZES,
    LANE_AFFINE,
    LANE_CAESAR,
    CipherParams,
    affine_decrypt_symbol,
    affine_encrypt_symbol,
    caesar_decrypt_symbol,
    caesar_encrypt_symbol,
    iterate_decrypt,
    iterate_encrypt,
    mod_inverse,
)
from .errors import (
    BadLength,
    CipherError,
    IntegrityMismatch,
    InvalidKey,
    IterationBoundExceeded,
    LengthMismatch,
    NoInverse,
    NonLetterInput,
    NonLetterOutput,
    NotFound,
    ParseError,
)
from .pipeline import (
    CipherText,
    decrypt,
    encrypt,
    format_ciphertext,
    keygen,
    parse_ciphertext,
    parse_key,
    serialize_key,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET_SIZES",
    "AttackResult",
    "BadLength",
    "BitMatrix",
    "CipherError",
    "CipherParams",
    "CipherText",
    "DiffusionReport",
    "IntegrityMismatch",
    "InvalidKey",
    "IterationBoundExceeded",
    "LANE_AFFINE",
    "LANE_CAESAR",
    "LengthMismatch",
    "NoInverse",
    "NonLetterInput",
    "NonLetterOutput",
    "NotFound",
    "ParseError",
    "PermutationMap",
    "affine_decrypt_symbol",
    "affine_encrypt_symbol",
    "avalanche",
    "bits_to_symbol",
    "bits_to_symbols",
    "brute_force",
    "build_permutation",
    "caesar_decrypt_symbol",
    "caesar_encrypt_symbol",
    "caesar_lane_attack",
    "chi_squared_english",
    "decrypt",
    "encrypt",
    "english_score",
    "format_ciphertext",
    "frequency_profile",
    "harvest",
    "is_degenerate_key",
    "iterate_decrypt",
    "iterate_encrypt",
    "keygen",
    "keyspace_size",
    "mean_fraction",
    "mod_inverse",
    "parse_ciphertext",
    "parse_key",
    "place",
    "printable_ratio",
    "serialize_key",
    "symbol_to_bits",
    "symbols_to_bits",
    "unharvest",
]
