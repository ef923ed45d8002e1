"""Spirale: a one-time-pad hand cipher built on a permuted Vigenere table."""

from .alphabet import ALPHANUMERIC, EXTENDED, LETTERS, Alphabet, load_alphabet, parse_alphabet
from .cipher import KeySet, decrypt, encrypt, normalize_text
from .errors import SpiraleError
from .estimator import SpiraleCipher
from .keygen import derive_keys_from_extracts, frequency_correct
from .keystream import (
    KeystreamGenerator,
    default_lags,
    diagonal_read,
    generate_keystream,
    numeric_recurrence,
    product_matrix,
)
from .permutation import key_to_rank_list, permute_alphabet
from .table import CipheringTable, build_ciphering_table, identity_table

__all__ = [
    "ALPHANUMERIC", "EXTENDED", "LETTERS", "Alphabet", "load_alphabet", "parse_alphabet",
    "KeySet", "decrypt", "encrypt", "normalize_text", "SpiraleError", "SpiraleCipher",
    "derive_keys_from_extracts", "frequency_correct", "KeystreamGenerator", "default_lags",
    "diagonal_read", "generate_keystream", "numeric_recurrence", "product_matrix",
    "key_to_rank_list", "permute_alphabet", "CipheringTable", "build_ciphering_table",
    "identity_table",
]

__version__ = "0.1.0"
