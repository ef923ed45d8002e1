"""Input checks shared by the estimator and the command line."""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .alphabet import BUILTIN, LETTERS, Alphabet, load_alphabet
from .cipher import KeySet


def check_alphabet(alphabet: Alphabet | str | Sequence[str] | None) -> Alphabet:
    """Resolve ``None`` (26 letters), a built-in name, a file path, or a token sequence."""
    if alphabet is None:
        return LETTERS
    if isinstance(alphabet, Alphabet):
        return alphabet
    if isinstance(alphabet, str):
        if alphabet in BUILTIN:
            return BUILTIN[alphabet]
        if os.path.isfile(alphabet):
            return load_alphabet(alphabet)
        return Alphabet(alphabet)
    return Alphabet(alphabet)


def check_keyset(keys, alphabet: Alphabet) -> KeySet:
    if keys is None:
        raise ValueError("keys must be given as four equal-length strings")
    ks = KeySet.coerce(keys)
    ks.tokens(alphabet)
    return ks


def check_messages(X) -> list[str]:
    """Accept one string or an iterable of strings; always return a list."""
    if isinstance(X, str):
        return [X]
    if hasattr(X, "ravel"):  # numpy/pandas column
        X = X.ravel().tolist()
    messages = list(X) if isinstance(X, Iterable) else None
    if messages is None or not all(isinstance(m, str) for m in messages):
        raise TypeError("expected a string or an iterable of strings")
    return messages
