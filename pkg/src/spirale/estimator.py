from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cipher import build_stream, decrypt_with, encrypt_with, group, normalize_text
from .validation import check_alphabet, check_keyset, check_messages


class SpiraleCipher(TransformerMixin, BaseEstimator):
    """Spirale one-time-pad cipher as a stateless text transformer.

    ``transform`` encrypts, ``inverse_transform`` decrypts. ``fit`` learns
    nothing from data; it validates the parameters and builds the
    ciphering table and long key once, so a fitted instance can process
    many messages.

    Parameters
    ----------
    keys : str or sequence of 4 str
        K1..K4, e.g. ``"NVIKKIH,CTSQEOU,DNGDKSZ,EAIWDSH"``.
    alphabet : None, str or Alphabet
        ``None`` for 26 letters, a built-in name (``"letters"``,
        ``"alphanumeric"``, ``"extended"``), a file path, or an Alphabet.
    short_lag : int or None
        Keystream lag ``d``; ``None`` picks ``(k - 1) // 2``.
    normalize : bool
        Strip non-alphabet characters from plaintext before encrypting.
    group_size : int
        Insert a space every ``group_size`` output symbols; 0 for none.

    Examples
    --------
    >>> c = SpiraleCipher(keys="NVIKKIH,CTSQEOU,DNGDKSZ,EAIWDSH").fit()
    >>> c.inverse_transform(c.transform(["We got into Milan"]))
    ['WEGOTINTOMILAN']
    """

    def __init__(self, keys=None, alphabet=None, short_lag=None, normalize=True, group_size=0):
        self.keys = keys
        self.alphabet = alphabet
        self.short_lag = short_lag
        self.normalize = normalize
        self.group_size = group_size

    def fit(self, X=None, y=None):
        self.alphabet_ = check_alphabet(self.alphabet)
        self.keyset_ = check_keyset(self.keys, self.alphabet_)
        self.table_, self.generator_ = build_stream(self.keyset_, self.alphabet_, d=self.short_lag)
        self.long_key_ = self.generator_.long_key
        self.lags_ = (self.generator_.k, self.generator_.d)
        return self

    def _format(self, tokens):
        return group(tokens, self.group_size)

    def transform(self, X):
        check_is_fitted(self, "table_")
        out = []
        for msg in check_messages(X):
            plain = normalize_text(self.alphabet_, msg) if self.normalize else msg
            out.append(self._format(encrypt_with(self.table_, self.generator_, plain)))
        return out

    def inverse_transform(self, X):
        check_is_fitted(self, "table_")
        out = []
        for msg in check_messages(X):
            if self.group_size:
                msg = msg.replace(" ", "") if " " not in self.alphabet_ else msg
            out.append(self._format(decrypt_with(self.table_, self.generator_, msg)))
        return out

    def keystream(self, n):
        check_is_fitted(self, "table_")
        return self.generator_.prefix(n)
