"""Long key and keystream generation.

The long key is the product matrix ``Y[p][q] = combine(K3[p], K4[q])``
read along ascending anti-diagonals. The keystream starts with the long
key (length ``k``) and continues with the lagged recurrence

    X[n] = combine(X[n - k], X[n - d])

(1-based positions, older term as the row operand). The lag pair must
not satisfy ``k == 2 * d``: the stream would then split into short
interleaved Fibonacci-like series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .alphabet import Symbols
from .errors import BadSeedLength, EmptyKey, InvalidLag
from .table import CipheringTable


@dataclass(frozen=True)
class LongKeyMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def product_matrix(table: CipheringTable, k3: Symbols, k4: Symbols) -> LongKeyMatrix:
    base = table.base
    rows = tuple(base.tokenize(k3)) if k3 else ()
    cols = tuple(base.tokenize(k4)) if k4 else ()
    if not rows or not cols:
        raise EmptyKey("long-key matrix needs non-empty row and column keys")
    cells = tuple(tuple(table.combine(r, c) for c in cols) for r in rows)
    return LongKeyMatrix(rows, cols, cells)


def diagonal_read(matrix: LongKeyMatrix | Sequence[Sequence]) -> list:
    """Read anti-diagonals from the top-left corner, each from bottom-left up to top-right."""
    cells = matrix.cells if isinstance(matrix, LongKeyMatrix) else matrix
    n_rows, n_cols = len(cells), len(cells[0])
    out = []
    for s in range(n_rows + n_cols - 1):
        for p in range(min(s, n_rows - 1), max(0, s - n_cols + 1) - 1, -1):
            out.append(cells[p][s - p])
    return out


def default_lags(k: int) -> tuple[int, int]:
    """``(k, d)`` with ``d = (k - 1) // 2``, the lag nearest the middle that avoids ``k == 2d``.

    Long keys of length 1 or 2 admit no such lag; they fall back to
    ``d = 1`` and must be run with ``strict=False``.
    """
    if k < 1:
        raise InvalidLag(f"long key length must be positive, got {k}")
    if k < 3:
        return k, 1
    return k, (k - 1) // 2


def check_lags(k: int, d: int, strict: bool = True) -> None:
    if strict:
        if not 0 < d < k:
            raise InvalidLag(f"need 0 < d < k, got d={d}, k={k}")
        if k == 2 * d:
            raise InvalidLag(f"k = 2d (k={k}, d={d}) splits the stream into interleaved series")
    elif not 0 < d <= k:
        raise InvalidLag(f"need 0 < d <= k, got d={d}, k={k}")


class KeystreamGenerator:
    """Stateful keystream source over a ciphering table.

    ``next()``/iteration consume the stream; :meth:`prefix` and
    :func:`generate_keystream` return the first ``n`` symbols without
    touching the consumption counter.
    """

    def __init__(self, long_key: Symbols, table: CipheringTable, d: int | None = None,
                 strict: bool | None = None):
        base = table.base
        seed = base.ranks(long_key) if long_key else []
        if not seed:
            raise EmptyKey("long key is empty")
        k = len(seed)
        if d is None:
            _, d = default_lags(k)
            if strict is None:
                strict = k >= 3
        if strict is None:
            strict = True
        check_lags(k, d, strict)
        self.table = table
        self.k = k
        self.d = d
        self.strict = strict
        self.emitted = 0
        self._ranks = seed

    @property
    def long_key(self) -> list[str]:
        return self.table.base.from_ranks(self._ranks[:self.k])

    def with_long_key(self, long_key: Symbols) -> "KeystreamGenerator":
        return KeystreamGenerator(long_key, self.table, d=self.d, strict=self.strict)

    def _extend(self, n: int) -> None:
        buf = self._ranks
        if len(buf) >= n:
            return
        row, col = self.table.row_rank, self.table.col_rank
        size = self.table.size
        k, d = self.k, self.d
        for m in range(len(buf), n):
            buf.append((row[buf[m - k]] + col[buf[m - d]]) % size)

    def prefix_ranks(self, n: int) -> list[int]:
        if n < 0:
            raise ValueError("length must be non-negative")
        self._extend(n)
        return self._ranks[:n]

    def prefix(self, n: int) -> list[str]:
        return self.table.base.from_ranks(self.prefix_ranks(n))

    def __iter__(self) -> Iterator[str]:
        return self

    def __next__(self) -> str:
        self._extend(self.emitted + 1)
        sym = self.table.base.symbol_at(self._ranks[self.emitted])
        self.emitted += 1
        return sym

    def take(self, n: int) -> list[str]:
        self._extend(self.emitted + n)
        out = self.table.base.from_ranks(self._ranks[self.emitted:self.emitted + n])
        self.emitted += n
        return out

    def __repr__(self) -> str:
        return f"KeystreamGenerator(k={self.k}, d={self.d}, emitted={self.emitted})"


def generate_keystream(gen: KeystreamGenerator, n: int) -> list[str]:
    return gen.prefix(n)


def numeric_recurrence(seed: Sequence[int], d: int, k: int, modulus: int, n: int,
                       strict: bool = False) -> list[int]:
    """Integer lagged recurrence ``x[m] = (x[m - d] + x[m - k]) mod modulus``.

    Returns the first ``n`` terms, seed included. Values are residues in
    ``[0, modulus - 1]``; see :func:`to_one_based` for the 1..M display.
    ``strict`` applies the ``k != 2d`` guard; the textbook ``d = 1``
    examples need it off.
    """
    if len(seed) != k:
        raise BadSeedLength(f"seed has {len(seed)} values, lag k is {k}")
    check_lags(k, d, strict)
    if any(not 0 <= v < modulus for v in seed):
        raise ValueError(f"seed values must lie in [0, {modulus - 1}]")
    out = list(seed[:n])
    for m in range(len(out), n):
        out.append((out[m - d] + out[m - k]) % modulus)
    return out


def to_one_based(values: Sequence[int], modulus: int) -> list[int]:
    return [v if v else modulus for v in values]


def from_one_based(values: Sequence[int], modulus: int) -> list[int]:
    return [v % modulus for v in values]
