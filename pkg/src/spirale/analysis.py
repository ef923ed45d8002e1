"""Statistics over symbol sequences and structural checks of the keystream.

Reference constants (external standard values):

* ``ENGLISH_IC`` = 0.0667, the index of coincidence of English text
  (Friedman; also quoted in most classical cryptanalysis texts).
* ``CHI2_25_Q999`` = 52.620, the 0.999 quantile of the chi-square
  distribution with 25 degrees of freedom (standard tables, e.g.
  NIST/SEMATECH e-Handbook 1.3.6.7.4).
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .alphabet import LETTERS, Alphabet, Symbols
from .cipher import KeySet, encrypt_with
from .errors import BadLag, BadPosition, BudgetExceeded, TooShort
from .keystream import KeystreamGenerator, diagonal_read, product_matrix
from .table import build_ciphering_table

ENGLISH_IC = 0.0667
UNIFORM_IC_26 = 1 / 26
CHI2_25_Q999 = 52.620
SEARCH_BUDGET = 10 ** 8

# A..Z relative frequencies of English text (Lewand, Cryptological Mathematics)
ENGLISH_FREQUENCIES = {
    "A": 0.08167, "B": 0.01492, "C": 0.02782, "D": 0.04253, "E": 0.12702, "F": 0.02228,
    "G": 0.02015, "H": 0.06094, "I": 0.06966, "J": 0.00153, "K": 0.00772, "L": 0.04025,
    "M": 0.02406, "N": 0.06749, "O": 0.07507, "P": 0.01929, "Q": 0.00095, "R": 0.05987,
    "S": 0.06327, "T": 0.09056, "U": 0.02758, "V": 0.00978, "W": 0.02360, "X": 0.00150,
    "Y": 0.01974, "Z": 0.00074,
}

CHALLENGES = (1, 2, 3, 4)


@dataclass
class AnalysisReport:
    histogram: dict[str, int]
    ic: float
    chi2: float
    autocorr: dict[int, float] = field(default_factory=dict)
    length: int = 0

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "ic": self.ic,
            "chi2": self.chi2,
            "autocorr": dict(self.autocorr),
            "histogram": dict(self.histogram),
        }


def frequency_histogram(alphabet: Alphabet, text: Symbols) -> dict[str, int]:
    """Count of every alphabet symbol (zeros included), in alphabet order."""
    counts = Counter(alphabet.tokenize(text)) if len(text) else Counter()
    return {s: counts.get(s, 0) for s in alphabet}


def index_of_coincidence(text: Sequence) -> float:
    n = len(text)
    if n < 2:
        raise TooShort(f"index of coincidence needs at least 2 symbols, got {n}")
    counts = Counter(text)
    return sum(f * (f - 1) for f in counts.values()) / (n * (n - 1))


def chi_square_uniform(histogram: Mapping[str, int] | Sequence[int]) -> float:
    counts = list(histogram.values()) if isinstance(histogram, Mapping) else list(histogram)
    total = sum(counts)
    if total < 1:
        raise TooShort("chi-square needs at least one observation")
    expected = total / len(counts)
    return sum((f - expected) ** 2 for f in counts) / expected


def autocorrelation_coincidence(text: Sequence, lag: int) -> float:
    """Fraction of positions ``i`` with ``text[i] == text[i + lag]``."""
    if lag < 1 or lag >= len(text):
        raise BadLag(f"lag must lie in [1, {len(text) - 1}], got {lag}")
    pairs = len(text) - lag
    return sum(1 for i in range(pairs) if text[i] == text[i + lag]) / pairs


def repeated_ngrams(text: Sequence, n: int = 3) -> dict[tuple, list[int]]:
    """Positions of every n-gram occurring more than once (Kasiski listing)."""
    positions = defaultdict(list)
    for i in range(len(text) - n + 1):
        positions[tuple(text[i:i + n])].append(i)
    return {g: p for g, p in positions.items() if len(p) > 1}


def ngram_gaps(repeats: Mapping[tuple, list[int]]) -> dict[tuple, list[int]]:
    return {g: [b - a for a, b in zip(p, p[1:])] for g, p in repeats.items()}


def analyze(alphabet: Alphabet, text: Symbols, lags: Iterable[int] = (1,)) -> AnalysisReport:
    tokens = alphabet.tokenize(text)
    hist = frequency_histogram(alphabet, tokens)
    return AnalysisReport(
        histogram=hist,
        ic=index_of_coincidence(tokens),
        chi2=chi_square_uniform(hist),
        autocorr={lag: autocorrelation_coincidence(tokens, lag) for lag in lags},
        length=len(tokens),
    )


def dependency_closure(k: int, d: int, flip_position: int, horizon: int) -> set[int]:
    """Positions (1-based, up to ``horizon``) that depend on ``flip_position``.

    A generated position ``m > k`` reads ``m - k`` and ``m - d``, so the
    closure grows forward by jumps of ``d`` and ``k``; long-key positions
    other than the flipped one never change.
    """
    affected = {flip_position}
    for m in range(k + 1, horizon + 1):
        if (m - k) in affected or (m - d) in affected:
            affected.add(m)
    return affected


def first_double_dependency(k: int, d: int, flip_position: int, horizon: int) -> int | None:
    """First position whose two operands both lie in the closure, if any.

    Up to (excluding) this position every affected symbol has exactly one
    corrupted operand, so the Latin-square property forces a change and the
    measured diff equals the closure. From here on, two corrupted operands
    may cancel by chance, and the diff is only contained in the closure.
    """
    affected = {flip_position}
    for m in range(k + 1, horizon + 1):
        a, b = (m - k) in affected, (m - d) in affected
        if a and b:
            return m
        if a or b:
            affected.add(m)
    return None


def error_propagation_profile(gen: KeystreamGenerator, flip_position: int, horizon: int,
                              replacement: str | None = None) -> set[int]:
    """Flip one long-key symbol, regenerate, and return the 1-based positions that differ."""
    k = gen.k
    if not 1 <= flip_position <= k:
        raise BadPosition(f"flip position must lie in [1, {k}], got {flip_position}")
    if horizon < k:
        raise BadPosition(f"horizon must be at least k={k}, got {horizon}")
    base = gen.table.base
    long_key = gen.prefix(k)
    old = long_key[flip_position - 1]
    if replacement is None:
        replacement = base.symbol_at((base.rank_of(old) + 1) % base.size)
    elif replacement == old:
        raise BadPosition("replacement symbol equals the original")
    flipped = list(long_key)
    flipped[flip_position - 1] = replacement
    a = gen.prefix_ranks(horizon)
    b = gen.with_long_key(flipped).prefix_ranks(horizon)
    return {i + 1 for i in range(horizon) if a[i] != b[i]}


def exhaustive_search_small(alphabet: Alphabet, known_plaintext: Symbols, ciphertext: Symbols,
                            key_length: int, budget: int = SEARCH_BUDGET) -> set[KeySet]:
    """Every key set of ``key_length`` that maps ``known_plaintext`` onto ``ciphertext``."""
    n = alphabet.size
    if n ** (4 * key_length) > budget:
        raise BudgetExceeded(f"{n}^{4 * key_length} key sets exceed the budget of {budget}")
    plain = alphabet.tokenize(known_plaintext)
    target = alphabet.tokenize(ciphertext)
    if len(plain) != len(target):
        raise ValueError("known plaintext and ciphertext differ in length")
    keys = [("".join(p) if alphabet.single_char else p)
            for p in itertools.product(alphabet.symbols, repeat=key_length)]
    found = set()
    for k1, k2 in itertools.product(keys, repeat=2):
        table = build_ciphering_table(alphabet, k1, k2)
        for k3, k4 in itertools.product(keys, repeat=2):
            long_key = diagonal_read(product_matrix(table, k3, k4))
            gen = KeystreamGenerator(long_key, table)
            if encrypt_with(table, gen, plain) == target:
                found.add(KeySet(k1, k2, k3, k4))
    return found


def load_challenge(number: int) -> str:
    """Challenge ciphertext ``number`` (1..4), whitespace stripped."""
    if number not in CHALLENGES:
        raise ValueError(f"challenge must be one of {CHALLENGES}")
    res = resources.files("spirale") / "fixtures" / "challenges" / f"ciphertext{number}.txt"
    return "".join(res.read_text(encoding="utf-8").split())


def english_like_text(length: int, rng, alphabet: Alphabet = LETTERS) -> str:
    """Letters drawn independently with English unigram frequencies."""
    letters = [s for s in alphabet if s in ENGLISH_FREQUENCIES]
    weights = [ENGLISH_FREQUENCIES[s] for s in letters]
    return "".join(rng.choices(letters, weights=weights, k=length))
