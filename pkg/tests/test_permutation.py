import pytest
from hypothesis import given, settings, strategies as st

from spirale.alphabet import LETTERS, Alphabet
from spirale.errors import EmptyKey, NotInAlphabet
from spirale.permutation import key_to_rank_list, new_ranks, permutation_order, permute_alphabet


def stepping_oracle(size, rank_list):
    """Literal hand procedure: walk a cursor leftward over unpicked cells, one step at a time."""
    picked = [False] * size
    cursor = size  # one past the rightmost cell
    order, steps, i = [], 0, 0
    while len(order) < size:
        count = rank_list[i % len(rank_list)]
        while count:
            cursor = (cursor - 1) % size
            if not picked[cursor]:
                count -= 1
                steps += 1
        picked[cursor] = True
        order.append(cursor)
        i += 1
    return order, steps


@pytest.mark.parametrize("key, ranks", [
    ("BHMAY", [2, 8, 13, 1, 25]),
    ("NVIKKIH", [14, 22, 9, 11, 11, 9, 8]),
    ("CTSQEOU", [3, 20, 19, 17, 5, 15, 21]),
    ("A", [1]),
])
def test_rank_list(key, ranks):
    assert key_to_rank_list(LETTERS, key) == ranks


def test_rank_list_errors():
    with pytest.raises(EmptyKey):
        key_to_rank_list(LETTERS, "")
    with pytest.raises(NotInAlphabet):
        key_to_rank_list(LETTERS, "BH MAY")


@pytest.mark.parametrize("key, expected", [
    ("NVIKKIH", "MQGVIYOWRDLUEPKNTJCAXBSZHF"),
    ("CTSQEOU", "XDJQLTSOMIHBANFPUWECVGKZYR"),
])
def test_worked_permutations(key, expected):
    assert "".join(permute_alphabet(LETTERS, key)) == expected


def test_example_prefix():
    assert "".join(permute_alphabet(LETTERS, "BHMAY")).startswith("YQDCZWNVUK")


def test_new_rank_row():
    permuted = permute_alphabet(LETTERS, "NVIKKIH")
    assert new_ranks(LETTERS, permuted) == [
        20, 22, 19, 10, 13, 26, 3, 25, 5, 18, 15, 11, 1, 16, 7, 14, 2, 9, 23, 17, 12, 4, 8, 21, 6, 24]


def test_example_new_ranks_partial():
    # the cells printed after the first ten picks
    ranks = dict(zip(LETTERS, new_ranks(LETTERS, permute_alphabet(LETTERS, "BHMAY"))))
    assert {s: ranks[s] for s in "CDKNQUVWYZ"} == dict(C=4, D=3, K=10, N=7, Q=2, U=9, V=8, W=6, Y=1, Z=5)


def test_sensitivity():
    assert permute_alphabet(LETTERS, "ZZZ") != permute_alphabet(LETTERS, "AAA")


@settings(max_examples=300)
@given(st.integers(2, 64).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), min_size=1, max_size=12))))
def test_fast_path_matches_stepping_oracle(case):
    size, ranks = case
    order, steps = stepping_oracle(size, ranks)
    assert permutation_order(size, ranks) == order
    assert sorted(order) == list(range(size))
    assert steps <= size * max(ranks)


@given(st.integers(2, 64), st.data())
def test_bijection_and_determinism(size, data):
    alpha = Alphabet(f"s{i}" for i in range(size))
    key = data.draw(st.lists(st.sampled_from(alpha.symbols), min_size=1, max_size=10))
    out = permute_alphabet(alpha, key)
    assert sorted(out.symbols) == sorted(alpha.symbols)
    assert out == permute_alphabet(alpha, key)
