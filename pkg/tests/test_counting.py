import threading

import pytest

from godelchi.counting import CountTable, P, T, table, tree_table

# reference triangle of published counts P(n,k), rows n = 1..9, columns k = 1..7
TABLE_1 = [
    [2, 3, 3, 3, 3, 3, 3],
    [4, 9, 11, 11, 11, 11, 11],
    [8, 27, 45, 51, 51, 51, 51],
    [16, 81, 191, 275, 299, 299, 299],
    [32, 243, 813, 1563, 2043, 2163, 2163],
    [64, 729, 3431, 8891, 14771, 18011, 18731],
    [128, 2187, 14325, 49731, 106851, 158931, 184131],
    [256, 6561, 59231, 272675, 757019, 1407179, 1921259],
    [512, 19683, 242973, 1468203, 5228043, 12200883, 20214483],
]


@pytest.mark.parametrize("n, k, expected", [(0, 1, 1), (1, 2, 1), (2, 2, 3), (2, 4, 0), (5, 1, 1)])
def test_T(n, k, expected):
    assert T(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(2, 2, 9), (6, 3, 3431), (9, 7, 20214483)])
def test_P(n, k, expected):
    assert P(n, k) == expected


def test_table_small():
    assert table(1, 1) == [[2]]
    assert table(2, 7)[1] == [4, 9, 11, 11, 11, 11, 11]
    assert table(5, 5)[4] == [32, 243, 813, 1563, 2043]


def test_table_1():
    assert table(9, 7) == TABLE_1


def test_tree_table():
    assert tree_table(2, 2) == [[1, 1], [1, 3]]


@pytest.mark.parametrize("n", range(1, 25))
def test_P_row_identities(n):
    assert P(n, 1) == 2**n
    row = [P(n, k) for k in range(1, n + 4)]
    assert row == sorted(row)
    assert row[n:] == [row[n]] * 3
    tree_sizes = [sum(T(j, k) for k in range(1, j + 2)) for j in range(n + 1)]
    from math import comb

    assert sum(comb(n, j) * tree_sizes[j] for j in range(n + 1)) == P(n, n + 1)


def test_big_integers_exceed_64_bits():
    assert P(30, 31) > 2**64


def test_invalid_arguments():
    with pytest.raises(ValueError):
        P(0, 1)
    with pytest.raises(ValueError):
        T(1, 0)
    with pytest.raises(ValueError):
        table(0, 3)


def test_shared_table_under_threads():
    ct = CountTable()
    results = []

    def work():
        results.append([ct.P(n, k) for n in range(1, 12) for k in range(1, 13)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0][:7] == TABLE_1[0]
