import pytest

from tropic.kontsevich import kontsevich


def test_initial_value():
    assert kontsevich(1) == {1: 1}


def test_small_values():
    table = kontsevich(4)
    # N_2: the single split (1,1) gives C(2,1) - C(2,2) = 1
    assert table[2] == 1
    # N_3: (1,2) contributes 0, (2,1) contributes 20 - 8 = 12
    assert table[3] == 12
    assert table[4] == 620


def test_larger_values_frozen():
    table = kontsevich(6)
    # frozen after the first exact run
    assert table[5] == 87304
    assert table[6] == 26312976


def test_all_positive_through_twelve():
    table = kontsevich(12)
    assert all(table[d] > 0 for d in range(1, 13))


def test_rejects_bad_bound():
    with pytest.raises(ValueError):
        kontsevich(0)
