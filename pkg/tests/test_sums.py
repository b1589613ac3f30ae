import pytest

from gessel_walks.errors import PreconditionViolation
from gessel_walks.identities import sums
from gessel_walks.walk_dp import Region, build_table, shared_table

TABLE = shared_table(Region.QUARTER, 64)
F = TABLE.get


def admissible_triples(n_max, k_max):
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            for r in range(-n, n + k + 1):
                if sums.theorem3_admissible(n, k, r):
                    yield n, k, r


@pytest.mark.parametrize("n,k,r", list(admissible_triples(8, 4)))
def test_prefix_recurrence_matches_dp(n, k, r):
    expected = F(n + k + r, n + k - r, n)
    assert sums.theorem3_rhs(n, k, r, TABLE) == expected
    assert sums.theorem3_rhs_shifted(n, k, r, TABLE) == expected


def test_admissibility_boundary():
    assert sums.theorem3_admissible(0, 1, 1)
    assert not sums.theorem3_admissible(0, 1, 2)
    assert not sums.theorem3_admissible(0, 3, 0)
    assert sums.theorem3_admissible(0, 3, 1)


def test_short_walks_outside_admissible_range_break_the_sum():
    # the split needs a walk at least as long as the prefix
    assert sums.theorem3_rhs(0, 3, 0, TABLE) != F(3, 3, 0)


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("k", range(1, 5))
def test_axis_specialization(n, k):
    expected = F(2 * n + 2 * k, 0, n)
    assert sums.theorem3_axis_rhs(n, k, TABLE) == expected
    assert sums.theorem3_rhs(n, k, n + k, TABLE) == expected


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("k", range(1, 5))
def test_axis_x_recurrence(n, k):
    assert sums.theorem5_rhs(n, k, TABLE) == F(n + 2 * k, n, 0)


def test_parameter_checks():
    with pytest.raises(PreconditionViolation):
        sums.theorem3_rhs(1, 0, 0)
    with pytest.raises(PreconditionViolation):
        sums.theorem3_rhs(1, 1, 3)
    with pytest.raises(PreconditionViolation):
        sums.theorem5_rhs(-1, 1)


def test_table_checks():
    with pytest.raises(PreconditionViolation):
        sums.theorem5_rhs(1, 3, build_table(Region.QUARTER, 2))
    with pytest.raises(PreconditionViolation):
        sums.theorem5_rhs(1, 1, build_table(Region.HALF, 4))


def test_double_sum_prefix():
    assert [sums.diagonal_double_sum(m, TABLE) for m in range(8)] == [1, 2, 7, 21, 78, 260, 988, 3458]


def test_double_sum_is_layer_total():
    for m in range(20):
        assert sums.diagonal_double_sum(m, TABLE) == sum(TABLE.layer(m).values())
