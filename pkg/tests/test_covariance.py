from fractions import Fraction

import pytest

from borcherds import check_translation_covariance
from borcherds.relations import covariance_source_order


@pytest.mark.parametrize("b1, b2", [((1,), (0,)), ((-1,), (1,)), ((2,), (0,))])
def test_theta_11_covariance(a1, phi01, b1, b2):
    check = check_translation_covariance(phi01, a1, 1, 1, b1, b2, 2)
    assert check.holds, check.describe()


@pytest.mark.parametrize("a, n, b1", [(1, 2, (1,)), (2, 1, (1,)), (2, 1, (-1,))])
def test_higher_index_covariance(a1, phi01, a, n, b1):
    check = check_translation_covariance(phi01, a1, a, n, b1, (1,), 2)
    assert check.holds, check.describe()


def test_covariance_in_rank0(rank0, j744):
    assert check_translation_covariance(j744, rank0, 1, 1, (), (), 3).holds


def test_source_order_grows_with_shift(phi01):
    small = covariance_source_order(phi01, 1, 1, Fraction(1), 2)
    large = covariance_source_order(phi01, 1, 1, Fraction(4), 2)
    assert small > 2
    assert large > small
