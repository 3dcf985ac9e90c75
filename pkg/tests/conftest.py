"""Shared group builders for the test suite."""

from __future__ import annotations

import pytest

from cmprimes import Permutation, group_from_generators


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def alternating(n):
    gens = [cyc(n, (i, i + 1, i + 2)) for i in range(1, n - 1)]
    return group_from_generators(n, gens)


def symmetric(n):
    if n == 1:
        return group_from_generators(1, [])
    gens = [cyc(n, (1, 2)), cyc(n, tuple(range(1, n + 1)))]
    return group_from_generators(n, gens)


def order20_s5():
    return group_from_generators(5, [cyc(5, (1, 5, 4, 2, 3)), cyc(5, (2, 3, 4, 5))])


def order36_s6():
    return group_from_generators(
        6,
        [
            cyc(6, (2, 3, 6)),
            cyc(6, (1, 3, 4, 6), (2, 5)),
            cyc(6, (1, 4), (3, 6)),
            cyc(6, (1, 5, 4), (2, 3, 6)),
        ],
    )


def even_signed(n):
    """G(2,2,n): signed permutations with an even number of sign flips."""
    flip2 = Permutation(range(n), [-1, -1] + [1] * (n - 2))
    gens = [flip2, cyc(n, (1, 2))]
    if n >= 3:
        gens.append(cyc(n, tuple(range(1, n + 1))))
    return group_from_generators(n, gens)


def young_alternating(n):
    """The parity-linked copy of S_{n-2} inside S_{n-2} x S_2."""
    gens = [cyc(n, (1, 2), (n - 1, n)), cyc(n, (1, 2, 3))]
    return group_from_generators(n, gens)


@pytest.fixture(scope="session")
def a3():
    return alternating(3)


@pytest.fixture(scope="session")
def a4():
    return alternating(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def g20():
    return order20_s5()


@pytest.fixture(scope="session")
def g36():
    return order36_s6()
