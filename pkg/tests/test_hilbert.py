import math

import pytest

from cmprimes import (
    build_frame,
    goebel_bound,
    group_from_generators,
    invariant_dimension,
    secondary_degrees,
)
from cmprimes.hilbert import (
    fixed_monomial_series,
    invariant_dimension_by_orbits,
    invariant_series,
    secondary_degree_bound,
)

from conftest import alternating, even_signed, order20_s5, symmetric, young_alternating


def test_goebel_bound_values():
    assert goebel_bound(5) == 10
    assert goebel_bound(2) == 2
    assert goebel_bound(6) == 15
    assert secondary_degree_bound(5) == 10
    assert secondary_degree_bound(3) == 3


def test_fixed_monomial_series():
    # a 3-cycle fixes one monomial in each degree divisible by 3
    assert fixed_monomial_series([3], 7) == [1, 0, 0, 1, 0, 0, 1, 0]
    # identity on two points: all monomials
    assert fixed_monomial_series([1, 1], 3) == [1, 2, 3, 4]


def test_invariant_dimension_examples():
    assert invariant_dimension(alternating(3), 3) == 4
    assert invariant_dimension(symmetric(3), 2) == 2
    trivial = group_from_generators(2, [])
    assert invariant_dimension(trivial, 3) == 4


@pytest.mark.parametrize("G", [symmetric(3), alternating(3), alternating(4), order20_s5()])
def test_burnside_matches_orbit_enumeration(G):
    for d in range(0, 9):
        assert invariant_dimension(G, d) == invariant_dimension_by_orbits(G, d)


def test_signed_dimension_by_orbits():
    G = even_signed(3)
    # degree 2: only the all-even orbit x1^2+x2^2+x3^2 survives
    assert invariant_dimension(G, 2) == 1
    assert invariant_dimension(G, 1) == 0
    assert invariant_dimension(G, 3) == 1


def test_secondary_degrees_a3():
    hd = secondary_degrees(build_frame(alternating(3)))
    assert hd.degrees == (0, 3)
    assert hd.tau == {0: 1, 3: 1}


def test_secondary_degrees_order20():
    hd = secondary_degrees(build_frame(order20_s5()))
    assert hd.degrees == (0, 4, 5, 6, 7, 8)
    assert sum(hd.degrees) == 30


def test_secondary_degrees_full_symmetric():
    hd = secondary_degrees(build_frame(symmetric(4)))
    assert hd.degrees == (0,)


def test_secondary_degrees_young():
    hd = secondary_degrees(build_frame(young_alternating(5), "young"))
    assert hd.degrees == (0, 4)


def test_secondary_degrees_signed():
    hd = secondary_degrees(build_frame(even_signed(5)))
    assert hd.degrees == (0, 5)


def test_degree_sum_is_delta_degree():
    from cmprimes.frame import delta_degree

    for G, ambient in [
        (alternating(4), None),
        (order20_s5(), None),
        (even_signed(3), None),
        (young_alternating(5), "young"),
    ]:
        frame = build_frame(G, ambient)
        hd = secondary_degrees(frame)
        assert sum(hd.degrees) == delta_degree(frame)


def test_invariant_series_prefix():
    G = alternating(3)
    assert invariant_series(G, 4) == [invariant_dimension(G, d) for d in range(5)]
