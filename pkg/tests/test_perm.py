import pytest

from cmprimes import (
    Group,
    ParseError,
    Permutation,
    UnsupportedSizeError,
    build_frame,
    count_reflections,
    cycle_type_of_map,
    group_from_generators,
    hyperoctahedral_group,
    symmetric_group,
    young_group,
)

from conftest import alternating, cyc, even_signed, order20_s5, order36_s6, symmetric


def test_identity_and_composition():
    e = Permutation.identity(4)
    s = cyc(4, (1, 2, 3))
    assert s * e == s == e * s
    assert s * s.inverse() == e
    assert (s * s * s) == e


def test_composition_order():
    # (self * other) applies other first
    a = cyc(3, (1, 2))
    b = cyc(3, (2, 3))
    ab = a * b
    # b: 2->3, then a: 3 fixed => 2 -> 3
    assert ab.images[1] == 2
    assert ab == cyc(3, (1, 2, 3))


def test_signed_composition_and_inverse():
    g = Permutation([1, 0, 2], [1, -1, 1])  # x1 -> x2, x2 -> -x1
    h = g * g
    assert h.images == (0, 1, 2)
    assert h.signs == (-1, -1, 1)
    assert g * g.inverse() == Permutation.identity(3)


def test_apply_to_point():
    g = cyc(3, (1, 2))
    assert g.apply_to_point((1, 2, 3)) == (2, 1, 3)
    flip = Permutation(range(3), [-1, 1, 1])
    assert flip.apply_to_point((5, 6, 7)) == (-5, 6, 7)


def test_bad_permutations_rejected():
    with pytest.raises(ParseError):
        Permutation([0, 0, 1])
    with pytest.raises(ParseError):
        Permutation([0, 1], [1, 2])
    with pytest.raises(ParseError):
        Permutation.from_cycles(3, [(1, 1)])
    with pytest.raises(ParseError):
        Permutation.from_cycles(3, [(1, 4)])


@pytest.mark.parametrize(
    "n, gens, order",
    [
        (5, [cyc(5, (1, 5, 4, 2, 3)), cyc(5, (2, 3, 4, 5))], 20),
        (6, [cyc(6, (2, 3, 6)), cyc(6, (1, 3, 4, 6), (2, 5)),
             cyc(6, (1, 4), (3, 6)), cyc(6, (1, 5, 4), (2, 3, 6))], 36),
        (4, [Permutation.identity(4)], 1),
        (3, [cyc(3, (1, 2, 3))], 3),
    ],
)
def test_group_orders(n, gens, order):
    assert group_from_generators(n, gens).order == order


def test_group_closure_and_lagrange():
    for G in (alternating(4), order20_s5(), even_signed(3)):
        elements = set(G.elements)
        for a in G.elements:
            assert a.inverse() in elements
        for a in list(G.elements)[:6]:
            for b in list(G.elements)[:6]:
                assert a * b in elements
        ambient = 2**G.n * _factorial(G.n) if G.is_signed else _factorial(G.n)
        assert ambient % G.order == 0


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_canonical_element_order():
    G = symmetric(3)
    keys = [g.sort_key() for g in G.elements]
    assert keys == sorted(keys)
    assert G.elements[0] == Permutation.identity(3)
    H = hyperoctahedral_group(2)
    assert H.elements[0] == Permutation.identity(2)
    assert H.order == 8


def test_rank_limits():
    with pytest.raises(UnsupportedSizeError):
        symmetric_group(9)
    with pytest.raises(UnsupportedSizeError):
        hyperoctahedral_group(7)
    with pytest.raises(UnsupportedSizeError):
        group_from_generators(9, [Permutation.identity(9)])


def test_generator_rank_mismatch():
    with pytest.raises(ParseError):
        group_from_generators(4, [cyc(3, (1, 2))])


def test_count_reflections_s4():
    assert count_reflections(symmetric(4)) == 6


def test_count_reflections_order20_and_a5():
    assert count_reflections(order20_s5()) == 0
    assert count_reflections(alternating(5)) == 0


def test_count_reflections_signed():
    # all of B_n's reflections: n^2
    assert count_reflections(hyperoctahedral_group(3)) == 9
    # G(2,2,n) keeps the transposition types only: n(n-1)
    assert count_reflections(even_signed(3)) == 6


def test_cycle_type_of_map():
    assert cycle_type_of_map([0, 1, 2, 3, 4, 5]) == {1: 6}
    assert cycle_type_of_map([1, 0, 3, 2]) == {2: 2}
    with pytest.raises(ParseError):
        cycle_type_of_map([0, 0, 1])


def test_cycle_type_on_cosets_alternating():
    G = alternating(4)
    frame = build_frame(G)
    tau = cyc(4, (1, 2))
    assert cycle_type_of_map(frame.coset_action_map(tau)) == {2: 1}


def test_cycle_type_on_cosets_order20():
    frame = build_frame(order20_s5())
    tau = cyc(5, (1, 2))
    assert cycle_type_of_map(frame.coset_action_map(tau)) == {2: 3}


def test_young_group_structure():
    Y = young_group(5, [(0, 1, 2), (3, 4)])
    assert Y.order == 12
    for g in Y.elements:
        assert {g.images[0], g.images[1], g.images[2]} == {0, 1, 2}


def test_reflection_detection_signed_types():
    assert Permutation([1, 0, 2], [1, 1, 1]).is_reflection()          # transposition
    assert Permutation([1, 0, 2], [-1, -1, 1]).is_reflection()        # signed transposition
    assert Permutation([0, 1, 2], [-1, 1, 1]).is_reflection()         # diagonal flip
    assert not Permutation([0, 1, 2], [-1, -1, 1]).is_reflection()    # codim 2
    assert not Permutation.identity(3).is_reflection()
