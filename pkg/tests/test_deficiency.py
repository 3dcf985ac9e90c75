import pytest

from cmprimes import (
    InternalCheckError,
    ParseError,
    SparsePoly,
    apply_group_element,
    bad_primes,
    build_frame,
    coset_matrix,
    deficiency_evaluated,
    deficiency_symbolic,
    difference_product,
    group_discriminant,
    orbit_sum,
    universal_secondaries,
)
from cmprimes.deficiency import deficiency_cross_checked, symbolic_determinant
from cmprimes.frame import evaluation_points

from conftest import (
    alternating,
    cyc,
    even_signed,
    group_from_generators,
    order20_s5,
    symmetric,
    young_alternating,
)


def forced_disc_thetas(n):
    return [SparsePoly.one(n), difference_product(n)]


def test_coset_matrix_symbolic_alternating():
    n = 3
    frame = build_frame(alternating(n))
    disc = difference_product(n)
    rows = coset_matrix(frame, forced_disc_thetas(n), symbolic=True)
    assert rows[0][0] == SparsePoly.one(n)
    assert rows[0][1] == disc
    assert rows[1][0] == SparsePoly.one(n)
    assert rows[1][1] == -disc


def test_coset_matrix_index_one():
    frame = build_frame(symmetric(3))
    rows = coset_matrix(frame, [SparsePoly.one(3)], symbolic=True)
    assert len(rows) == 1 and rows[0][0] == SparsePoly.one(3)


def test_coset_matrix_wrong_count():
    frame = build_frame(alternating(3))
    with pytest.raises(ParseError):
        coset_matrix(frame, [SparsePoly.one(3)], symbolic=True)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_forced_disc_deficiency_two(n):
    frame = build_frame(alternating(n))
    thetas = forced_disc_thetas(n)
    ev = deficiency_evaluated(frame, thetas, universal=False)
    assert ev.deficiency == 2
    sym = deficiency_symbolic(frame, thetas, universal=False)
    assert sym.deficiency == 2
    # det(M) = -2 disc exactly, with the identity coset listed first
    det = symbolic_determinant(coset_matrix(frame, thetas, symbolic=True))
    assert det == difference_product(n).scale(-2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_orbit_sum_secondaries_determinant_is_minus_disc(n):
    G = alternating(n)
    frame = build_frame(G)
    staircase = tuple(range(n - 1, -1, -1))
    thetas = [SparsePoly.one(n), orbit_sum(G, staircase)]
    det = symbolic_determinant(coset_matrix(frame, thetas, symbolic=True))
    assert det == -difference_product(n)
    assert deficiency_evaluated(frame, thetas, universal=True).deficiency == 1


def test_g22n_determinant():
    for n in (3, 5):
        G = even_signed(n)
        frame = build_frame(G)
        s_n = SparsePoly(n, {(1,) * n: 1})
        thetas = [SparsePoly.one(n), s_n]
        det = symbolic_determinant(coset_matrix(frame, thetas, symbolic=True))
        assert det == s_n.scale(-2)
        rep = deficiency_symbolic(frame, thetas, universal=True)
        assert rep.deficiency == 2 and rep.det_sign == -1
        assert group_discriminant(frame) == s_n


def test_order20_paper_thetas(g20):
    frame = build_frame(g20)
    thetas = [
        SparsePoly.one(5),
        orbit_sum(g20, (2, 1, 1, 0, 0)),
        orbit_sum(g20, (2, 2, 1, 0, 0)),
        orbit_sum(g20, (3, 2, 1, 0, 0)),
        orbit_sum(g20, (3, 2, 1, 0, 1)),
        orbit_sum(g20, (4, 3, 0, 1, 0)),
    ]
    ev = deficiency_evaluated(frame, thetas, universal=True)
    assert ev.deficiency == 2
    assert ev.bad_primes == (2,)
    sym = deficiency_symbolic(frame, thetas, universal=True)
    assert sym.deficiency == 2
    assert sym.identity_checked


def test_symbolic_equals_evaluated_on_universal_sets():
    cases = [
        (alternating(3), None),
        (alternating(4), None),
        (even_signed(3), None),
        (young_alternating(5), "young"),
        (order20_s5(), None),
    ]
    for G, ambient in cases:
        frame = build_frame(G, ambient)
        ss = universal_secondaries(frame)
        rep = deficiency_cross_checked(frame, ss, universal=True)
        assert rep.identity_checked
        assert rep.method == "evaluated+symbolic"


def test_deficiency_point_independence():
    for G, ambient in [(alternating(4), None), (order20_s5(), None), (even_signed(3), None)]:
        frame = build_frame(G, ambient)
        values = set()
        for z in evaluation_points(frame):
            ss = universal_secondaries(frame, point=z)
            values.add(deficiency_evaluated(frame, ss, universal=True).deficiency)
        assert len(values) == 1


def test_bad_primes():
    assert bad_primes(8, 36) == (2,)
    assert bad_primes(1, 60) == ()
    assert bad_primes(1800, 36, require_divides_order=False) == (2, 3, 5)
    with pytest.raises(InternalCheckError):
        bad_primes(1800, 36)
    with pytest.raises(ParseError):
        bad_primes(0, 6)


def test_deg_det_equals_delta_degree():
    from cmprimes.frame import delta_degree

    for G, ambient in [(alternating(4), None), (even_signed(3), None)]:
        frame = build_frame(G, ambient)
        ss = universal_secondaries(frame)
        det = symbolic_determinant(coset_matrix(frame, ss, symbolic=True))
        assert det.degree() == delta_degree(frame)
        assert sum(ss.degrees) == delta_degree(frame)


def test_nonuniversal_bad_prime_outside_group_order():
    # (1, disc) for A_3 has deficiency 2 although |A_3| = 3
    frame = build_frame(alternating(3))
    rep = deficiency_evaluated(frame, forced_disc_thetas(3), universal=False)
    assert rep.deficiency == 2
    with pytest.raises(InternalCheckError):
        deficiency_evaluated(frame, forced_disc_thetas(3), universal=True)
