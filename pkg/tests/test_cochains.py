import itertools

import numpy as np
import pytest

from cechkit.cochains import (
    CochainSpace,
    NotSimplicial,
    NotSubcomplex,
    cech_differential,
    class_coordinates,
    cohomology,
    extend_by_zero,
    induced_on_cohomology,
    pullback_map,
    restrict_cochain,
    restriction_map,
)
from cechkit.complexes import EMPTY_COMPLEX, build_complex, components
from cechkit.fplinalg import F2, PrimeField


def cycle4():
    return build_complex([["l", "o1"], ["o1", "r"], ["l", "o2"], ["o2", "r"]])


def theta():
    return build_complex([["a", "b"], ["a", "c1"], ["b", "c1"], ["a", "c2"], ["b", "c2"]])


def brute_h1_dim_f2(k):
    """H^1 over F_2 by enumerating all cochains: cocycles / coboundaries."""
    edges = k.simplices_of_dim(1)
    tris = k.simplices_of_dim(2)
    verts = k.vertices
    cocycles = set()
    for vec in itertools.product((0, 1), repeat=len(edges)):
        table = dict(zip(edges, vec))
        if all((table[(a, b)] + table[(b, c)] + table[(a, c)]) % 2 == 0
               for a, b, c in tris):
            cocycles.add(vec)
    coboundaries = set()
    for kv in itertools.product((0, 1), repeat=len(verts)):
        kt = dict(zip(verts, kv))
        coboundaries.add(tuple((kt[b] - kt[a]) % 2 for a, b in edges))
    quotient = len(cocycles) // len(coboundaries)
    return quotient.bit_length() - 1


def test_differential_single_edge_signs():
    k = build_complex([["a", "b"]])
    d0 = cech_differential(k, 0, PrimeField(5))
    f = d0.source.cochain({("a",): 2, ("b",): 3})
    df = d0(f)
    assert df[("a", "b")] == (3 - 2) % 5


def test_differential_squares_to_zero_triangle():
    k = build_complex([["a", "b", "c"]])
    for p in (2, 3, 7):
        field = PrimeField(p)
        d0 = cech_differential(k, 0, field)
        d1 = cech_differential(k, 1, field)
        assert (d1.matrix @ d0.matrix).is_zero()


def test_differential_squares_to_zero_everywhere():
    k = build_complex([["a", "b", "c"], ["b", "c", "d"], ["d", "e"], ["a", "e"]])
    field = PrimeField(3)
    for q in range(k.dim + 1):
        dq = cech_differential(k, q, field)
        dq1 = cech_differential(k, q + 1, field)
        assert (dq1.matrix @ dq.matrix).is_zero()


def test_cycle4_rank_and_h1():
    d0 = cech_differential(cycle4(), 0, F2)
    assert d0.matrix.rank() == 3
    # no 2-simplices: every 1-cochain is a cocycle
    d1 = cech_differential(cycle4(), 1, F2)
    assert d1.matrix.rank_nullity()[1] == 4
    assert cohomology(cycle4(), 1, F2).dimension == 1
    assert brute_h1_dim_f2(cycle4()) == 1


def test_cycle4_quotient_dim_of_bases():
    from cechkit.fplinalg import quotient_dim
    coh = cohomology(cycle4(), 1, F2)
    assert coh.cocycles.cols == 4 and coh.coboundaries.cols == 3
    assert quotient_dim(coh.cocycles, coh.coboundaries) == 1


def test_cohomology_point_and_theta():
    point = build_complex([["x"]])
    assert cohomology(point, 0, F2).dimension == 1
    assert cohomology(theta(), 0, F2).dimension == 1
    assert cohomology(theta(), 1, F2).dimension == 2
    assert brute_h1_dim_f2(theta()) == 2


def test_h0_matches_components(gallery_diagram):
    d = gallery_diagram
    for t_size in range(1, d.n_pieces + 1):
        for t in d.index_subsets(t_size):
            nerve = d.intersection_nerve(t)
            assert cohomology(nerve, 0, d.field).dimension == len(components(nerve))
    assert cohomology(d.nerve, 0, d.field).dimension == len(components(d.nerve))


def test_restrict_identity_and_empty():
    k = cycle4()
    space = CochainSpace(k, 1, F2)
    f = space.cochain({("l", "o1"): 1})
    assert restrict_cochain(f, k).same_as(f)
    empty = restrict_cochain(f, EMPTY_COMPLEX)
    assert empty.space.dim == 0


def test_restrict_to_piece_path():
    k = cycle4()
    path = build_complex([["l", "o1"], ["o1", "r"]])
    f = CochainSpace(k, 1, F2).cochain({("l", "o1"): 1, ("o2", "r"): 1})
    g = restrict_cochain(f, path)
    assert g[("l", "o1")] == 1 and g[("o1", "r")] == 0


def test_restrict_requires_subcomplex():
    with pytest.raises(NotSubcomplex):
        restrict_cochain(CochainSpace(cycle4(), 1, F2).zero(), build_complex([["x", "y"]]))


def test_extend_by_zero_round_trip():
    k = cycle4()
    sub = build_complex([["l"], ["r"]])
    f = CochainSpace(sub, 0, F2).cochain({("l",): 1})
    big = extend_by_zero(f, k)
    assert big[("l",)] == 1 and big[("r",)] == 0 and big[("o1",)] == 0 and big[("o2",)] == 0
    assert restrict_cochain(big, sub).same_as(f)
    zero = extend_by_zero(CochainSpace(sub, 0, F2).zero(), k)
    assert zero.is_zero()
    assert extend_by_zero(big, k).same_as(big)


def test_restriction_is_chain_map(gallery_diagram):
    d = gallery_diagram
    for pid in d.piece_ids:
        for q in range(max(d.nerve.dim, 0) + 1):
            res_q = restriction_map(d.nerve, d.nerves[pid], q, d.field)
            res_q1 = restriction_map(d.nerve, d.nerves[pid], q + 1, d.field)
            d_big = cech_differential(d.nerve, q, d.field)
            d_small = cech_differential(d.nerves[pid], q, d.field)
            assert (res_q1.matrix @ d_big.matrix).equals(d_small.matrix @ res_q.matrix)


def test_pullback_identity():
    k = cycle4()
    ident = {v: v for v in k.vertices}
    m = pullback_map(ident, k, k, 1, F2)
    assert m.matrix.equals(type(m.matrix).identity(4, F2))


def test_pullback_degenerate_edge_collapse():
    k = build_complex([["a", "b"]])
    point = build_complex([["x"]])
    m = pullback_map({"a": "x", "b": "x"}, k, point, 0, F2)
    assert m.matrix.entries.tolist() == [[1], [1]]
    # the point has no 1-simplices, so the degree-1 pullback has no columns
    m1 = pullback_map({"a": "x", "b": "x"}, k, point, 1, F2)
    assert m1.matrix.rows == 1 and m1.matrix.cols == 0


def test_pullback_commutes_with_differential():
    fine = build_complex([["a1", "a2"], ["a2", "b"], ["b", "c"], ["a1", "c"]])
    coarse = build_complex([["a", "b"], ["b", "c"], ["a", "c"]])
    g = {"a1": "a", "a2": "a", "b": "b", "c": "c"}
    for p in (2, 3):
        field = PrimeField(p)
        for q in (0, 1):
            lam_q = pullback_map(g, fine, coarse, q, field)
            lam_q1 = pullback_map(g, fine, coarse, q + 1, field)
            d_c = cech_differential(coarse, q, field)
            d_f = cech_differential(fine, q, field)
            assert (lam_q1.matrix @ d_c.matrix).equals(d_f.matrix @ lam_q.matrix)


def test_pullback_requires_simplicial():
    k = build_complex([["a", "b"]])
    two_points = build_complex([["x"], ["y"]])
    with pytest.raises(NotSimplicial):
        pullback_map({"a": "x", "b": "y"}, k, two_points, 0, F2)


def test_quotient_map_on_h1_collapsing_both_origins_is_zero():
    # collapsing o1 and o2 to one vertex wraps the 4-cycle with degree zero
    k4 = cycle4()
    k3 = build_complex([["l", "o"], ["o", "r"], ["l", "r"]])
    g = {"l": "l", "o1": "o", "o2": "o", "r": "r"}
    chain = pullback_map(g, k4, k3, 1, F2)
    induced = induced_on_cohomology(chain, cohomology(k3, 1, F2), cohomology(k4, 1, F2))
    assert induced.rank() == 0


def test_quotient_map_on_h1_degree_one_variant_is_injective():
    k4 = cycle4()
    k3 = build_complex([["l", "o"], ["o", "r"], ["l", "r"]])
    g = {"l": "l", "o1": "o", "o2": "r", "r": "r"}
    chain = pullback_map(g, k4, k3, 1, F2)
    induced = induced_on_cohomology(chain, cohomology(k3, 1, F2), cohomology(k4, 1, F2))
    assert induced.rank() == 1


def test_class_coordinates_brute_force_cross_check():
    k = cycle4()
    coh = cohomology(k, 1, F2)
    space = CochainSpace(k, 1, F2)
    d0 = cech_differential(k, 0, F2)
    coboundaries = {tuple(d0.matrix.apply(np.array(v)).tolist())
                    for v in itertools.product((0, 1), repeat=4)}
    for vec in itertools.product((0, 1), repeat=4):
        coords = class_coordinates(coh, np.array(vec))
        trivial = tuple(vec) in coboundaries
        assert (not coords.any()) == trivial
