"""Dessins: canonical storage, invariants, and the round trip with triples."""

import random

import pytest

from belyi import (
    CombinatorialType,
    Dessin,
    DessinShape,
    canonical_single_cycle,
    chebyshev_gensys,
    dessin_from_gensys,
    gensys_from_dessin,
    isomorphic,
    power_gensys,
    valid_types,
)
from helpers import random_gensys, random_permutation, random_single_cycle_pair


def test_canonical_storage():
    ds = Dessin(3, [(2, 3), (1,)], [(3, 1, 2)])
    assert ds.black == ((1,), (2, 3))
    assert ds.white == ((1, 2, 3),)
    # a rotated-cycle presentation of the same dessin compares equal
    assert ds == Dessin(3, [(1,), (3, 2)], [(2, 3, 1)])


def test_label_coverage_validation():
    with pytest.raises(ValueError):
        Dessin(3, [(1, 2)], [(1, 2, 3)])  # label 3 missing on black side
    with pytest.raises(ValueError):
        Dessin(3, [(1, 2), (2, 3)], [(1, 2, 3)])  # label 2 repeated
    with pytest.raises(ValueError):
        Dessin(2, [(1,), (2,)], [(1,), (2,)])  # disconnected


def test_round_trip_with_gensys():
    rng = random.Random(401)
    for _ in range(60):
        gs = random_gensys(rng)
        ds = dessin_from_gensys(gs)
        back = gensys_from_dessin(ds)
        assert back.sigma0 == gs.sigma0
        assert back.sigma1 == gs.sigma1
        assert back.sigma_inf == gs.sigma_inf
        assert dessin_from_gensys(back) == ds


def test_genus_matches_gensys():
    rng = random.Random(402)
    for _ in range(60):
        gs = random_gensys(rng)
        assert dessin_from_gensys(gs).genus() == gs.genus()


def test_degrees_are_cycle_lengths():
    gs = canonical_single_cycle(CombinatorialType(5, 3, 3, 5))
    ds = dessin_from_gensys(gs)
    bdeg, wdeg = ds.degrees()
    assert sorted(bdeg, reverse=True) == [3, 1, 1]
    assert sorted(wdeg, reverse=True) == [3, 1, 1]
    assert sum(bdeg) == ds.d
    assert sum(wdeg) == ds.d


def test_shape_worked_example():
    # type (3, 3, 5) at degree 5: two white leaves, two black leaves, one
    # shared edge between the hubs
    ds = dessin_from_gensys(canonical_single_cycle(CombinatorialType(5, 3, 3, 5)))
    shape = ds.shape()
    assert shape == DessinShape(
        white_leaves=2,
        black_leaves=2,
        parallel_edges=1,
        black_hub_degree=3,
        white_hub_degree=3,
    )
    assert ds.diameter_vertices() == 4
    assert ds.genus() == 0


def test_shape_counts_follow_type():
    # two-hub census: white leaves d - e1, black leaves d - e0, parallel
    # edges e0 + e1 - d
    for d in range(3, 12):
        for ct in valid_types(d):
            ds = dessin_from_gensys(canonical_single_cycle(ct))
            shape = ds.shape()
            assert shape is not None
            assert shape.white_leaves == d - ct.e1
            assert shape.black_leaves == d - ct.e0
            assert shape.parallel_edges == ct.e0 + ct.e1 - d
            assert shape.black_hub_degree == ct.e0
            assert shape.white_hub_degree == ct.e1


def test_shape_is_none_off_family():
    # the degree-6 path has three white vertices of degree two
    ds = dessin_from_gensys(chebyshev_gensys(6))
    assert ds.shape() is None


def test_shape_invariant_validation():
    with pytest.raises(ValueError):
        DessinShape(
            white_leaves=2,
            black_leaves=2,
            parallel_edges=1,
            black_hub_degree=4,  # 2 + 1 != 4
            white_hub_degree=3,
        )


def test_star_dessin():
    ds = dessin_from_gensys(power_gensys(7))
    assert ds.is_star()
    assert not ds.is_path()
    assert ds.diameter_vertices() == 3
    assert ds.genus() == 0
    bdeg, wdeg = ds.degrees()
    assert bdeg == (7,)
    assert wdeg == (1,) * 7


def test_path_dessin():
    for d in range(3, 10):
        ds = dessin_from_gensys(chebyshev_gensys(d))
        assert ds.is_path()
        assert not ds.is_star()
        # a path on d edges visits d + 1 vertices end to end
        assert ds.diameter_vertices() == d + 1


def test_two_hub_diameter_bound():
    # any dessin whose sides each have at most one branched vertex has
    # vertex-diameter at most 4
    rng = random.Random(403)
    seen_higher_genus = False
    for _ in range(300):
        gs = random_single_cycle_pair(rng)
        ds = dessin_from_gensys(gs)
        assert ds.diameter_vertices() <= 4
        if gs.genus() > 0:
            seen_higher_genus = True
    assert seen_higher_genus  # the bound is purely local, not genus-driven


def test_parallel_edges_collapse_in_diameter():
    # two vertices joined by three parallel edges: diameter is still 2
    ds = Dessin(3, [(1, 2, 3)], [(1, 3, 2)])
    assert ds.diameter_vertices() == 2
    # opposite cyclic orders glue to the planar theta graph
    assert ds.genus() == 0
    # equal cyclic orders force a torus embedding
    ds2 = Dessin(3, [(1, 2, 3)], [(1, 2, 3)])
    assert ds2.diameter_vertices() == 2
    assert ds2.genus() == 1


def test_isomorphic_relabeling():
    rng = random.Random(404)
    for _ in range(30):
        gs = random_gensys(rng, dmax=8)
        ds = dessin_from_gensys(gs)
        t = random_permutation(rng, gs.degree)
        relabeled = Dessin(
            gs.degree,
            [tuple(t(x) for x in c) for c in ds.black],
            [tuple(t(x) for x in c) for c in ds.white],
        )
        assert isomorphic(ds, relabeled)
    assert not isomorphic(
        dessin_from_gensys(power_gensys(4)),
        dessin_from_gensys(chebyshev_gensys(4)),
    )
    assert not isomorphic(
        dessin_from_gensys(power_gensys(3)),
        dessin_from_gensys(power_gensys(4)),
    )


def test_json_round_trip():
    ds = dessin_from_gensys(canonical_single_cycle(CombinatorialType(5, 3, 3, 5)))
    data = ds.to_json()
    assert data == {
        "d": 5,
        "black": [[1], [2], [3, 5, 4]],
        "white": [[1, 2, 3], [4], [5]],
    }
    assert Dessin.from_json(data) == ds


def test_dot_output_is_stable():
    ds = Dessin(3, [(1, 2), (3,)], [(1,), (2, 3)])
    expected = (
        "graph dessin {\n"
        '  node [shape=circle, fixedsize=true, width=0.25];\n'
        '  b0 [style=filled, fillcolor=black, label=""];\n'
        '  b1 [style=filled, fillcolor=black, label=""];\n'
        '  w0 [label=""];\n'
        '  w1 [label=""];\n'
        '  b0 -- w0 [label="1"];\n'
        '  b0 -- w1 [label="2"];\n'
        '  b1 -- w1 [label="3"];\n'
        "}\n"
    )
    assert ds.to_dot() == expected
    assert ds.to_dot() == ds.to_dot()
