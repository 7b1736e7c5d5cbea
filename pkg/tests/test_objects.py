"""Digital objects: cell enumeration, free cells, borders, censuses."""

from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridgaps import (
    Cell,
    DigitalObject,
    b_boundary,
    border,
    cells,
    census,
    faces,
    is_free,
)

from oracles import o_census

SINGLE3 = DigitalObject.from_centers(3, [(0, 0, 0)])
DOMINO3 = DigitalObject.from_centers(3, [(0, 0, 0), (1, 0, 0)])
DIAG3 = DigitalObject.from_centers(3, [(0, 0, 0), (1, 1, 0)])
LBLOCK3 = DigitalObject.from_centers(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0)])
CUBE222 = DigitalObject.from_centers(3, list(product((0, 1), repeat=3)))
SQUARE22 = DigitalObject.from_centers(2, list(product((0, 1), repeat=2)))
EMPTY3 = DigitalObject(3)


def random_object(n: int, extent: int, density: float, seed: int) -> DigitalObject:
    rng = random.Random(seed)
    centers = [
        c
        for c in product(range(extent), repeat=n)
        if rng.random() < density
    ]
    return DigitalObject.from_centers(n, centers)


class TestConstruction:
    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            DigitalObject.from_centers(2, [(0, 0), (0, 0)])

    def test_non_voxel_rejected(self):
        with pytest.raises(ValueError):
            DigitalObject(2, [Cell((1, 0))])

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            DigitalObject.from_centers(3, [(0, 0)])

    def test_empty_is_fine(self):
        assert len(EMPTY3) == 0
        assert census(EMPTY3).c == (0, 0, 0, 0)

    def test_centers_round_trip(self):
        pts = [(0, -2, 5), (1, 1, 0)]
        assert DigitalObject.from_centers(3, pts).centers() == sorted(pts)

    def test_value_semantics(self):
        a = DigitalObject.from_centers(2, [(0, 0), (1, 1)])
        b = DigitalObject.from_centers(2, [(1, 1), (0, 0)])
        assert a == b and hash(a) == hash(b)
        assert a != DigitalObject.from_centers(2, [(0, 0)])


class TestCellEnumeration:
    def test_single_voxel_edges(self):
        assert len(cells(SINGLE3, 1)) == 12

    def test_empty_object(self):
        assert cells(EMPTY3, 1) == []

    def test_diagonal_pair_edges(self):
        # frozen by oracle: 12 + 12 minus the one shared hub edge
        assert len(cells(DIAG3, 1)) == 23

    def test_sorted_and_deterministic(self):
        got = cells(DIAG3, 2)
        assert got == sorted(got)
        assert got == cells(DIAG3, 2)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            cells(SINGLE3, 4)
        with pytest.raises(ValueError):
            cells(SINGLE3, -1)


class TestFreeCells:
    def test_single_voxel_cells_all_free(self):
        for i in range(3):
            for e in cells(SINGLE3, i):
                assert is_free(SINGLE3, e)

    def test_domino_shared_face_not_free(self):
        assert not is_free(DOMINO3, Cell((1, 0, 0)))

    def test_square_center_vertex_not_free(self):
        assert not is_free(SQUARE22, Cell((1, 1)))

    def test_not_a_cell_rejected(self):
        with pytest.raises(ValueError):
            is_free(SINGLE3, Cell((7, 7, 7)))

    def test_voxel_dimension_rejected(self):
        with pytest.raises(ValueError):
            is_free(SINGLE3, Cell((0, 0, 0)))


class TestBorder:
    def test_single_voxel_faces(self):
        assert len(border(SINGLE3, 2)) == 6

    def test_domino_faces(self):
        assert len(border(DOMINO3, 2)) == 10

    def test_lblock_faces(self):
        assert len(border(LBLOCK3, 2)) == 14

    def test_border_at_dimension_zero_exists(self):
        # 0-cells are classifiable as free like any other dimension
        assert len(border(SQUARE22, 0)) == 8

    def test_range_validation(self):
        with pytest.raises(ValueError):
            border(SINGLE3, 3)


CENSUS_FIXTURES = [
    (SINGLE3, (8, 12, 6, 1), (8, 12, 6, 0)),
    (DOMINO3, (12, 20, 11, 2), (12, 20, 10, 0)),
    (DIAG3, (14, 23, 12, 2), (14, 23, 12, 0)),
    (LBLOCK3, (16, 28, 16, 3), (16, 28, 14, 0)),
    (CUBE222, (27, 54, 36, 8), (26, 48, 24, 0)),
    (SQUARE22, (9, 12, 4), (8, 8, 0)),
    (EMPTY3, (0, 0, 0, 0), (0, 0, 0, 0)),
]


class TestCensus:
    @pytest.mark.parametrize("obj, c, c_star", CENSUS_FIXTURES)
    def test_fixture_counts(self, obj, c, c_star):
        cen = census(obj)
        assert cen.c == c
        assert cen.c_star == c_star
        assert cen.c_prime == tuple(a - b for a, b in zip(c, c_star))
        assert cen.beta == cen.c_prime

    @pytest.mark.parametrize("obj, c, c_star", CENSUS_FIXTURES)
    def test_partition_and_facet_count_identity(self, obj, c, c_star):
        cen = census(obj)
        n = obj.n
        for i in range(n + 1):
            assert cen.c[i] == cen.c_star[i] + cen.c_prime[i]
        assert cen.c[n - 1] == 2 * n * cen.c[n] - cen.c_prime[n - 1]

    def test_cached_sets_match_counts(self):
        cen = census(LBLOCK3)
        assert [len(s) for s in cen.cells_by_dim] == list(cen.c)
        assert [len(s) for s in cen.free_by_dim] == list(cen.c_star)
        assert cen.border(2) == cen.free_by_dim[2]
        assert cen.is_free(Cell((1, 1, 1)))
        assert not cen.is_free(Cell((1, 0, 0)))

    @pytest.mark.parametrize("n", [2, 3])
    def test_random_objects_match_interval_oracle(self, n):
        for seed in range(12):
            obj = random_object(n, 3, 0.5, seed)
            vox = frozenset(tuple(v) for v in obj.voxels)
            assert (census(obj).c, census(obj).c_star, census(obj).c_prime) == o_census(n, vox)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_facet_count_identity_on_random_objects(self, n):
        for seed in range(200):
            obj = random_object(n, 3, 0.5, 1000 * n + seed)
            cen = census(obj)
            assert cen.c[n - 1] == 2 * n * cen.c[n] - cen.c_prime[n - 1]

    def test_translation_invariance(self):
        for vec in [(1, 0, 0), (-3, 7, 2)]:
            moved = census(DIAG3.translate(vec))
            base = census(DIAG3)
            assert moved.c == base.c
            assert moved.c_star == base.c_star

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            min_size=0,
            max_size=10,
            unique=True,
        ),
        st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    )
    @settings(max_examples=60)
    def test_translation_invariance_property(self, centers, vec):
        obj = DigitalObject.from_centers(2, centers)
        base, moved = census(obj), census(obj.translate(vec))
        assert (base.c, base.c_star) == (moved.c, moved.c_star)


class TestBBoundary:
    def test_hub_edge_of_diagonal_pair(self):
        assert b_boundary(DIAG3, Cell((1, 1, 0)), 2) == 4

    def test_edge_of_single_voxel(self):
        assert b_boundary(SINGLE3, Cell((1, 1, 0)), 2) == 2

    def test_non_free_cell_gives_zero(self):
        assert b_boundary(SQUARE22, Cell((1, 1)), 1) == 0

    def test_matches_census_method(self):
        cen = census(LBLOCK3)
        for e in cells(LBLOCK3, 1):
            assert b_boundary(LBLOCK3, e, 2) == cen.b_boundary(e, 2)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            b_boundary(SINGLE3, Cell((1, 1, 0)), 3)  # j must stay below n
        with pytest.raises(ValueError):
            b_boundary(SINGLE3, Cell((1, 1, 0)), 1)  # j must exceed dim(e)
        with pytest.raises(ValueError):
            b_boundary(SINGLE3, Cell((7, 7, 1)), 2)  # not a cell of the object

    def test_border_sum_identity_on_domino(self):
        # frozen by oracle: sum of b_2 over the free edges is 4 * 10
        total = sum(b_boundary(DOMINO3, e, 2) for e in border(DOMINO3, 1))
        assert total == 40


class TestFreeFaceHeredity:
    @pytest.mark.parametrize("obj", [SINGLE3, DOMINO3, DIAG3, LBLOCK3, CUBE222, SQUARE22])
    def test_every_face_of_a_free_cell_is_free(self, obj):
        cen = census(obj)
        n = obj.n
        for j in range(1, n):
            for f in cen.free_by_dim[j]:
                for i in range(j):
                    for e in faces(f, i):
                        assert e in cen.free_by_dim[i]

    @pytest.mark.parametrize("n", [2, 3])
    def test_on_random_objects(self, n):
        for seed in range(20):
            obj = random_object(n, 3, 0.6, 555 + seed)
            cen = census(obj)
            for j in range(1, n):
                for f in cen.free_by_dim[j]:
                    for e in faces(f, j - 1):
                        assert e in cen.free_by_dim[j - 1]
