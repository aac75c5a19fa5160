"""Corpus generators: validity, determinism, structure."""

import pytest

from oddcolor.embedding import underlying_graph, validate
from oddcolor.exact import chi_o
from oddcolor.generators import (
    GENERATORS,
    cycle_embedding,
    figure4_pattern,
    gen,
    inject_adjacent_crossing,
    k7_star_embedding,
    random_one_plane,
    random_outerplanar,
    random_tree,
)
from oddcolor.graphs import connected_components, degeneracy_order, subdivided_complete
from oddcolor.io import embedding_to_text
from oddcolor.minor_closed import has_k4_minor
from oddcolor.reduction import SixFourSwap, Thresholds, find_reducible


class TestNamedGraphs:
    def test_gen_dispatch(self):
        assert gen("cycle", n=5).num_edges() == 5
        assert gen("subdivided_complete", n=7).n == 28
        with pytest.raises(ValueError):
            gen("banana")

    def test_subdivided_complete_counts(self):
        g = gen("subdivided_complete", n=7)
        assert g.n == 28 and g.num_edges() == 42


class TestK7Star:
    def test_valid_and_recovers_graph(self):
        emb = k7_star_embedding()
        assert validate(emb) == []
        assert underlying_graph(emb) == subdivided_complete(7)

    def test_counts(self):
        emb = k7_star_embedding()
        assert len(emb.real_vertices()) == 28
        assert underlying_graph(emb).num_edges() == 42
        # the frozen drawing: pentagram core (5) plus four apex crossings
        assert emb.crossing_count() == 9

    def test_deterministic(self):
        assert embedding_to_text(k7_star_embedding()) == embedding_to_text(
            k7_star_embedding()
        )


class TestFigure4:
    def test_valid(self):
        assert validate(figure4_pattern()) == []

    def test_triggers_swap_under_scaled_thresholds(self):
        emb = figure4_pattern()
        cfg = find_reducible(emb, Thresholds(K=7, BIG=4, ODD_MAX=3))
        assert isinstance(cfg, SixFourSwap)

    def test_pattern_faces_present(self):
        emb = figure4_pattern()
        lens = sorted(f.len for f in emb.faces())
        assert 6 in lens and 4 in lens


class TestRandomOnePlane:
    @pytest.mark.parametrize("seed", range(10))
    def test_always_valid(self, seed):
        emb = random_one_plane(20, 0.5, seed=seed)
        assert validate(emb) == []

    def test_p_zero_is_plane(self):
        emb = random_one_plane(10, 0.0, seed=1)
        assert emb.crossing_count() == 0
        assert validate(emb) == []

    def test_p_zero_planar_degeneracy(self):
        for seed in range(20):
            g = underlying_graph(random_one_plane(25, 0.0, seed=seed))
            assert degeneracy_order(g)[0] <= 5

    def test_crossings_counted(self):
        emb = random_one_plane(30, 0.5, seed=7)
        assert emb.crossing_count() == len(emb.virtual_vertices())
        assert emb.crossing_count() > 0

    def test_same_seed_identical_bytes(self):
        a = embedding_to_text(random_one_plane(30, 0.5, seed=7))
        b = embedding_to_text(random_one_plane(30, 0.5, seed=7))
        assert a == b

    def test_different_seed_differs(self):
        a = embedding_to_text(random_one_plane(30, 0.5, seed=7))
        b = embedding_to_text(random_one_plane(30, 0.5, seed=8))
        assert a != b

    def test_connected(self):
        for seed in range(5):
            g = underlying_graph(random_one_plane(15, 0.8, seed=seed))
            assert len(connected_components(g)) == 1


class TestInjectAdjacentCrossing:
    def test_creates_a_two_face(self):
        emb = cycle_embedding(6)
        out = inject_adjacent_crossing(emb, 0, 0)
        assert validate(out) == []
        assert any(f.len == 2 for f in out.faces())
        assert underlying_graph(out) == underlying_graph(emb)

    def test_rejects_crossed_edges(self):
        emb = cycle_embedding(4)
        once = inject_adjacent_crossing(emb, 0, 0)
        with pytest.raises(ValueError):
            inject_adjacent_crossing(once, 0, 0)


class TestAuxRandomFamilies:
    @pytest.mark.parametrize("seed", range(10))
    def test_trees(self, seed):
        g = random_tree(20, seed)
        assert g.num_edges() == 19
        assert len(connected_components(g)) == 1
        assert degeneracy_order(g)[0] == 1

    @pytest.mark.parametrize("seed", range(10))
    def test_outerplanar_k4_minor_free(self, seed):
        g = random_outerplanar(12, seed)
        assert not has_k4_minor(g)
        assert degeneracy_order(g)[0] <= 2

    def test_gen_names_stable(self):
        for name in ("cycle", "path", "complete", "subdivided_complete"):
            assert name in GENERATORS
        assert "k7_star_embedding" in GENERATORS
        assert "figure4_pattern" in GENERATORS


class TestSanityAgainstExact:
    def test_k5_star_chi(self):
        assert chi_o(subdivided_complete(5)) == 5
