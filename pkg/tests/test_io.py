"""File formats: byte-exact round trips and parse failures."""

import pytest

from oddcolor.coloring import Coloring
from oddcolor.generators import k7_star_embedding, random_one_plane
from oddcolor.graphs import cycle, subdivided_complete
from oddcolor.io import (
    ParseError,
    coloring_from_text,
    coloring_to_text,
    embedding_from_text,
    embedding_to_text,
    export_dot,
    graph_from_text,
    graph_to_text,
    load_any,
    save_embedding,
    save_graph,
)


class TestGraphFile:
    def test_roundtrip(self):
        g = subdivided_complete(5)
        assert graph_from_text(graph_to_text(g)) == g

    def test_bytes_stable(self):
        text = graph_to_text(cycle(6))
        assert graph_to_text(graph_from_text(text)) == text

    def test_unsorted_edge_rejected(self):
        with pytest.raises(ParseError):
            graph_from_text('{"version": 1, "n": 3, "edges": [[2, 1]]}')

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError):
            graph_from_text('{"version": 1, "n": 3, "edges": [[0, 1], [0, 1]]}')

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError):
            graph_from_text('{"version": 1, "n": 2, "edges": [[0, 5]]}')

    def test_not_json(self):
        with pytest.raises(ParseError):
            graph_from_text("pentagon")


class TestEmbeddingFile:
    def test_roundtrip_k7_star_bytes(self):
        text = embedding_to_text(k7_star_embedding())
        again = embedding_to_text(embedding_from_text(text))
        assert again == text

    def test_roundtrip_random(self):
        emb = random_one_plane(25, 0.6, seed=3)
        text = embedding_to_text(emb)
        back = embedding_from_text(text)
        assert embedding_to_text(back) == text

    def test_twin_mismatch_rejected(self):
        text = embedding_to_text(random_one_plane(8, 0.0, seed=1))
        broken = text.replace('"twins": [\n  [\n   0,\n   1\n  ],', '"twins": [\n  [\n   0,\n   2\n  ],')
        assert broken != text
        with pytest.raises(ParseError):
            embedding_from_text(broken)

    def test_virtual_pairs_checked(self):
        emb = random_one_plane(12, 1.0, seed=2)
        assert emb.crossing_count() > 0
        import json

        obj = json.loads(embedding_to_text(emb))
        w = next(iter(obj["virtual_pairs"]))
        obj["virtual_pairs"][w][0][0] += 1
        with pytest.raises(ParseError):
            embedding_from_text(json.dumps(obj))

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            embedding_from_text(
                '{"version": 1, "vertices": [{"id": 0, "kind": "ghost"}],'
                ' "rotations": {"0": []}, "twins": [], "virtual_pairs": {}}'
            )


class TestColoringFile:
    def test_roundtrip(self):
        c = Coloring(5, {0: 1, 3: 5})
        assert coloring_from_text(coloring_to_text(c)) == c

    def test_color_out_of_palette(self):
        with pytest.raises(ParseError):
            coloring_from_text('{"version": 1, "k": 2, "colors": {"0": 7}}')


class TestLoadAnyAndDot:
    def test_load_any(self, tmp_path):
        gpath = tmp_path / "g.graph.json"
        epath = tmp_path / "e.empl.json"
        save_graph(cycle(4), gpath)
        save_embedding(random_one_plane(8, 0.0, seed=1), epath)
        from oddcolor.graphs import Graph
        from oddcolor.embedding import OnePlaneGraph

        assert isinstance(load_any(gpath), Graph)
        assert isinstance(load_any(epath), OnePlaneGraph)

    def test_export_dot_shape(self):
        emb = random_one_plane(10, 1.0, seed=4)
        dot = export_dot(emb)
        assert dot.count("{") == dot.count("}") == 1
        node_lines = [l for l in dot.splitlines() if "[shape=" in l]
        assert len(node_lines) == len(emb.vertices())
        assert any("diamond" in l for l in node_lines)  # crossing markers
        edge_lines = [l for l in dot.splitlines() if " -- " in l]
        assert len(edge_lines) == emb.num_segments()

    def test_export_dot_cycle(self):
        from oddcolor.generators import cycle_embedding

        dot = export_dot(cycle_embedding(5))
        assert dot.count("{") == dot.count("}") == 1
        assert sum(1 for l in dot.splitlines() if "[shape=" in l) == 5
