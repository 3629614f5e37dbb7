"""Edge-list and graph6 ingestion."""

import pytest

from edgereg.errors import GraphFormatError
from edgereg.graphio import (
    decode_graph6,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
)
from edgereg.graphs import complete_graph, cycle_graph, enumerate_graphs


class TestEdgeList:
    def test_labels_first_appearance_order(self):
        g = parse_edge_list("b a\nc b\n")
        assert g.labels == ("b", "a", "c")
        assert sorted(g.edges) == [(0, 1), (0, 2)]

    def test_comments_and_blanks(self):
        g = parse_edge_list("# header\n\nu v  # trailing\n")
        assert g.edge_count() == 1

    def test_loop_rejected_with_line(self):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list("a b\nc c\n")
        assert err.value.line == 2

    def test_wrong_token_count(self):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list("a b c\n")
        assert err.value.line == 1

    def test_empty_input(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("# nothing\n")

    def test_roundtrip(self):
        g = parse_edge_list("x1 y1\nx1 y2\nx2 y1\n")
        assert parse_edge_list(format_edge_list(g)) == g


class TestGraph6:
    def test_k4(self):
        assert decode_graph6("C~") == complete_graph(4)

    def test_single_edge(self):
        g = decode_graph6("A_")
        assert g.n == 2 and sorted(g.edges) == [(0, 1)]

    def test_empty_record(self):
        with pytest.raises(GraphFormatError):
            decode_graph6("")

    def test_header_prefix_allowed(self):
        assert decode_graph6(">>graph6<<C~") == complete_graph(4)

    def test_out_of_range_byte(self):
        with pytest.raises(GraphFormatError) as err:
            decode_graph6("C\x1f")
        assert err.value.offset == 1

    def test_truncated_payload(self):
        with pytest.raises(GraphFormatError):
            decode_graph6("D")  # n=5 needs payload bytes

    def test_nonzero_padding(self):
        # n=2 has one adjacency bit; low pad bits must stay zero
        with pytest.raises(GraphFormatError):
            decode_graph6("A" + chr(63 + 1))

    def test_roundtrip_all_small_classes(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                assert decode_graph6(encode_graph6(g)) == g

    def test_roundtrip_cycles(self):
        for k in range(3, 12):
            g = cycle_graph(k)
            assert decode_graph6(encode_graph6(g)) == g
