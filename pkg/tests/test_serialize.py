"""Render and parse round trips for graphs, matrices, and tables."""
from __future__ import annotations

import json

import pytest

from sierham.graphs import build_hamming, build_sierpinski
from sierham.maps import embedding_matrix
from sierham.serialize import (
    format_vertex,
    graph_from_json,
    graph_to_csv,
    graph_to_dot,
    graph_to_edgelist,
    graph_to_json,
    graph_to_text,
    hanoi_table_to_csv,
    hanoi_table_to_json,
    hanoi_table_to_text,
    map_table_to_csv,
    map_table_to_json,
    map_table_to_text,
    matrix_to_json,
    matrix_to_text,
    parse_vertex,
    render_graph,
)


def test_format_vertex():
    assert format_vertex((1, 0, 2, 0), 3) == "1020"
    assert format_vertex((10, 0, 3), 12) == "10 0 3"
    assert format_vertex((0,), 2) == "0"


def test_parse_vertex():
    assert parse_vertex("1020", 3) == (1, 0, 2, 0)
    assert parse_vertex(" 1020\n", 3) == (1, 0, 2, 0)
    assert parse_vertex("10 0 3", 12) == (10, 0, 3)
    assert parse_vertex("10,0,3", 12) == (10, 0, 3)
    assert parse_vertex("1020", 3, n=4) == (1, 0, 2, 0)


def test_parse_vertex_errors():
    with pytest.raises(ValueError):
        parse_vertex("1020", 3, n=3)
    with pytest.raises(ValueError):
        parse_vertex("1920", 3)
    with pytest.raises(ValueError):
        parse_vertex("", 3)


def test_format_parse_roundtrip():
    for m in (2, 3, 10, 11, 16):
        v = tuple(d % m for d in (0, 1, 7, 10, 15))
        assert parse_vertex(format_vertex(v, m), m) == v


def test_edgelist():
    text = graph_to_edgelist(build_sierpinski(1, 3))
    assert text == "0 1\n0 2\n1 2\n"
    wide = graph_to_edgelist(build_hamming(1, 12))
    first = wide.splitlines()[0]
    assert first == "0\t1"  # n=1, alphabet 12: tab between endpoints


def test_text_header():
    text = graph_to_text(build_sierpinski(3, 3))
    lines = text.splitlines()
    assert lines[0] == "sierpinski graph n=3 m=3 vertices=27 edges=39"
    assert len(lines) == 40


def test_csv():
    text = graph_to_csv(build_sierpinski(1, 3))
    assert text == "u,v\n0,1\n0,2\n1,2\n"


def test_json_roundtrip():
    g = build_sierpinski(3, 4)
    back = graph_from_json(graph_to_json(g))
    assert back == g
    assert back.kind == g.kind
    payload = json.loads(graph_to_json(g))
    assert payload["n"] == 3 and payload["m"] == 4
    assert len(payload["edges"]) == g.num_edges


def test_dot():
    text = graph_to_dot(build_sierpinski(2, 2))
    lines = text.splitlines()
    assert lines[0] == 'graph "sierpinski_2_2" {'
    assert '  v0 [label="00"];' in lines
    assert sum(1 for ln in lines if " -- " in ln) == 3
    assert lines[-1] == "}"


def test_render_graph_dispatch():
    g = build_sierpinski(1, 3)
    assert render_graph(g, "edgelist") == graph_to_edgelist(g)
    assert render_graph(g, "dot") == graph_to_dot(g)
    with pytest.raises(ValueError):
        render_graph(g, "yaml")


def test_matrix_text_frozen():
    lm = embedding_matrix("tau", 4, 3)
    assert matrix_to_text(lm) == "1 0 0 0\n2 2 0 0\n2 1 1 0\n2 1 2 2\n"


def test_matrix_json():
    payload = json.loads(matrix_to_json(embedding_matrix("tau", 2, 5)))
    assert payload == {"m": 5, "rows": [[1, 0], [3, 3]]}


def test_map_tables():
    rows = [((0, 1), (0, 1)), ((1, 0), (1, 1))]
    assert map_table_to_text(rows, 3) == "01  01\n10  11\n"
    assert map_table_to_csv(rows, 3) == "v,image\n01,01\n10,11\n"
    payload = json.loads(map_table_to_json(rows, 2, 3))
    assert payload == {"n": 2, "m": 3, "map": [["01", "01"], ["10", "11"]]}


def test_hanoi_table_text_frozen():
    rows = [(14, (1, 2, 1, 0), (1, 0, 2, 0)), (13, (1, 2, 0, 1), (1, 0, 1, 0))]
    text = hanoi_table_to_text(rows, 4, 3)
    assert text == (
        "ell  S(4,3)  T(4,3)\n"
        " 14  1210    1020\n"
        " 13  1201    1010\n"
    )


def test_hanoi_table_wide_alphabet():
    rows = [(0, (10, 0), (10, 0))]
    text = hanoi_table_to_text(rows, 2, 11)
    lines = text.splitlines()
    # the S column pads to the wider of the header and the digit strings
    assert lines[0].startswith("ell  S(2,11)")
    assert lines[1] == "  0  10 0     10 0"


def test_hanoi_table_csv_and_json():
    rows = [(1, (0, 1), (0, 2))]
    assert hanoi_table_to_csv(rows, 3) == "ell,s,t\n1,01,02\n"
    payload = json.loads(hanoi_table_to_json(rows, 2, 3))
    assert payload == {"n": 2, "m": 3, "rows": [{"ell": 1, "s": "01", "t": "02"}]}
