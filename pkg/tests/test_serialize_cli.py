import json
import random
from fractions import Fraction

import pytest

from metric_realize import WeightedGraph, two_weights
from metric_realize.cli import run
from metric_realize.serialize import (
    ParseError,
    family_to_csv,
    format_number,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    parse_family_csv,
    parse_number,
)

from conftest import random_connected_graph

PATH_CSV = "0,1,3\n1,0,2\n3,2,0\n"
TRIANGLE_CSV = "0,1,1\n1,0,1\n1,1,0\n"


class TestNumbers:
    def test_parse_int(self):
        assert parse_number("7") == 7
        assert isinstance(parse_number("7"), int)

    def test_parse_decimal(self):
        assert parse_number("4.5") == Fraction(9, 2)

    def test_parse_ratio(self):
        assert parse_number("7/3") == Fraction(7, 3)

    def test_parse_rejects_junk(self):
        for bad in ("", "x", "1/0", "1..2", "2,5"):
            with pytest.raises(ParseError):
                parse_number(bad)

    def test_format_round_trip(self):
        for text in ("7", "4.5", "7/3", "0.1", "2.25", "13/7"):
            assert parse_number(format_number(parse_number(text))) == parse_number(text)

    def test_format_prefers_decimal_when_finite(self):
        assert format_number(Fraction(9, 2)) == "4.5"
        assert format_number(Fraction(21, 10)) == "2.1"
        assert format_number(Fraction(7, 3)) == "7/3"
        assert format_number(5) == "5"

    def test_tolerance_mode_yields_floats(self):
        from metric_realize import Cmp

        v = parse_number("7/2", Cmp(1e-9))
        assert isinstance(v, float) and v == 3.5


class TestFamilyCsv:
    def test_parse_path_matrix(self):
        f = parse_family_csv(PATH_CSV)
        assert f.n == 3
        assert f.d(1, 3) == 3

    def test_round_trip(self, fig2_family):
        assert parse_family_csv(family_to_csv(fig2_family)).values == fig2_family.values

    def test_row_length_error(self):
        with pytest.raises(ParseError, match="row 2 has 2 cells, expected 3"):
            parse_family_csv("0,1,1\n1,0\n1,1,0\n")

    def test_nonzero_diagonal_error(self):
        with pytest.raises(ParseError, match=r"nonzero diagonal at \(2,2\)"):
            parse_family_csv("0,1,1\n1,5,1\n1,1,0\n")

    def test_asymmetric_error(self):
        with pytest.raises(ParseError, match=r"asymmetric at \(1,3\)"):
            parse_family_csv("0,1,2\n1,0,1\n3,1,0\n")

    def test_nonpositive_error(self):
        with pytest.raises(ParseError, match=r"nonpositive 2-weight at \(1,2\)"):
            parse_family_csv("0,-1,1\n-1,0,1\n1,1,0\n")

    def test_too_small(self):
        with pytest.raises(ParseError, match="at least 2 rows"):
            parse_family_csv("0\n")

    def test_blank_lines_ignored(self):
        f = parse_family_csv("\n0,1\n\n1,0\n\n")
        assert f.n == 2


class TestGraphJson:
    def test_round_trip_preserves_exact_weights(self, fig2_graph):
        assert graph_from_json(graph_to_json(fig2_graph)) == fig2_graph

    def test_random_round_trips(self):
        rng = random.Random(161)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 9), rng)
            assert graph_from_json(graph_to_json(g)) == g

    def test_malformed_json(self):
        with pytest.raises(ParseError, match="invalid JSON"):
            graph_from_json("{nope")

    def test_missing_field(self):
        with pytest.raises(ParseError, match="malformed graph document"):
            graph_from_json('{"edges": []}')

    def test_structural_error_becomes_parse_error(self):
        doc = '{"n": 2, "edges": [{"u": 1, "v": 1, "w": "1"}]}'
        with pytest.raises(ParseError, match="self-loop"):
            graph_from_json(doc)

    def test_dot_output_shape(self):
        g = WeightedGraph(2, [(1, 2, Fraction(1, 2))])
        dot = graph_to_dot(g)
        assert dot.startswith("graph realization {")
        assert '1 -- 2 [label="0.5"];' in dot
        assert dot.endswith("}\n")


@pytest.fixture
def tmp_files(tmp_path, fig2_graph, fig2_family):
    graph_path = tmp_path / "graph.json"
    graph_path.write_text(graph_to_json(fig2_graph))
    matrix_path = tmp_path / "matrix.csv"
    matrix_path.write_text(family_to_csv(fig2_family))
    return str(graph_path), str(matrix_path)


class TestCli:
    def test_weights_round_trip(self, tmp_files, capsys, fig2_family):
        graph_path, _ = tmp_files
        assert run(["weights", graph_path]) == 0
        out = capsys.readouterr().out
        assert parse_family_csv(out).values == fig2_family.values

    def test_check_accepts(self, tmp_files, capsys):
        _, matrix_path = tmp_files
        assert run(["check", "--class", "caterpillar", matrix_path]) == 0
        assert "caterpillar: accepted" in capsys.readouterr().out

    def test_check_rejects_with_exit_1(self, tmp_files, capsys):
        _, matrix_path = tmp_files
        assert run(["check", "--class", "snake", matrix_path]) == 1
        assert "rejected" in capsys.readouterr().out

    def test_realize_json_matches_input_graph(self, tmp_files, capsys, fig2_graph):
        _, matrix_path = tmp_files
        assert run(["realize", "--class", "tree", matrix_path]) == 0
        out = capsys.readouterr().out
        assert graph_from_json(out) == fig2_graph

    def test_realize_dot(self, tmp_files, capsys):
        _, matrix_path = tmp_files
        assert run(["realize", "--class", "tree", "--format", "dot", matrix_path]) == 0
        assert capsys.readouterr().out.startswith("graph realization {")

    def test_classify_report(self, tmp_files, capsys):
        _, matrix_path = tmp_files
        assert run(["classify", matrix_path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["classes"]["tree"]["accepted"] is True
        assert doc["classes"]["snake"]["accepted"] is False
        assert doc["conditions"]["four_point"] is True

    def test_prune_removes_useless_edge(self, tmp_path, capsys):
        g = WeightedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
        path = tmp_path / "g.json"
        path.write_text(graph_to_json(g))
        assert run(["prune", str(path)]) == 0
        pruned = graph_from_json(capsys.readouterr().out)
        assert pruned.edge_pairs() == {(1, 2), (2, 3)}

    def test_gen_is_deterministic(self, capsys):
        assert run(["gen", "--class", "tree", "--n", "6", "--seed", "9"]) == 0
        first = capsys.readouterr().out
        assert run(["gen", "--class", "tree", "--n", "6", "--seed", "9"]) == 0
        assert capsys.readouterr().out == first
        g = graph_from_json(first)
        assert g.n == 6 and len(g.edges) == 5

    def test_gen_accepts_hyphenated_class(self, capsys):
        assert run(["gen", "--class", "complete-bipartite", "--n", "5", "--seed", "1"]) == 0
        graph_from_json(capsys.readouterr().out)

    def test_verify_ok_and_mismatch(self, tmp_files, tmp_path, capsys):
        graph_path, matrix_path = tmp_files
        assert run(["verify", graph_path, matrix_path]) == 0
        assert "verified" in capsys.readouterr().out
        other = tmp_path / "other.json"
        other.write_text(graph_to_json(WeightedGraph(18, [(k, k + 1, 1) for k in range(1, 18)])))
        assert run(["verify", str(other), matrix_path]) == 1

    def test_input_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("0,1\n2,0\n")
        assert run(["check", "--class", "tree", str(bad)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_gen_bad_class_exit_2(self, capsys):
        assert run(["gen", "--class", "pyramid", "--n", "5"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(TRIANGLE_CSV))
        assert run(["check", "--class", "complete", "-"]) == 0

    def test_tol_flag_enables_float_mode(self, tmp_path, capsys):
        # entries off by 1e-12: exact mode rejects the snake, float mode accepts
        near = "0,1,2.000000000001\n1,0,1\n2.000000000001,1,0\n"
        path = tmp_path / "near.csv"
        path.write_text(near)
        assert run(["check", "--class", "snake", str(path)]) == 1
        capsys.readouterr()
        assert run(["check", "--class", "snake", str(path), "--tol"]) == 0

    def test_tol_env_override(self, tmp_path, capsys, monkeypatch):
        near = "0,1,2.000000000001\n1,0,1\n2.000000000001,1,0\n"
        path = tmp_path / "near.csv"
        path.write_text(near)
        monkeypatch.setenv("METRIC_REALIZE_TOL", "1e-15")
        assert run(["check", "--class", "snake", str(path), "--tol"]) == 1
        monkeypatch.setenv("METRIC_REALIZE_TOL", "1e-6")
        capsys.readouterr()
        assert run(["check", "--class", "snake", str(path), "--tol"]) == 0

    def test_tol_env_junk_is_input_error(self, tmp_files, capsys, monkeypatch):
        _, matrix_path = tmp_files
        monkeypatch.setenv("METRIC_REALIZE_TOL", "not-a-number")
        assert run(["check", "--class", "tree", matrix_path, "--tol"]) == 2
