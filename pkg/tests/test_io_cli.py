import filecmp

import pytest

from ramseykit.arrowing import arrows, verify_colouring
from ramseykit.cli import main
from ramseykit.colouring import EdgeColouring, set_mapping
from ramseykit.constructions import balanced_multipartite, sum_hypergraph
from ramseykit.errors import FormatError
from ramseykit.forests import copy_system, union_graph
from ramseykit.graphs import (OrderedGraph, complete_graph, cycle_graph,
                              graph, hypergraph, path_graph)
from ramseykit.io import (dumps, dumps_colouring, dumps_plain, loads,
                          loads_colouring, loads_plain)

K3 = complete_graph(3)


def two_triangles():
    host = graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    return copy_system(host, K3, [(0, 1, 2), (0, 1, 3)])


class TestCanonicalJson:
    CASES = [
        complete_graph(4),
        graph(5, []),
        OrderedGraph(path_graph(4)),
        hypergraph(6, 3, [(0, 1, 2), (2, 3, 4)]),
        hypergraph(7, 3, [(1, 2, 3)], offset=1),
        two_triangles(),
        set_mapping([(1,), (0, 2), ()]),
    ]

    def test_round_trip(self):
        for obj in self.CASES:
            assert loads(dumps(obj)) == obj

    def test_reserialization_is_byte_identical(self):
        for obj in self.CASES:
            text = dumps(obj)
            assert dumps(loads(text)) == text

    def test_edges_one_per_line(self):
        text = dumps(complete_graph(3))
        assert "    [0, 1]," in text.split("\n")
        assert "    [1, 2]" in text.split("\n")

    def test_bad_json_carries_offset_and_token(self):
        with pytest.raises(FormatError) as err:
            loads('{"kind": "graph", oops}')
        assert err.value.offset == 18
        assert err.value.token.startswith("oops")

    def test_missing_field(self):
        with pytest.raises(FormatError, match="missing field 'n'"):
            loads('{"kind": "graph", "edges": []}')

    def test_unknown_kind(self):
        with pytest.raises(FormatError, match="unknown kind"):
            loads('{"kind": "multigraph", "n": 1, "edges": []}')

    def test_wrong_field_type(self):
        with pytest.raises(FormatError, match="wrong type"):
            loads('{"kind": "graph", "n": "five", "edges": []}')

    def test_bools_are_not_vertices(self):
        with pytest.raises(FormatError, match="integer tuples"):
            loads('{"kind": "graph", "n": 2, "edges": [[0, true]]}')

    def test_semantic_errors_become_format_errors(self):
        with pytest.raises(FormatError):
            loads('{"kind": "graph", "n": 2, "edges": [[0, 5]]}')

    def test_set_mapping_needs_image_per_element(self):
        with pytest.raises(FormatError, match="one image per element"):
            loads('{"kind": "set-mapping", "n": 3, "images": [[1], [0]]}')

    def test_copy_system_host_must_be_graph_like(self):
        doc = ('{"kind": "copy-system", '
               '"host": {"kind": "set-mapping", "n": 1, "images": [[]]}, '
               '"template": {"kind": "graph", "n": 2, "edges": [[0, 1]]}, '
               '"copies": []}')
        with pytest.raises(FormatError, match="graph-like"):
            loads(doc)


class TestPlainFormat:
    def test_round_trip(self):
        for obj in [complete_graph(4), OrderedGraph(cycle_graph(5)),
                    hypergraph(6, 3, [(0, 1, 2), (2, 3, 4)]),
                    hypergraph(7, 3, [(1, 2, 3)], offset=1)]:
            assert loads_plain(dumps_plain(obj)) == obj

    def test_offset_travels_as_a_comment(self):
        h = hypergraph(7, 3, [(1, 2, 3)], offset=1)
        assert "# offset=1" in dumps_plain(h)

    def test_empty_document(self):
        with pytest.raises(FormatError) as err:
            loads_plain("  \n# only a comment\n")
        assert err.value.offset == 0

    def test_bad_header(self):
        with pytest.raises(FormatError, match="expected header"):
            loads_plain("q graph 3 2\n0 1\n")

    def test_graphs_have_uniformity_two(self):
        with pytest.raises(FormatError, match="k = 2"):
            loads_plain("p graph 3 3\n")

    def test_short_edge_line(self):
        with pytest.raises(FormatError, match="needs 2 vertices"):
            loads_plain("p graph 3 2\n0\n")

    def test_non_integer_token_offset(self):
        text = "p graph 3 2\n0 x\n"
        with pytest.raises(FormatError) as err:
            loads_plain(text)
        assert err.value.token == "x"
        assert err.value.offset == text.encode().index(b"x")

    def test_set_mappings_have_no_plain_form(self):
        with pytest.raises(TypeError):
            dumps_plain(set_mapping([()]))


class TestColouringFormat:
    def test_round_trip_keeps_colours_and_mode(self):
        host = complete_graph(4)
        col = EdgeColouring(host, {e: i % 3 for i, e in enumerate(sorted(host.edges))}, 3)
        back = loads_colouring(dumps_colouring(col, "induced"), host)
        assert back.colour_of == col.colour_of
        assert back.colour_count == 3
        assert back.meta["mode"] == "induced"

    def test_host_reconstructed_when_absent(self):
        host = cycle_graph(5)
        col = EdgeColouring(host, {e: 0 for e in host.edges}, 1)
        back = loads_colouring(dumps_colouring(col))
        assert back.host == host

    def test_header_and_trailer_guards(self):
        with pytest.raises(FormatError, match="expected header"):
            loads_colouring("p graph 3 2\nt 1 nni\n")
        with pytest.raises(FormatError, match="expected trailer"):
            loads_colouring("p colouring 3 2\n0 1 0\n")
        with pytest.raises(FormatError, match="u v colour"):
            loads_colouring("p colouring 3 2\n0 1\nt 1 nni\n")


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(dumps(obj), encoding="utf-8")
    return str(path)


class TestCliGen:
    def test_amalgam(self, tmp_path, capsys):
        template = write(tmp_path, "k3.json", K3)
        assert main(["gen", "amalgam", "--template", template, "--m", "2"]) == 0
        g = loads(capsys.readouterr().out)
        assert (g.vertex_count, len(g.edges)) == (4, 5)

    def test_sum_hypergraph_plain(self, tmp_path):
        out = tmp_path / "s48.txt"
        rc = main(["gen", "sum-hypergraph", "--n", "48",
                   "--format", "plain", "--out", str(out)])
        assert rc == 0
        assert loads_plain(out.read_text()) == sum_hypergraph(48)

    def test_derived_graph(self, tmp_path, capsys):
        src = write(tmp_path, "s48.json", sum_hypergraph(48))
        assert main(["gen", "derived-graph", "--input", src]) == 0
        g = loads(capsys.readouterr().out)
        assert g.vertex_count == 48

    def test_multipartite(self, capsys):
        assert main(["gen", "multipartite", "--parts", "3",
                     "--part-size", "2"]) == 0
        assert loads(capsys.readouterr().out) == balanced_multipartite(3, 2)

    def test_cycle_of_copies(self, tmp_path, capsys):
        template = write(tmp_path, "k3.json", K3)
        assert main(["gen", "cycle-of-copies", "--template", template,
                     "--length", "3"]) == 0
        system = loads(capsys.readouterr().out)
        assert len(system.copies) == 3

    def test_cycle_of_copies_refuses_plain(self, tmp_path, capsys):
        template = write(tmp_path, "k3.json", K3)
        rc = main(["gen", "cycle-of-copies", "--template", template,
                   "--length", "3", "--format", "plain"])
        assert rc == 2
        assert capsys.readouterr().err.startswith("ramseykit:")

    def test_invalid_modulus_is_a_usage_error(self, capsys):
        assert main(["gen", "sum-hypergraph", "--n", "47"]) == 2


class TestCliAnalyze:
    def test_density_line(self, tmp_path, capsys):
        path = write(tmp_path, "k4.json", complete_graph(4))
        assert main(["analyze", "density", "--input", path]) == 0
        out = capsys.readouterr().out
        assert out == "d2 = 5/2, m2 = 5/2, strictly-2-balanced = true\n"

    def test_density_reads_plain_files_too(self, tmp_path, capsys):
        path = tmp_path / "k4.txt"
        path.write_text(dumps_plain(complete_graph(4)), encoding="utf-8")
        assert main(["analyze", "density", "--input", str(path)]) == 0
        assert "d2 = 5/2" in capsys.readouterr().out

    def test_connectivity(self, tmp_path, capsys):
        path = write(tmp_path, "c5.json", cycle_graph(5))
        assert main(["analyze", "connectivity", "--input", path]) == 0
        assert capsys.readouterr().out == "connectivity = 2\n"

    def test_inseparable_true(self, tmp_path, capsys):
        from ramseykit.generators import inseparable_template
        path = write(tmp_path, "h.json", inseparable_template())
        assert main(["analyze", "inseparable", "--input", path]) == 0
        assert capsys.readouterr().out == "inseparable = true\n"

    def test_inseparable_false_reports_witness(self, tmp_path, capsys):
        loose = hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
        path = write(tmp_path, "h.json", loose)
        assert main(["analyze", "inseparable", "--input", path]) == 0
        out = capsys.readouterr().out
        assert out.startswith("inseparable = false, ")

    def test_edge_transitive(self, tmp_path, capsys):
        path = write(tmp_path, "k4.json", complete_graph(4))
        assert main(["analyze", "edge-transitive", "--input", path]) == 0
        assert capsys.readouterr().out == "strongly-edge-transitive = true\n"

    def test_missing_file(self, capsys):
        assert main(["analyze", "density", "--input", "no-such.json"]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_density_budget_exit(self, tmp_path, capsys):
        big = complete_graph(17)
        path = write(tmp_path, "k17.json", big)
        assert main(["analyze", "density", "--input", path]) == 3


class TestCliForest:
    def test_recognize(self, tmp_path, capsys):
        path = write(tmp_path, "sys.json", two_triangles())
        assert main(["forest", "recognize", "--input", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "forest = true"
        assert lines[1] == "ordering: 0 1"
        assert lines[2] == "copy 0: fresh"
        assert lines[3] == "copy 1: shares edge 0 1"

    def test_recognize_negative(self, tmp_path, capsys):
        host = complete_graph(4)
        bad = copy_system(host, K3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
        path = write(tmp_path, "sys.json", bad)
        assert main(["forest", "recognize", "--input", path]) == 0
        assert capsys.readouterr().out == "forest = false\n"

    def test_recognize_budget(self, tmp_path, capsys):
        path = write(tmp_path, "sys.json", two_triangles())
        rc = main(["forest", "recognize", "--input", path, "--budget", "1"])
        assert rc == 3

    def test_union(self, tmp_path, capsys):
        system = two_triangles()
        path = write(tmp_path, "sys.json", system)
        assert main(["forest", "union", "--input", path]) == 0
        assert loads(capsys.readouterr().out) == union_graph(system)


class TestCliColour:
    def test_free_partition(self, tmp_path, capsys):
        f = set_mapping([(1,), (0, 2), ()])
        path = write(tmp_path, "f.json", f)
        assert main(["colour", "free-partition", "--input", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        count = int(lines[0].split("= ")[1])
        assert count <= 2 * 2 + 1
        assert len(lines) == count + 1

    def test_multipartite(self, tmp_path, capsys):
        host = balanced_multipartite(3, 1)   # the largest (2, K3)-free one
        host_path = write(tmp_path, "host.json", host)
        template = write(tmp_path, "k3.json", K3)
        rc = main(["colour", "multipartite", "--input", host_path,
                   "--template", template, "--m", "2"])
        assert rc == 0
        col = loads_colouring(capsys.readouterr().out)
        assert col.host == host
        assert not verify_colouring(host, K3, col)

    def test_multipartite_rejects_hosts_with_amalgams(self, tmp_path, capsys):
        host_path = write(tmp_path, "host.json", balanced_multipartite(3, 4))
        template = write(tmp_path, "k3.json", K3)
        rc = main(["colour", "multipartite", "--input", host_path,
                   "--template", template, "--m", "2"])
        assert rc == 2
        assert "amalgam" in capsys.readouterr().err

    def test_cycle(self, tmp_path, capsys):
        path = write(tmp_path, "c5.json", cycle_graph(5))
        rc = main(["colour", "cycle", "--input", path,
                   "--length", "5", "--m", "2"])
        assert rc == 0
        out = capsys.readouterr().out
        assert out.rstrip().endswith("t 5 nni")

    def test_split(self, tmp_path, capsys):
        path = write(tmp_path, "k5.json", OrderedGraph(complete_graph(5)))
        assert main(["colour", "split", "--input", path, "--parts", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("classes = 3, cross = ")
        cross = int(lines[0].split("cross = ")[1].split()[0])
        assert cross >= 7  # at least (1 - 1/3) of 10 edges
        directed = [l for l in lines if l.startswith(("fwd ", "bwd "))]
        assert len(directed) == cross

    def test_split_requires_an_ordered_host(self, tmp_path, capsys):
        path = write(tmp_path, "k5.json", complete_graph(5))
        rc = main(["colour", "split", "--input", path, "--parts", "3"])
        assert rc == 2
        assert "ordered-graph" in capsys.readouterr().err


class TestCliArrow:
    def test_decide_positive(self, tmp_path, capsys):
        host = write(tmp_path, "k6.json", complete_graph(6))
        template = write(tmp_path, "k3.json", K3)
        rc = main(["arrow", "decide", "--host", host,
                   "--template", template, "--r", "2"])
        assert rc == 0
        assert capsys.readouterr().out == "arrows = true\n"

    def test_decide_negative_appends_witness(self, tmp_path, capsys):
        host = write(tmp_path, "k5.json", complete_graph(5))
        template = write(tmp_path, "k3.json", K3)
        rc = main(["arrow", "decide", "--host", host,
                   "--template", template, "--r", "2"])
        assert rc == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "arrows = false"
        col = loads_colouring("\n".join(lines[1:]) + "\n", complete_graph(5))
        assert not verify_colouring(complete_graph(5), K3, col)

    def test_decide_budget_exit(self, tmp_path, capsys):
        host = write(tmp_path, "k6.json", complete_graph(6))
        template = write(tmp_path, "k3.json", K3)
        rc = main(["arrow", "decide", "--host", host, "--template", template,
                   "--r", "2", "--budget", "2"])
        assert rc == 3

    def test_verify_accepts_a_real_witness(self, tmp_path, capsys):
        witness = arrows(complete_graph(5), K3, 2).witness
        col_path = tmp_path / "w.txt"
        col_path.write_text(dumps_colouring(witness), encoding="utf-8")
        host = write(tmp_path, "k5.json", complete_graph(5))
        template = write(tmp_path, "k3.json", K3)
        rc = main(["arrow", "verify", "--host", host, "--template", template,
                   "--colouring", str(col_path)])
        assert rc == 0
        assert capsys.readouterr().out == "monochromatic copies = 0\n"

    def test_verify_counts_violations(self, tmp_path, capsys):
        host_g = complete_graph(5)
        flat = EdgeColouring(host_g, {e: 0 for e in host_g.edges}, 1)
        col_path = tmp_path / "flat.txt"
        col_path.write_text(dumps_colouring(flat), encoding="utf-8")
        host = write(tmp_path, "k5.json", host_g)
        template = write(tmp_path, "k3.json", K3)
        rc = main(["arrow", "verify", "--host", host, "--template", template,
                   "--colouring", str(col_path)])
        assert rc == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "monochromatic copies = 10"
        assert all(l.startswith("copy: ") and l.endswith("(colour 0)")
                   for l in lines[1:])


class TestCliVerify:
    def test_suite_runs_clean(self, capsys):
        rc = main(["verify", "paper-claims", "--suite", "section6"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines
        assert all(l.startswith("ok ") for l in lines)

    def test_unknown_suite_is_a_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "paper-claims", "--suite", "section99"])
        assert err.value.code == 2


class TestCliDeterminism:
    def test_repeated_runs_are_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for out in (a, b):
            rc = main(["gen", "sum-hypergraph", "--n", "48", "--out", str(out)])
            assert rc == 0
        assert filecmp.cmp(a, b, shallow=False)

    def test_threads_flag_never_changes_output(self, tmp_path):
        host = write(tmp_path, "k5.json", complete_graph(5))
        template = write(tmp_path, "k3.json", K3)
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        main(["arrow", "decide", "--host", host, "--template", template,
              "--r", "2", "--out", str(a)])
        main(["--threads", "8", "arrow", "decide", "--host", host,
              "--template", template, "--r", "2", "--out", str(b)])
        assert filecmp.cmp(a, b, shallow=False)
