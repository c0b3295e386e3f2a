import os
import subprocess

import pytest

try:
    import powergraph as pg
except ImportError:
    import _core as pg


def test_window_graph():
    g = pg.power_graph("Z", "N=2")
    assert g.n == 5
    assert len(g.edges()) == 6
    assert g.degree(g.index_of("0")) == 0
    assert g.adjacent(g.index_of("1"), g.index_of("-2"))


def test_directed_arcs():
    d = pg.power_graph("Z", "N=2", directed=True)
    assert d.has_arc(d.index_of("1"), d.index_of("2"))
    assert not d.has_arc(d.index_of("2"), d.index_of("1"))
    assert d.has_arc(d.index_of("2"), d.index_of("-2"))


def test_height_functions():
    assert pg.heights_equivalent({}, {2: 2, 3: 1})
    ok, m, n, _ = pg.equivalence_witness({}, {2: 2, 3: 1})
    assert (ok, m, n) == (True, "12", "1")
    assert not pg.heights_equivalent(pg.g_p(2), pg.g_p(3))
    assert pg.classify_cardinality(pg.g_p(2)) == "AllInfinite"
    assert pg.classify_cardinality({2: 5}) == "AllFinite"
    assert pg.height_contains(pg.g_p(2), "3/8")
    assert not pg.height_contains(pg.g_p(2), "1/6")
    assert pg.scale_height({3: 1}, 12) == {2: 2, 3: 2}


def test_prime_swap():
    assert pg.prime_swap(2, 3, "3/4") == "2/9"
    assert pg.prime_swap(2, 3, "0") == "0"
    with pytest.raises(ValueError):
        pg.prime_swap(2, 3, "1/6")


def test_s_sets():
    r = pg.s_set_exact(2, 12)
    assert r["finite"] and sorted(r["members"]) == ["-3", "3"]
    r = pg.s_set_exact(4, 2)
    assert not r["finite"] and r["witness"] == "6"
    assert len(pg.s_set_window("Z", "N=20", "4", "2")) == 8
    assert pg.classify_edge_exact(2, 12)[0] == "Forward"


def test_orientation():
    g = pg.power_graph("Z", "N=30")
    r = pg.recover_orientation(g, core_bound=10)
    assert r["undetermined"] == 0
    assert r["evaluated"] == r["inverse_pairs"] + r["forward"] + r["backward"]
    assert pg.classify_edge_window(g, "2", "4")[0] == "Forward"


def test_involution_and_elements():
    assert pg.involution_phi("2", "4") == "1"
    assert pg.arc("Z", "2", "4")
    assert not pg.arc("Z", "4", "2")
    assert pg.negate("C6", "2") == "4"
    assert pg.maximal_cyclic_generator("Z^2", "(2,4)") == "(1,2)"
    assert pg.same_component("Z^2", "(1,2)", "(-2,-4)")
    assert not pg.same_component("Z^2", "(1,2)", "(1,3)")
    with pytest.raises(ValueError):
        pg.arc("Z", "1/2", "1")


def test_window_membership():
    window = pg.build_window("U{2:inf}", "D=3,H=4")
    assert "3/4" in window and "1/3" not in window
    assert len(window) == 15


def test_formats_roundtrip():
    g = pg.power_graph("U{2:inf}", "D=6,H=4", directed=True)
    assert pg.parse_tsv(pg.emit_tsv(g)) == g
    assert pg.emit_dot(g).startswith("digraph power {")


def test_c6_orbits():
    orbits = pg.automorphism_orbits(pg.power_graph("C6", "all"))
    assert ["0", "1", "5"] in orbits


def test_complement_split():
    split = pg.neighborhood_complement_split(pg.power_graph("Z", "N=12"), "2")
    assert ["-1"] in split and ["1"] in split and ["-2"] in split
    assert len(split) == 4


def test_in_process_cli():
    code, out, err = pg.cli(["verify", "--seed", "7", "--check", "example-c6"])
    assert code == 0
    assert "example-c6: PASS" in out


def test_cli_binary():
    exe = os.environ.get("POWERGRAPH_CLI")
    if not exe:
        pytest.skip("POWERGRAPH_CLI not set")
    res = subprocess.run(
        [exe, "sset", "--group", "Z", "--a", "4", "--b", "2", "--exact"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert "witness: 6" in res.stdout
