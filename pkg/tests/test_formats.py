"""Text formats: parsing, writing back, and error positions."""

import numpy as np
import pytest

from poset_scaffolds.exceptions import FormatError
from poset_scaffolds.formats import (
    format_colimit,
    format_grank,
    format_hasse,
    format_interval,
    format_limit,
    format_module_rep,
    format_points,
    format_qr_complex,
    format_scaffold,
    parse_grank,
    parse_hasse,
    parse_interval,
    parse_matrix_result,
    parse_module_rep,
    parse_points,
    parse_qr_complex,
    parse_scaffold,
    read_ambient,
    read_hasse,
    read_interval,
    read_qr_complex,
)
from poset_scaffolds.formats.text import records
from poset_scaffolds.limits import generalized_rank, limit_over
from poset_scaffolds.limits.colimits import colimit_full_coequalizer
from poset_scaffolds.linalg import PrimeField
from poset_scaffolds.modules import homology_rep
from poset_scaffolds.posets import GridInterval, Poset
from poset_scaffolds.scaffolds import initial_scaffold_general, initial_scaffold_grid


class TestRecords:
    def test_comments_and_blank_lines(self):
        recs = records("# header\n\nposet   # trailing\n  elem a\n")
        assert [(r.line_no, r.tokens) for r in recs] == [(3, ("poset",)), (4, ("elem", "a"))]

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError, match="cannot read file"):
            read_hasse(tmp_path / "absent.poset")


class TestHasse:
    def test_fixture(self, fixtures_dir, fig1):
        assert read_hasse(fixtures_dir / "fig1.poset") == fig1

    def test_round_trip(self, fig1):
        assert parse_hasse(format_hasse(fig1)) == fig1

    def test_undeclared_element_reports_line(self):
        with pytest.raises(FormatError) as info:
            parse_hasse("poset\nelem a\nedge a b\n", "q.poset")
        assert info.value.line_no == 3
        assert str(info.value).startswith("q.poset:3: edge uses undeclared element 'b'")

    def test_duplicate_element(self):
        with pytest.raises(FormatError, match="declared twice"):
            parse_hasse("poset\nelem a\nelem a\n")

    def test_cycle(self):
        with pytest.raises(FormatError, match="cycle"):
            parse_hasse("poset\nelem a\nelem b\nedge a b\nedge b a\n")

    def test_wrong_header(self):
        with pytest.raises(FormatError) as info:
            parse_hasse("interval d=2\n")
        assert info.value.line_no == 1

    def test_unknown_record(self):
        with pytest.raises(FormatError, match="unknown record"):
            parse_hasse("poset\nnode a\n")


class TestInterval:
    def test_fixture(self, fixtures_dir):
        Q = read_interval(fixtures_dir / "box2d.itv")
        assert Q.minima == ((0, 3), (1, 1), (3, 0))
        assert Q.maxima == ((2, 5), (4, 3), (5, 1))

    def test_upset_fixture(self, fixtures_dir, sweep_generators):
        Q = read_interval(fixtures_dir / "sweep_upset.itv")
        assert Q.form == "upset"
        assert set(Q.minima) == set(sweep_generators)

    def test_round_trip(self):
        Q = GridInterval.from_upset_presentation([(0, 2, 1), (3, 0, 0)], [(4, 4, 4)])
        assert parse_interval(format_interval(Q)) == Q

    def test_non_minimal_generators_are_pruned(self):
        Q = parse_interval("interval d=2\nmin 0 0\nmin 1 1\n")
        assert Q.minima == ((0, 0),)

    def test_mixed_boundaries(self):
        with pytest.raises(FormatError, match="cannot be mixed") as info:
            parse_interval("interval d=2\nmin 0 0\ncogen 3 3\nmax 2 2\n")
        assert info.value.line_no == 4

    def test_coordinate_count(self):
        with pytest.raises(FormatError, match="expected 2 coordinates"):
            parse_interval("interval d=2\nmin 0 0 0\n")

    def test_negative_coordinate(self):
        with pytest.raises(FormatError, match="below 0"):
            parse_interval("interval d=2\nmin 0 -1\n")

    def test_needs_dimension(self):
        with pytest.raises(FormatError, match="d=<dimension>"):
            parse_interval("interval\nmin 0 0\n")

    def test_needs_minima(self):
        with pytest.raises(FormatError, match="no 'min' lines"):
            parse_interval("interval d=2\n")

    def test_read_ambient(self, fixtures_dir):
        assert isinstance(read_ambient(fixtures_dir / "box2d.itv"), GridInterval)
        assert isinstance(read_ambient(fixtures_dir / "fig1.poset"), Poset)


class TestComplex:
    def test_fixture(self, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc")
        assert C.field.p == 5
        assert C.x_grades == ("x", "y", "z")
        assert C.y_grades == ("t", "u", "v", "w")
        assert C.z_grades == ()
        assert C.f.entries[:, 0].tolist() == [1, 4, 0, 0]

    def test_field_override(self, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc", field=7)
        assert C.field.p == 7
        assert C.f.entries[1, 0] == 4

    def test_round_trip_grid(self, rng):
        from poset_scaffolds.cli.generators import random_qr_complex
        from poset_scaffolds.posets import grid_leq

        F = PrimeField(13)
        grades = [(x, y) for x in range(3) for y in range(3)]
        C = random_qr_complex(rng, F, grades, grid_leq, (3, 4, 2))
        back = parse_qr_complex(format_qr_complex(C))
        assert back.field == C.field
        assert (back.x_grades, back.y_grades, back.z_grades) == (C.x_grades, C.y_grades, C.z_grades)
        assert np.array_equal(back.f.entries, C.f.entries)
        assert np.array_equal(back.g.entries, C.g.entries)

    def test_entry_out_of_range(self):
        text = "qr-complex field=5 d=poset\nX 1\na\nY 1\nb\nZ 0\nf:\n0 3 1\n"
        with pytest.raises(FormatError, match="outside") as info:
            parse_qr_complex(text)
        assert info.value.line_no == 8

    def test_composite_modulus(self):
        with pytest.raises(FormatError, match="not prime"):
            parse_qr_complex("qr-complex field=6 d=poset\nX 0\nY 0\nZ 0\n")

    def test_truncated_block(self):
        with pytest.raises(FormatError, match="unexpected end"):
            parse_qr_complex("qr-complex field=5 d=2\nX 2\n0 0\n")


class TestModuleRep:
    def test_round_trip(self, fig1, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc")
        G = homology_rep(C, fig1.canonical_order, fig1.hasse_edges, fig1.leq)
        back = parse_module_rep(format_module_rep(G))
        assert back.elements == G.elements
        assert back.dims == G.dims
        assert all(np.array_equal(back.maps[r], G.maps[r]) for r in G.relations)

    def test_grid_elements(self):
        text = "module-rep field=3 d=2\ndim 0,0 1\ndim 1,0 2\nmap 0,0 1,0\n1\n2\n"
        M = parse_module_rep(text)
        assert M.elements == ((0, 0), (1, 0))
        assert M.maps[((0, 0), (1, 0))].tolist() == [[1], [2]]
        assert parse_module_rep(format_module_rep(M)).dims == M.dims

    def test_zero_dimensional_maps_have_no_rows(self):
        M = parse_module_rep("module-rep field=3\ndim a 0\ndim b 2\nmap a b\n")
        assert M.maps[("a", "b")].shape == (2, 0)

    def test_map_before_dim(self):
        with pytest.raises(FormatError, match="no 'dim' line"):
            parse_module_rep("module-rep field=3\ndim a 1\nmap a b\n1\n")

    def test_row_length(self):
        with pytest.raises(FormatError, match="expected 2 entries") as info:
            parse_module_rep("module-rep field=3\ndim a 2\ndim b 1\nmap a b\n1 2 0\n")
        assert info.value.line_no == 5


class TestResults:
    def test_scaffold_round_trip(self, fig1):
        P = initial_scaffold_general(fig1)
        back = parse_scaffold(format_scaffold(P))
        assert (back.direction, back.elements, back.relations) == (P.direction, P.elements, P.relations)

    def test_grid_scaffold_round_trip(self, sweep_generators):
        P = initial_scaffold_grid(GridInterval(3, sweep_generators))
        text = format_scaffold(P)
        assert text.startswith("scaffold initial d=3\n")
        assert parse_scaffold(text) == P

    def test_scaffold_relation_needs_elements(self):
        with pytest.raises(FormatError, match="undeclared"):
            parse_scaffold("scaffold initial\nelem a\nrel a b\n")

    def test_limit(self, fig1, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc")
        L, _ = limit_over(C, fig1)
        parsed = parse_matrix_result(format_limit(L))
        assert parsed.kind == "limit"
        assert parsed.dim == 1
        assert parsed.extrema == (("t", 1), ("u", 1), ("v", 1), ("w", 1))
        assert np.array_equal(parsed.matrix, L.basis)

    def test_colimit(self, fig1, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc")
        G = homology_rep(C, fig1.canonical_order, fig1.hasse_edges, fig1.leq)
        colim = colimit_full_coequalizer(G)
        parsed = parse_matrix_result(format_colimit(colim))
        assert parsed.kind == "colimit"
        assert parsed.matrix.shape == (1, 7)

    def test_grank(self, fig1, fixtures_dir):
        C = read_qr_complex(fixtures_dir / "fig1_interval.qrc")
        parsed = parse_grank(format_grank(generalized_rank(C, fig1)))
        assert parsed == {"grank": 1, "dim_lim": 1, "dim_colim": 1, "pair": ("t", "z")}

    def test_points(self):
        points = [(1, 2, 0), (3, 0, 1)]
        assert format_points(points) == "1 2 0\n3 0 1\n"
        assert parse_points(format_points(points)) == points

    def test_points_must_share_a_dimension(self):
        with pytest.raises(FormatError, match="<input>:2: expected 3 coordinates"):
            parse_points("1 2 0\n3 0\n")
