"""Command-line front end: exit codes, outputs and benchmark tables."""

import logging

import pandas as pd
import pytest

from poset_scaffolds.cli import RunConfig, main
from poset_scaffolds.formats import parse_grank, parse_matrix_result, parse_points, parse_scaffold


@pytest.fixture
def paths(fixtures_dir):
    return {
        "hasse": str(fixtures_dir / "fig1.poset"),
        "box": str(fixtures_dir / "box2d.itv"),
        "upset": str(fixtures_dir / "sweep_upset.itv"),
        "complex": str(fixtures_dir / "fig1_interval.qrc"),
    }


class TestCommands:
    def test_scaffold_to_file(self, paths, tmp_path):
        out = tmp_path / "fig1.scaffold"
        assert main(["scaffold", "--hasse", paths["hasse"], "--out", str(out)]) == 0
        P = parse_scaffold(out.read_text())
        assert P.elements == tuple("tuvwxyz")
        assert len(P.relations) == 6

    def test_final_scaffold_of_interval(self, paths, capsys):
        assert main(["final-scaffold", "--interval", paths["box"]]) == 0
        P = parse_scaffold(capsys.readouterr().out)
        assert P.direction == "final"
        assert set(P.elements) == {(2, 5), (4, 3), (5, 1), (2, 3), (4, 1)}

    def test_sweep_scaffold(self, paths, capsys):
        assert main(["scaffold", "--interval", paths["upset"], "--algo", "sweep"]) == 0
        assert len(parse_scaffold(capsys.readouterr().out)) == 17

    def test_grank(self, paths, capsys):
        assert main(["grank", "--complex", paths["complex"], "--hasse", paths["hasse"]]) == 0
        result = parse_grank(capsys.readouterr().out)
        assert result["grank"] == 1

    def test_limit_with_field(self, paths, capsys):
        args = ["limit", "--complex", paths["complex"], "--hasse", paths["hasse"], "--field", "5"]
        assert main(args) == 0
        parsed = parse_matrix_result(capsys.readouterr().out)
        assert parsed.dim == 1

    def test_colimit(self, paths, capsys):
        assert main(["colimit", "--complex", paths["complex"], "--hasse", paths["hasse"]]) == 0
        assert parse_matrix_result(capsys.readouterr().out).dim == 1

    def test_betti1_support(self, paths, capsys):
        assert main(["betti1-support", "--interval", paths["upset"]]) == 0
        assert len(parse_points(capsys.readouterr().out)) == 9

    def test_validate(self, paths, capsys):
        assert main(["validate", "--hasse", paths["hasse"], "--complex", paths["complex"]]) == 0
        out = capsys.readouterr().out
        assert "poset 7 elements 7 edges connected=True" in out
        assert "complex rank 7 field 5" in out


class TestFailures:
    def test_malformed_input_exits_with_one(self, tmp_path, caplog):
        bad = tmp_path / "bad.poset"
        bad.write_text("poset\nelem a\nedge a b\n")
        with caplog.at_level(logging.ERROR):
            assert main(["scaffold", "--hasse", str(bad)]) == 1
        assert f"{bad}:3:" in caplog.text

    def test_disconnected_grank_exits_with_one(self, tmp_path, paths):
        two = tmp_path / "two.poset"
        two.write_text("poset\nelem t\nelem u\n")
        assert main(["grank", "--complex", paths["complex"], "--hasse", str(two)]) == 1

    def test_missing_file(self, tmp_path):
        assert main(["scaffold", "--hasse", str(tmp_path / "none.poset")]) == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["scaffold"],
            ["grank", "--hasse", "fig1.poset"],
            ["limit", "--hasse", "a", "--interval", "b", "--complex", "c"],
            ["scaffold", "--interval", "box.itv", "--algo", "general"],
            ["scaffold", "--hasse", "fig1.poset", "--algo", "sweep"],
            ["grank", "--hasse", "a", "--complex", "c", "--field", "4"],
            ["nonsense"],
        ],
    )
    def test_bad_arguments_exit_with_two(self, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


class TestRunConfig:
    def test_grid_algo(self):
        config = RunConfig(command="scaffold", hasse="q.poset", algo="general")
        assert config.grid_algo == "auto"

    def test_default_sizes(self):
        config = RunConfig(command="bench")
        assert config.sizes == [16, 32, 64, 128, 256, 512, 1024]


class TestBench:
    def test_u4(self, tmp_path):
        out = tmp_path / "u4.csv"
        assert main(["bench", "--family", "u4", "--sizes", "1", "2", "3", "--out", str(out)]) == 0
        frame = pd.read_csv(out)
        assert frame["essential"].tolist() == [6, 13, 22]
        assert frame["d"].tolist() == [4, 4, 4]

    def test_limit2d(self, tmp_path):
        out = tmp_path / "limit2d.csv"
        argv = ["bench", "--family", "limit2d", "--sizes", "3", "5", "--rank", "8", "--seed", "4", "--out", str(out)]
        assert main(argv) == 0
        frame = pd.read_csv(out)
        assert len(frame) == 2
        assert frame["t_limit_naive_ms"].notna().all()
        assert (frame["scaffold_size"] >= frame["n"]).all()

    def test_random3d(self, tmp_path):
        out = tmp_path / "random3d.csv"
        assert main(["bench", "--family", "random3d", "--sizes", "8", "16", "--out", str(out)]) == 0
        frame = pd.read_csv(out)
        assert frame["n"].tolist() == [8, 16]
        assert frame["t_limit_scaffold_ms"].isna().all()
