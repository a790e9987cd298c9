import json
from pathlib import Path

import pytest

from garside_cells import cellgraph, cli
from garside_cells.braid import parse_word
from garside_cells.cli import fuzz_task, main
from garside_cells.config import RunConfig

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


def run(capsys, *argv):
    code = main(list(argv) + ["-nc"])
    out, err = capsys.readouterr()
    return code, out, err


class TestNormalFormCommands:
    def test_nf(self, capsys):
        code, out, _ = run(capsys, "nf", "-t", "A2", "-w", "s1 s2 s1 s2")
        assert code == 0
        assert out.strip() == "(s1)(s1 s2 s1)"

    def test_nf_empty_word(self, capsys):
        code, out, _ = run(capsys, "nf", "-t", "A2", "-w", "")
        assert code == 0
        assert out.strip() == "()"

    def test_nf_json(self, capsys):
        code, out, _ = run(capsys, "nf", "-s", str(SYSTEMS / "a2.json"), "-w", "t s t s", "-f", "json")
        assert code == 0
        assert json.loads(out) == {"word": "t s t s", "factors": ["t", "s t s"]}

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "nf", "-t", "A2", "-w", "s1 x")
        assert code == 2
        assert err.startswith("ERROR 02: unknown generator 'x'")

    def test_missing_system(self, capsys):
        code, _, err = run(capsys, "nf", "-w", "s1")
        assert code == 2
        assert "ERROR 02" in err

    def test_recover(self, capsys):
        code, out, _ = run(capsys, "recover", "-t", "A3", "-w", "s1 s2 s1 s3", "--trace")
        assert code == 0
        assert "top degree" in out.lower()
        assert "OK" in out

    def test_recover_json(self, capsys):
        code, out, _ = run(capsys, "recover", "-t", "A2", "-w", "s1 s2 s1", "-f", "json")
        data = json.loads(out)
        assert code == 0
        assert data["match"]
        assert data["recovered"] == ["s1 s2 s1"]
        assert data["steps"][0]["top_degree"] == 1

    def test_recover_on_affine_system(self, capsys):
        code, _, _ = run(capsys, "recover", "-s", str(SYSTEMS / "affine_a2.json"), "-w", "s t u", "-r", "12")
        assert code == 0

    def test_forced_base(self, capsys):
        path = str(SYSTEMS / "b3_path.json")
        code, _, err = run(capsys, "recover", "-s", path, "-b", "s", "-w", "t")
        assert code == 2
        assert "ERROR 02" in err
        code, _, err = run(capsys, "recover", "-s", path, "-b", "s", "--force-base", "-w", "t")
        assert code == 2
        assert "--override" in err


class TestAlgebraCommands:
    def test_kl(self, capsys):
        code, out, _ = run(capsys, "kl", "-t", "~A2", "--y", "s1", "--w", "s1 s2 s3 s1")
        assert code == 0
        assert out.strip() == "v^3 + v"

    def test_kl_b3_path(self, capsys):
        code, out, _ = run(capsys, "kl", "-s", str(SYSTEMS / "b3_path.json"), "--y", "", "--w", "s t u t s")
        assert code == 0
        assert out.strip() == "v^5 + v^3"

    def test_hom(self, capsys):
        code, out, _ = run(capsys, "hom", "-t", "A2", "--x", "s1", "--y", "s1")
        assert code == 0
        assert out.strip() == "v^2 + 1"

    def test_burau(self, capsys):
        code, out, _ = run(capsys, "burau", "--n", "5")
        assert code == 0
        assert out.count("OK") == 4

    def test_burau_json(self, capsys):
        code, out, _ = run(capsys, "burau", "--n", "3", "--i", "1", "-f", "json")
        data = json.loads(out)
        assert code == 0
        assert data[0]["twisted"] == [["-v^-2", "1"], ["0", "1"]]
        assert data[0]["matches_reduced_burau"]

    def test_burau_bad_index(self, capsys):
        code, _, err = run(capsys, "burau", "--n", "4", "--i", "4")
        assert code == 2
        assert "ERROR 02" in err


class TestWave:
    def test_dihedral(self, capsys):
        code, out, _ = run(capsys, "wave", "--m", "8", "--k", "3", "--steps", "7")
        assert code == 0
        assert out.count("==== l =") == 8

    def test_dihedral_json(self, capsys):
        code, out, _ = run(capsys, "wave", "--m", "8", "--k", "3", "--steps", "7", "-f", "json")
        frames = json.loads(out)
        assert code == 0
        assert frames[-1]["cells"] == [{"degree": 1, "shift": 1, "diagonal": True, "vertices": ["[5]"]}]
        assert frames[-1]["arrows"] == []

    def test_vertex_mode(self, capsys):
        code, out, _ = run(capsys, "wave", "-t", "A3", "--vertex", "s2 s1", "-w", "s1 s3")
        assert code == 0
        assert out.count("==== l =") == 3

    def test_bad_wave_parameters(self, capsys):
        code, _, _ = run(capsys, "wave", "--m", "8", "--k", "9")
        assert code == 2
        code, _, _ = run(capsys, "wave", "-t", "A3")
        assert code == 2


class TestChecks:
    def test_decat_word(self, capsys):
        code, out, _ = run(capsys, "decat-check", "-t", "A3", "-w", "s1 -s2 s3")
        assert code == 0
        assert "0 mismatch" in out

    def test_decat_samples(self, capsys):
        code, _, _ = run(capsys, "decat-check", "-t", "B3", "--samples", "10", "--max-len", "5")
        assert code == 0

    def test_fuzz(self, capsys):
        code, out, _ = run(capsys, "fuzz", "-t", "A3", "--samples", "20", "--max-len", "6", "-f", "json")
        data = json.loads(out)
        assert code == 0
        assert data["passed"] + data["budget"] == 20
        assert data["failed"] == 0
        assert data["counterexample"] is None

    def test_fuzz_results_do_not_depend_on_jobs(self, capsys):
        _, one, _ = run(capsys, "fuzz", "-t", "B3", "--samples", "12", "--max-len", "6", "-f", "json")
        code, four, _ = run(capsys, "fuzz", "-t", "B3", "--samples", "12", "--max-len", "6", "-f", "json",
                            "-j", "4")
        one, four = json.loads(one), json.loads(four)
        assert code == 0
        assert four["jobs"] == 4
        for key in ("passed", "failed", "budget", "counterexample"):
            assert one[key] == four[key]

    def test_fuzz_trace_lists_every_word(self, capsys):
        code, out, _ = run(capsys, "fuzz", "-t", "A3", "--samples", "8", "--max-len", "4", "--trace", "-j", "2")
        assert code == 0
        assert sum(line.endswith(": ok") for line in out.splitlines()) == 8

    def test_fuzz_task_reports_budget(self, a3):
        config = RunConfig(type_name="A3", oracle_cap=1)
        graph = cellgraph.build(a3, "s1")
        word = parse_word(a3, "s1 s2 s1")
        kind, detail = fuzz_task(a3, graph, config, (word, 7))
        assert kind == "budget"
        assert "braid closure" in detail
        assert fuzz_task(a3, graph, RunConfig(type_name="A3"), (word, 7)) == ("ok", None)

    def test_fuzz_trace_shows_budget_words(self, capsys):
        config = RunConfig(type_name="A3", samples=20, max_len=6, oracle_cap=1, trace=True)
        code = cli.cmd_fuzz(config, None)
        out = capsys.readouterr().out
        assert code == 0
        assert "budget exceeded (braid closure" in out

    @pytest.mark.slow
    def test_fuzz_default_run(self, capsys):
        code, _, _ = run(capsys, "fuzz", "-t", "A3")
        assert code == 0

    def test_bad_radius(self, capsys):
        code, _, err = run(capsys, "fuzz", "-t", "A3", "-r", "0")
        assert code == 2
        assert err.startswith("ERROR 02: --radius")
