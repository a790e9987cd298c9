import argparse
import json

import pytest

from garside_cells.config import DEFAULT_RADIUS, RunConfig, builtin_matrix, load_system
from garside_cells.coxeter import INFINITE
from garside_cells.errors import (BudgetExceeded, ConfigError, GarsideCellsError, NoAnchorFound, NotMinimal,
                                  UsageError, WavefrontOutOfRadius, WordParseError)


class TestBuiltinTypes:
    @pytest.mark.parametrize("name, rank", [
        ("A1", 1), ("A4", 4), ("B3", 3), ("D5", 5), ("E8", 8), ("F4", 4), ("H4", 4), ("G2", 2), ("I2:7", 2),
        ("~A2", 3), ("~A1", 2),
    ])
    def test_rank(self, name, rank):
        assert builtin_matrix(name).rank == rank

    def test_orders(self):
        assert builtin_matrix("B3").order(0, 1) == 4
        assert builtin_matrix("F4").order(1, 2) == 4
        assert builtin_matrix("H3").order(0, 1) == 5
        assert builtin_matrix("G2").order(0, 1) == 6
        assert builtin_matrix("I2:7").order(0, 1) == 7
        assert builtin_matrix("~A1").order(0, 1) == INFINITE
        assert builtin_matrix("D4").order(1, 3) == 3

    @pytest.mark.parametrize("name", ["X3", "I2", "I2:2", "I3:5", "~B3", "E5", "D3", "A3:4", ""])
    def test_unknown(self, name):
        with pytest.raises(ConfigError):
            builtin_matrix(name)


class TestLoadSystem:
    def test_exactly_one_source(self, tmp_path):
        with pytest.raises(ConfigError):
            load_system()
        with pytest.raises(ConfigError):
            load_system(str(tmp_path / "x.json"), "A2")

    def test_file(self, tmp_path):
        path = tmp_path / "b3.json"
        path.write_text(json.dumps({"generators": ["s", "t", "u"], "m": [["s", "t", 3], ["t", "u", 4]]}))
        m = load_system(str(path))
        assert m.generators == ("s", "t", "u")
        assert m.order(1, 2) == 4

    def test_bad_files(self, tmp_path):
        with pytest.raises(ConfigError):
            load_system(str(tmp_path / "missing.json"))
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            load_system(str(path))
        path.write_text(json.dumps({"m": []}))
        with pytest.raises(UsageError):
            load_system(str(path))


class TestRunConfig:
    def test_from_args_keeps_defaults(self):
        args = argparse.Namespace(type="A3", system=None, radius=None, format="json", trace=True)
        config = RunConfig.from_args(args)
        assert config.type_name == "A3"
        assert config.output_format == "json"
        assert config.trace
        assert config.samples > 0

    @pytest.mark.parametrize("field, value", [("radius", 0), ("samples", -1), ("max_len", -2),
                                              ("output_format", "xml"), ("max_steps", 0),
                                              ("jobs", 0)])
    def test_validate(self, field, value):
        with pytest.raises(ConfigError):
            RunConfig(type_name="A2", **{field: value}).validate()

    def test_graph_radius(self):
        config = RunConfig(type_name="A3")
        assert config.graph_radius(builtin_matrix("A3")) is None
        assert config.graph_radius(builtin_matrix("~A2")) == DEFAULT_RADIUS
        assert RunConfig(radius=5).graph_radius(builtin_matrix("A3")) == 5


class TestErrors:
    def test_exit_codes(self):
        assert GarsideCellsError("x").exit_code == 1
        assert ConfigError("x").exit_code == 2
        assert BudgetExceeded("x").exit_code == 3
        assert WavefrontOutOfRadius("x").exit_code == 3
        assert NoAnchorFound("x").exit_code == 4
        assert NotMinimal("x").exit_code == 1

    def test_word_parse_error(self):
        err = WordParseError("unknown generator 'q'", 4)
        assert err.position == 4
        assert err.message == "unknown generator 'q' (at position 4)"
        assert err.exit_code == 2
