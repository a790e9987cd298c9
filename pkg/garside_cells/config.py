#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Defaults, built-in Coxeter types and run configuration
#
# Built-in types (generators s1..sn, numbered along the Coxeter graph):
#    An, Bn (m(s1,s2)=4), Dn, E6, E7, E8, F4, H3, H4 (m(s1,s2)=5), I2:m, ~An
# System files: see systems/*.json
# --------------------------------------------------------------------------------------------------------------

# -------- import
import json
import re
from dataclasses import dataclass

from .coxeter import CoxeterMatrix, DEFAULT_ELEMENT_CAP
from .errors import ConfigError, InvalidCoxeterMatrix

# -------- variables
DEFAULT_ORACLE_CAP  = 20000
DEFAULT_RADIUS      = 12
DEFAULT_SAMPLES     = 300
DEFAULT_MAX_LEN     = 10
DEFAULT_SEED        = 0
DEFAULT_MAX_STEPS   = 1000
DEFAULT_JOBS        = 1
OUTPUT_FORMATS      = ("table", "json")

_TYPE_NAME = re.compile(r"^(~?)([A-HI])(\d+)(?::(\d+|inf))?$")

# -------- functions

def _path(n, special=None):
    pairs = [(f"s{i}", f"s{i+1}", 3) for i in range(1, n)]
    if special:
        for k, (s, t, m) in enumerate(pairs):
            if (s, t) in special:
                pairs[k] = (s, t, special[(s, t)])
    return pairs

# ---- Coxeter matrix of a built-in type name such as "A4", "B3", "I2:7" or "~A2"
def builtin_matrix(name):
    m = _TYPE_NAME.match(name.strip())
    if not m:
        raise ConfigError(f"unknown Coxeter type '{name}'")
    affine, family, n, order = m.group(1), m.group(2), int(m.group(3)), m.group(4)
    gens = [f"s{i}" for i in range(1, n + 1)]

    if affine:
        if family != "A" or n < 1:
            raise ConfigError(f"only affine type ~An is built in, not '{name}'")
        gens = [f"s{i}" for i in range(1, n + 2)]
        if n == 1:
            return CoxeterMatrix.from_pairs(gens, [("s1", "s2", "inf")])
        pairs = [(f"s{i}", f"s{i+1}", 3) for i in range(1, n + 1)] + [(f"s{n+1}", "s1", 3)]
        return CoxeterMatrix.from_pairs(gens, pairs)

    if family == "I":
        if n != 2 or order is None:
            raise ConfigError(f"dihedral types are written I2:m, not '{name}'")
        if order != "inf" and int(order) < 3:
            raise ConfigError(f"I2:{order} is reducible, use m >= 3")
        return CoxeterMatrix.from_pairs(gens, [("s1", "s2", order if order == "inf" else int(order))])
    if order is not None:
        raise ConfigError(f"unexpected ':' in type name '{name}'")

    try:
        if family == "A" and n >= 1:
            return CoxeterMatrix.from_pairs(gens, _path(n))
        if family == "B" and n >= 2:
            return CoxeterMatrix.from_pairs(gens, _path(n, {("s1", "s2"): 4}))
        if family == "D" and n >= 4:
            pairs = _path(n - 1) + [(f"s{n-2}", f"s{n}", 3)]
            return CoxeterMatrix.from_pairs(gens, pairs)
        if family == "E" and n in (6, 7, 8):
            pairs = [("s1", "s3", 3), ("s2", "s4", 3)] + [(f"s{i}", f"s{i+1}", 3) for i in range(3, n)]
            return CoxeterMatrix.from_pairs(gens, pairs)
        if family == "F" and n == 4:
            return CoxeterMatrix.from_pairs(gens, _path(4, {("s2", "s3"): 4}))
        if family == "H" and n in (3, 4):
            return CoxeterMatrix.from_pairs(gens, _path(n, {("s1", "s2"): 5}))
        if family == "G" and n == 2:
            return CoxeterMatrix.from_pairs(gens, [("s1", "s2", 6)])
    except InvalidCoxeterMatrix as err:
        raise ConfigError(f"cannot build type '{name}': {err.message}")
    raise ConfigError(f"unknown Coxeter type '{name}'")

# ---- Coxeter matrix from a JSON system file or a built-in type name (exactly one of them)
def load_system(path=None, type_name=None):
    if (path is None) == (type_name is None):
        raise ConfigError("give exactly one of --system <file> or --type <name>")
    if type_name is not None:
        return builtin_matrix(type_name)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as err:
        raise ConfigError(f"cannot read system file {path}: {err.strerror}")
    except json.JSONDecodeError as err:
        raise ConfigError(f"system file {path} is not valid JSON: {err.msg} (line {err.lineno})")
    return CoxeterMatrix.from_json(data)

# -------- classes

@dataclass
class RunConfig:
    system_path: str = None
    type_name: str = None
    base: str = None
    radius: int = None                  # None: whole cell graph when finite, DEFAULT_RADIUS otherwise
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    max_len: int = DEFAULT_MAX_LEN
    element_cap: int = DEFAULT_ELEMENT_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    max_steps: int = DEFAULT_MAX_STEPS
    jobs: int = DEFAULT_JOBS            # fuzz worker threads
    output_format: str = "table"
    trace: bool = False
    force_base: bool = False
    override: bool = False
    no_color: bool = False

    @classmethod
    def from_args(cls, args):
        values = {}
        for key, attr in (("system_path", "system"), ("type_name", "type"), ("base", "base"),
                          ("radius", "radius"), ("seed", "seed"), ("samples", "samples"),
                          ("max_len", "max_len"), ("output_format", "format"), ("trace", "trace"),
                          ("force_base", "force_base"), ("override", "override"), ("no_color", "no_color"),
                          ("jobs", "jobs")):
            value = getattr(args, attr, None)
            if value is not None:
                values[key] = value
        config = cls(**values)
        config.validate()
        return config

    def validate(self):
        if self.radius is not None and self.radius < 1:
            raise ConfigError(f"--radius must be >= 1 (got {self.radius})")
        if self.samples < 0:
            raise ConfigError(f"--samples must be >= 0 (got {self.samples})")
        if self.max_len < 0:
            raise ConfigError(f"--max-len must be >= 0 (got {self.max_len})")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be >= 1 (got {self.jobs})")
        if self.element_cap < 1 or self.oracle_cap < 1 or self.max_steps < 1:
            raise ConfigError("budget caps must be positive")
        return self

    def matrix(self):
        return load_system(self.system_path, self.type_name)

    # ---- radius handed to the cell graph builder (None = run to exhaustion)
    def graph_radius(self, matrix):
        if self.radius is not None:
            return self.radius
        return None if matrix.is_finite() else DEFAULT_RADIUS
