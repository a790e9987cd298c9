#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Command line front end
#
#    nf           Garside normal form of a positive braid (local normalization)
#    recover      normal form read back from the action on the cell category (--trace lists every step)
#    wave         perverse tables of the complexes F_w(B_x), dihedral (--m --k --steps) or any system
#                 (--vertex --word)
#    kl           Kazhdan-Lusztig polynomial h_{y,w}
#    hom          graded rank of Hom(B_x, B_y)
#    burau        type A matrices read off the cell category, compared with the reduced Burau matrices
#    decat-check  class of the categorical action == Hecke action (one signed word or random samples)
#    fuzz         random positive words: normal form vs oracle, Garside degree / anchors, recovery, decat
#                 (--jobs N fans the words out to N threads; results do not depend on N)
#
# Exit codes: 0 = ok, 1 = failed check or internal error, 2 = usage / config error, 3 = budget exceeded,
#             4 = no anchor found
# Systems: --type An|Bn|Dn|E6|E7|E8|F4|H3|H4|G2|I2:m|~An  or  --system file.json (see systems/)
# --------------------------------------------------------------------------------------------------------------

# -------- import
import argparse
import functools
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from columnar import columnar

from . import cellgraph
from .braid import (format_signed_word, normal_form, oracle_normal_form, parse_signed_word, parse_word,
                    random_positive_word, random_signed_word)
from .config import DEFAULT_MAX_LEN, DEFAULT_SAMPLES, DEFAULT_SEED, OUTPUT_FORMATS, RunConfig
from .coxeter import CoxeterSystem
from .decat import burau_matrices, format_matrix, matrices_equal, reduced_burau_matrix, verify_decat
from .errors import BudgetExceeded, ConfigError, GarsideCellsError, VertexOutsideGraph
from .hecke import HeckeAlgebra
from .perverse import PerverseTable
from .recovery import check_garside_theorem, recover_traced
from .ring import LaurentPoly
from .zigzag import minimize, tensor_F, unit_complex, wave_frames

# -------- variables
COLOR_TITLE  = "\033[95m"             # light magenta
COLOR_OK     = "\033[32m"             # green
COLOR_FAIL   = "\033[91m"             # light red
COLOR_DIAG   = "\033[93m"             # light yellow
COLOR_INFO   = "\033[94m"             # light blue
COLOR_NORMAL = "\033[39m"

# -------- functions

# ---- disable colored output (-nc or --format json)
def disable_colored_output():
    global COLOR_TITLE
    global COLOR_OK
    global COLOR_FAIL
    global COLOR_DIAG
    global COLOR_INFO
    global COLOR_NORMAL

    COLOR_TITLE  = ""
    COLOR_OK     = ""
    COLOR_FAIL   = ""
    COLOR_DIAG   = ""
    COLOR_INFO   = ""
    COLOR_NORMAL = ""

def print_json(data):
    print(json.dumps(data, indent=2))

def status(ok):
    return f"{COLOR_OK}OK{COLOR_NORMAL}" if ok else f"{COLOR_FAIL}MISMATCH{COLOR_NORMAL}"

def make_system(config):
    return CoxeterSystem(config.matrix(), config.element_cap)

def make_graph(config, system):
    base = system.letter(config.base) if config.base else system.matrix.default_base()
    return cellgraph.build(system, base, config.graph_radius(system.matrix),
                           force_base=config.force_base, override=config.override)

def element(system, text):
    return system.canonicalize(parse_word(system, text))

# ---- nf
def cmd_nf(config, args):
    system = make_system(config)
    word = parse_word(system, args.word)
    nf = normal_form(system, word)
    if config.output_format == "json":
        print_json({"word": system.format_word(word),
                    "factors": [system.format_word(w.word) for w in nf.factors]})
    else:
        print(nf.format(system))
    return 0

# ---- recover
def cmd_recover(config, args):
    system = make_system(config)
    graph = make_graph(config, system)
    word = parse_word(system, args.word)
    recovery = recover_traced(graph, word, max_steps=config.max_steps)
    expected = normal_form(system, word)
    ok = recovery.normal_form == expected

    if config.output_format == "json":
        print_json({"word": system.format_word(word),
                    "recovered": [system.format_word(w.word) for w in recovery.normal_form.factors],
                    "normal_form": [system.format_word(w.word) for w in expected.factors],
                    "match": ok,
                    "steps": [{"top_degree": st.top_degree,
                               "anchors": [system.format(w) for w in st.anchors],
                               "letter": system.name(st.color),
                               "closed": st.closed} for st in recovery.steps]})
        return 0 if ok else 1

    if config.trace:
        rows = [[str(n), str(st.top_degree), " ".join(system.format(w) for w in st.anchors),
                 system.name(st.color), "yes" if st.closed else ""]
                for n, st in enumerate(recovery.steps, start=1)]
        if rows:
            print(columnar(rows, ["step", "top degree", "anchors", "letter", "factor closed"], no_borders=True))
    print(f"{COLOR_TITLE}recovered  : {COLOR_NORMAL}{recovery.normal_form.format(system)}")
    print(f"{COLOR_TITLE}normal form: {COLOR_NORMAL}{expected.format(system)}  {status(ok)}")
    return 0 if ok else 1

# ---- wave
def print_frames(frames, label):
    mark = lambda text: f"{COLOR_DIAG}{text}{COLOR_NORMAL}"
    for l, C in enumerate(frames):
        print(f"{COLOR_TITLE}==== l = {l}{COLOR_NORMAL}")
        print(PerverseTable.from_complex(C).render(label, mark=mark))
        for (i, j), f in sorted(C.diff.items()):
            a, b = C.objects[i], C.objects[j]
            print(f"    {label(a.vertex)}({a.shift}) -> {label(b.vertex)}({b.shift})"
                  f"  {f.kind.name.lower()} * {f.scale}")

def frames_to_json(frames, label):
    out = []
    for l, C in enumerate(frames):
        out.append({"l": l,
                    "cells": PerverseTable.from_complex(C).to_dict(label),
                    "arrows": [{"from": i, "to": j, "kind": f.kind.name.lower(), "scale": str(f.scale)}
                               for (i, j), f in sorted(C.diff.items())]})
    return out

def cmd_wave(config, args):
    if args.m is not None:
        if args.k is None:
            raise ConfigError("wave --m needs --k")
        frames = wave_frames(args.m, args.k, args.steps)
        label = lambda w: f"[{w.length}]"
    else:
        if args.vertex is None or args.word is None:
            raise ConfigError("wave needs --m/--k or --vertex with --word")
        system = make_system(config)
        graph = make_graph(config, system)
        w = element(system, args.vertex)
        if not graph.contains(w):
            raise VertexOutsideGraph(f"{system.format(w)} is not a vertex of the cell graph")
        C = unit_complex(graph, w)
        frames = [C]
        for s in reversed(parse_word(system, args.word)):
            C = minimize(tensor_F(s, C))
            frames.append(C)
        label = system.format

    if config.output_format == "json":
        print_json(frames_to_json(frames, label))
    else:
        print_frames(frames, label)
    return 0

# ---- kl / hom
def cmd_kl(config, args):
    system = make_system(config)
    y, w = element(system, args.y), element(system, args.w)
    h = HeckeAlgebra(system).kl_poly(y, w)
    if config.output_format == "json":
        print_json({"y": system.format(y), "w": system.format(w), "h": str(h)})
    else:
        print(h)
    return 0

def cmd_hom(config, args):
    system = make_system(config)
    x, y = element(system, args.x), element(system, args.y)
    rank = HeckeAlgebra(system).hom_rank(x, y)
    if config.output_format == "json":
        print_json({"x": system.format(x), "y": system.format(y), "rank": str(rank)})
    else:
        print(rank)
    return 0

# ---- burau
def cmd_burau(config, args):
    n = args.n
    indices = [args.i] if args.i is not None else list(range(1, n))
    t = LaurentPoly.monomial(-2)
    results = []
    all_ok = True
    for i in indices:
        mats = burau_matrices(n, i)
        expected = reduced_burau_matrix(n, i, t).T
        ok = matrices_equal(mats.twisted, expected)
        all_ok = all_ok and ok
        results.append((i, mats, ok))

    if config.output_format == "json":
        print_json([{"i": i,
                     "raw": format_matrix(mats.raw),
                     "scaling": [str(c) for c in mats.scaling],
                     "twisted": format_matrix(mats.twisted),
                     "matches_reduced_burau": ok} for i, mats, ok in results])
        return 0 if all_ok else 1

    headers = [f"[{j}]" for j in range(1, n)]
    for i, mats, ok in results:
        print(f"{COLOR_TITLE}==== sigma_{i} on {n} strands{COLOR_NORMAL}")
        print(f"{COLOR_INFO}classes [B_[j]]{COLOR_NORMAL}")
        print(columnar(format_matrix(mats.raw), headers, no_borders=True))
        print(f"{COLOR_INFO}basis {', '.join(str(c) for c in mats.scaling)}{COLOR_NORMAL}")
        print(columnar(format_matrix(mats.twisted), headers, no_borders=True))
        print(f"transpose of reduced Burau at t = v^-2: {status(ok)}")
    return 0 if all_ok else 1

# ---- decat-check
def cmd_decat_check(config, args):
    system = make_system(config)
    graph = make_graph(config, system)
    if args.word is not None:
        words = [parse_signed_word(system, args.word)]
    else:
        rng = random.Random(config.seed)
        words = [random_signed_word(rng, system, rng.randint(0, config.max_len)) for _ in range(config.samples)]

    failed = [word for word in words if not verify_decat(graph, word)]
    if config.output_format == "json":
        print_json({"checked": len(words), "failed": len(failed),
                    "counterexample": format_signed_word(system, failed[0]) if failed else None})
    else:
        print(f"checked {len(words)} word(s), {len(failed)} mismatch(es)  {status(not failed)}")
        if failed:
            print(f"{COLOR_FAIL}first counterexample: {format_signed_word(system, failed[0])}{COLOR_NORMAL}")
    return 1 if failed else 0

# ---- fuzz
def fuzz_one(system, graph, config, rng, word):
    # returns None when every check passes, otherwise the name of the first failing check
    nf = normal_form(system, word)
    if normal_form(system, word, rng=random.Random(rng.random())) != nf:
        return "confluence"
    if not nf.is_valid():
        return "normality"
    if oracle_normal_form(system, word, cap=config.oracle_cap) != nf:
        return "oracle"
    if not check_garside_theorem(graph, word, nf).passed:
        return "garside"
    if recover_traced(graph, word, max_steps=config.max_steps).normal_form != nf:
        return "recovery"
    if not verify_decat(graph, random_signed_word(rng, system, len(word))):
        return "decat"
    return None

# ---- one fuzz word in a worker thread: ("ok" | "fail" | "budget", detail)
def fuzz_task(system, graph, config, task):
    word, seed = task
    try:
        check = fuzz_one(system, graph, config, random.Random(seed), word)
    except BudgetExceeded as err:
        return "budget", err.message
    except GarsideCellsError as err:
        return "fail", f"{type(err).__name__}: {err.message}"
    return ("ok", None) if check is None else ("fail", check)

def cmd_fuzz(config, args):
    system = make_system(config)
    graph = make_graph(config, system)
    # single writer: warm and freeze the shared caches before the workers start
    system.freeze(graph.vertices)

    rng = random.Random(config.seed)
    tasks = []
    for _ in range(config.samples):
        word = random_positive_word(rng, system, rng.randint(0, config.max_len))
        tasks.append((word, rng.getrandbits(64)))
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        outcomes = list(pool.map(functools.partial(fuzz_task, system, graph, config), tasks))

    passed = budget = 0
    failures = []
    for (word, _), (kind, detail) in zip(tasks, outcomes):
        if kind == "ok":
            passed += 1
        elif kind == "budget":
            budget += 1
        else:
            failures.append((word, detail))
        if config.trace:
            shown = {"ok": "ok", "budget": f"budget exceeded ({detail})", "fail": detail}[kind]
            print(f"{COLOR_INFO}{system.format_word(word) or '()'}: {shown}{COLOR_NORMAL}")

    if config.output_format == "json":
        print_json({"samples": config.samples, "passed": passed, "failed": len(failures), "budget": budget,
                    "jobs": config.jobs,
                    "counterexample": ({"word": system.format_word(failures[0][0]), "check": failures[0][1]}
                                       if failures else None)})
    else:
        rows = [["passed", str(passed)], ["failed", str(len(failures))], ["budget exceeded", str(budget)]]
        print(columnar(rows, ["result", "words"], no_borders=True))
        if failures:
            word, check = failures[0]
            print(f"{COLOR_FAIL}first counterexample: {system.format_word(word)} ({check}){COLOR_NORMAL}")
        else:
            print(status(True))
    return 1 if failures else 0

COMMANDS = {
    "nf": cmd_nf,
    "recover": cmd_recover,
    "wave": cmd_wave,
    "kl": cmd_kl,
    "hom": cmd_hom,
    "burau": cmd_burau,
    "decat-check": cmd_decat_check,
    "fuzz": cmd_fuzz,
}

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-s", "--system", help="Coxeter system file (JSON)")
    common.add_argument("-t", "--type", help="built-in Coxeter type, e.g. A3, B3, I2:5, ~A2")
    common.add_argument("-b", "--base", help="generator whose cell graph is used (default: a leaf)")
    common.add_argument("-r", "--radius", type=int, help="length bound of the cell graph (infinite systems)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="number of random words")
    common.add_argument("--max-len", dest="max_len", type=int, default=DEFAULT_MAX_LEN,
                        help="maximal length of random words")
    common.add_argument("-f", "--format", choices=OUTPUT_FORMATS, default="table", help="output format")
    common.add_argument("--trace", help="show intermediate steps", action="store_true")
    common.add_argument("--force-base", dest="force_base", action="store_true",
                        help="accept a base generator that is not a leaf of a simply-laced tree")
    common.add_argument("--override", action="store_true",
                        help="run categorical commands on a forced base anyway")
    common.add_argument("-nc", "--no_color", help="Disable colored output", action="store_true")

    parser = argparse.ArgumentParser(prog="garside_cells",
                                     description="Garside normal forms from the action on a cell category")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="Garside normal form of a positive braid")
    p.add_argument("-w", "--word", required=True, help="positive word, e.g. 's1 s2 s1'")
    p = sub.add_parser("recover", parents=[common], help="normal form recovered from the categorical action")
    p.add_argument("-w", "--word", required=True, help="positive word")
    p = sub.add_parser("wave", parents=[common], help="perverse tables of F_w(B_x)")
    p.add_argument("--m", type=int, help="dihedral order m(s,t)")
    p.add_argument("--k", type=int, help="start vertex [k] of the dihedral cell graph")
    p.add_argument("--steps", type=int, default=0, help="number of alternating letters to apply")
    p.add_argument("--vertex", help="start vertex (word) in the cell graph of --system/--type")
    p.add_argument("-w", "--word", help="positive word to apply to --vertex")
    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial h_{y,w}")
    p.add_argument("--y", required=True, help="word of y")
    p.add_argument("--w", required=True, help="word of w")
    p = sub.add_parser("hom", parents=[common], help="graded rank of Hom(B_x, B_y)")
    p.add_argument("--x", required=True, help="word of x")
    p.add_argument("--y", required=True, help="word of y")
    p = sub.add_parser("burau", parents=[common], help="type A matrices vs reduced Burau")
    p.add_argument("--n", type=int, required=True, help="number of strands")
    p.add_argument("--i", type=int, help="index of sigma_i (default: all)")
    p = sub.add_parser("decat-check", parents=[common], help="class of the action vs Hecke action")
    p.add_argument("-w", "--word", help="signed word, e.g. 's1 -s2' (default: random samples)")
    p = sub.add_parser("fuzz", parents=[common], help="random consistency checks")
    p.add_argument("-j", "--jobs", type=int, default=1, help="worker threads sharing the frozen system")
    return parser

# -------- main
def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.no_color or args.format == "json":
        disable_colored_output()
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[args.command](config, args)
    except GarsideCellsError as err:
        print(f"{COLOR_FAIL}ERROR {err.exit_code:02d}: {err.message}{COLOR_NORMAL}", file=sys.stderr)
        return err.exit_code
