#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Complexes over the zigzag-truncated cell category
#
# Objects   : (vertex w, internal shift m, cohomological degree n), i.e. B_w(m) placed in degree n
# Morphisms : identity (degree 0), edge x->y along the cell tree (degree 1), loop at x (degree 2)
#             edge(y->x) o edge(x->y) = loop(x); every other composite of degree >= 2 vanishes
# F_r C     : total complex of  B_r (x) C  ->  C(1)      (the copy of C sits one degree up)
# E_r C     : total complex of  C(-1)  ->  B_r (x) C     (the copy of C sits one degree down)
#             B_r (x) B_w has one summand per path p from an r-colored vertex x into w:
#             identity and loop when w has color r, one edge for each r-colored neighbour x otherwise
# minimize  : Gaussian elimination of invertible identity components, new = alpha - gamma o delta^-1 o beta
#
# Dump format:
#    (vertex-word, shift, degree) per object, then "src -> tgt : kind * p/q" per differential entry
# --------------------------------------------------------------------------------------------------------------

# -------- import
import functools
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from types import MappingProxyType

import sympy

from . import cellgraph
from .coxeter import CoxeterMatrix, CoxeterSystem
from .errors import (BadBaseChoice, IndexOutOfRange, InconsistentDifferential, NotMinimal,
                     VertexOutsideGraph, WavefrontOutOfRadius, ZigzagTruncationViolated)

# -------- classes

class MorphKind(Enum):
    IDENTITY = 0
    EDGE     = 1
    LOOP     = 2

    @property
    def degree(self):
        return self.value

@dataclass(frozen=True)
class ZMorphism:
    kind: MorphKind
    source: object
    target: object
    scale: Fraction = Fraction(1)

    @property
    def degree(self):
        return self.kind.degree

    def scaled(self, c):
        return replace(self, scale=self.scale * c)

    def dual(self):
        """The path read backwards: identity <-> loop, edge x->y -> edge y->x."""
        if self.kind is MorphKind.IDENTITY:
            return ZMorphism(MorphKind.LOOP, self.target, self.source, self.scale)
        if self.kind is MorphKind.LOOP:
            return ZMorphism(MorphKind.IDENTITY, self.target, self.source, self.scale)
        return ZMorphism(MorphKind.EDGE, self.target, self.source, self.scale)

@dataclass(frozen=True)
class ZObject:
    vertex: object
    shift: int
    degree: int

class ZComplex:
    """Bounded complex; objects and differential are read-only once built."""

    __slots__ = ("graph", "objects", "diff", "minimal")

    def __init__(self, graph, objects, diff, minimal=False, check=True):
        self.graph = graph
        self.objects = tuple(objects)
        self.diff = MappingProxyType(dict(diff))
        self.minimal = minimal
        if check:
            self._validate()

    def __len__(self):
        return len(self.objects)

    def is_empty(self):
        return not self.objects

    def outgoing(self):
        out = defaultdict(list)
        for (i, j), f in sorted(self.diff.items(), key=lambda t: t[0]):
            out[i].append((j, f))
        return out

    def _validate(self):
        g = self.graph
        for obj in self.objects:
            if not g.contains(obj.vertex):
                raise VertexOutsideGraph(f"{g.system.format(obj.vertex)} is not a vertex of the cell graph")
        for (i, j), f in self.diff.items():
            a, b = self.objects[i], self.objects[j]
            if b.degree != a.degree + 1:
                raise ZigzagTruncationViolated(f"entry {i} -> {j} does not raise the degree by one")
            if f.source != a.vertex or f.target != b.vertex:
                raise ZigzagTruncationViolated(f"entry {i} -> {j} has wrong endpoints")
            if f.degree != b.shift - a.shift:
                raise ZigzagTruncationViolated(
                    f"entry {i} -> {j} of kind {f.kind.name} cannot map shift {a.shift} to shift {b.shift}")
            if f.kind is MorphKind.EDGE and f.target not in g.neighbors(f.source):
                raise ZigzagTruncationViolated(f"entry {i} -> {j} is an edge between non-adjacent vertices")
            if f.kind is not MorphKind.EDGE and f.source != f.target:
                raise ZigzagTruncationViolated(f"entry {i} -> {j} of kind {f.kind.name} joins distinct vertices")
            if f.scale == 0:
                raise ZigzagTruncationViolated(f"entry {i} -> {j} has scale 0")

    # ---- d o d = 0 under the zigzag composition table
    def check_d_squared(self):
        out = self.outgoing()
        for i in range(len(self.objects)):
            acc = defaultdict(Fraction)
            for j, f in out.get(i, ()):
                for k, g in out.get(j, ()):
                    h = compose(g, f)
                    if h is not None:
                        acc[(k, h.kind)] += h.scale
            for (k, kind), c in acc.items():
                if c != 0:
                    raise InconsistentDifferential(
                        f"d o d is non-zero from object {i} to object {k} ({kind.name} * {c})")
        return True

    def dump(self):
        sys_ = self.graph.system
        lines = [f"({sys_.format(o.vertex)}, {o.shift}, {o.degree})" for o in self.objects]
        for (i, j), f in sorted(self.diff.items(), key=lambda t: t[0]):
            lines.append(f"{i} -> {j} : {f.kind.name.lower()} * {f.scale}")
        return "\n".join(lines)

@dataclass(frozen=True)
class Fingerprint:
    objects: tuple              # ((vertex word, shift, degree), multiplicity)
    ranks: tuple                # ((kind of block, triples...), rank)

# -------- functions

# ---- f o g (g first); None when the composite vanishes
def compose(f, g):
    if g.target != f.source:
        raise ZigzagTruncationViolated("composing morphisms with mismatched endpoints")
    scale = f.scale * g.scale
    if scale == 0:
        return None
    if f.kind is MorphKind.IDENTITY:
        return ZMorphism(g.kind, g.source, g.target, scale)
    if g.kind is MorphKind.IDENTITY:
        return ZMorphism(f.kind, f.source, f.target, scale)
    if f.kind is MorphKind.EDGE and g.kind is MorphKind.EDGE and g.source == f.target:
        return ZMorphism(MorphKind.LOOP, g.source, g.source, scale)
    return None

def as_rational(c):
    return sympy.Rational(c.numerator, c.denominator)

def identity(w, scale=Fraction(1)):
    return ZMorphism(MorphKind.IDENTITY, w, w, Fraction(scale))

def edge(x, y, scale=Fraction(1)):
    return ZMorphism(MorphKind.EDGE, x, y, Fraction(scale))

def loop(w, scale=Fraction(1)):
    return ZMorphism(MorphKind.LOOP, w, w, Fraction(scale))

def _accumulate(diff, key, f):
    old = diff.get(key)
    if old is not None:
        if old.kind is not f.kind:
            raise ZigzagTruncationViolated(f"entry {key} mixes {old.kind.name} and {f.kind.name}")
        f = replace(old, scale=old.scale + f.scale)
    if f.scale == 0:
        diff.pop(key, None)
    else:
        diff[key] = f

def _require_categorical(graph):
    if graph.forced and not graph.override:
        raise BadBaseChoice("this cell graph was built with a forced base; complex operations need --override")

def unit_complex(graph, w):
    if not graph.contains(w):
        raise VertexOutsideGraph(f"{graph.system.format(w)} is not a vertex of the cell graph")
    return ZComplex(graph, [ZObject(w, 0, 0)], {}, minimal=True)

def direct_sum(graph, complexes):
    objects = []
    diff = {}
    minimal = True
    for c in complexes:
        offset = len(objects)
        objects.extend(c.objects)
        for (i, j), f in c.diff.items():
            diff[(i + offset, j + offset)] = f
        minimal = minimal and c.minimal
    return ZComplex(graph, objects, diff, minimal=minimal, check=False)

# ---- paths from r-colored vertices into w: one summand of B_r (x) B_w each
def paths_into(graph, r, w):
    if graph.color[w] == r:
        return [identity(w), loop(w)]
    if (w, r) in graph.frontier:
        raise WavefrontOutOfRadius(
            f"acting with {graph.system.name(r)} on {graph.system.format(w)} leaves the radius {graph.radius}")
    return [edge(x, w) for x in graph.neighbors(w) if graph.color[x] == r]

def _tensor_part(graph, r, C):
    """Objects of B_r (x) C, their index map and the B_r (x) d entries."""
    objects = []
    index = {}
    paths = []
    for i, obj in enumerate(C.objects):
        ps = paths_into(graph, r, obj.vertex)
        paths.append(ps)
        for p in ps:
            index[(i, p.kind, p.source)] = len(objects)
            objects.append(ZObject(p.source, obj.shift + 1 - p.degree, obj.degree))
    diff = {}
    for (i, j), f in C.diff.items():
        for p in paths[i]:
            q = compose(f, p)
            if q is None:
                continue
            key = (j, q.kind, q.source)
            if key not in index:
                raise ZigzagTruncationViolated(
                    f"composite {q.kind.name} from {graph.system.format(q.source)} has no summand")
            _accumulate(diff, (index[(i, p.kind, p.source)], index[key]), identity(p.source, q.scale))
    return objects, index, paths, diff

def tensor_F(r, C):
    graph = C.graph
    _require_categorical(graph)
    r = graph.system.letter(r)
    objects, index, paths, diff = _tensor_part(graph, r, C)
    copy = {}
    for i, obj in enumerate(C.objects):
        copy[i] = len(objects)
        objects.append(ZObject(obj.vertex, obj.shift + 1, obj.degree + 1))
    for (i, j), f in C.diff.items():
        _accumulate(diff, (copy[i], copy[j]), f.scaled(-1))
    for i, ps in enumerate(paths):
        for p in ps:
            _accumulate(diff, (index[(i, p.kind, p.source)], copy[i]), p)
    res = ZComplex(graph, objects, diff)
    res.check_d_squared()
    return res

def tensor_E(r, C):
    graph = C.graph
    _require_categorical(graph)
    r = graph.system.letter(r)
    objects, index, paths, diff = _tensor_part(graph, r, C)
    copy = {}
    for i, obj in enumerate(C.objects):
        copy[i] = len(objects)
        objects.append(ZObject(obj.vertex, obj.shift - 1, obj.degree - 1))
    for (i, j), f in C.diff.items():
        _accumulate(diff, (copy[i], copy[j]), f.scaled(-1))
    for i, ps in enumerate(paths):
        for p in ps:
            _accumulate(diff, (copy[i], index[(i, p.kind, p.source)]), p.dual())
    res = ZComplex(graph, objects, diff)
    res.check_d_squared()
    return res

# ---- Gaussian elimination until no invertible identity component is left
def minimize(C):
    if C.minimal:
        return C
    C.check_d_squared()
    out = defaultdict(dict)
    inn = defaultdict(dict)
    for (i, j), f in C.diff.items():
        out[i][j] = f
        inn[j][i] = f
    alive = set(range(len(C.objects)))

    while True:
        pivot = None
        for i in sorted(out):
            for j in sorted(out[i]):
                if out[i][j].kind is MorphKind.IDENTITY:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        inv = 1 / out[i][j].scale
        betas = [(k, f) for k, f in inn[j].items() if k != i]
        gammas = [(l, f) for l, f in out[i].items() if l != j]
        for k, beta in betas:
            for l, gamma in gammas:
                h = compose(gamma, beta.scaled(inv))
                if h is None:
                    continue
                old = out[k].get(l)
                if old is None:
                    new = h.scaled(-1)
                else:
                    if old.kind is not h.kind:
                        raise ZigzagTruncationViolated(f"elimination mixes {old.kind.name} and {h.kind.name}")
                    new = replace(old, scale=old.scale - h.scale)
                if new.scale == 0:
                    out[k].pop(l, None)
                    inn[l].pop(k, None)
                else:
                    out[k][l] = new
                    inn[l][k] = new
        for x in (i, j):
            for l in list(out[x]):
                inn[l].pop(x, None)
            for k in list(inn[x]):
                out[k].pop(x, None)
            out.pop(x, None)
            inn.pop(x, None)
            alive.discard(x)

    keep = sorted(alive)
    renum = {old: new for new, old in enumerate(keep)}
    diff = {(renum[i], renum[j]): f for i, targets in out.items() for j, f in targets.items()}
    return ZComplex(C.graph, [C.objects[i] for i in keep], diff, minimal=True, check=False)

# ---- isomorphism-invariant descriptor of a minimal complex
def fingerprint(C):
    if not C.minimal:
        raise NotMinimal("fingerprint needs a minimal complex (run minimize first)")
    triple = [(o.vertex.word, o.shift, o.degree) for o in C.objects]
    groups = defaultdict(list)
    for i, t in enumerate(triple):
        groups[t].append(i)
    objects = tuple(sorted(Counter(triple).items()))

    blocks = defaultdict(dict)
    for (i, j), f in C.diff.items():
        if f.kind is MorphKind.EDGE:
            blocks[(triple[i], triple[j])][(i, j)] = f.scale

    def rank(rows, cols, entries):
        m = sympy.Matrix(len(rows), len(cols),
                         lambda a, b: as_rational(entries.get((cols[b], rows[a]), Fraction(0))))
        return m.rank()

    ranks = []
    into = defaultdict(dict)
    out_of = defaultdict(dict)
    for (src, tgt), entries in blocks.items():
        ranks.append((("block", src, tgt), rank(groups[tgt], groups[src], entries)))
        into[tgt].update(entries)
        out_of[src].update(entries)
    for tgt, entries in into.items():
        cols = sorted({i for i, _ in entries})
        ranks.append((("into", tgt), rank(groups[tgt], cols, entries)))
    for src, entries in out_of.items():
        rows = sorted({j for _, j in entries})
        ranks.append((("out", src), rank(rows, groups[src], entries)))
    return Fingerprint(objects=objects, ranks=tuple(sorted(ranks)))

# ---- dihedral group I2(m) with generators s, t and its complete cell graph for base s
@functools.lru_cache(maxsize=None)
def dihedral_graph(mrt):
    if mrt < 3:
        raise IndexOutOfRange(f"dihedral order must be >= 3 (got {mrt})")
    system = CoxeterSystem(CoxeterMatrix.from_pairs(("s", "t"), [("s", "t", mrt)]))
    return cellgraph.build(system, "s")

def wave_frames(mrt, k, steps):
    graph = dihedral_graph(mrt)
    if not 1 <= k <= mrt - 1:
        raise IndexOutOfRange(f"k must lie in 1..{mrt - 1} (got {k})")
    if steps < 0:
        raise IndexOutOfRange(f"number of steps must be >= 0 (got {steps})")
    w = cellgraph.dihedral_vertex(graph, k)
    letter = 1 - graph.color[w]
    C = unit_complex(graph, w)
    frames = [C]
    for _ in range(steps):
        C = minimize(tensor_F(letter, C))
        frames.append(C)
        letter = 1 - letter
    return frames

def dihedral_wave(mrt, k, l):
    if not 0 <= l <= mrt - 1:
        raise IndexOutOfRange(f"l must lie in 0..{mrt - 1} (got {l})")
    return wave_frames(mrt, k, l)[-1]
