#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Perverse filtration on minimal complexes
#    an object B_w(m) in cohomological degree n has perverse degree n - m
#    pH^j keeps the objects of perverse degree j and moves them onto the diagonal (degree n - j)
# Anchors: at the top perverse degree k, a vertex w is an anchor when some combination of the copies of B_w in
# one degree receives no incoming edge component (left null space of the incoming block is non-zero).
# --------------------------------------------------------------------------------------------------------------

# -------- import
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import sympy
from columnar import columnar

from .errors import EmptyComplex, NotMinimal
from .zigzag import MorphKind, ZComplex, ZObject, as_rational, minimize, tensor_F

# -------- functions

def perverse_degree_of(obj):
    return obj.degree - obj.shift

def _require_minimal(C):
    if not C.minimal:
        raise NotMinimal("the perverse filtration is read off minimal complexes only")

def pH(C, j):
    _require_minimal(C)
    keep = [i for i, o in enumerate(C.objects) if perverse_degree_of(o) == j]
    renum = {old: new for new, old in enumerate(keep)}
    sign = -1 if j % 2 else 1
    objects = [ZObject(C.objects[i].vertex, C.objects[i].shift, C.objects[i].degree - j) for i in keep]
    diff = {(renum[a], renum[b]): f.scaled(sign)
            for (a, b), f in C.diff.items() if a in renum and b in renum}
    return ZComplex(C.graph, objects, diff, minimal=True)

def top_perverse_degree(C):
    if C.is_empty():
        raise EmptyComplex("an empty complex has no top perverse degree")
    return max(perverse_degree_of(o) for o in C.objects)

def anchors(C):
    _require_minimal(C)
    k = top_perverse_degree(C)
    groups = defaultdict(list)
    for i, o in enumerate(C.objects):
        if perverse_degree_of(o) == k:
            groups[(o.vertex, o.degree)].append(i)
    incoming = defaultdict(dict)
    for (a, b), f in C.diff.items():
        if f.kind is MorphKind.EDGE:
            incoming[b][a] = f.scale

    found = set()
    for (w, _), rows in groups.items():
        cols = sorted({a for b in rows for a in incoming[b]})
        if not cols:
            found.add(w)
            continue
        m = sympy.Matrix(len(rows), len(cols),
                         lambda r, c: as_rational(incoming[rows[r]].get(cols[c], Fraction(0))))
        if m.rank() < len(rows):
            found.add(w)
    return frozenset(found)

def anchor_colors(C):
    return frozenset(C.graph.color[w] for w in anchors(C))

# ---- colors t for which F_t raises the top perverse degree
def anchor_colors_via_action(C):
    k = top_perverse_degree(C)
    return frozenset(t for t in C.graph.colors()
                     if top_perverse_degree(minimize(tensor_F(t, C))) == k + 1)

# ---- when t-anchors exist, pH^{k+1}(F_t C) has zero differential and only t-colored vertices
def check_anchor_layer(C, t):
    k = top_perverse_degree(C)
    t = C.graph.system.letter(t)
    D = minimize(tensor_F(t, C))
    if top_perverse_degree(D) != k + 1:
        return True
    layer = pH(D, k + 1)
    return not layer.diff and all(C.graph.color[o.vertex] == t for o in layer.objects)

# -------- classes

@dataclass(frozen=True)
class PerverseTable:
    entries: MappingProxyType              # (degree n, shift m) -> tuple of vertices

    @classmethod
    def from_complex(cls, C):
        cells = defaultdict(list)
        for o in C.objects:
            cells[(o.degree, o.shift)].append(o.vertex)
        return cls(MappingProxyType({key: tuple(sorted(vs, key=lambda e: e.key)) for key, vs in cells.items()}))

    def degrees(self):
        return sorted({n for n, _ in self.entries})

    def shifts(self):
        return sorted({m for _, m in self.entries}, reverse=True)

    def to_dict(self, label):
        return [{"degree": n, "shift": m, "diagonal": n == m, "vertices": [label(w) for w in vs]}
                for (n, m), vs in sorted(self.entries.items())]

    # ---- grid with rows = shift (descending), columns = degree, empty diagonal cells shown as '.'
    def render(self, label, mark=lambda text: text):
        if not self.entries:
            return "(empty complex)"
        degrees = self.degrees()
        lo, hi = min(self.shifts()), max(self.shifts())
        headers = ["shift \\ degree"] + [str(n) for n in degrees]
        rows = []
        for m in range(hi, lo - 1, -1):
            row = [str(m)]
            for n in degrees:
                vs = self.entries.get((n, m), ())
                text = " ".join(label(w) for w in vs)
                if n == m:
                    text = mark(text if text else ".")
                row.append(text)
            rows.append(row)
        return columnar(rows, headers, no_borders=True)
