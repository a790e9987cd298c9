#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# The left cell tree for a base generator s
#    vertices : elements w != e with a unique reduced expression and right descent set {s}
#    edges    : {x, r x} for a generator r (both vertices)
#    color    : the unique left descent of a vertex
# Built by BFS from s, extending w to r w while r w keeps a unique reduced expression.
# For infinite systems the BFS stops at a radius; the pairs (w, r) whose r-coloured neighbour lies beyond it are
# kept as the frontier so that complex operations can refuse to cross it.
# --------------------------------------------------------------------------------------------------------------

# -------- import
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import BadBaseChoice, IndexOutOfRange, RadiusTooSmall

# -------- classes

@dataclass(frozen=True)
class CellGraph:
    system: object = field(compare=False, repr=False)
    base: int
    vertices: tuple
    edges: frozenset
    color: MappingProxyType = field(compare=False)
    radius: int
    radius_complete: bool
    frontier: frozenset = field(compare=False, repr=False)
    forced: bool = False
    override: bool = False
    _adjacent: MappingProxyType = field(compare=False, repr=False, default=None)

    def contains(self, w):
        return w in self.color

    def neighbors(self, w):
        return self._adjacent.get(w, ())

    def by_color(self, r):
        return tuple(w for w in self.vertices if self.color[w] == r)

    def colors(self):
        return sorted(set(self.color.values()))

    def is_tree(self):
        if not self.vertices:
            return False
        if len(self.edges) != len(self.vertices) - 1:
            return False
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            w = todo.pop()
            for y in self.neighbors(w):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(self.vertices)

    def label(self, w):
        return self.system.format(w)

    def export(self):
        sys_ = self.system
        return {
            "base": sys_.name(self.base),
            "radius": self.radius,
            "radius_complete": self.radius_complete,
            "forced": self.forced,
            "vertices": [{"word": sys_.format(w), "color": sys_.name(self.color[w])} for w in self.vertices],
            "edges": sorted(sorted([sys_.format(x), sys_.format(y)]) for x, y in (tuple(e) for e in self.edges)),
        }

# -------- functions

# ---- BFS construction of the cell graph of base s
def build(system, s, radius=None, force_base=False, override=False):
    # radius None: run to exhaustion (finite systems only)
    if radius is None:
        if not system.matrix.is_finite():
            raise RadiusTooSmall("an infinite system needs an explicit radius")
    elif radius < 1:
        raise RadiusTooSmall(f"radius must be >= 1 (got {radius})")
    s = system.letter(s)
    if not system.matrix.base_allowed(s):
        if not force_base:
            raise BadBaseChoice(
                f"base {system.name(s)} must lie in a pair with m >= 4 in a non simply-laced system "
                f"(suggested: {system.name(system.matrix.default_base())})")

    start = system.generator(s)
    vertices = [start]
    seen = {start}
    edges = set()
    adjacent = {start: []}
    frontier = set()
    level = [start]
    length = 0
    while level:
        length += 1
        nxt = []
        for w in level:
            for r in range(system.rank):
                if r in w.left_descents:
                    continue
                rw = system.left_mul(r, w)
                if not system.has_unique_reduced_word(rw):
                    continue
                if length == radius:
                    frontier.add((w, r))
                    continue
                if rw not in seen:
                    seen.add(rw)
                    nxt.append(rw)
                    adjacent[rw] = []
                edges.add(frozenset((w, rw)))
                adjacent[w].append(rw)
                adjacent[rw].append(w)
        if length == radius:
            break
        nxt.sort(key=lambda e: e.word)
        vertices.extend(nxt)
        level = nxt

    color = {w: w.word[0] for w in vertices}
    vertices.sort(key=lambda e: e.key)
    return CellGraph(system=system,
                     base=s,
                     vertices=tuple(vertices),
                     edges=frozenset(edges),
                     color=MappingProxyType(color),
                     radius=radius if radius is not None else max(w.length for w in vertices),
                     radius_complete=not frontier,
                     frontier=frozenset(frontier),
                     forced=not system.matrix.base_allowed(s),
                     override=override,
                     _adjacent=MappingProxyType({w: tuple(sorted(ys, key=lambda e: e.key))
                                                 for w, ys in adjacent.items()}))

# ---- edges against {pairs with different colors and mu = 1}
def check_mu_edges(graph, hecke, edges=None):
    edges = graph.edges if edges is None else frozenset(frozenset(e) for e in edges)
    vs = graph.vertices
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            mu = hecke.mu(x, y)
            distinct = graph.color[x] != graph.color[y]
            if distinct and mu not in (0, 1):
                return False
            if (frozenset((x, y)) in edges) != (distinct and mu == 1):
                return False
    return True

# ---- vertex [k] of a dihedral cell graph: the alternating word of length k ending in the base
def dihedral_vertex(graph, k):
    for w in graph.vertices:
        if w.length == k:
            return w
    raise IndexOutOfRange(f"no vertex of length {k} in the cell graph")
