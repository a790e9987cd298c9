#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Recover the Garside normal form of a positive braid from its action on the cell category
#
#    1. act with F_sigma on the sum of all B_w and minimize (one complex per vertex, never mixed)
#    2. k = top perverse degree = number of factors; the colors of the anchors are D_L of the top factor
#    3. pick the smallest such color t, apply E_t and minimize; t is the next letter of the current factor
#    4. when the top perverse degree drops, the current factor is complete
#    5. stop when every complex is back to a single B_w
#
# On a radius-bounded cell graph only the core vertices, far enough from the boundary for the whole computation,
# are used as starting points.
# --------------------------------------------------------------------------------------------------------------

# -------- import
from dataclasses import dataclass, field

from .braid import NormalForm, normal_form
from .config import DEFAULT_MAX_STEPS
from .errors import BudgetExceeded, NoAnchorFound, WavefrontOutOfRadius
from .perverse import anchors, top_perverse_degree
from .zigzag import direct_sum, fingerprint, minimize, tensor_E, tensor_F, unit_complex

# -------- classes

@dataclass
class ActionState:
    complexes: dict                          # start vertex -> minimal complex
    recovered: list = field(default_factory=list)
    current_factor: list = field(default_factory=list)

    def top_degree(self):
        return max(top_perverse_degree(C) for C in self.complexes.values())

    def top_anchors(self):
        k = self.top_degree()
        found = set()
        for C in self.complexes.values():
            if top_perverse_degree(C) == k:
                found |= anchors(C)
        return frozenset(found)

@dataclass(frozen=True)
class RecoveryStep:
    top_degree: int
    anchors: tuple
    color: int
    closed: bool

@dataclass(frozen=True)
class Recovery:
    normal_form: NormalForm
    steps: tuple

@dataclass(frozen=True)
class GarsideReport:
    word: tuple
    factor_count: int
    top_degree: int
    anchor_colors: frozenset
    descent_colors: frozenset
    bijective: object = None                # None when the bijectivity clause does not apply

    @property
    def degree_ok(self):
        return self.top_degree == self.factor_count

    @property
    def colors_ok(self):
        return self.factor_count == 0 or self.anchor_colors == self.descent_colors

    @property
    def passed(self):
        return self.degree_ok and self.colors_ok and self.bijective is not False

# -------- functions

# ---- start vertices: all of a complete graph, or those whose wavefront stays inside the radius
def start_vertices(graph, word_length):
    if graph.radius_complete:
        return graph.vertices
    bound = graph.radius - (word_length + 1)
    core = tuple(w for w in graph.vertices if w.length <= bound)
    if not core:
        raise WavefrontOutOfRadius(
            f"radius {graph.radius} leaves no vertex for a word of length {word_length}")
    return core

def act_signed_on(graph, word, w):
    C = unit_complex(graph, w)
    for s, sign in reversed(word):
        C = minimize(tensor_F(s, C) if sign > 0 else tensor_E(s, C))
    return C

def act_on(graph, word, w):
    return act_signed_on(graph, tuple((s, 1) for s in word), w)

def act_per_vertex(graph, word, signed=False):
    vertices = start_vertices(graph, len(word))
    if signed:
        return {w: act_signed_on(graph, word, w) for w in vertices}
    return {w: act_on(graph, word, w) for w in vertices}

def act_positive(graph, word):
    per_vertex = act_per_vertex(graph, word)
    return direct_sum(graph, [per_vertex[w] for w in sorted(per_vertex, key=lambda e: e.key)])

def act_signed(graph, word):
    per_vertex = act_per_vertex(graph, word, signed=True)
    return direct_sum(graph, [per_vertex[w] for w in sorted(per_vertex, key=lambda e: e.key)])

def recover_traced(graph, word, pick=min, max_steps=DEFAULT_MAX_STEPS):
    system = graph.system
    state = ActionState(act_per_vertex(graph, word))
    units = {w: fingerprint(unit_complex(graph, w)) for w in state.complexes}
    steps = []
    for _ in range(max_steps):
        if all(fingerprint(C) == units[w] for w, C in state.complexes.items()):
            if state.current_factor:
                state.recovered.append(system.canonicalize(state.current_factor))
            return Recovery(NormalForm(tuple(state.recovered)), tuple(steps))
        k = state.top_degree()
        found = state.top_anchors()
        if not found:
            raise NoAnchorFound(f"no anchor at top perverse degree {k} after {len(steps)} steps")
        t = pick(frozenset(graph.color[w] for w in found))
        state.complexes = {w: minimize(tensor_E(t, C)) for w, C in state.complexes.items()}
        state.current_factor.append(t)
        closed = state.top_degree() < k
        if closed:
            state.recovered.append(system.canonicalize(state.current_factor))
            state.current_factor = []
        steps.append(RecoveryStep(k, tuple(sorted(found, key=lambda e: e.key)), t, closed))
    raise BudgetExceeded(f"recovery did not finish within {max_steps} steps")

def recover(graph, word, pick=min, max_steps=DEFAULT_MAX_STEPS):
    return recover_traced(graph, word, pick, max_steps).normal_form

def check_garside_theorem(graph, word, nf=None):
    system = graph.system
    if nf is None:
        nf = normal_form(system, word)
    state = ActionState(act_per_vertex(graph, word))
    k = state.top_degree()
    found = state.top_anchors()
    colors = frozenset(graph.color[w] for w in found)
    expected = nf.factors[0].left_descents if nf.factors else frozenset()
    bijective = None
    if (nf.factors and graph.radius_complete and system.matrix.is_simply_laced()
            and system.matrix.graph_is_tree()):
        bijective = len(found) == len(colors)
    return GarsideReport(word=tuple(word),
                         factor_count=len(nf),
                         top_degree=k,
                         anchor_colors=colors,
                         descent_colors=expected,
                         bijective=bijective)
