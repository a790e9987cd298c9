#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Hecke algebra of a Coxeter system over Z[v, v^-1] (Soergel's normalization)
#    H_s^2 = (v^-1 - v) H_s + 1
#    KL basis element of w is bar-invariant and lies in H_w + sum_y vZ[v] H_y
# Also: mu-values, the graded hom rank sum_z h_{z,x} h_{z,y}, and the action of the generators on the left cell
# module, both in the KL basis and in the standard basis (H_r = KL_r - v, H_r^-1 = KL_r - v^-1)
# --------------------------------------------------------------------------------------------------------------

# -------- import
import threading

from .errors import VertexOutsideGraph, WavefrontOutOfRadius
from .ring import LaurentPoly, ONE, V, VINV, ZERO

# -------- variables
QUADRATIC = VINV - V                # v^-1 - v
BAR_SHIFT = V - VINV                # H_s^-1 = H_s + (v - v^-1)

# -------- classes

class _Combination:
    """Finite Z[v, v^-1]-linear combination; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.constant(c)
                if c:
                    clean[key] = c
        self._terms = clean

    def coefficient(self, key):
        return self._terms.get(key, ZERO)

    def support(self):
        return set(self._terms)

    def items(self):
        return list(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, ZERO) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        if not isinstance(p, LaurentPoly):
            p = LaurentPoly.constant(p)
        return type(self)({key: p * c for key, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, _Combination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

class HeckeElt(_Combination):
    """Element of the Hecke algebra in standard coordinates: CoxElt -> LaurentPoly."""

    __slots__ = ()

    def __repr__(self):
        body = ", ".join(f"{w.word}: {c}" for w, c in sorted(self._terms.items(), key=lambda t: t[0].key))
        return f"HeckeElt({{{body}}})"

class CellVector(_Combination):
    """Vector of the left cell module in the images of the KL basis: vertex -> LaurentPoly."""

    __slots__ = ()

    def __repr__(self):
        body = ", ".join(f"{w.word}: {c}" for w, c in sorted(self._terms.items(), key=lambda t: t[0].key))
        return f"CellVector({{{body}}})"

class HeckeAlgebra:
    def __init__(self, system):
        self.system = system
        self._kl = {}
        self._bar = {}
        self._lock = threading.RLock()       # KL and bar memos are filled by one writer at a time

    def standard(self, w):
        return HeckeElt({w: ONE})

    # ---- H_s * h (side "L") or h * H_s (side "R")
    def mul_std_gen(self, s, h, side="L"):
        sys_ = self.system
        s = sys_.letter(s)
        out = {}
        for w, c in h.items():
            if side == "L":
                sw = sys_.left_mul(s, w)
                descent = s in w.left_descents
            else:
                sw = sys_.right_mul(w, s)
                descent = s in w.right_descents
            out[sw] = out.get(sw, ZERO) + c
            if descent:
                out[w] = out.get(w, ZERO) + QUADRATIC * c
        return HeckeElt(out)

    def mul(self, a, b):
        """General product, by expanding each H_w of b into generators."""
        out = HeckeElt()
        for w, c in b.items():
            part = a
            for s in w.word:
                part = self.mul_std_gen(s, part, side="R")
            out = out + part.scale(c)
        return out

    # ---- bar involution on standard coordinates
    def _bar_standard(self, w):
        res = self._bar.get(w.word)
        if res is not None:
            return res
        with self._lock:
            if w.is_identity():
                res = self.standard(w)
            else:
                s = w.word[0]
                rest = self._bar_standard(self.system.left_mul(s, w))
                res = self.mul_std_gen(s, rest) + rest.scale(BAR_SHIFT)
            self._bar[w.word] = res
        return res

    def bar(self, h):
        out = HeckeElt()
        for w, c in h.items():
            out = out + self._bar_standard(w).scale(c.bar())
        return out

    # ---- KL basis: KL_w = (H_s + v) KL_{sw} - sum_{z, sz < z} mu(z, sw) KL_z
    def kl_basis(self, w):
        res = self._kl.get(w.word)
        if res is not None:
            return res
        with self._lock:
            if w.is_identity():
                res = self.standard(w)
            else:
                s = w.word[0]
                x = self.system.left_mul(s, w)
                cx = self.kl_basis(x)
                res = self.mul_std_gen(s, cx) + cx.scale(V)
                for z, h in cx.items():
                    if z == x or s not in z.left_descents:
                        continue
                    mu = h.coeff(1)
                    if mu:
                        res = res - self.kl_basis(z).scale(mu)
            self._kl[w.word] = res
        return res

    # ---- fill the KL memo for the given elements, e.g. before queries from several threads
    def warm(self, elements):
        for w in elements:
            self.kl_basis(w)
        return self

    def kl_poly(self, y, w):
        return self.kl_basis(w).coefficient(y)

    def mu(self, y, x):
        if y == x:
            return 0
        if self.system.bruhat_leq(y, x):
            return self.kl_poly(y, x).coeff(1)
        if self.system.bruhat_leq(x, y):
            return self.kl_poly(x, y).coeff(1)
        return 0

    # ---- graded rank of Hom(B_x, B_y): sum over z <= x, y of h_{z,x} h_{z,y}
    def hom_rank(self, x, y):
        cx = self.kl_basis(x)
        cy = self.kl_basis(y)
        out = ZERO
        for z in cx.support() & cy.support():
            out = out + cx.coefficient(z) * cy.coefficient(z)
        return out

    # ---- KL_r acting on the cell module, via the left multiplication formula directly
    def cell_action_mu(self, r, vec, graph):
        sys_ = self.system
        r = sys_.letter(r)
        vertices = set(graph.vertices)
        out = {}
        for w, c in vec.items():
            if w not in vertices:
                raise VertexOutsideGraph(f"{sys_.format(w)} is not a vertex of the cell graph")
            if r in w.left_descents:
                out[w] = out.get(w, ZERO) + (V + VINV) * c
                continue
            terms = [(sys_.left_mul(r, w), 1)]
            for z, h in self.kl_basis(w).items():
                if z != w and r in z.left_descents and h.coeff(1):
                    terms.append((z, h.coeff(1)))
            for z, k in terms:
                if z in vertices:
                    out[z] = out.get(z, ZERO) + c * k
        return CellVector(out)

# -------- functions

# ---- KL_r acting on the cell module, combinatorially on the cell graph
def cell_action_kl(r, vec, graph):
    r = graph.system.letter(r)
    out = {}
    for w, c in vec.items():
        if not graph.contains(w):
            raise VertexOutsideGraph(f"{graph.system.format(w)} is not a vertex of the cell graph")
        if graph.color[w] == r:
            out[w] = out.get(w, ZERO) + (V + VINV) * c
            continue
        if (w, r) in graph.frontier:
            raise WavefrontOutOfRadius(
                f"{graph.system.format(w)} needs a neighbour beyond radius {graph.radius}")
        for y in graph.neighbors(w):
            if graph.color[y] == r:
                out[y] = out.get(y, ZERO) + c
    return CellVector(out)

# ---- H_r (sign +1) or H_r^-1 (sign -1) acting on the cell module
def cell_action_std(r, sign, vec, graph):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, not {sign}")
    correction = V if sign == 1 else VINV
    return cell_action_kl(r, vec, graph) - vec.scale(correction)

def unit_vector(w):
    return CellVector({w: ONE})
