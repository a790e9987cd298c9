#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Grothendieck-level checks
#    class of a complex      : sum over objects of (-1)^n v^m [B_w]
#    verify_decat            : class of the categorical action == Hecke action on the cell module, every vertex
#    Burau matrices (type A) : sigma_i acts as -v^-1 [F_{s_i}] on the classes [B_[j]] (vertex [j] has color s_j);
#                              in the basis (-1)^(j-1) v^j [B_[j]] this is the transpose of the reduced Burau
#                              matrix with t = v^-2
# --------------------------------------------------------------------------------------------------------------

# -------- import
import functools
from dataclasses import dataclass

import numpy as np

from . import cellgraph
from .config import builtin_matrix
from .coxeter import CoxeterSystem
from .errors import IndexOutOfRange
from .hecke import CellVector, cell_action_std, unit_vector
from .recovery import act_signed_on, start_vertices
from .ring import LaurentPoly, ONE, VINV, ZERO
from .zigzag import minimize, tensor_F, unit_complex

# -------- classes

@dataclass(frozen=True)
class BurauMatrices:
    raw: np.ndarray                 # operator on the classes [B_[j]]
    scaling: tuple                  # c_j with b_j = c_j [B_[j]]
    twisted: np.ndarray             # operator on the scaled basis b_j

# -------- functions

def decat_class(C):
    out = {}
    for o in C.objects:
        term = LaurentPoly.monomial(o.shift, -1 if o.degree % 2 else 1)
        out[o.vertex] = out.get(o.vertex, ZERO) + term
    return CellVector(out)

def hecke_action(graph, word, vec):
    for s, sign in reversed(word):
        vec = cell_action_std(s, sign, vec, graph)
    return vec

def verify_decat(graph, word):
    for w in start_vertices(graph, len(word)):
        if decat_class(act_signed_on(graph, word, w)) != hecke_action(graph, word, unit_vector(w)):
            return False
    return True

@functools.lru_cache(maxsize=None)
def type_a_graph(n):
    if n < 2:
        raise IndexOutOfRange(f"braid groups start at n = 2 strands (got {n})")
    return cellgraph.build(CoxeterSystem(builtin_matrix(f"A{n - 1}")), "s1")

def _basis(graph):
    # [j] is the vertex of color s_j, i.e. s_j ... s_2 s_1
    return sorted(graph.vertices, key=lambda e: graph.color[e])

def _check_index(n, i):
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"sigma_{i} does not exist on {n} strands (1 <= i <= {n - 1})")

def burau_matrices(n, i):
    graph = type_a_graph(n)
    _check_index(n, i)
    basis = _basis(graph)
    size = len(basis)
    raw = np.full((size, size), ZERO, dtype=object)
    for col, w in enumerate(basis):
        image = decat_class(minimize(tensor_F(i - 1, unit_complex(graph, w)))).scale(-VINV)
        for row, y in enumerate(basis):
            raw[row, col] = image.coefficient(y)
    scaling = tuple(LaurentPoly.monomial(j, -1 if (j - 1) % 2 else 1) for j in range(1, size + 1))
    twisted = np.full((size, size), ZERO, dtype=object)
    for row in range(size):
        inverse = scaling[row] ** -1
        for col in range(size):
            twisted[row, col] = raw[row, col] * scaling[col] * inverse
    return BurauMatrices(raw=raw, scaling=scaling, twisted=twisted)

def burau_matrix(n, i):
    return burau_matrices(n, i).twisted

# ---- standard reduced Burau matrix of sigma_i in the variable t
def reduced_burau_matrix(n, i, t):
    _check_index(n, i)
    size = n - 1
    m = np.full((size, size), ZERO, dtype=object)
    for k in range(size):
        m[k, k] = ONE
    c = i - 1
    m[c, c] = -t
    if c > 0:
        m[c - 1, c] = t
    if c < size - 1:
        m[c + 1, c] = ONE
    return m

def matrices_equal(a, b):
    return a.shape == b.shape and all(a[idx] == b[idx] for idx in np.ndindex(a.shape))

def format_matrix(m):
    return [[str(x) for x in row] for row in m]
