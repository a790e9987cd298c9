#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Generic Coxeter system given by a Coxeter matrix
# Elements are identified by the ShortLex-least reduced word, found through the closure of a reduced word under
# braid moves (Tits). All closures, products and Bruhat comparisons are memoized per system.
# Cache misses are filled under one lock (single writer); freeze() warms the products around a set of elements
# so that worker threads sharing the system afterwards only read.
#
# Coxeter system file (JSON):
#    {"generators": ["s", "t", "u"], "m": [["s", "t", 3], ["t", "u", 4]]}
#    omitted pairs default to 2, "inf" is accepted as an order
# --------------------------------------------------------------------------------------------------------------

# -------- import
import math
import threading
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, InvalidCoxeterMatrix, UnknownGenerator

# -------- variables
INFINITE = 0                        # stored order for m(s,t) = infinity
DEFAULT_ELEMENT_CAP = 200000

# -------- classes

@dataclass(frozen=True)
class CoxeterMatrix:
    generators: tuple
    orders: tuple                   # orders[i][j] = m(s_i, s_j), INFINITE for infinity

    def __post_init__(self):
        n = len(self.generators)
        if n == 0:
            raise InvalidCoxeterMatrix("a Coxeter system needs at least one generator")
        if len(set(self.generators)) != n or not all(isinstance(g, str) and g for g in self.generators):
            raise InvalidCoxeterMatrix(f"generator names must be distinct non-empty strings: {self.generators}")
        if len(self.orders) != n or any(len(row) != n for row in self.orders):
            raise InvalidCoxeterMatrix(f"Coxeter matrix must be {n} x {n}")
        for i in range(n):
            if self.orders[i][i] != 1:
                raise InvalidCoxeterMatrix(f"diagonal entry for {self.generators[i]} must be 1")
            for j in range(n):
                if i == j:
                    continue
                m = self.orders[i][j]
                if m != self.orders[j][i]:
                    raise InvalidCoxeterMatrix(f"m({self.generators[i]},{self.generators[j]}) is not symmetric")
                if m != INFINITE and m < 2:
                    raise InvalidCoxeterMatrix(
                        f"m({self.generators[i]},{self.generators[j]}) = {m} must be >= 2 or inf")
        if not self._graph_connected():
            raise InvalidCoxeterMatrix("the Coxeter graph is not connected (reducible system)")

    @classmethod
    def from_pairs(cls, generators, pairs):
        generators = tuple(generators)
        index = {g: i for i, g in enumerate(generators)}
        n = len(generators)
        orders = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        seen = {}
        for s, t, m in pairs:
            for g in (s, t):
                if g not in index:
                    raise UnknownGenerator(f"unknown generator '{g}' in Coxeter matrix")
            if s == t:
                raise InvalidCoxeterMatrix(f"pair ({s},{t}) is on the diagonal")
            m = _read_order(m)
            key = frozenset((s, t))
            if key in seen and seen[key] != m:
                raise InvalidCoxeterMatrix(f"conflicting orders for pair ({s},{t})")
            seen[key] = m
            orders[index[s]][index[t]] = m
            orders[index[t]][index[s]] = m
        return cls(generators, tuple(tuple(row) for row in orders))

    @classmethod
    def from_json(cls, data):
        try:
            generators = data["generators"]
            pairs = data.get("m", [])
        except (TypeError, AttributeError, KeyError):
            raise InvalidCoxeterMatrix("system file needs a 'generators' list and an 'm' list")
        for entry in pairs:
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise InvalidCoxeterMatrix(f"bad entry {entry!r} in 'm': expected [s, t, order]")
        return cls.from_pairs(generators, pairs)

    def to_json(self):
        pairs = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.orders[i][j]
                if m != 2:
                    pairs.append([self.generators[i], self.generators[j], "inf" if m == INFINITE else m])
        return {"generators": list(self.generators), "m": pairs}

    @property
    def rank(self):
        return len(self.generators)

    def order(self, i, j):
        return self.orders[i][j]

    def index(self, name):
        if isinstance(name, int):
            if 0 <= name < self.rank:
                return name
            raise UnknownGenerator(f"generator index {name} out of range")
        try:
            return self.generators.index(name)
        except ValueError:
            raise UnknownGenerator(f"unknown generator '{name}' (known: {' '.join(self.generators)})")

    def _graph_edges(self):
        return [(i, j) for i in range(self.rank) for j in range(i + 1, self.rank)
                if self.orders[i][j] == INFINITE or self.orders[i][j] >= 3]

    def _graph_connected(self):
        adj = {i: set() for i in range(self.rank)}
        for i, j in self._graph_edges():
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for j in adj[i] - seen:
                seen.add(j)
                todo.append(j)
        return len(seen) == self.rank

    def is_simply_laced(self):
        return all(self.orders[i][j] in (2, 3) for i, j in self._graph_edges())

    def graph_is_tree(self):
        return len(self._graph_edges()) == self.rank - 1

    # ---- finite type iff the cosine form -cos(pi/m) is positive definite
    def is_finite(self):
        b = np.empty((self.rank, self.rank))
        for i in range(self.rank):
            for j in range(self.rank):
                m = self.orders[i][j]
                b[i, j] = -1.0 if m == INFINITE else -math.cos(math.pi / m)
        return bool(np.linalg.eigvalsh(b).min() > 1e-9)

    def default_base(self):
        if self.is_simply_laced():
            return 0
        for i in range(self.rank):
            for j in range(self.rank):
                m = self.orders[i][j]
                if i != j and (m == INFINITE or m >= 4):
                    return i
        return 0

    def base_allowed(self, s):
        if self.is_simply_laced():
            return True
        return any(t != s and (self.orders[s][t] == INFINITE or self.orders[s][t] >= 4)
                   for t in range(self.rank))

@dataclass(frozen=True)
class CoxElt:
    word: tuple                                                   # ShortLex-least reduced word
    length: int = field(compare=False, repr=False)
    left_descents: frozenset = field(compare=False, repr=False)
    right_descents: frozenset = field(compare=False, repr=False)

    def is_identity(self):
        return not self.word

    @property
    def key(self):
        return (self.length, self.word)

class CoxeterSystem:
    """Elements, products, descents and Bruhat order of one Coxeter system."""

    def __init__(self, matrix, element_cap=DEFAULT_ELEMENT_CAP):
        self.matrix = matrix
        self.element_cap = element_cap
        self._words = {}                # canonical word -> frozenset of all reduced words
        self._elements = {}             # canonical word -> CoxElt
        self._right = {}                # (word, s) -> CoxElt
        self._left = {}                 # (s, word) -> CoxElt
        self._bruhat = {}
        self._moves = {}
        self._lock = threading.RLock()
        self.frozen = False
        self.identity = self._intern(frozenset({()}))

    @property
    def rank(self):
        return self.matrix.rank

    @property
    def generators(self):
        return self.matrix.generators

    def letter(self, g):
        return self.matrix.index(g)

    def name(self, i):
        return self.matrix.generators[i]

    def format_word(self, word):
        return " ".join(self.matrix.generators[i] for i in word)

    def format(self, w):
        return self.format_word(w.word) if w.word else "e"

    # ---- braid moves: replace an alternating factor a b a ... (m letters) by b a b ...
    def _alternating(self, a, b, m):
        key = (a, b, m)
        if key not in self._moves:
            self._moves[key] = tuple(a if k % 2 == 0 else b for k in range(m))
        return self._moves[key]

    def braid_moves(self, word):
        out = []
        n = len(word)
        for i in range(n - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                continue
            m = self.matrix.orders[a][b]
            if m == INFINITE or i + m > n:
                continue
            if word[i:i + m] == self._alternating(a, b, m):
                out.append(word[:i] + self._alternating(b, a, m) + word[i + m:])
        return out

    def braid_closure(self, word, cap=None):
        word = tuple(word)
        seen = {word}
        todo = [word]
        while todo:
            u = todo.pop()
            for nxt in self.braid_moves(u):
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
                    if cap is not None and len(seen) > cap:
                        raise BudgetExceeded(f"braid closure of '{self.format_word(word)}' has more than {cap} words")
        return frozenset(seen)

    def _intern(self, words):
        canonical = min(words)
        elt = self._elements.get(canonical)
        if elt is not None:
            return elt
        with self._lock:
            elt = self._elements.get(canonical)
            if elt is not None:
                return elt
            if len(self._elements) >= self.element_cap:
                raise BudgetExceeded(f"more than {self.element_cap} group elements requested")
            elt = CoxElt(word=canonical,
                         length=len(canonical),
                         left_descents=frozenset(u[0] for u in words if u),
                         right_descents=frozenset(u[-1] for u in words if u))
            self._words[canonical] = words
            self._elements[canonical] = elt
        return elt

    def reduced_words(self, w):
        return self._words[w.word]

    def has_unique_reduced_word(self, w):
        return len(self._words[w.word]) == 1

    # ---- generators and products
    def generator(self, g):
        return self.right_mul(self.identity, self.letter(g))

    def right_mul(self, x, s):
        key = (x.word, s)
        res = self._right.get(key)
        if res is not None:
            return res
        with self._lock:
            if s in x.right_descents:
                res = self._intern(frozenset(u[:-1] for u in self._words[x.word] if u[-1] == s))
            else:
                res = self._intern(self.braid_closure(x.word + (s,)))
            self._right[key] = res
            self._right[(res.word, s)] = x
        return res

    def left_mul(self, s, x):
        key = (s, x.word)
        res = self._left.get(key)
        if res is not None:
            return res
        with self._lock:
            if s in x.left_descents:
                res = self._intern(frozenset(u[1:] for u in self._words[x.word] if u[0] == s))
            else:
                res = self._intern(self.braid_closure((s,) + x.word))
            self._left[key] = res
            self._left[(s, res.word)] = x
        return res

    def canonicalize(self, letters):
        w = self.identity
        for g in letters:
            w = self.right_mul(w, self.letter(g))
        return w

    def mul(self, a, b):
        w = a
        for s in b.word:
            w = self.right_mul(w, s)
        return w

    def inverse(self, w):
        return self._intern(frozenset(u[::-1] for u in self._words[w.word]))

    def is_reduced(self, letters):
        return self.canonicalize(letters).length == len(letters)

    def descents(self, w, side="L"):
        if side == "L":
            return w.left_descents
        if side == "R":
            return w.right_descents
        raise ValueError(f"side must be 'L' or 'R', not {side!r}")

    def length(self, w):
        return w.length

    # ---- Bruhat order, recursion on a left descent s of w
    def bruhat_leq(self, y, w):
        key = (y.word, w.word)
        res = self._bruhat.get(key)
        if res is not None:
            return res
        with self._lock:
            if y.length > w.length:
                res = False
            elif w.is_identity():
                res = y.is_identity()
            elif y == w:
                res = True
            else:
                s = w.word[0]
                sw = self.left_mul(s, w)
                if s in y.left_descents:
                    res = self.bruhat_leq(self.left_mul(s, y), sw)
                else:
                    res = self.bruhat_leq(y, sw)
            self._bruhat[key] = res
        return res

    # ---- all elements of length <= max_length, BFS by length then ShortLex
    def enumerate(self, max_length):
        if max_length < 0:
            raise ValueError("max_length must be >= 0")
        out = [self.identity]
        level = [self.identity]
        for _ in range(max_length):
            nxt = {}
            for x in level:
                for s in range(self.rank):
                    if s not in x.right_descents:
                        y = self.right_mul(x, s)
                        nxt[y.word] = y
            if len(out) + len(nxt) > self.element_cap:
                raise BudgetExceeded(f"enumeration passes {self.element_cap} elements")
            if not nxt:
                break
            level = [nxt[k] for k in sorted(nxt)]
            out.extend(level)
        return out

    # ---- warm every product of the given elements (and the generators) with a generator, then mark frozen
    def freeze(self, elements=()):
        with self._lock:
            for x in (self.identity, *elements):
                for s in range(self.rank):
                    self.right_mul(x, s)
                    self.left_mul(s, x)
            self.frozen = True
        return self

    def cache_size(self):
        return len(self._elements)

# -------- functions

def _read_order(m):
    if isinstance(m, str):
        if m.strip().lower() in ("inf", "infinity", "∞"):
            return INFINITE
        try:
            m = int(m)
        except ValueError:
            raise InvalidCoxeterMatrix(f"order '{m}' is neither an integer nor 'inf'")
    if isinstance(m, bool) or not isinstance(m, int):
        raise InvalidCoxeterMatrix(f"order {m!r} is neither an integer nor 'inf'")
    if m == INFINITE or m < 2:
        raise InvalidCoxeterMatrix(f"order {m} must be >= 2 or 'inf'")
    return m
