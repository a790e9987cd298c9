#!/usr/bin/env python3

# --------------------------------------------------------------------------------------------------------------
# Positive braid monoid of a Coxeter system and its Garside normal form
#
# Convention: right-greedy. A normal form (w_m, ..., w_1) is stored leftmost first; w_1 is the maximal reduced
# braid dividing the word on the right, and every adjacent pair (x, y) satisfies  D_R(x) c D_L(y).
# normal_form works locally on adjacent pairs; oracle_normal_form is an independent brute-force check that
# rewrites the word with braid relations only.
#
# Word syntax: whitespace separated generator names, "-" in front of a name for an inverse letter
# --------------------------------------------------------------------------------------------------------------

# -------- import
import re
from dataclasses import dataclass

from .config import DEFAULT_ORACLE_CAP
from .errors import UnknownGenerator, WordParseError

# -------- variables
_TOKEN = re.compile(r"\S+")

# -------- classes

@dataclass(frozen=True)
class NormalForm:
    factors: tuple                      # CoxElt, leftmost (top) factor first

    def __len__(self):
        return len(self.factors)

    def letters(self):
        return tuple(s for w in self.factors for s in w.word)

    def format(self, system):
        return "".join(f"({system.format_word(w.word)})" for w in self.factors) or "()"

    def is_valid(self):
        if any(w.is_identity() for w in self.factors):
            return False
        return all(is_normal_pair(x, y) for x, y in zip(self.factors, self.factors[1:]))

# -------- functions

def is_normal_pair(x, y):
    return x.right_descents <= y.left_descents

# ---- local normalization: move s in D_R(x) \ D_L(y) from the right of x to the left of y until stable
def normal_form(system, word, rng=None):
    factors = [system.generator(s) for s in word]
    while True:
        changed = False
        order = list(range(len(factors) - 1))
        if rng is not None:
            rng.shuffle(order)
        for i in order:
            x, y = factors[i], factors[i + 1]
            moved = False
            while True:
                free = x.right_descents - y.left_descents
                if not free:
                    break
                s = min(free)
                x = system.right_mul(x, s)
                y = system.left_mul(s, y)
                moved = True
            if moved:
                factors[i], factors[i + 1] = x, y
                changed = True
        kept = [w for w in factors if not w.is_identity()]
        if len(kept) != len(factors):
            changed = True
        factors = kept
        if not changed:
            return NormalForm(tuple(factors))

# ---- brute force: longest reduced suffix over all words equal in the monoid, then recurse on the prefix
def oracle_normal_form(system, word, cap=DEFAULT_ORACLE_CAP):
    word = tuple(system.letter(s) for s in word)
    factors = []
    while word:
        best = None
        for u in system.braid_closure(word, cap=cap):
            length = 0
            while length < len(u) and system.is_reduced(u[len(u) - length - 1:]):
                length += 1
            key = (length, u[len(u) - length:])
            if best is None or key[0] > best[0][0] or (key[0] == best[0][0] and key[1] < best[0][1]):
                best = (key, u)
        (length, suffix), u = best
        factors.append(system.canonicalize(suffix))
        word = u[:len(u) - length]
    return NormalForm(tuple(reversed(factors)))

def monoid_equal(system, a, b):
    return normal_form(system, a) == normal_form(system, b)

# ---- parsing
def parse_signed_word(system, text):
    out = []
    for m in _TOKEN.finditer(text):
        token = m.group(0)
        sign = 1
        name = token
        if token.startswith("-"):
            sign = -1
            name = token[1:]
        if not name:
            raise WordParseError("a lone '-' is not a generator", m.start())
        try:
            out.append((system.letter(name), sign))
        except UnknownGenerator:
            raise WordParseError(f"unknown generator '{name}'", m.start())
    return tuple(out)

def parse_word(system, text):
    letters = []
    for m, (s, sign) in zip(_TOKEN.finditer(text), parse_signed_word(system, text)):
        if sign < 0:
            raise WordParseError(f"inverse letter '{m.group(0)}' in a positive braid", m.start())
        letters.append(s)
    return tuple(letters)

def format_signed_word(system, word):
    return " ".join(("-" if sign < 0 else "") + system.name(s) for s, sign in word)

# ---- seeded samplers
def random_positive_word(rng, system, length):
    return tuple(rng.randrange(system.rank) for _ in range(length))

def random_signed_word(rng, system, length):
    return tuple((rng.randrange(system.rank), rng.choice((1, -1))) for _ in range(length))
