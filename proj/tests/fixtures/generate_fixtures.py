#!/usr/bin/env python3
"""Recompute the known-answer fixtures with plain rational arithmetic.

Nothing here uses automata: group elements are (k, u) pairs over Fraction,
encodings are checked by evaluating the digit formula, and predicates are
decided by enumeration. Run from any directory; writes known_answers.json
next to this script.
"""

import itertools
import json
from fractions import Fraction
from pathlib import Path


# ---- group arithmetic ------------------------------------------------------

def mul(g, h, q):
    (k, u), (l, v) = g, h
    return (k + l, u + v * Fraction(q) ** k)


def inv(g, q):
    k, u = g
    return (-k, -u * Fraction(q) ** (-k))


def pw(g, s, q):
    r = (0, Fraction(0))
    for _ in range(s):
        r = mul(r, g, q)
    return r


LETTERS = {"a": (0, Fraction(1)), "a^-1": (0, Fraction(-1)), "A": (0, Fraction(-1)),
           "t": (1, Fraction(0)), "t^-1": (-1, Fraction(0)), "T": (-1, Fraction(0))}


def word(text, q):
    r = (0, Fraction(0))
    for tok in text.split():
        r = mul(r, LETTERS[tok], q)
    return r


def integral(g):
    return g[0] >= 0 and g[1].denominator == 1


def to_triple(g, q):
    k, u = g
    den, e = u.denominator, 0
    while den % q == 0:
        den //= q
        e += 1
    assert den == 1, "coefficient outside Z[1/q]"
    return [k, u.numerator, e]


def from_triple(t, q):
    return (t[0], Fraction(t[1], q ** t[2]))


def integral_shift(elems, q):
    prefixes = [(0, Fraction(0))]
    for g in elems:
        prefixes.append(mul(prefixes[-1], g, q))
    k = 0
    while not all(integral(mul((k, Fraction(0)), p, q)) for p in prefixes):
        k += 1
    return k


def brute(gens, target, q, bound):
    for xs in itertools.product(range(bound + 1), repeat=len(gens)):
        r = (0, Fraction(0))
        for g, x in zip(gens, xs):
            r = mul(r, pw(g, x, q), q)
        if r == target:
            return list(xs)
    return None


# ---- encoding --------------------------------------------------------------

def decode(digits, q):
    value = 0
    for i, d in enumerate(digits):
        z = -1 if (i == len(digits) - 1 and d == q - 1) else d
        value += z * q ** i
    return value


def encode(v, q):
    n = 1
    while True:
        m = v % q ** n
        digits = [(m // q ** i) % q for i in range(n)]
        if decode(digits, q) == v:
            return digits
        n += 1


# ---- predicates ------------------------------------------------------------

def log_q(x, q):
    if x <= 0:
        return None
    r = 0
    while x % q == 0:
        x //= q
        r += 1
    return r if x == 1 else None


def shift(step, x, y, q):
    rx, ry = log_q(x, q), log_q(y, q)
    if rx is None or ry is None:
        return False
    if step == 0:
        return rx == ry
    gap = ry - rx
    return gap % step == 0 and gap // step >= 0


def power(step, x, q):
    r = log_q(x, q)
    return r is not None and r % step == 0


def vq(x, y, q):
    if x == 0:
        return False
    r = 0
    while x % q == 0:
        x //= q
        r += 1
    return y == q ** r


# ---- fixtures --------------------------------------------------------------

def group_cases():
    out = []
    q = 3
    out.append({"op": "word", "q": q, "word": "a t", "expect": to_triple(word("a t", q), q)})
    for q, g, h in [(2, (1, 0), (0, 1)), (2, (1, 1), (1, 1))]:
        a, b = (g[0], Fraction(g[1])), (h[0], Fraction(h[1]))
        out.append({"op": "multiply", "q": q, "a": to_triple(a, q), "b": to_triple(b, q),
                    "expect": to_triple(mul(a, b, q), q)})
    g = (1, Fraction(1))
    out.append({"op": "inverse", "q": 2, "a": to_triple(g, 2), "expect": to_triple(inv(g, 2), 2)})
    out.append({"op": "power", "q": 2, "a": to_triple(g, 2), "s": 3, "expect": to_triple(pw(g, 3, 2), 2)})
    out.append({"op": "integral", "q": 2, "a": [1, -1, 1], "expect": integral(from_triple([1, -1, 1], 2))})
    for elems in ([(-1, 0)], [(0, 1), (-2, 0)]):
        es = [(k, Fraction(u)) for k, u in elems]
        out.append({"op": "integral_shift", "q": 2, "elements": [to_triple(e, 2) for e in es],
                    "expect": integral_shift(es, 2)})
    return out


def encoding_cases():
    out = []
    for q, v in [(2, 3), (3, -2)]:
        out.append({"op": "encode", "q": q, "value": v, "expect": encode(v, q)})
    for q, d in [(2, [1]), (2, [1, 1, 0])]:
        out.append({"op": "decode", "q": q, "digits": d, "expect": decode(d, q)})
    return out


def atom_cases():
    out = []
    grid = range(-20, 21)
    out.append({"op": "linear_set", "q": 3, "coefficients": {"x": 2, "y": 3}, "kind": "eq", "constant": 7,
                 "range": 20, "expect": [[x, y] for x in grid for y in grid if 2 * x + 3 * y == 7]})
    out.append({"op": "linear_set", "q": 2, "coefficients": {"x": 1}, "kind": "geq", "constant": 0,
                 "range": 50, "expect": [[x] for x in range(-50, 51) if x >= 0]})
    for x, y in [(2, 32), (2, 16)]:
        out.append({"op": "shift", "q": 2, "step": 2, "args": [x, y], "expect": shift(2, x, y, 2)})
    for x in [1, 4, 16, 64, 2, 8, 32]:
        out.append({"op": "power", "q": 2, "step": 2, "args": [x], "expect": power(2, x, 2)})
    for x, y in [(12, 4), (12, 2), (-12, 4)]:
        out.append({"op": "vq", "q": 2, "args": [x, y], "expect": vq(x, y, 2)})
    out.append({"op": "constant_equality", "q": 2, "value": 5, "expect": decode(encode(5, 2), 2)})
    out.append({"op": "diagonal", "q": 2, "accept": [7, 7], "reject": [7, 8]})
    return out


def formula_cases():
    out = []
    def cleared(diff, q):
        # smallest q^E making every coefficient of lhs - rhs an integer
        e = 0
        while any((c * q ** e).denominator != 1 for c in diff.values()):
            e += 1
        return {v: int(c * q ** e) for v, c in diff.items()}

    out.append({"op": "clear", "q": 2, "name": "w = u + 3/2 x", "kind": "eq",
                "expect": cleared({"w": Fraction(1), "u": Fraction(-1), "x": Fraction(-3, 2)}, 2), "constant": 0})
    out.append({"op": "clear", "q": 3, "name": "x >= 1/9 y", "kind": "geq",
                "expect": cleared({"x": Fraction(1), "y": Fraction(-1, 9)}, 3), "constant": 0})
    evens = [x for x in range(-20, 21) if any(x == y + y for y in range(-20, 21))]
    out.append({"op": "set", "q": 2, "name": "exists y. x = y + y", "range": 20, "expect": evens})
    pairs = [[x, y] for x in range(1, 65) for y in range(1, 65) if shift(1, x, y, 2) and x == 2 and y == 8]
    out.append({"op": "model", "q": 2, "name": "S1(x,y) & x = 2 & y = 8", "expect": dict(zip("xy", pairs[0])),
                 "unique_in": pairs})
    powers_in = [x for x in range(5, 8) if power(1, x, 2)]
    out.append({"op": "sat", "q": 2, "name": "exists x. P(x) & 5 <= x <= 7", "expect": bool(powers_in)})
    y = next(y for y in range(3, 1 << 12) if shift(2, 2, y, 2))
    out.append({"op": "model", "q": 2, "name": "S2(x,y) & x = 2 & y >= 3", "expect": {"x": 2, "y": y}})
    return out


def step_holds(g, h_from, h_to, q, limit=64):
    return any(mul(h_from, pw(g, s, q), q) == h_to for s in range(limit))


def knapsack_cases():
    out = []
    for q, g, u, m, u2, m2 in [(2, "a", 0, 1, 5, 1), (2, "a", 0, 1, 5, 2), (2, "t", 0, 1, 0, 8),
                               (2, "t", 0, 1, 1, 8)]:
        ge = word(g, q)
        # h = (corner U, diagonal M) is the matrix (M, U; 0, 1) = (log M, U).
        a, b = log_q(m, q), log_q(m2, q)
        hold = a is not None and b is not None and step_holds(ge, (a, Fraction(u)), (b, Fraction(u2)), q)
        out.append({"op": "m_star", "q": q, "g": to_triple(ge, q), "h": [u, m, u2, m2], "expect": hold})
    for q, g, h0, hn in [(2, "a a a a a", (0, 1), (5, 1)), (2, "t^-1", (0, 2), (0, 1))]:
        ge = word(g, q)
        a, b = log_q(h0[1], q), log_q(hn[1], q)
        hold = mul((a, Fraction(h0[0])), ge, q) == (b, Fraction(hn[0]))
        out.append({"op": "closing", "q": q, "g": to_triple(ge, q), "h": [h0[0], h0[1], hn[0], hn[1]],
                    "expect": hold})
    instances = [
        (2, ["a"], "a a a a a", 20),
        (2, ["a a"], "a a a", 20),
        (2, ["a", "t a t^-1"], "a a a a a a a", 20),
        (2, ["t"], "a", 20),
        (3, ["a t"], "mat(2, 4, 0)", 20),
    ]
    for q, gens, target, bound in instances:
        gs = [word(w, q) for w in gens]
        tg = from_triple([int(x) for x in target[4:-1].split(",")], q) if target.startswith("mat") else word(target, q)
        found = brute(gs, tg, q, bound)
        out.append({"op": "solve", "q": q, "generators": [to_triple(g, q) for g in gs], "target": to_triple(tg, q),
                    "words": gens, "oracle_bound": bound, "expect_sat": found is not None, "oracle_first": found})
    # recovering an exponent from a diagonal step
    out.append({"op": "recover", "q": 2, "g": to_triple(word("t", 2), 2), "h": [0, 1, 0, 8],
                "expect": next(s for s in range(64) if mul((0, Fraction(0)), pw(word("t", 2), s, 2), 2) == (3, 0))})
    gs = [word("a", 2), word("a a", 2)]
    r = mul(pw(gs[0], 1, 2), pw(gs[1], 3, 2), 2)
    out.append({"op": "verify", "q": 2, "generators": [to_triple(g, 2) for g in gs], "target": to_triple(word("a " * 7, 2), 2),
                "exponents": [1, 3], "expect": r == word("a " * 7, 2)})
    return out


def oracle_cases():
    out = []
    for q, gens, target, bound in [(2, ["a"], "a a a", 5), (2, ["a a"], "a a a", 10), (2, [], "", 0)]:
        gs = [word(w, q) for w in gens]
        tg = word(target, q)
        out.append({"op": "brute", "q": q, "generators": [to_triple(g, q) for g in gs], "target": to_triple(tg, q),
                    "bound": bound, "expect": brute(gs, tg, q, bound)})
    return out


def instance_cases():
    out = []
    out.append({"op": "parse", "text": "q: 2\ngen: t a t^-1\ntarget: a\n",
                "expect_generators": [to_triple(word("t a t^-1", 2), 2)]})
    out.append({"op": "parse", "text": "q: 2\ngen: mat(1, 1, 0)\ntarget: a\n", "expect_generators": [[1, 1, 0]]})
    out.append({"op": "parse", "text": "q: 3\ngen: mat(0, 3, 1)\ntarget: a\n",
                "expect_generators": [to_triple(from_triple([0, 3, 1], 3), 3)]})
    return out


def main():
    data = {
        "group": group_cases(),
        "encoding": encoding_cases(),
        "atoms": atom_cases(),
        "formula": formula_cases(),
        "knapsack": knapsack_cases(),
        "oracle": oracle_cases(),
        "instance": instance_cases(),
    }
    path = Path(__file__).with_name("known_answers.json")
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {sum(len(v) for v in data.values())} cases to {path}")


if __name__ == "__main__":
    main()
