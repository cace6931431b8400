"""Polynomial helpers over a packed base field.

Polynomials are tuples of packed F_q values, least degree first, with no
trailing zeros; the empty tuple is the zero polynomial.  All functions take
the field object K (an :class:`gfnorm._basefield.Fq`) explicitly.
"""

from __future__ import annotations

import itertools

from ._basefield import Fq
from .errors import BothZero
from .intmath import distinct_prime_factors

Poly = tuple[int, ...]

ZERO: Poly = ()


def trim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(f: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def const(K: Fq, c: int) -> Poly:
    return (c,) if c else ZERO


def x_pow(K: Fq, k: int) -> Poly:
    return (0,) * k + (1,)


def add(K: Fq, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return trim(out)


def neg(K: Fq, f: Poly) -> Poly:
    return tuple(K.neg(c) for c in f)


def sub(K: Fq, f: Poly, g: Poly) -> Poly:
    return add(K, f, neg(K, g))


def scalar_mul(K: Fq, c: int, f: Poly) -> Poly:
    if c == 0:
        return ZERO
    return trim(K.mul(c, a) for a in f)


def mul(K: Fq, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(out)


def divmod_(K: Fq, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return ZERO, f
    quot = [0] * (dq + 1)
    inv_lead = K.inv(g[-1])
    for k in range(dq, -1, -1):
        c = K.mul(r[k + len(g) - 1], inv_lead)
        quot[k] = c
        if c:
            for j, b in enumerate(g):
                if b:
                    r[k + j] = K.sub(r[k + j], K.mul(c, b))
    return trim(quot), trim(r)


def mod(K: Fq, f: Poly, g: Poly) -> Poly:
    return divmod_(K, f, g)[1]


def monic(K: Fq, f: Poly) -> Poly:
    if not f:
        return ZERO
    if f[-1] == K.one:
        return f
    return scalar_mul(K, K.inv(f[-1]), f)


def gcd(K: Fq, f: Poly, g: Poly) -> Poly:
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, mod(K, f, g)
    return monic(K, f)


def mulmod(K: Fq, f: Poly, g: Poly, m: Poly) -> Poly:
    return mod(K, mul(K, f, g), m)


def powmod(K: Fq, f: Poly, e: int, m: Poly) -> Poly:
    result: Poly = (K.one,)
    f = mod(K, f, m)
    while e:
        if e & 1:
            result = mulmod(K, result, f, m)
        f = mulmod(K, f, f, m)
        e >>= 1
    return result


def eval_at(K: Fq, f: Poly, v: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = K.add(K.mul(acc, v), c)
    return acc


def inv_mod(K: Fq, f: Poly, m: Poly) -> Poly:
    """Inverse of f modulo m (extended Euclid); f must be coprime to m."""
    r0, r1 = m, mod(K, f, m)
    s0, s1 = ZERO, (K.one,)
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
    if deg(r0) != 0:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return trim(K.mul(K.inv(r0[0]), c) for c in s0)


def is_irreducible(K: Fq, f: Poly) -> bool:
    """Rabin irreducibility test for a monic polynomial of degree >= 1."""
    d = deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    x: Poly = (0, K.one)
    powers = {}
    h = x
    for i in range(1, d + 1):
        h = powmod(K, h, K.q, f)
        powers[i] = h
    if powers[d] != mod(K, x, f):
        return False
    for r in distinct_prime_factors(d):
        g = gcd(K, sub(K, powers[d // r], x), f)
        if deg(g) != 0:
            return False
    return True


def least_irreducible(K: Fq, d: int) -> Poly:
    """Canonically least monic irreducible of degree d with nonzero constant.

    Candidates are ordered by their coefficient tuples compared most
    significant first, individual coefficients by the canonical digit order
    of F_q.  Excluding a zero constant term rules out the polynomial x, the
    only irreducible divisible by x; every representation-defining modulus
    here must have invertible root.
    """
    elems = list(K.elements())
    for coeffs in itertools.product(elems, repeat=d):
        # coeffs = (a_{d-1}, ..., a_1, a_0), last component varying fastest
        if coeffs[-1] == 0:
            continue
        f = trim(tuple(reversed(coeffs)) + (K.one,))
        if is_irreducible(K, f):
            return f
    raise RuntimeError("no irreducible polynomial found (unreachable)")


def format_poly(K: Fq, f: Poly) -> str:
    """Comma-separated coefficients, least degree first, digit-list syntax."""
    if not f:
        return "[" + ",".join("0" * 1 for _ in range(K.s)) + "]"
    return ",".join("[" + ",".join(str(d) for d in K.digits(c)) + "]" for c in f)
