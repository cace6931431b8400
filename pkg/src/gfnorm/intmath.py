"""Integer number theory: deterministic primality, factorization, CRT.

Everything here is deterministic across runs and platforms.  Factorization
uses trial division up to a fixed limit followed by a cycle-finding method
with the fixed iteration polynomial x^2 + 1 and a fixed schedule of starting
points, so the work performed for a given input never varies.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import FactorizationTimeout

# Witness set proven sufficient for every n < 3317044064679887385961981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_LIMIT = 3317044064679887385961981
# Fallback witnesses for larger inputs (no counterexample is known).
_MR_BASES_WIDE = _MR_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES if n < _MR_PROVEN_LIMIT else _MR_BASES_WIDE
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_factor(n: int, budget: int) -> int:
    """One nontrivial factor of composite odd n via Brent's cycle search.

    Iteration polynomial is fixed to x^2 + 1; starting points advance through
    2, 3, 4, ... so the whole search is deterministic.
    """
    spent = 0
    for x0 in range(2, n):
        y, r, q = x0, 1, 1
        g = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + 1) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + 1) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
            spent += r
            if spent > budget:
                raise FactorizationTimeout(f"factor search budget exceeded for {n}")
        if g != n:
            return g
        # Backtrack: the batched gcd overshot, redo one step at a time.
        g = 1
        y = ys
        while g == 1:
            y = (y * y + 1) % n
            g = math.gcd(abs(x - y), n)
        if g != n:
            return g
        # Degenerate cycle for this starting point; try the next one.
    raise FactorizationTimeout(f"no factor found for {n}")


def factor_integer(n: int, budget: int = 1 << 26) -> list[int]:
    """Complete prime factorization of n >= 1, sorted, with multiplicity."""
    if n < 1:
        raise ValueError("factor_integer requires n >= 1")
    factors: list[int] = []
    for p in (2, 3, 5):
        while n % p == 0:
            factors.append(p)
            n //= p
    f = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)  # wheel mod 30 starting at 7
    i = 0
    while f * f <= n and f <= _TRIAL_LIMIT:
        while n % f == 0:
            factors.append(f)
            n //= f
        f += increments[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors.append(m)
            continue
        d = _rho_factor(m, budget)
        stack.append(d)
        stack.append(m // d)
    factors.sort()
    return factors


def distinct_prime_factors(n: int) -> list[int]:
    return sorted(set(factor_integer(n)))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    m = n
    p_prev = 0
    for p in factor_integer(n):
        if p == p_prev:
            continue
        p_prev = p
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    """Smallest e >= 1 with a^e = 1 (mod m); requires gcd(a, m) = 1."""
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    x = a
    e = 1
    while x != 1:
        x = x * a % m
        e += 1
    return e


def euler_phi(n: int) -> int:
    result = n
    for p in distinct_prime_factors(n):
        result = result // p * (p - 1)
    return result


class InconsistentCongruence(ValueError):
    """The two congruences passed to a CRT merge have no common solution."""


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Merge x = r1 (mod m1), x = r2 (mod m2) over possibly non-coprime moduli.

    Returns (r, lcm(m1, m2)) or raises InconsistentCongruence.
    """
    g = math.gcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise InconsistentCongruence(
            f"x = {r1} (mod {m1}) and x = {r2} (mod {m2}) conflict modulo {g}"
        )
    l = m1 // g * m2
    m2g = m2 // g
    if m2g == 1:
        return r1 % l, l
    k = (r2 - r1) // g * pow(m1 // g, -1, m2g) % m2g
    return (r1 + m1 * k) % l, l


def crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    """Simultaneous congruences over arbitrary moduli; returns (r, lcm)."""
    r, m = 0, 1
    for ri, mi in zip(residues, moduli):
        r, m = crt_pair(r, m, ri, mi)
    return r, m


@lru_cache(maxsize=None)
def as_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^s with p prime; raises ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fs = factor_integer(q)
    p = fs[0]
    if any(f != p for f in fs):
        raise ValueError(f"{q} is not a prime power")
    return p, len(fs)


def is_prime_power(q: int) -> bool:
    try:
        as_prime_power(q)
        return True
    except ValueError:
        return False


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi, ascending."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]
