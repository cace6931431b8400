"""Packed arithmetic for the middle field F_q = F_p[t]/(modulus).

A value of F_q is packed as the integer sum(c_i * p^i) for the digit vector
(c_0, ..., c_{s-1}) with c_i the coefficient of t^i.  The canonical order on
F_q values is the lexicographic order on the digit vector read c_0 first,
which is *not* the packed-integer order for s > 1; callers that need the
canonical order use :meth:`Fq.key` or :meth:`Fq.elements`.

Multiplication for s > 1 uses discrete log/antilog tables over a fixed
internal generator, so all operations are O(s).  Tables are built once per
field; fields are small here (q is the middle level of a tower, at desk
scale q <= a few thousand).
"""

from __future__ import annotations

import itertools

from .errors import DivisionByZero
from .intmath import distinct_prime_factors

_TABLE_LIMIT = 1 << 17


class Fq:
    """Arithmetic for F_q with q = p^s, elements packed as ints in [0, q)."""

    def __init__(self, p: int, s: int, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.s = s
        self.q = p**s
        if s == 1:
            self.modulus = modulus if modulus is not None else (1, 1)
        else:
            assert modulus is not None and len(modulus) == s + 1
            self.modulus = modulus
        self.zero = 0
        self.one = 1
        if s > 1:
            if self.q > _TABLE_LIMIT:
                raise ValueError(f"F_{self.q}: non-prime middle field too large")
            self._build_tables()

    # -- digit packing ----------------------------------------------------

    def digits(self, v: int) -> tuple[int, ...]:
        """Digit vector (c_0, ..., c_{s-1}) of a packed value."""
        p = self.p
        out = []
        for _ in range(self.s):
            v, c = divmod(v, p)
            out.append(c)
        return tuple(out)

    def pack(self, digits) -> int:
        v = 0
        for c in reversed(tuple(digits)):
            v = v * self.p + c
        return v

    def key(self, v: int):
        """Canonical comparison key: the digit vector, c_0 first."""
        return self.digits(v)

    def elements(self):
        """All field values in canonical order."""
        for ds in itertools.product(range(self.p), repeat=self.s):
            yield self.pack(ds)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        v, mult = 0, 1
        for _ in range(self.s):
            v += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return v

    def neg(self, a: int) -> int:
        if self.s == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        v, mult = 0, 1
        for _ in range(self.s):
            v += -a % p * mult
            a //= p
            mult *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar(self, c: int, a: int) -> int:
        """Multiply by a prime-field scalar c (an int mod p)."""
        if self.s == 1:
            return c * a % self.p
        p = self.p
        v, mult = 0, 1
        for _ in range(self.s):
            v += c * (a % p) % p * mult
            a //= p
            mult *= p
        return v

    def mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in F_q")
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.s == 1:
            return pow(a, e, self.p) if a or e == 0 else 0
        if a == 0:
            return self.one if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    # -- table construction --------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        """Schoolbook digit convolution reduced by the modulus."""
        p, s = self.p, self.s
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * s - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] = (conv[i + j] + ca * cb) % p
        # reduce t^(s+i) using t^s = -(m_0 + ... + m_{s-1} t^{s-1})
        m = self.modulus
        for k in range(2 * s - 2, s - 1, -1):
            c = conv[k]
            if c:
                conv[k] = 0
                for j in range(s):
                    conv[k - s + j] = (conv[k - s + j] - c * m[j]) % p
        return self.pack(conv[:s])

    def _build_tables(self) -> None:
        q = self.q
        order_primes = distinct_prime_factors(q - 1)

        def mult_order_is_full(a: int) -> bool:
            for r in order_primes:
                x, e = self.one, (q - 1) // r
                base = a
                while e:
                    if e & 1:
                        x = self._mul_slow(x, base)
                    base = self._mul_slow(base, base)
                    e >>= 1
                if x == self.one:
                    return False
            return True

        gen = next(v for v in self.elements() if v != 0 and mult_order_is_full(v))
        exp = [self.one] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_slow(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
