"""Small finite fields GF(p^m) as polynomials over Z_p.

Elements are integers in [0, p^m) whose base-p digits are polynomial
coefficients (least significant digit = constant term).  The modulus is the
lexicographically least monic irreducible polynomial of degree m, so field
representations are reproducible.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product


def factor_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, m) with n = p^m, or None if n is not a prime power."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n, 1
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return (p, m) if n == 1 else None


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # coefficient lists, index = degree; f monic
    a = a[:]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [c % p for c in a[:df]] if len(a) >= df else [c % p for c in a] + [0] * (df - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    d = len(f) - 1
    if d == 1:
        return True
    if f[0] == 0:
        return False
    # trial division by every monic polynomial of degree 1..d//2
    for deg in range(1, d // 2 + 1):
        for low in product(range(p), repeat=deg):
            g = list(low) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m over Z_p.

    Coefficients are compared from the x^{m-1} term down to the constant term.
    """
    for high_first in product(range(p), repeat=m):
        f = list(reversed(high_first)) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over Z_{p}")


class GF:
    """GF(p^m) with table-based logarithms."""

    def __init__(self, order: int):
        pm = factor_prime_power(order)
        if pm is None:
            raise ValueError(f"{order} is not a prime power")
        self.p, self.m = pm
        self.order = order
        self.modulus = least_irreducible(self.p, self.m)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _from_digits(self, d) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._from_digits(_poly_mod(prod, list(self.modulus), self.p))

    def mul_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k if k <= n else n

    @cached_property
    def primitive(self) -> int:
        """Least element (in integer encoding) generating the multiplicative group."""
        n = self.order - 1
        primes = [r for r in range(2, n + 1) if n % r == 0 and factor_prime_power(r) == (r, 1)]
        for a in range(1, self.order):
            if all(self.pow(a, n // r) != 1 for r in primes):
                return a
        raise RuntimeError("no primitive element found")

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @cached_property
    def exp_table(self) -> list[int]:
        g = self.primitive
        out = [1]
        for _ in range(self.order - 2):
            out.append(self.mul(out[-1], g))
        return out

    @cached_property
    def log_table(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.exp_table)}

    def log(self, a: int) -> int:
        return self.log_table[a]

    def subfield(self, order: int) -> list[int]:
        """Elements of the subfield of the given order, 0 first."""
        n = self.order - 1
        if (order - 1) == 0 or n % (order - 1):
            raise ValueError(f"GF({self.order}) has no subfield of order {order}")
        step = n // (order - 1)
        return [0] + sorted(self.exp_table[j * step] for j in range(order - 1))
