"""
Finite fields GF(p^n) as lookup tables, for brute-force point counting.

An element is encoded as the integer ``sum d_i p^i`` of its coefficient
digits in the polynomial basis ``1, x, ..., x^(n-1)`` modulo an irreducible
polynomial. Multiplication goes through discrete log / antilog tables
built once per field, so whole-field evaluations vectorize with numpy.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import FieldTooLargeError, InvalidInputError

__all__ = [
    "FiniteField",
    "is_prime",
    "prime_power",
    "is_irreducible",
    "default_modulus",
    "MAX_FIELD_SIZE",
]

MAX_FIELD_SIZE = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q = p**e``, or raise if ``q`` is not a prime power."""
    if q < 2:
        raise InvalidInputError(f"{q} is not a prime power")
    fac = _prime_factors(q)
    if len(fac) != 1:
        raise InvalidInputError(f"{q} is not a prime power")
    p, e = fac[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# dense polynomials over F_p: lists of ints, lowest degree first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(m: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p (lowest degree first)."""
    m = _trim([x % p for x in m])
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, m, p), x, p):
        return False
    for r in _prime_factors(n):
        g = _pgcd(m, _psub(_ppowmod(x, p ** (n // r), m, p), x, p), p)
        if len(g) > 1:
            return False
    return True


def _is_primitive(m: list[int], p: int) -> bool:
    n = len(m) - 1
    order = p**n - 1
    x = [0, 1]
    return all(_ppowmod(x, order // r, m, p) != [1] for r in _prime_factors(order))


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """First monic primitive polynomial of degree ``n`` over F_p in lexicographic order."""
    if n == 1:
        return (0, 1)
    for tail in product(range(p), repeat=n):
        m = list(tail[::-1]) + [1]
        if m[0] == 0:
            continue
        if is_irreducible(m, p) and _is_primitive(m, p):
            return tuple(m)
    raise InvalidInputError(f"no primitive polynomial of degree {n} over F_{p}")


class FiniteField:
    """GF(p^n) with log/antilog tables.

    Parameters
    ----------
    p : int
        Characteristic (prime).
    n : int
        Extension degree.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree ``n`` over F_p, lowest degree
        first. Defaults to :func:`default_modulus`.
    """

    def __init__(self, p: int, n: int = 1, modulus=None):
        if not is_prime(p):
            raise InvalidInputError(f"characteristic {p} is not prime")
        if n < 1:
            raise InvalidInputError("extension degree must be >= 1")
        if p**n > MAX_FIELD_SIZE:
            raise FieldTooLargeError(f"GF({p}^{n}) exceeds the enumeration cap {MAX_FIELD_SIZE}")
        self.p, self.n, self.order = p, n, p**n
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise InvalidInputError("modulus must be monic of degree n")
        if not is_irreducible(modulus, p):
            raise InvalidInputError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._weights = p ** np.arange(n, dtype=np.int64)
        self._build_tables()

    def __repr__(self):
        return f"FiniteField({self.p}, {self.n}, modulus={self.modulus})"

    # digit encoding
    def digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._weights) % self.p

    def encode(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._weights

    def _mul_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Multiply elements given as digit rows ``a`` (shape (..., n)) by one element ``b``.

        Multiplication by a fixed element is F_p-linear, so it is a single
        matrix product with the matrix whose column j holds ``b * x^j``.
        """
        p, n = self.p, self.n
        low = -np.array(self.modulus[:n], dtype=np.int64)  # x^n = -(m_0 + ... )
        cols = np.empty((n, n), dtype=np.int64)
        cur = np.asarray(b, dtype=np.int64) % p
        for j in range(n):
            cols[:, j] = cur
            top = cur[n - 1]
            cur = np.concatenate([[0], cur[:-1]])
            cur = (cur + top * low) % p
        return (a @ cols.T) % p

    def _build_tables(self):
        q = self.order
        # find a generator of the multiplicative group
        factors = _prime_factors(q - 1) if q > 2 else []
        for g in range(1 if q == 2 else 2, q):
            gd = self.digits(g)
            if all(self._pow_slow(gd, (q - 1) // r) != 1 for r in factors):
                break
        exp = np.empty(q - 1, dtype=np.int64)
        exp[0] = 1
        filled = 1
        step = self.digits(np.array([g]))[0]
        while filled < q - 1:
            # exp[filled:2*filled] = exp[0:filled] * g^filled
            gpow = self._mul_digits(self.digits(exp[filled - 1 : filled]), step)[0]
            take = min(filled, q - 1 - filled)
            block = self._mul_digits(self.digits(exp[:take]), gpow)
            exp[filled : filled + take] = self.encode(block)
            filled += take
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if np.any(log[1:] < 0):
            raise InvalidInputError("multiplicative generator search failed")
        self.generator = g
        self._exp = exp
        self._log = log

    def _pow_slow(self, gd: np.ndarray, e: int) -> int:
        result = self.digits(np.array([1]))
        base = gd[None, :]
        while e:
            if e & 1:
                result = self._mul_digits(result, base[0])
            base = self._mul_digits(base, base[0])
            e >>= 1
        return int(self.encode(result)[0])

    # vectorized arithmetic on encoded elements
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def add(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.encode(self.digits(a) + self.digits(b))

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a, dtype=np.int64)
        return self.encode(-self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, c: int):
        """Multiply by the prime-field integer ``c``."""
        return self.encode(self.digits(a) * (int(c) % self.p))

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        idx = (self._log[np.where(zero, 1, a)] + self._log[np.where(zero, 1, b)]) % (self.order - 1)
        return np.where(zero, 0, self._exp[idx])

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        zero = a == 0
        idx = (self._log[np.where(zero, 1, a)] * e) % (self.order - 1)
        return np.where(zero, 0, self._exp[idx])

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def poly_eval(self, coeffs, x):
        """Evaluate a polynomial with prime-field integer coefficients at elements ``x``."""
        x = np.asarray(x, dtype=np.int64)
        acc = np.zeros_like(x)
        for c in list(coeffs)[::-1]:
            acc = self.add(self.mul(acc, x), np.full_like(x, int(c) % self.p))
        return acc
