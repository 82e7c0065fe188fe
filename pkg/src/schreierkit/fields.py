"""Small finite fields F_{p^k} as polynomial quotients over F_p.

An element is encoded as the integer ``sum(c[i] * p**i)`` of its coefficient
list ``c`` (constant term first).  Integer order coincides with the
lexicographic order of coefficient lists read from the top degree down, which
is the order used for every "smallest" choice below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError
from .permgrp import is_prime, prime_divisors


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of ``f`` by the nonzero polynomial ``g`` over F_p."""
    f = _trim(list(f))
    g = _trim(list(g))
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, lower coefficients in increasing
    integer-encoding order."""
    for code in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg(f)/2."""
    f = _trim(list(f))
    k = len(f) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for g in monic_polys(p, d):
            if not poly_mod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise AssertionError("irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if self.k < 1 or len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise InputError("modulus must be monic of degree k")
        if not is_irreducible(list(self.modulus), self.p):
            raise InputError(f"modulus {self.modulus} is reducible over F_{self.p}")

    @classmethod
    def default(cls, p: int, k: int) -> "FieldSpec":
        return cls(p, k, tuple(smallest_irreducible(p, k)))

    @property
    def size(self) -> int:
        return self.p ** self.k

    def field(self) -> "FiniteField":
        return FiniteField(self)


class FiniteField:
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.k = spec.k
        self.q = spec.size
        self.modulus = list(spec.modulus)

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul(self, a: int, b: int) -> int:
        fa, fb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(fa):
            if x:
                for j, y in enumerate(fb):
                    prod[i + j] += x * y
        return self.encode(poly_mod([c % self.p for c in prod], self.modulus, self.p))

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        return [[self._mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def mul(self, a: int, b: int) -> int:
        if self.q <= 256:
            return self._mul_table[a][b]
        return self._mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise InputError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r in prime_divisors(n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    @cached_property
    def primitive_element(self) -> int:
        """Smallest element generating the multiplicative group."""
        for a in range(1, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def mul_matrix(self, t: int) -> list[list[int]]:
        """Matrix over F_p of ``x -> t * x`` in the basis 1, X, ..., X^(k-1);
        column ``c`` holds the coordinates of ``t * X^c``."""
        cols = [self.coeffs(self.mul(t, self.p ** c)) for c in range(self.k)]
        return [[cols[c][r] for c in range(self.k)] for r in range(self.k)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"
