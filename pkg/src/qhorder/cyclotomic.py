"""Exact arithmetic in cyclotomic fields.

Values live in Q(zeta_N) for a fixed conductor N and are stored as rational
coordinate vectors over the power basis 1, zeta, ..., zeta^(phi(N)-1), i.e.
canonically reduced modulo the N-th cyclotomic polynomial.  Equality of
canonical forms is exact equality of field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    assert n >= 1
    # start from x^n - 1 and divide out the cyclotomic polynomials of proper divisors
    coeffs = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            coeffs = _exact_div(coeffs, list(cyclotomic_polynomial(d)))
    return tuple(coeffs)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    """Polynomial division known to be exact, integer coefficients."""
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    out = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        q, r = divmod(num[dd + k], den[dd])
        assert r == 0
        out[k] = q
        for j in range(dd + 1):
            num[k + j] -= q * den[j]
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def _power_basis(n: int) -> tuple[int, tuple[tuple[Fraction, ...], ...]]:
    """(phi(n), table of zeta^j for j in 0..2n-2 as basis coordinate tuples)."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1  # = phi(n), and phi_poly is monic
    powers: list[tuple[Fraction, ...]] = []
    current = [Fraction(0)] * deg
    current[0] = Fraction(1)
    for _ in range(2 * n - 1):
        powers.append(tuple(current))
        # multiply by x, reduce the overflowing coefficient via the monic minimal poly
        top = current[deg - 1]
        current = [Fraction(0)] + current[:-1]
        if top:
            for j in range(deg):
                current[j] -= top * phi_poly[j]
    return deg, tuple(powers)


def _coerce(value, n: int) -> "CycValue":
    if isinstance(value, CycValue):
        return value
    if isinstance(value, (int, Fraction)):
        return CycValue.from_rational(value, n)
    raise TypeError(f"cannot mix CycValue with {type(value).__name__}")


@dataclass(frozen=True)
class CycValue:
    """An element of Q(zeta_conductor) in canonical reduced form."""

    conductor: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        deg, _ = _power_basis(self.conductor)
        assert len(self.coords) == deg

    @staticmethod
    def from_rational(q, n: int = 1) -> "CycValue":
        deg, _ = _power_basis(n)
        coords = [Fraction(0)] * deg
        coords[0] = Fraction(q)
        return CycValue(n, tuple(coords))

    @staticmethod
    def zero(n: int = 1) -> "CycValue":
        return CycValue.from_rational(0, n)

    @staticmethod
    def one(n: int = 1) -> "CycValue":
        return CycValue.from_rational(1, n)

    @staticmethod
    def root_of_unity(n: int, k: int) -> "CycValue":
        """zeta_n^k."""
        deg, powers = _power_basis(n)
        return CycValue(n, powers[k % n])

    def promote(self, m: int) -> "CycValue":
        """Re-express in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m == n:
            return self
        assert m % n == 0
        step = m // n
        deg_m, powers_m = _power_basis(m)
        acc = [Fraction(0)] * deg_m
        for j, c in enumerate(self.coords):
            if c:
                vec = powers_m[(j * step) % m]
                for t in range(deg_m):
                    acc[t] += c * vec[t]
        return CycValue(m, tuple(acc))

    def _common(self, other) -> tuple["CycValue", "CycValue"]:
        other = _coerce(other, self.conductor)
        if self.conductor == other.conductor:
            return self, other
        from math import gcd

        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        a, b = self._common(other)
        return CycValue(a.conductor, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycValue(self.conductor, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-_coerce(other, self.conductor))

    def __rsub__(self, other):
        return _coerce(other, self.conductor) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycValue.zero(self.conductor)
            return CycValue(self.conductor, tuple(c * other for c in self.coords))
        a, b = self._common(other)
        n = a.conductor
        deg, powers = _power_basis(n)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        conv[i + j] += x * y
        acc = [Fraction(0)] * deg
        for k, c in enumerate(conv):
            if c:
                vec = powers[k]
                for t in range(deg):
                    acc[t] += c * vec[t]
        return CycValue(n, tuple(acc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            assert q != 0
            return CycValue(self.conductor, tuple(c / q for c in self.coords))
        raise TypeError("division only by rationals")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_part() == other
        if not isinstance(other, CycValue):
            return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_part())
        return hash((self.conductor, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_part(self) -> Fraction:
        assert self.is_rational(), f"value is irrational: {self}"
        return self.coords[0]

    def conjugate(self) -> "CycValue":
        """Complex conjugation, zeta -> zeta^(N-1)."""
        n = self.conductor
        deg, powers = _power_basis(n)
        acc = [Fraction(0)] * deg
        for j, c in enumerate(self.coords):
            if c:
                vec = powers[(n - j) % n]
                for t in range(deg):
                    acc[t] += c * vec[t]
        return CycValue(n, tuple(acc))

    def galois_image(self, k: int) -> "CycValue":
        """Apply zeta -> zeta^k; k must be coprime to the conductor."""
        from math import gcd

        n = self.conductor
        assert gcd(k, n) == 1
        deg, powers = _power_basis(n)
        acc = [Fraction(0)] * deg
        for j, c in enumerate(self.coords):
            if c:
                vec = powers[(j * k) % n]
                for t in range(deg):
                    acc[t] += c * vec[t]
        return CycValue(n, tuple(acc))

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coords[0]})"
        terms = [
            (f"{c}" if j == 0 else f"{c}*z^{j}")
            for j, c in enumerate(self.coords)
            if c != 0
        ]
        return f"Cyc[{self.conductor}](" + " + ".join(terms) + ")"


def cyc_sum(values, n: int = 1) -> CycValue:
    total = CycValue.zero(n)
    for v in values:
        total = total + v
    return total
