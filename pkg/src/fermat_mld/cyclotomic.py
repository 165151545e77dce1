"""Exact arithmetic in Z[x] and Z[x]/(Phi_nu).

Polynomials are dense tuples of Python ints in ascending degree order. The
only question this module answers for the rest of the package is whether an
integer combination of nu-th roots of unity is exactly zero; that holds iff
the exponent polynomial is divisible by the cyclotomic polynomial Phi_nu.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NonMonicDivisor, NonzeroRemainder

NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntegerPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntegerPolynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        """Degree as an int; the zero polynomial has degree ``NEG_INF``."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntegerPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return self + (-other)

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return poly_mul(self, other)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntegerPolynomial(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+") + body)
        s = " ".join(t if i == 0 else f"{t[0]} {t[1:]}" for i, t in enumerate(terms))
        return f"IntegerPolynomial({s.lstrip('+')})"


def poly_mul(a: IntegerPolynomial, b: IntegerPolynomial) -> IntegerPolynomial:
    if a.is_zero() or b.is_zero():
        return IntegerPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntegerPolynomial(out)


def poly_divmod(num: IntegerPolynomial, den: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
    """Divide by a monic polynomial; the quotient and remainder stay integral.

    >>> poly_divmod(IntegerPolynomial((1, 0, 1)), IntegerPolynomial((1, 1)))
    (IntegerPolynomial(x - 1), IntegerPolynomial(2))
    """
    if den.is_zero() or den.leading() != 1:
        raise NonMonicDivisor(f"divisor must be monic and nonzero, got {den!r}")
    r = list(num.coeffs)
    dc = den.coeffs
    m = len(dc) - 1
    if len(r) <= m:
        return IntegerPolynomial(), num
    q = [0] * (len(r) - m)
    for k in range(len(r) - 1, m - 1, -1):
        c = r[k]
        if c:
            q[k - m] = c
            for j in range(m):
                r[k - m + j] -= c * dc[j]
            r[k] = 0
    return IntegerPolynomial(q), IntegerPolynomial(r[:m])


def poly_rem(num: IntegerPolynomial, den: IntegerPolynomial) -> IntegerPolynomial:
    return poly_divmod(num, den)[1]


def poly_divexact(num: IntegerPolynomial, den: IntegerPolynomial) -> IntegerPolynomial:
    q, r = poly_divmod(num, den)
    if not r.is_zero():
        raise NonzeroRemainder(f"{num!r} is not divisible by {den!r} (remainder {r!r})")
    return q


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@dataclass(frozen=True)
class CyclotomicOrder:
    nu: int

    def __post_init__(self):
        if int(self.nu) != self.nu or self.nu < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {self.nu!r}")


# lru_cache is safe under threads: a racing miss recomputes the same value.
@lru_cache(maxsize=None)
def _cyclotomic(nu: int) -> IntegerPolynomial:
    acc = IntegerPolynomial((1,))
    for d in divisors(nu)[:-1]:
        acc = acc * _cyclotomic(d)
    return poly_divexact(IntegerPolynomial.monomial(nu) - IntegerPolynomial((1,)), acc)


def cyclotomic_polynomial(order: CyclotomicOrder | int) -> IntegerPolynomial:
    """Phi_nu, built as (x^nu - 1) divided by Phi_d for every proper divisor d."""
    if not isinstance(order, CyclotomicOrder):
        order = CyclotomicOrder(order)
    return _cyclotomic(order.nu)


@lru_cache(maxsize=None)
def power_residues(nu: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of x^i mod Phi_nu for i = 0..nu-1, each of length phi(nu)."""
    phi = cyclotomic_polynomial(nu)
    width = len(phi.coeffs) - 1
    out = []
    for i in range(nu):
        r = poly_rem(IntegerPolynomial.monomial(i), phi).coeffs
        out.append(r + (0,) * (width - len(r)))
    return tuple(out)


def vanishing_sum_test(m, add_one: bool = False) -> bool:
    """True iff sum_i m_i * zeta^i (+1) is exactly zero, zeta a primitive nu-th root.

    ``m`` is an ExponentMultiset or a plain sequence of nu counts.
    """
    counts: Sequence[int] = getattr(m, "counts", m)
    nu = len(counts)
    if nu < 1:
        raise ValueError("need at least one count")
    if any(c < 0 for c in counts):
        raise ValueError("counts must be nonnegative")
    c = list(counts)
    if add_one:
        c[0] += 1
    return poly_rem(IntegerPolynomial(c), cyclotomic_polynomial(nu)).is_zero()
