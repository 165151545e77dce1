"""Invariant suites behind ``fermat-mld verify``.

Each suite yields IdentityCheck objects; the CLI prints one line per check.
Ranges are kept small enough for an interactive run; the test suite covers
the full acceptance ranges.
"""
from __future__ import annotations

import cmath
import math
from typing import Iterator

from . import counting as C
from .cyclotomic import IntegerPolynomial, cyclotomic_polynomial, divisors, vanishing_sum_test
from .errors import BudgetExceeded
from .mldegree import (
    FermatQuery,
    IdentityCheck,
    euler_complement_identity,
    euler_smooth_hypersurface,
    milnor_span_det,
    ml_degree_fermat,
    ml_degree_fermat_prime_power,
    ml_degree_fermat_quadric,
    ml_degree_fermat_surface,
)

SUITES = ("cyclotomic", "counting", "mldeg")


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def cyclotomic_checks(nu_max: int = 60) -> Iterator[IdentityCheck]:
    for nu in range(1, nu_max + 1):
        prod = IntegerPolynomial((1,))
        for d in divisors(nu):
            prod = prod * cyclotomic_polynomial(d)
        xn = IntegerPolynomial.monomial(nu) - IntegerPolynomial((1,))
        yield IdentityCheck(f"prod Phi_d over d|{nu} is x^{nu}-1", int(prod == xn), 1)
        phi = cyclotomic_polynomial(nu)
        yield IdentityCheck(f"deg Phi_{nu} = totient({nu})", phi.degree, totient(nu))
        if nu > 1:
            fs = C.factorize(nu)
            expected = next(iter(fs)) if len(fs) == 1 else 1
            yield IdentityCheck(f"Phi_{nu}(1)", phi(1), expected)
    # exact vanishing test against floating point evaluation
    for nu in range(1, 9):
        agree = 0
        total = 0
        for mu in range(0, 6):
            for m in C.iter_multisets(mu, nu):
                for add_one in (False, True):
                    z = sum(c * cmath.exp(2j * math.pi * i / nu) for i, c in enumerate(m.counts)) + add_one
                    total += 1
                    agree += vanishing_sum_test(m, add_one) == (abs(z) < 1e-6)
        yield IdentityCheck(f"vanishing test agrees with float evaluation nu={nu}", agree, total)


def counting_checks(beta_source=None, budget: int = C.DEFAULT_SYMMETRIC_BUDGET) -> Iterator[IdentityCheck]:
    beta = beta_source if beta_source is not None else C.BetaResolver(budget=budget)
    for nu in range(1, 9):
        for mu in range(0, 6):
            bf = C.beta_bruteforce(mu, nu)
            yield IdentityCheck(f"beta({mu},{nu}) brute vs symmetric", bf, C.beta_symmetric(mu, nu, budget=budget))
            yield IdentityCheck(f"beta({mu},{nu}) brute vs resolved", bf, beta(mu, nu))
    for nu in (2, 3, 4, 5, 7, 8, 9):
        form = C.PrimePowerForm.of(nu)
        for mu in range(0, 10):
            if (mu + 1) % form.p == 0:
                yield IdentityCheck(f"beta({mu},{nu}) prime power vs symmetric",
                                    C.beta_prime_power(mu, form), C.beta_symmetric(mu, nu, budget=budget))
    for nu in range(1, 9):
        for mu in range(1, 7):
            yield IdentityCheck(f"alpha({mu},{nu}) = nu*beta({mu - 1},{nu})",
                                C.alpha_direct(mu, nu, budget=budget), nu * C.beta_symmetric(mu - 1, nu, budget=budget))
    for nu in range(1, 13):
        for mu in range(0, 8):
            b = C.beta_symmetric(mu, nu, budget=budget)
            yield IdentityCheck(f"Lam-Leung beta({mu},{nu}) != 0 iff criterion({mu + 1},{nu})",
                                int(b != 0), int(C.lam_leung_nonvanishing(mu + 1, nu)))
    for nu in range(1, 7):
        for mu in range(0, 6):
            yield IdentityCheck(f"multiset mass mu={mu} nu={nu}",
                                sum(m.orderings() for m in C.iter_multisets(mu, nu)), nu**mu)


def mldeg_checks(beta_source=None, budget: int = C.DEFAULT_SYMMETRIC_BUDGET,
                 n_max: int = 6, d_max: int = 8) -> Iterator[IdentityCheck]:
    beta = beta_source if beta_source is not None else C.BetaResolver(budget=budget)
    for n in range(1, 11):
        yield IdentityCheck(f"quadric corollary n={n}",
                            ml_degree_fermat(FermatQuery(n, 2), beta).total, ml_degree_fermat_quadric(n))
    for d in range(2, 31):
        yield IdentityCheck(f"surface corollary d={d}",
                            ml_degree_fermat(FermatQuery(2, d), beta).total, ml_degree_fermat_surface(d))
    for d in (2, 3, 4, 5, 6, 8, 9, 10):
        for n in range(1, 7):
            yield IdentityCheck(f"prime power corollary n={n} d={d}",
                                ml_degree_fermat(FermatQuery(n, d), beta).total, ml_degree_fermat_prime_power(n, d))
    for n in range(1, n_max + 1):
        for d in range(2, d_max + 1):
            try:
                outcome = euler_complement_identity(n, d, beta)
            except BudgetExceeded:
                continue
            yield from outcome.checks
            report = ml_degree_fermat(FermatQuery(n, d), beta)
            yield IdentityCheck(f"corrections nonnegative n={n} d={d}",
                                int(all(c.product >= 0 for c in report.corrections)), 1)
            yield IdentityCheck(f"MLdeg nonnegative n={n} d={d}", int(report.total >= 0), 1)
    for m in range(1, 13):
        yield IdentityCheck(f"e_{{{m},1}} = {m}", euler_smooth_hypersurface(m, 1).value, m)
    for l in range(1, 21):
        yield IdentityCheck(f"Milnor span det l={l}", milnor_span_det(l), l + 1)


def run_suite(name: str, beta_source=None, budget: int = C.DEFAULT_SYMMETRIC_BUDGET) -> Iterator[IdentityCheck]:
    if name == "all":
        for s in SUITES:
            yield from run_suite(s, beta_source, budget)
    elif name == "cyclotomic":
        yield from cyclotomic_checks()
    elif name == "counting":
        yield from counting_checks(beta_source, budget)
    elif name == "mldeg":
        yield from mldeg_checks(beta_source, budget)
    else:
        raise ValueError(f"unknown suite {name!r}")
