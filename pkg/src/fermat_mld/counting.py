"""Counting ordered tuples of nu-th roots of unity with a prescribed sum.

beta(mu, nu) counts mu-tuples with z_1 + ... + z_mu + 1 = 0 and alpha(mu, nu)
counts mu-tuples with z_1 + ... + z_mu = 0. Several independent routes are
provided so that each can be checked against the others:

* ``beta_bruteforce``: every ordered tuple, one exact vanishing test each.
* ``beta_symmetric`` / ``alpha_direct``: one test per exponent multiset,
  weighted by the multinomial number of orderings.
* ``beta_closed_small`` and ``beta_prime_power`` / ``alpha_prime_power``:
  closed forms for small mu, nu = 1, and nu a prime power.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .cyclotomic import power_residues, vanishing_sum_test
from .errors import BudgetExceeded, MethodNotApplicable, NonExactDivision, NotPrimePower

DEFAULT_BRUTE_BUDGET = 10**8
DEFAULT_SYMMETRIC_BUDGET = 10**9

BETA_METHODS = ("brute", "symmetric", "closed_small", "prime_power")


@dataclass(frozen=True)
class ExponentMultiset:
    """How many of the z's equal each power zeta^0..zeta^(nu-1)."""

    nu: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.nu < 1:
            raise ValueError("nu must be positive")
        if len(self.counts) != self.nu:
            raise ValueError(f"expected {self.nu} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def mu(self) -> int:
        return sum(self.counts)

    def orderings(self) -> int:
        return multinomial(self.counts)

    @classmethod
    def from_tuple(cls, exponents, nu: int) -> ExponentMultiset:
        counts = [0] * nu
        for e in exponents:
            counts[e % nu] += 1
        return cls(nu, tuple(counts))


@dataclass(frozen=True)
class BetaRecord:
    mu: int
    nu: int
    value: int
    method: str
    kind: str = "beta"  # or "alpha"


@dataclass(frozen=True)
class PrimePowerForm:
    p: int
    r: int

    def __post_init__(self):
        if self.r < 1 or not is_prime(self.p):
            raise NotPrimePower(f"p={self.p}, r={self.r} is not a prime power form")

    @property
    def nu(self) -> int:
        return self.p**self.r

    @property
    def k(self) -> int:
        return self.p ** (self.r - 1)

    @classmethod
    def of(cls, nu: int) -> PrimePowerForm:
        fs = factorize(nu)
        if len(fs) != 1:
            raise NotPrimePower(f"{nu} is not a prime power")
        (p, r), = fs.items()
        return cls(p, r)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_form(nu: int) -> Optional[PrimePowerForm]:
    try:
        return PrimePowerForm.of(nu)
    except NotPrimePower:
        return None


def multinomial(parts) -> int:
    total, out = 0, 1
    for m in parts:
        total += m
        out *= math.comb(total, m)
    return out


def _check_args(mu: int, nu: int) -> None:
    if mu < 0:
        raise ValueError(f"mu must be nonnegative, got {mu}")
    if nu < 1:
        raise ValueError(f"nu must be positive, got {nu}")


def multiset_count(mu: int, nu: int) -> int:
    return math.comb(mu + nu - 1, nu - 1)


def iter_multisets(mu: int, nu: int) -> Iterator[ExponentMultiset]:
    """All exponent multisets of weight mu, lexicographic in the counts vector."""
    _check_args(mu, nu)
    counts = [0] * nu

    def rec(i, left):
        if i == nu - 1:
            counts[i] = left
            yield ExponentMultiset(nu, tuple(counts))
            return
        for c in range(left + 1):
            counts[i] = c
            yield from rec(i + 1, left - c)

    yield from rec(0, mu)


def iter_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative compositions of ``total`` into ``parts`` parts (stars and bars)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in iter_compositions(total - first, parts - 1):
            yield (first,) + rest


def beta_bruteforce(mu: int, nu: int, budget: int = DEFAULT_BRUTE_BUDGET) -> int:
    _check_args(mu, nu)
    if nu**mu > budget:
        raise BudgetExceeded(nu**mu, budget, "tuples")
    total = 0
    for tup in itertools.product(range(nu), repeat=mu):
        if vanishing_sum_test(ExponentMultiset.from_tuple(tup, nu), add_one=True):
            total += 1
    return total


def _weighted_vanishing_count(mu: int, nu: int, add_one: bool, first: Optional[int] = None) -> int:
    # Depth-first over counts vectors; the running residue mod Phi_nu and the
    # running multinomial are updated incrementally per branch.
    res = power_residues(nu)
    width = len(res[0])
    start = list(res[0]) if add_one else [0] * width

    def rec(i, left, acc, weight, placed):
        if i == nu - 1:
            c = left
            for j in range(width):
                if acc[j] + c * res[i][j]:
                    return 0
            return weight * math.comb(placed + c, c)
        total = 0
        row = res[i]
        lo, hi = 0, left
        if i == 0 and first is not None:
            lo = hi = first
        for c in range(lo, hi + 1):
            nxt = [a + c * b for a, b in zip(acc, row)] if c else acc
            total += rec(i + 1, left - c, nxt, weight * math.comb(placed + c, c), placed + c)
        return total

    if nu == 1:
        # Single residue class: sum is mu (+1), never zero unless mu == 0 and no +1.
        if first is not None and first != mu:
            return 0
        return 1 if (mu == 0 and not add_one) else 0
    return rec(0, mu, start, 1, 0)


def _partial(args):
    return _weighted_vanishing_count(*args)


def _enumerate(mu: int, nu: int, add_one: bool, budget: int, workers: int) -> int:
    n = multiset_count(mu, nu)
    if n > budget:
        raise BudgetExceeded(n, budget, "multisets")
    if workers <= 1 or nu == 1:
        return _weighted_vanishing_count(mu, nu, add_one)
    jobs = [(mu, nu, add_one, m0) for m0 in range(mu + 1)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return sum(ex.map(_partial, jobs))


def beta_symmetric(mu: int, nu: int, budget: int = DEFAULT_SYMMETRIC_BUDGET, workers: int = 1) -> int:
    """Count via exponent multisets of weight mu, each weighted by its orderings.

    With ``workers > 1`` the enumeration is split by the value of m_0 and the
    partial sums are added; the result does not depend on the split.
    """
    _check_args(mu, nu)
    return _enumerate(mu, nu, True, budget, workers)


def alpha_direct(mu: int, nu: int, budget: int = DEFAULT_SYMMETRIC_BUDGET, workers: int = 1) -> int:
    _check_args(mu, nu)
    return _enumerate(mu, nu, False, budget, workers)


def beta_closed_small(mu: int, nu: int) -> Optional[int]:
    """Closed forms for nu = 1, mu = 1 and mu = 2; None when none applies."""
    _check_args(mu, nu)
    if nu == 1:
        return 0
    if mu == 1:
        return 1 if nu % 2 == 0 else 0
    if mu == 2:
        return 2 if nu % 3 == 0 else 0
    return None


def _prime_power_sum(total: int, form: PrimePowerForm) -> int:
    """Sum of total! / (s_1! ... s_k!)^p over compositions of total/p into k parts."""
    p, k = form.p, form.k
    fact = math.factorial(total)
    acc = 0
    for s in iter_compositions(total // p, k):
        den = 1
        for si in s:
            den *= math.factorial(si)
        q, r = divmod(fact, den**p)
        if r:
            raise NonExactDivision(f"{total}! not divisible by ({s})!^{p}")
        acc += q
    return acc


def alpha_prime_power(mu: int, form: PrimePowerForm) -> int:
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if mu % form.p:
        return 0
    return _prime_power_sum(mu, form)


def beta_prime_power(mu: int, form: PrimePowerForm) -> int:
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if (mu + 1) % form.p:
        return 0
    q, r = divmod(_prime_power_sum(mu + 1, form), form.nu)
    if r:
        raise NonExactDivision(f"alpha({mu + 1},{form.nu}) not divisible by {form.nu}")
    return q


def lam_leung_nonvanishing(mu: int, nu: int) -> bool:
    """Whether mu is a nonnegative integer combination of the primes dividing nu."""
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if nu < 2:
        return False
    primes = sorted(factorize(nu))
    reach = [False] * (mu + 1)
    reach[0] = True
    for s in range(1, mu + 1):
        reach[s] = any(s >= p and reach[s - p] for p in primes)
    return reach[mu]


def auto_method(mu: int, nu: int) -> str:
    """The method "auto" resolves to for (mu, nu): fastest exact route first."""
    _check_args(mu, nu)
    if beta_closed_small(mu, nu) is not None:
        return "closed_small"
    if prime_power_form(nu) is not None:
        return "prime_power"
    return "symmetric"


def beta_by_method(mu: int, nu: int, method: str = "auto",
                   brute_budget: int = DEFAULT_BRUTE_BUDGET,
                   budget: int = DEFAULT_SYMMETRIC_BUDGET) -> BetaRecord:
    """Compute beta with a named method. Raises MethodNotApplicable or BudgetExceeded."""
    if method == "auto":
        method = auto_method(mu, nu)
    if method == "closed":
        method = "closed_small"
    _check_args(mu, nu)
    if method == "closed_small":
        v = beta_closed_small(mu, nu)
        if v is None:
            raise MethodNotApplicable(f"no small closed form for beta({mu},{nu})")
    elif method == "prime_power":
        form = prime_power_form(nu)
        if form is None:
            raise MethodNotApplicable(f"nu={nu} is not a prime power")
        v = beta_prime_power(mu, form)
    elif method == "symmetric":
        v = beta_symmetric(mu, nu, budget=budget)
    elif method == "brute":
        v = beta_bruteforce(mu, nu, budget=brute_budget)
    else:
        raise ValueError(f"unknown method {method!r}")
    return BetaRecord(mu, nu, v, method)


def check_applicable(mu: int, nu: int, method: str,
                     brute_budget: int = DEFAULT_BRUTE_BUDGET,
                     budget: int = DEFAULT_SYMMETRIC_BUDGET) -> str:
    """Resolve ``method`` for (mu, nu) and raise if it cannot run, without computing."""
    _check_args(mu, nu)
    if method == "auto":
        method = auto_method(mu, nu)
    if method == "closed":
        method = "closed_small"
    if method == "closed_small" and beta_closed_small(mu, nu) is None:
        raise MethodNotApplicable(f"no small closed form for beta({mu},{nu})")
    if method == "prime_power" and prime_power_form(nu) is None:
        raise MethodNotApplicable(f"nu={nu} is not a prime power")
    if method == "symmetric" and multiset_count(mu, nu) > budget:
        raise BudgetExceeded(multiset_count(mu, nu), budget, "multisets")
    if method == "brute" and nu**mu > brute_budget:
        raise BudgetExceeded(nu**mu, brute_budget, "tuples")
    if method not in BETA_METHODS:
        raise ValueError(f"unknown method {method!r}")
    return method


def alpha_from_beta(mu: int, nu: int, method: str = "auto", **budgets) -> int:
    if mu < 1:
        raise ValueError("mu must be at least 1")
    return nu * beta_by_method(mu - 1, nu, method, **budgets).value


class BetaResolver:
    """Callable beta source with an optional backing cache.

    ``cache`` is any object with ``get((mu, nu))`` and ``put(mu, nu, value)``;
    hits and misses are counted so callers can show that cached values were
    not recomputed.
    """

    def __init__(self, method: str = "auto", cache=None,
                 brute_budget: int = DEFAULT_BRUTE_BUDGET,
                 budget: int = DEFAULT_SYMMETRIC_BUDGET):
        self.method = method
        self.cache = cache
        self.brute_budget = brute_budget
        self.budget = budget
        self.hits = 0
        self.misses = 0

    def record(self, mu: int, nu: int) -> BetaRecord:
        method = check_applicable(mu, nu, self.method, self.brute_budget, self.budget)
        if self.cache is not None:
            v = self.cache.get((mu, nu))
            if v is not None:
                self.hits += 1
                return BetaRecord(mu, nu, v, method)
        self.misses += 1
        rec = beta_by_method(mu, nu, method, self.brute_budget, self.budget)
        if self.cache is not None:
            self.cache.put(mu, nu, rec.value)
        return rec

    def __call__(self, mu: int, nu: int) -> int:
        return self.record(mu, nu).value
