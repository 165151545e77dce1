"""ML degree of Fermat hypersurfaces F_{n,d} = {x_0^d + ... + x_n^d = 0} in P^n.

The main entry point is ``ml_degree_fermat``, which subtracts the correction
terms binom(n+1, j) * beta(n-j, d-1) from the general-hypersurface value
d + d^2 + ... + d^n. The rest of the module provides the closed forms it must
agree with and the Euler-characteristic bookkeeping it comes from.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .counting import BetaResolver, PrimePowerForm, iter_compositions, prime_power_form
from .errors import DegreeOneUnsupported, NonExactDivision, NotPrimePower

BetaSource = Callable[[int, int], int]


@dataclass(frozen=True)
class FermatQuery:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.d == 1:
            raise DegreeOneUnsupported("d = 1 would need beta(., 0), which is undefined")
        if self.d < 2:
            raise ValueError(f"d must be at least 2, got {self.d}")


@dataclass(frozen=True)
class Correction:
    j: int
    binomial: int
    beta: int

    @property
    def product(self) -> int:
        return self.binomial * self.beta


@dataclass(frozen=True)
class MLDegreeReport:
    query: FermatQuery
    base: int
    corrections: list[Correction] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.base - sum(c.product for c in self.corrections)

    def to_dict(self) -> dict:
        return {
            "n": self.query.n,
            "d": self.query.d,
            "base": str(self.base),
            "corrections": [
                {"j": c.j, "binomial": str(c.binomial), "beta": str(c.beta), "product": str(c.product)}
                for c in self.corrections
            ],
            "total": str(self.total),
        }


@dataclass(frozen=True)
class EulerCharValue:
    m: int
    d: int
    value: int


def euler_smooth_hypersurface(m: int, d: int) -> EulerCharValue:
    """Euler characteristic of a smooth degree-d hypersurface in P^m.

    e = (m+1) + ((1-d)^(m+1) - 1)/d. For d = 1 this is m, a hyperplane P^(m-1);
    for m = 0 it is 0, the empty set.
    """
    if m < 0 or d < 1:
        raise ValueError("need m >= 0 and d >= 1")
    q, r = divmod((1 - d) ** (m + 1) - 1, d)
    if r:
        raise NonExactDivision(f"(1-{d})^{m + 1} - 1 not divisible by {d}")
    return EulerCharValue(m, d, m + 1 + q)


def ml_degree_general(n: int, d: int) -> int:
    """d + d^2 + ... + d^n, the ML degree of a general degree-d hypersurface in P^n."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    return sum(d**k for k in range(1, n + 1))


def _resolve(beta_source: Optional[BetaSource]) -> BetaSource:
    return beta_source if beta_source is not None else BetaResolver()


def ml_degree_fermat(query: FermatQuery, beta_source: Optional[BetaSource] = None) -> MLDegreeReport:
    beta = _resolve(beta_source)
    n, d = query.n, query.d
    corrections = [Correction(j, comb(n + 1, j), beta(n - j, d - 1)) for j in range(n)]
    return MLDegreeReport(query, ml_degree_general(n, d), corrections)


def ml_degree_fermat_quadric(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 ** (n + 1) - 2


def ml_degree_fermat_surface(d: int) -> int:
    if d < 2:
        raise ValueError("d must be at least 2")
    drop = {0: 0, 2: 0, 3: 3, 5: 3, 4: 2, 1: 5}[d % 6]
    return d * d + d - drop


def ml_degree_fermat_prime_power(n: int, d: int) -> int:
    """Closed form when d - 1 = p^r.

    Sums (n+1)! / ((n+1-pS)! (s_1!...s_k!)^p) over nonnegative s_1..s_k with
    1 <= S = s_1+...+s_k <= (n+1)/p, k = (d-1)/p, then divides by d - 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if d == 2:
        # d - 1 = 1: every beta(., 1) vanishes, the correction sum is empty
        return ml_degree_general(n, d)
    form: Optional[PrimePowerForm] = prime_power_form(d - 1) if d >= 3 else None
    if form is None:
        raise NotPrimePower(f"d - 1 = {d - 1} is not a prime power")
    p, k = form.p, form.k
    fact = _factorials(n + 1)
    acc = 0
    for total in range(1, (n + 1) // p + 1):
        for s in iter_compositions(total, k):
            den = 1
            for si in s:
                den *= fact[si]
            acc += fact[n + 1] // (fact[n + 1 - p * total] * den**p)
    q, r = divmod(acc, d - 1)
    if r:
        raise NonExactDivision(f"correction sum {acc} not divisible by {d - 1}")
    return ml_degree_general(n, d) - q


def _factorials(n: int) -> list[int]:
    out = [1]
    for i in range(1, n + 1):
        out.append(out[-1] * i)
    return out


def singular_point_count(n: int, d: int, i: int, beta_source: Optional[BetaSource] = None) -> int:
    """Number of singular points of F_{n,d} cut by W^i, i.e. beta(n-i+1, d-1)."""
    FermatQuery(n, d)
    if not 1 <= i <= n:
        raise ValueError(f"i must lie in 1..{n}")
    return _resolve(beta_source)(n - i + 1, d - 1)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        rel = "==" if self.passed else "!="
        return f"{status}  {self.name}: {self.lhs} {rel} {self.rhs}"


@dataclass(frozen=True)
class EulerIdentityOutcome:
    general: IdentityCheck
    strata: IdentityCheck
    huh: IdentityCheck

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.general, self.strata, self.huh)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def complement_euler_by_strata(n: int, d: int, beta: BetaSource) -> int:
    """chi(F_{n,d} minus the arrangement), summed stratum by stratum.

    Coordinate strata V^i contribute e_{n-i,d}; the strata W^i through H_+
    contribute e_{n-i,d} plus (-1)^(n-i) times their singular point count,
    each singularity having Milnor number 1.
    """
    total = 0
    for i in range(n + 1):
        e = euler_smooth_hypersurface(n - i, d).value
        term = comb(n + 1, i) * e
        if i >= 1:
            term += comb(n + 1, i - 1) * (e + (-1) ** (n - i) * beta(n - i + 1, d - 1))
        total += (-1) ** i * term
    return total


def complement_euler_collapsed(n: int, d: int, beta: BetaSource) -> int:
    """Same Euler characteristic after merging binom(n+1,i) + binom(n+1,i-1)."""
    smooth = sum((-1) ** i * comb(n + 2, i) * euler_smooth_hypersurface(n - i, d).value for i in range(n + 1))
    sing = sum((-1) ** n * comb(n + 1, i - 1) * beta(n - i + 1, d - 1) for i in range(1, n + 1))
    return smooth + sing


def euler_complement_identity(n: int, d: int, beta_source: Optional[BetaSource] = None) -> EulerIdentityOutcome:
    q = FermatQuery(n, d)
    beta = _resolve(beta_source)
    sign = (-1) ** (n - 1)
    general = IdentityCheck(
        f"general hypersurface identity n={n} d={d}",
        sum((-1) ** i * comb(n + 2, i) * euler_smooth_hypersurface(n - i, d).value for i in range(n + 1)),
        sign * ml_degree_general(n, d),
    )
    strata = IdentityCheck(
        f"strata vs collapsed Euler sum n={n} d={d}",
        complement_euler_by_strata(n, d, beta),
        complement_euler_collapsed(n, d, beta),
    )
    huh = IdentityCheck(
        f"Huh sign identity n={n} d={d}",
        strata.lhs,
        sign * ml_degree_fermat(q, beta).total,
    )
    return EulerIdentityOutcome(general, strata, huh)


def integer_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k]:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def milnor_matrix(l: int) -> list[list[int]]:
    """Rows e_j + (1,...,1): the linear parts of the Jacobian generators at a singular point."""
    return [[2 if i == j else 1 for j in range(l)] for i in range(l)]


def milnor_span_det(l: int) -> int:
    if l < 1:
        raise ValueError("l must be at least 1")
    return integer_det(milnor_matrix(l))


def milnor_span_check(l: int) -> bool:
    """The l linear parts span C^l, so the Jacobian ideal is maximal and the Milnor number is 1."""
    return milnor_span_det(l) != 0
