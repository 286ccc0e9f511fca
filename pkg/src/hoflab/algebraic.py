"""The constants alpha_k and beta_k and the exact letter frequencies.

alpha_k is the root of X^k + X - 1 in [1/2, 1] and beta_k = 1/alpha_k
the root of X^k - X^{k-1} - 1 in [1, 2].  F_k^j(n)/n tends to alpha_k^j,
L_k^j(n)/n to beta_k^j, and letter i of x_k has frequency alpha_k^{k+i-1}
for i < k and alpha_k^{k-1} for i = k.

Roots come from plain bisection with a certified sign bracket, so every
result carries an interval [lo, hi] with P(lo) < 0 < P(hi), not just a
point estimate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

__all__ = [
    "RootResult",
    "find_alpha",
    "find_beta",
    "slope",
    "slope_interval",
    "freq_exact",
    "freq_interval",
]

# below ~4 ulp bisection cannot certify a strict sign bracket
MIN_TOL = 1e-15


@dataclass(frozen=True)
class RootResult:
    """A bracketed simple root: P(lo) < 0 < P(hi), hi - lo <= tol."""

    k: int
    name: str  # "alpha" or "beta"
    lo: float
    hi: float
    tol: float
    exact: float | None = None  # set when bisection hit P(x) == 0.0

    @property
    def value(self) -> float:
        if self.exact is not None:
            return self.exact
        return 0.5 * (self.lo + self.hi)

    def power_interval(self, j: int) -> tuple[float, float]:
        """Certified enclosure of value**j; both endpoints are >= 0."""
        if j < 0:
            raise ValueError(f"j must be >= 0, got {j}")
        return self.lo**j, self.hi**j


def _poly_alpha(k: int) -> Callable[[float], float]:
    def p(x: float) -> float:
        # Horner on X^k + X - 1
        acc = 1.0
        for _ in range(k - 1):
            acc *= x
        return acc * x + x - 1.0

    return p


def _poly_beta(k: int) -> Callable[[float], float]:
    def q(x: float) -> float:
        # X^{k-1} * (X - 1) - 1, sign-stable on [1, 2]
        acc = 1.0
        for _ in range(k - 1):
            acc *= x
        return acc * (x - 1.0) - 1.0

    return q


def _bisect(
    poly: Callable[[float], float], k: int, name: str, lo: float, hi: float, tol: float
) -> RootResult:
    if tol < MIN_TOL:
        raise ValueError(f"tol={tol} below achievable precision {MIN_TOL}")
    flo, fhi = poly(lo), poly(hi)
    exact = None
    if flo == 0.0:
        exact, lo, hi = lo, lo - 0.5 * tol, lo + 0.5 * tol
    elif fhi == 0.0:
        exact, lo, hi = hi, hi - 0.5 * tol, hi + 0.5 * tol
    elif not (flo < 0.0 < fhi):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float grid exhausted; width is already a few ulp
        fm = poly(mid)
        if fm == 0.0:
            exact, lo, hi = mid, mid - 0.5 * tol, mid + 0.5 * tol
            break
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
    if not (poly(lo) < 0.0 < poly(hi)):
        raise ArithmeticError(f"lost the sign bracket near {0.5 * (lo + hi)}")
    return RootResult(k=k, name=name, lo=lo, hi=hi, tol=tol, exact=exact)


def find_alpha(k: int, tol: float = 1e-14) -> RootResult:
    """Root of X^k + X - 1 in [1/2, 1]; increasing in k, alpha_1 = 1/2."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _bisect(_poly_alpha(k), k, "alpha", 0.5, 1.0, tol)


def find_beta(k: int, tol: float = 1e-14) -> RootResult:
    """Root of X^k - X^{k-1} - 1 in [1, 2]; decreasing in k, beta_1 = 2."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _bisect(_poly_beta(k), k, "beta", 1.0, 2.0, tol)


def slope_interval(
    k: int, j: int, tol: float = 1e-14, kind: str = "f"
) -> tuple[float, float]:
    """Enclosure of the asymptotic slope of F_k^j (kind="f") or L_k^j ("l")."""
    if kind == "f":
        return find_alpha(k, tol).power_interval(j)
    if kind == "l":
        return find_beta(k, tol).power_interval(j)
    raise ValueError(f"kind must be 'f' or 'l', got {kind!r}")


def slope(k: int, j: int, tol: float = 1e-14, kind: str = "f") -> float:
    """Asymptotic slope of n -> F_k^j(n) (alpha_k^j) or L_k^j (beta_k^j)."""
    lo, hi = slope_interval(k, j, tol, kind)
    return 0.5 * (lo + hi)


def _freq_exponent(k: int, i: int) -> int:
    if not 1 <= i <= k:
        raise ValueError(f"letter {i} outside alphabet 1..{k}")
    return k - 1 if i == k else k + i - 1


def freq_interval(k: int, i: int, tol: float = 1e-14) -> tuple[float, float]:
    """Enclosure of the density of letter i in x_k."""
    return find_alpha(k, tol).power_interval(_freq_exponent(k, i))


def freq_exact(k: int, i: int, tol: float = 1e-14) -> float:
    """Density of letter i in x_k: alpha_k^{k+i-1}, or alpha_k^{k-1} for i=k."""
    lo, hi = freq_interval(k, i, tol)
    return 0.5 * (lo + hi)
