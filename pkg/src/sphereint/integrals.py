"""Closed-form integrals over round unit spheres.

Two families, both exact in PiRational arithmetic when the exponents are
integers and evaluated through an independent log-Gamma floating path
otherwise:

* monomials in the embedding coordinates over S^n (signed, or with
  absolute values), and
* products of powers of the polar radii mu_j over S^D, where S^D is
  charted by n + eps radii/angle pairs (D = 2n + eps) plus, for even D,
  one leftover sign-carrying coordinate mu_{n+1}.

The two families are linked by a reduction identity that trades the
(2 pi)^(n+eps) angle volume and the mu_j Jacobian factors for one lower
sphere: integral over S^D of prod mu_j^(a_j) equals
pi^(n+eps) * integral over S^n of prod |mu_j|^(a_j + 1), zero-padded to
all n + 1 coordinates.  reduction_rhs evaluates that right-hand side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactpi import DomainError, PiRational, gamma_half, pi_power

Number = Union[int, float]


@dataclass(frozen=True)
class SphereDim:
    """Dimension bookkeeping for the unit sphere S^D in R^(D+1).

    D = 2n + eps with eps = D mod 2.  There are n + eps angle/radius pairs
    and n + 1 polar radii; for even D the last radius mu_{n+1} is the lone
    unpaired coordinate and carries a sign.
    """

    D: int

    def __post_init__(self) -> None:
        if isinstance(self.D, bool) or not isinstance(self.D, int):
            raise TypeError(f"sphere dimension must be an integer, got {self.D!r}")
        if self.D < 1:
            raise DomainError(f"sphere dimension must be >= 1, got {self.D}")

    @property
    def n(self) -> int:
        return self.D // 2

    @property
    def eps(self) -> int:
        return self.D % 2

    @property
    def n_angles(self) -> int:
        # floor((D+1)/2) rotation angles, one per coordinate pair
        return self.n + self.eps

    @property
    def n_mu(self) -> int:
        return self.n + 1


def as_dim(dim: Union[SphereDim, int]) -> SphereDim:
    if isinstance(dim, SphereDim):
        return dim
    return SphereDim(dim)


def _check_exponents(
    alphas: Sequence[Number], expected_len: int, minimum: int, what: str
) -> tuple:
    alphas = tuple(alphas)
    if len(alphas) != expected_len:
        raise ValueError(
            f"{what} takes {expected_len} exponents here, got {len(alphas)}; "
            "pass exactly one per coordinate"
        )
    for a in alphas:
        if isinstance(a, bool) or not isinstance(a, (int, float)):
            raise TypeError(
                f"exponents must be int (exact path) or float (floating path), got {a!r}"
            )
        if isinstance(a, float) and not math.isfinite(a):
            raise DomainError(f"exponent {a!r} is not finite")
        if a < minimum:
            raise DomainError(
                f"{what} requires every exponent >= {minimum}, got {a}"
            )
    return alphas


def _all_int(alphas: Sequence[Number]) -> bool:
    return all(isinstance(a, int) for a in alphas)


def sphere_volume(dim: Union[SphereDim, int]) -> PiRational:
    """Total volume of S^D: 2 pi^((D+1)/2) / Gamma((D+1)/2), exactly."""
    dim = as_dim(dim)
    return PiRational(Fraction(2), dim.D + 1) / gamma_half(Fraction(dim.D + 1, 2))


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"sphere index n must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"sphere index n must be >= 0, got {n}")
    return n


def dirichlet_signed(n: int, alphas: Sequence[int]) -> PiRational:
    """Integral over S^n of prod x_j^(a_j) for integer a_j >= 0, exactly.

    Odd exponents kill the integral by the x_j -> -x_j symmetry; otherwise
    the value is 2 prod Gamma((1+a_j)/2) / Gamma((n+1)/2 + sum a_j / 2).
    """
    n = _check_n(n)
    alphas = _check_exponents(alphas, n + 1, 0, "dirichlet_signed")
    if not _all_int(alphas):
        raise TypeError(
            "dirichlet_signed needs integer exponents; use dirichlet_abs for real ones"
        )
    if any(a % 2 for a in alphas):
        return PiRational(Fraction(0))
    return _dirichlet_exact(n, alphas)


def _dirichlet_exact(n: int, alphas: Sequence[int]) -> PiRational:
    out = PiRational(Fraction(2))
    for a in alphas:
        out = out * gamma_half(Fraction(1 + a, 2))
    return out / gamma_half(Fraction(n + 1 + sum(alphas), 2))


def dirichlet_abs(n: int, alphas: Sequence[Number]) -> Union[PiRational, float]:
    """Integral over S^n of prod |x_j|^(a_j) for real a_j >= 0.

    Exact PiRational when every exponent is an int; floating otherwise.
    """
    n = _check_n(n)
    alphas = _check_exponents(alphas, n + 1, 0, "dirichlet_abs")
    if _all_int(alphas):
        return _dirichlet_exact(n, alphas)
    return dirichlet_abs_float(n, alphas)


def dirichlet_abs_float(n: int, alphas: Sequence[Number]) -> float:
    """Floating-point path for dirichlet_abs, via log-Gamma only.

    Kept independent of the exact path so the two can check each other.
    """
    n = _check_n(n)
    alphas = _check_exponents(alphas, n + 1, 0, "dirichlet_abs")
    log = math.log(2.0)
    for a in alphas:
        log += math.lgamma((1.0 + a) / 2.0)
    log -= math.lgamma((n + 1 + math.fsum(alphas)) / 2.0)
    return math.exp(log)


def mu_power_integral(
    dim: Union[SphereDim, int], alphas: Sequence[Number]
) -> Union[PiRational, float]:
    """Integral over S^D of prod mu_j^(a_j), one exponent per polar radius pair.

    Value: 2 pi^((D+1)/2) prod Gamma(1 + a_j/2) / Gamma((D+1)/2 + sum a_j / 2)
    for a_j >= -1 (the Jacobian factor mu_j keeps a_j = -1 integrable).
    Exact PiRational when every exponent is an int; floating otherwise.
    """
    dim = as_dim(dim)
    alphas = _check_exponents(alphas, dim.n_angles, -1, "mu_power_integral")
    if _all_int(alphas):
        out = PiRational(Fraction(2), dim.D + 1)
        for a in alphas:
            out = out * gamma_half(Fraction(2 + a, 2))
        return out / gamma_half(Fraction(dim.D + 1 + sum(alphas), 2))
    return mu_power_float(dim, alphas)


def mu_power_float(dim: Union[SphereDim, int], alphas: Sequence[Number]) -> float:
    """Floating-point path for mu_power_integral, via log-Gamma only."""
    dim = as_dim(dim)
    alphas = _check_exponents(alphas, dim.n_angles, -1, "mu_power_integral")
    log = math.log(2.0) + 0.5 * (dim.D + 1) * math.log(math.pi)
    for a in alphas:
        log += math.lgamma(1.0 + a / 2.0)
    log -= math.lgamma((dim.D + 1 + math.fsum(alphas)) / 2.0)
    return math.exp(log)


def reduction_rhs(
    dim: Union[SphereDim, int], alphas: Sequence[Number]
) -> Union[PiRational, float]:
    """Right-hand side of the sphere-within-a-sphere reduction.

    pi^(n+eps) times the S^n integral of prod |mu_j|^(a_j + 1), the
    exponent vector zero-padded on the polar radii absent from the product
    so its length is n + 1.  Structurally equal to mu_power_integral for
    integer exponents; agrees through the floating path otherwise.
    """
    dim = as_dim(dim)
    alphas = _check_exponents(alphas, dim.n_angles, -1, "reduction_rhs")
    pad = dim.n_mu - dim.n_angles  # 1 for even D, 0 for odd
    if _all_int(alphas):
        shifted = tuple(a + 1 for a in alphas) + (0,) * pad
        return pi_power(2 * dim.n_angles) * dirichlet_abs(dim.n, shifted)
    shifted = tuple(float(a) + 1.0 for a in alphas) + (0.0,) * pad
    return math.pi ** dim.n_angles * dirichlet_abs_float(dim.n, shifted)


def term_integral(dim: Union[SphereDim, int], ks: Sequence[int]) -> PiRational:
    """Integral over S^D of prod mu_j^(2 k_j) for non-negative integers k_j.

    Specializing the Gamma factors to integers gives
    2 pi^((D+1)/2) prod k_j! / Gamma((D+1)/2 + k) with k = sum k_j.
    Computed from factorials directly, so structural equality with
    mu_power_integral(dim, 2 ks) is a genuine cross-check.
    """
    dim = as_dim(dim)
    ks = tuple(ks)
    if len(ks) != dim.n_angles:
        raise ValueError(
            f"term_integral takes {dim.n_angles} orders for D={dim.D}, got {len(ks)}"
        )
    for k in ks:
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise ValueError(f"term orders must be non-negative integers, got {k!r}")
    q = Fraction(2)
    for k in ks:
        q *= math.factorial(k)
    out = PiRational(q, dim.D + 1)
    return out / gamma_half(Fraction(dim.D + 1 + 2 * sum(ks), 2))
