"""Scalar building blocks shared by every module in the package.

Hermite polynomials in the physicists' convention, the Gaussian integral
with a complex linear term,

    integral over R of exp(-a*y**2 + b*y) dy = sqrt(pi/a) * exp(b**2 / (4a)),

the unit circle character m -> exp(2*pi*i*alpha*m), and the Hermitian
pairing z * conj(w).  Also the bilateral series driver used by the theta
sums, the reproducing kernel and the membership norms: terms are added
symmetrically outward from a center index until the one-sided tails are
certifiably below the requested tolerance.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class TruncationError(ArithmeticError):
    """A series or refinement loop hit its budget before converging."""


class EvaluationError(ArithmeticError):
    """A user-supplied callable produced a non-finite value at a node."""


@dataclass(frozen=True)
class TruncationBudget:
    """Stopping policy for bilateral series: absolute tail tolerance and a
    hard cap on the number of one-sided terms."""

    tol: float = 1e-12
    max_terms: int = 10000

    def __post_init__(self):
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise DomainError(f"budget tol must be positive and finite, got {self.tol}")
        if self.max_terms < 1:
            raise DomainError(f"budget max_terms must be >= 1, got {self.max_terms}")


DEFAULT_BUDGET = TruncationBudget()


def hermite_poly(m, x):
    """Physicists' Hermite polynomial H_m(x) by upward recurrence.

    H_0 = 1, H_1 = 2x, H_{m+1} = 2x H_m - 2m H_{m-1}.  Accepts scalar or
    ndarray x.  Raises OverflowError if the recurrence leaves the double
    range (large m with large x).
    """
    if m < 0 or m != int(m):
        raise DomainError(f"Hermite degree must be a nonnegative integer, got {m}")
    m = int(m)
    xs = np.asarray(x, dtype=float)
    h_prev = np.ones_like(xs)
    # Overflow is detected below and raised; silence the interim warnings.
    with np.errstate(over="ignore", invalid="ignore"):
        if m == 0:
            out = h_prev
        else:
            h = 2.0 * xs
            for k in range(1, m):
                h, h_prev = 2.0 * xs * h - 2.0 * k * h_prev, h
            out = h
    if not np.all(np.isfinite(out)):
        raise OverflowError(f"Hermite recurrence overflowed at degree {m}")
    return float(out) if np.isscalar(x) or np.ndim(x) == 0 else out


def gaussian_integral(a, b):
    """Closed form of integral exp(-a*y^2 + b*y) dy over the real line.

    Requires a > 0 real; b may be complex.  Equals sqrt(pi/a) * exp(b^2/(4a)).
    """
    if not (np.isreal(a) and float(np.real(a)) > 0.0):
        raise DomainError(f"Gaussian decay rate must be real and positive, got {a}")
    a = float(np.real(a))
    return cmath.sqrt(math.pi / a) * cmath.exp(complex(b) ** 2 / (4.0 * a))


def character(alpha, m):
    """Unit circle character chi_alpha(m) = exp(2*pi*i*alpha*m) for integer m.

    The phase alpha*m is reduced mod 1 exactly (alpha is a dyadic rational
    in double precision, so Fraction arithmetic is lossless) before
    exponentiating; chi(m1 + m2) = chi(m1) * chi(m2) then holds to roundoff
    for arbitrarily large |m|.
    """
    if m != int(m):
        raise DomainError(f"character argument must be an integer, got {m}")
    if not math.isfinite(alpha):
        raise DomainError(f"character exponent must be finite, got {alpha}")
    frac = float((Fraction(float(alpha)) * int(m)) % 1)
    return cmath.exp(2j * math.pi * frac)


def hermitian_pairing(z, w):
    """Pointwise Hermitian pairing z * conj(w)."""
    return complex(z) * complex(w).conjugate()


def bilateral_sum(term, center, budget=DEFAULT_BUDGET):
    """Sum term(n) over all integers n, expanding symmetrically from center.

    term(n) may return a complex scalar or an ndarray (magnitudes are then
    measured by the max over entries).  A side stops once its last two terms
    are below 0.1 * budget.tol and the ratio of successive magnitudes is
    below 1/2, which bounds the remaining geometric tail by budget.tol.
    Raises TruncationError if budget.max_terms one-sided terms do not reach
    that certificate.
    """
    center = int(center)
    safety = 0.1 * budget.tol
    done = {+1: False, -1: False}
    prev = {+1: math.inf, -1: math.inf}
    # Overflow in a term shows up as inf/nan in the running total, which
    # callers detect and convert to OverflowError; suppress the interim
    # numpy warnings so the raised error is the single signal.
    with np.errstate(over="ignore", invalid="ignore"):
        total = np.array(term(center), dtype=complex)
        for k in range(1, budget.max_terms + 1):
            for sign in (+1, -1):
                if done[sign]:
                    continue
                t = np.asarray(term(center + sign * k), dtype=complex)
                total = total + t
                mag = float(np.max(np.abs(t)))
                if mag <= safety and prev[sign] <= safety and (mag < 0.5 * prev[sign] or mag == 0.0):
                    done[sign] = True
                prev[sign] = mag
            if done[+1] and done[-1]:
                return total
    last = max(prev[+1], prev[-1])
    raise TruncationError(
        f"bilateral series not certified after {budget.max_terms} one-sided terms;"
        f" last term magnitude {last:.3e} vs tol {budget.tol:.3e}"
    )
