"""Bargmann-style transform between the line and the quasi-periodic space.

The line space is L^2 on [0, sqrt(2)] spanned by the character modes

    phi_n(q) = 2^(-1/4) * exp(sqrt(2)*i*pi*(n+alpha)*q),  n in Z,

which extend to R with phi_n(q + sqrt(2)) = exp(2*i*pi*alpha) phi_n(q).
The transform B maps phi_n to the orthonormal mode psi_n of the
quasi-periodic space.  It is realized by integrating against the kernel

    A(z; q) = (nu/pi)^(3/4) * exp((nu/2) z^2 - nu xi^2)
              * theta3(alpha + (i nu/pi) xi | i nu/pi),   xi = q/sqrt(2) - z,

the character periodization of the classical Gaussian Bargmann kernel.
The same kernel has the bilateral generating expansion

    G(z; q) = sum over n of psi_n(z) * conj(phi_n(q))
            = (nu/pi)^(1/4) * exp((nu/2) z^2)
              * theta_{alpha,0}(z - q/sqrt(2) | i pi/nu),

and the pointwise identity A == G is equivalent to the theta3 inversion
law.  The inverse transform pairs a member f against G:

    (B^-1 f)(q) = <f, G(., q)>  (strip inner product).
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_BUDGET, DomainError, TruncationError, bilateral_sum
from .fock import FockElement, SpaceParams, basis_psi
from .quadrature import SQRT2, StripScheme, _evaluate_on, _trapezoid_weights, strip_inner_product
from .theta import ThetaArgs, jacobi_theta3, riemann_theta


def phi_basis(n, q, alpha):
    """Line mode phi_n(q) = 2^(-1/4) exp(sqrt(2) i pi (n+alpha) q)."""
    qq = np.asarray(q, dtype=complex)
    vals = 2.0 ** (-0.25) * np.exp(SQRT2 * 1j * math.pi * (n + alpha) * qq)
    return complex(vals) if qq.ndim == 0 else vals


@dataclass(frozen=True)
class LineElement:
    """Finite combination sum b_n phi_n in the line space."""

    alpha: float
    coeffs: tuple

    def __init__(self, alpha, coeffs):
        if not math.isfinite(alpha):
            raise DomainError(f"alpha must be finite, got {alpha}")
        object.__setattr__(self, "alpha", float(alpha))
        cleaned = tuple(sorted((int(n), complex(b)) for n, b in dict(coeffs).items()))
        object.__setattr__(self, "coeffs", cleaned)

    def coeff_dict(self):
        return dict(self.coeffs)

    def evaluate(self, q):
        qq = np.asarray(q, dtype=complex)
        total = np.zeros(qq.shape, dtype=complex)
        for n, b in self.coeffs:
            total = total + b * phi_basis(n, qq, self.alpha)
        return complex(total) if qq.ndim == 0 else total

    __call__ = evaluate

    def norm(self):
        return math.sqrt(math.fsum(abs(b) ** 2 for _, b in self.coeffs))

    def to_dict(self):
        return {"alpha": self.alpha, "coeffs": [{"n": n, "re": b.real, "im": b.imag} for n, b in self.coeffs]}

    @classmethod
    def from_dict(cls, data):
        try:
            alpha = float(data["alpha"])
            coeffs = {int(c["n"]): complex(float(c["re"]), float(c["im"])) for c in data["coeffs"]}
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed element record: {exc}") from exc
        return cls(alpha, coeffs)

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def bargmann_kernel_A(z, q, params, budget=DEFAULT_BUDGET):
    """Periodized Gaussian kernel A(z; q); broadcasts over z and q."""
    zz = np.asarray(z, dtype=complex)
    qq = np.asarray(q, dtype=complex)
    xi = qq / SQRT2 - zz
    tau = 1j * params.nu / math.pi
    pref = (params.nu / math.pi) ** 0.75 * np.exp(0.5 * params.nu * zz * zz - params.nu * xi * xi)
    vals = pref * jacobi_theta3(params.alpha + tau * xi, tau, budget)
    return complex(vals) if np.ndim(vals) == 0 else vals


def generating_kernel_G(z, q, params, budget=DEFAULT_BUDGET):
    """Bilateral generating kernel G(z; q) in theta closed form."""
    zz = np.asarray(z, dtype=complex)
    qq = np.asarray(q, dtype=complex)
    targs = ThetaArgs(params.alpha, 0.0, 1j * math.pi / params.nu)
    vals = (params.nu / math.pi) ** 0.25 * np.exp(0.5 * params.nu * zz * zz) * riemann_theta(
        targs, zz - qq / SQRT2, budget
    )
    return complex(vals) if np.ndim(vals) == 0 else vals


def generating_kernel_sum(z, q, params, budget=DEFAULT_BUDGET):
    """G(z; q) by direct bilateral summation of psi_n(z) conj(phi_n(q))."""
    zz = np.asarray(z, dtype=complex)
    qq = np.asarray(q, dtype=complex)
    center = -params.alpha - params.nu * float(np.mean(zz.imag)) / math.pi

    def term(n):
        return basis_psi(n, zz, params) * np.conj(phi_basis(n, qq, params.alpha))

    vals = bilateral_sum(term, round(center), budget)
    return complex(vals) if np.ndim(vals) == 0 else vals


def bargmann_transform_coeffs(elem, nu):
    """Coefficient-level transform: sum b_n phi_n maps to sum b_n psi_n."""
    params = SpaceParams(nu, elem.alpha)
    return FockElement.from_psi_coeffs(params, elem.coeff_dict())


def bargmann_pointwise(phi, z, params, budget=DEFAULT_BUDGET, start_intervals=256, max_intervals=4096):
    """Transform value (B phi)(z) = integral of A(z; q) phi(q) over [0, sqrt(2)].

    Trapezoid rule with interval doubling until two successive refinements
    agree within budget.tol; the integrand is sqrt(2)-periodic so the rule
    converges spectrally.  Raises TruncationError if max_intervals is
    reached without agreement.
    """
    zz = complex(z)

    def quad(n_intervals):
        qs = np.linspace(0.0, SQRT2, n_intervals + 1)
        w = _trapezoid_weights(n_intervals + 1, SQRT2)
        phiv = _evaluate_on(phi, qs, "phi")
        kern = bargmann_kernel_A(zz, qs, params, budget)
        return complex(np.sum(kern * phiv * w))

    n = int(start_intervals)
    prev = quad(n)
    while n < max_intervals:
        n *= 2
        cur = quad(n)
        if abs(cur - prev) <= budget.tol:
            return cur
        prev = cur
    raise TruncationError(
        f"line integral did not stabilize within {max_intervals} intervals (budget tol {budget.tol:.1e})"
    )


def bargmann_inverse(elem, q, budget=DEFAULT_BUDGET, scheme=None):
    """Inverse transform of a finite member: (B^-1 f)(q) = <f, G(., q)>.

    The strip scheme defaults to one recentered on the element's dominant
    mode so the Gaussian bumps of the pairing sit under the rule.
    """
    params = elem.params
    if scheme is None:
        scheme = StripScheme.centered(params.nu, params.alpha, elem.dominant_index())
    qq = np.asarray(q, dtype=float)

    def value(qval):
        return strip_inner_product(
            elem.evaluate, lambda w: generating_kernel_G(w, qval, params, budget), params.nu, scheme
        )

    if qq.ndim == 0:
        return value(float(qq))
    return np.array([value(float(qv)) for qv in qq.ravel()]).reshape(qq.shape)
