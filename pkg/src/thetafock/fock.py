"""The Gaussian-weighted space of quasi-periodic entire functions.

For nu > 0 and a real character exponent alpha, the space consists of the
entire functions satisfying

    f(z + m) = exp(2*i*pi*alpha*m) * exp(nu*(z + m/2)*m) * f(z),  m in Z,

that are square integrable against exp(-nu*|z|^2) on the strip
S = [0,1] x R.  An orthogonal basis is

    e_n(z) = exp((nu/2)*z^2 + 2*i*pi*(alpha+n)*z),  n in Z,

with closed-form norms

    ||e_n||^2 = sqrt(pi/(2*nu)) * exp((2*pi^2/nu) * (n+alpha)^2),

and psi_n = e_n / ||e_n|| is an orthonormal basis.  The reproducing kernel
has both a basis expansion and a theta closed form:

    K(z, w) = sum over n of psi_n(z) * conj(psi_n(w))
            = sqrt(2*nu/pi) * exp((nu/2)*(z^2 + conj(w)^2))
              * theta_{alpha,0}(z - conj(w) | 2*i*pi/nu),

and |f(z)| <= ||f|| * K(z,z)^(1/2) for every member f.

A theta series with matching character embeds into the space through
f(z) = exp((nu/2)*z^2) * theta_{alpha,beta}(z | tau), which is a member
exactly when Im tau > pi/nu, with

    ||f||^2 = sqrt(pi/(2*nu))
              * sum over n of exp(-2*pi*(n+alpha)^2 * (Im tau - pi/nu)).

All exponentials are assembled inside a single exp call so that large
normalization exponents cancel before they can overflow.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_BUDGET, DomainError, bilateral_sum, character
from .theta import ThetaArgs, riemann_theta


@dataclass(frozen=True)
class SpaceParams:
    """Gaussian weight rate nu > 0 and character exponent alpha."""

    nu: float
    alpha: float

    def __post_init__(self):
        if not (self.nu > 0.0 and math.isfinite(self.nu)):
            raise DomainError(f"nu must be positive and finite, got {self.nu}")
        if not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be finite, got {self.alpha}")


def basis_e(n, z, params):
    """Quasi-periodic Gaussian mode e_n(z) = exp((nu/2) z^2 + 2 i pi (alpha+n) z)."""
    zz = np.asarray(z, dtype=complex)
    vals = np.exp(0.5 * params.nu * zz * zz + 2j * math.pi * (params.alpha + n) * zz)
    if not np.all(np.isfinite(vals)):
        raise OverflowError(f"e_{n} overflowed the double range")
    return complex(vals) if zz.ndim == 0 else vals


def e_norm(n, params):
    """Closed-form norm ||e_n|| = (pi/(2 nu))^(1/4) exp((pi^2/nu)(n+alpha)^2)."""
    c = n + params.alpha
    return (math.pi / (2.0 * params.nu)) ** 0.25 * math.exp((math.pi**2 / params.nu) * c * c)


def basis_psi(n, z, params):
    """Orthonormal mode psi_n = e_n / ||e_n||, assembled in a single exponential."""
    zz = np.asarray(z, dtype=complex)
    c = params.alpha + n
    expo = 0.5 * params.nu * zz * zz + 2j * math.pi * c * zz - (math.pi**2 / params.nu) * c * c
    vals = (2.0 * params.nu / math.pi) ** 0.25 * np.exp(expo)
    if not np.all(np.isfinite(vals)):
        raise OverflowError(f"psi_{n} overflowed the double range")
    return complex(vals) if zz.ndim == 0 else vals


@dataclass(frozen=True)
class FockElement:
    """Finite linear combination sum a_n e_n in the quasi-periodic space.

    Coefficients are stored against the unnormalized modes e_n; use
    from_psi_coeffs / psi_coeffs for the orthonormal convention.
    """

    params: SpaceParams
    coeffs: tuple

    def __init__(self, params, coeffs):
        object.__setattr__(self, "params", params)
        cleaned = tuple(sorted((int(n), complex(a)) for n, a in dict(coeffs).items()))
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_psi_coeffs(cls, params, coeffs):
        """Build from coefficients against the orthonormal modes psi_n."""
        return cls(params, {n: complex(c) / e_norm(n, params) for n, c in dict(coeffs).items()})

    def coeff_dict(self):
        return dict(self.coeffs)

    def psi_coeffs(self):
        """Coefficients against psi_n: c_n = a_n * ||e_n||."""
        return {n: a * e_norm(n, self.params) for n, a in self.coeffs}

    def evaluate(self, z):
        zz = np.asarray(z, dtype=complex)
        total = np.zeros(zz.shape, dtype=complex)
        for n, a in self.coeffs:
            total = total + a * basis_e(n, zz, self.params)
        return complex(total) if zz.ndim == 0 else total

    __call__ = evaluate

    def norm(self):
        """Parseval norm sqrt(sum |a_n|^2 ||e_n||^2)."""
        return math.sqrt(math.fsum(abs(a) ** 2 * e_norm(n, self.params) ** 2 for n, a in self.coeffs))

    def dominant_index(self):
        """Mode index carrying the largest orthonormal coefficient."""
        if not self.coeffs:
            return 0
        return max(self.psi_coeffs().items(), key=lambda kv: (abs(kv[1]), -abs(kv[0])))[0]

    def scaled(self, c):
        return FockElement(self.params, {n: c * a for n, a in self.coeffs})

    def __mul__(self, c):
        return self.scaled(c)

    __rmul__ = __mul__

    def to_dict(self):
        return {
            "nu": self.params.nu,
            "alpha": self.params.alpha,
            "coeffs": [{"n": n, "re": a.real, "im": a.imag} for n, a in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            params = SpaceParams(float(data["nu"]), float(data["alpha"]))
            coeffs = {int(c["n"]): complex(float(c["re"]), float(c["im"])) for c in data["coeffs"]}
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed element record: {exc}") from exc
        return cls(params, coeffs)

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def quasiperiod_factor(z, m, params):
    """Automorphy factor chi_alpha(m) * exp(nu*(z + m/2)*m) of the lattice step m."""
    if m != int(m):
        raise DomainError(f"lattice step must be an integer, got {m}")
    m = int(m)
    zz = np.asarray(z, dtype=complex)
    vals = character(params.alpha, m) * np.exp(params.nu * (zz + m / 2.0) * m)
    return complex(vals) if zz.ndim == 0 else vals


def quasiperiod_residual(f, z, m, params):
    """Scaled defect |f(z+m) - factor * f(z)| / max(1, |f(z)|) of the
    quasi-periodicity law at a single point."""
    fz = complex(f(z))
    fzm = complex(f(z + int(m)))
    return abs(fzm - quasiperiod_factor(z, m, params) * fz) / max(1.0, abs(fz))


def periodic_part(f, z, params):
    """Strip the Gaussian and character factors: exp(-(nu/2) z^2 - 2 i pi alpha z) f(z).

    For a member of the space the result is 1-periodic in z.
    """
    zz = np.asarray(z, dtype=complex)
    vals = np.exp(-0.5 * params.nu * zz * zz - 2j * math.pi * params.alpha * zz) * np.asarray(f(zz), dtype=complex)
    return complex(vals) if zz.ndim == 0 else vals


def reproducing_kernel(z, w, params, budget=DEFAULT_BUDGET, path="theta"):
    """Reproducing kernel K(z, w), by the theta closed form or the mode sum.

    path="theta" evaluates sqrt(2 nu/pi) exp((nu/2)(z^2 + conj(w)^2))
    theta_{alpha,0}(z - conj(w) | 2 i pi/nu); path="sum" sums
    psi_n(z) conj(psi_n(w)) directly under the truncation budget.
    """
    nu, alpha = params.nu, params.alpha
    zz = np.asarray(z, dtype=complex)
    ww = np.asarray(w, dtype=complex)
    scalar = zz.ndim == 0 and ww.ndim == 0
    if path == "theta":
        targs = ThetaArgs(alpha, 0.0, 2j * math.pi / nu)
        vals = (
            math.sqrt(2.0 * nu / math.pi)
            * np.exp(0.5 * nu * (zz * zz + np.conj(ww) ** 2))
            * riemann_theta(targs, zz - np.conj(ww), budget)
        )
    elif path == "sum":
        center = -alpha - nu * float(np.mean(zz.imag) + np.mean(ww.imag)) / (2.0 * math.pi)

        def term(n):
            return basis_psi(n, zz, params) * np.conj(basis_psi(n, ww, params))

        vals = bilateral_sum(term, round(center), budget)
    else:
        raise DomainError(f"unknown kernel path {path!r}; expected 'theta' or 'sum'")
    vals = np.asarray(vals, dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise OverflowError("reproducing kernel overflowed the double range")
    return complex(vals) if scalar else vals


def pointwise_bound(z, params, budget=DEFAULT_BUDGET):
    """Growth envelope K(z,z)^(1/2): |f(z)| <= ||f|| * pointwise_bound(z)."""
    kzz = reproducing_kernel(z, z, params, budget)
    diag = np.maximum(np.real(np.asarray(kzz)), 0.0)
    vals = np.sqrt(diag)
    return float(vals) if np.ndim(kzz) == 0 else vals


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the theta membership test: the decision and, when the
    member exists, its space norm."""

    in_space: bool
    norm: float | None


def theta_member(targs, params, budget=DEFAULT_BUDGET):
    """Callable w -> exp((nu/2) w^2) * theta_{alpha,beta}(w | tau), the
    candidate member built from a theta series."""
    _check_character(targs, params)

    def f(w):
        ww = np.asarray(w, dtype=complex)
        vals = np.exp(0.5 * params.nu * ww * ww) * riemann_theta(targs, ww, budget)
        return complex(vals) if ww.ndim == 0 else vals

    return f


def theta_membership(targs, params, budget=DEFAULT_BUDGET):
    """Decide whether exp((nu/2) z^2) theta_{alpha,beta}(z | tau) lies in the
    space, and return its norm when it does.

    Membership holds exactly when Im tau > pi/nu (strict); the norm series
    sum exp(-2 pi (n+alpha)^2 (Im tau - pi/nu)) is summed under the budget.
    """
    _check_character(targs, params)
    gap = complex(targs.tau).imag - math.pi / params.nu
    if gap <= 0.0:
        return MembershipResult(False, None)

    def term(n):
        c = n + targs.alpha
        return math.exp(-2.0 * math.pi * c * c * gap)

    total = float(np.real(bilateral_sum(term, round(-targs.alpha), budget)))
    return MembershipResult(True, math.sqrt(math.sqrt(math.pi / (2.0 * params.nu)) * total))


def membership_log_partial_sums(targs, params, ns=(10, 20, 40)):
    """log of the symmetric partial sums of the membership norm series.

    Computed in log space so divergent cases (Im tau <= pi/nu) can still be
    certified: for those the sequence increases without bound.
    """
    _check_character(targs, params)
    gap = complex(targs.tau).imag - math.pi / params.nu
    center = round(-targs.alpha)
    out = []
    for nmax in ns:
        idx = np.arange(center - nmax, center + nmax + 1)
        logs = -2.0 * math.pi * (idx + targs.alpha) ** 2 * gap
        top = float(np.max(logs))
        out.append(top + math.log(float(np.sum(np.exp(logs - top)))))
    return out


def _check_character(targs, params):
    diff = targs.alpha - params.alpha
    if abs(diff - round(diff)) > 1e-12:
        raise DomainError(
            "theta characteristic alpha must match the space character mod 1;"
            f" got {targs.alpha} vs {params.alpha}"
        )
