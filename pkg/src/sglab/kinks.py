"""Closed-form traveling-wave solutions of the damped hyperbolic equation

    U_xx - U_tt - alpha U_t = sin U + gamma

in the traveling coordinate xi = (x - t)/alpha.  Three families:

    Basic   U = 2 arctan e^xi                       (gamma = 0)
    Gamma0  U = 4 arctan(y + sqrt(y^2+1)),  y = r0 e^{-xi}          (gamma = 0)
    Gamma1  same outer form with y = (2 + r0 - xi)/(r0 - xi)        (gamma = 1)

The Gamma families come from profiles f with sinh f = y solving the
first-order balance f' = -tanh f + (gamma/2) cosh f; the Basic kink solves
the equation outright (its residual certificate is in the test suite).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import diffops
from .errors import DenominatorZero, DomainError, PoleError
from .params import ModelParams

_POLE_TOL = 1e-8
_EXP_CLIP = 700.0


class Family(enum.Enum):
    BASIC = "basic"
    GAMMA0 = "gamma0"
    GAMMA1 = "gamma1"


@dataclass(frozen=True)
class KinkFamily:
    """A traveling-wave family instance: family tag, damping, integration constant."""

    family: Family
    alpha: float
    r0: float = 0.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"alpha={self.alpha} must be > 0 (xi = (x-t)/alpha)")

    @property
    def gamma_bias(self) -> float:
        return 1.0 if self.family is Family.GAMMA1 else 0.0


@dataclass(frozen=True)
class NeumannData:
    """Initial data h0, h1 on [0, ell] and flux data phi0, phi1 on [0, T]."""

    h0: object
    h1: object
    phi0: object
    phi1: object


def pi_transform(f):
    """2 arctan(e^f), mapped into (0, pi); overflow-safe for any float."""
    f = np.asarray(f, dtype=float)
    out = 2.0 * np.arctan(np.exp(np.minimum(f, _EXP_CLIP)))
    return out if out.ndim else float(out)


def traveling_coordinate(kf: KinkFamily, x, t):
    return (np.asarray(x, dtype=float) - np.asarray(t, dtype=float)) / kf.alpha


def _profile_y(kf: KinkFamily, xi):
    xi = np.asarray(xi, dtype=float)
    if kf.family is Family.GAMMA0:
        with np.errstate(over="ignore"):
            return kf.r0 * np.exp(np.minimum(-xi, _EXP_CLIP))
    if kf.family is Family.GAMMA1:
        s = kf.r0 - xi
        if np.any(np.abs(s) < _POLE_TOL):
            raise PoleError(f"xi within {_POLE_TOL} of the pole at r0={kf.r0}")
        return (2.0 + s) / s
    raise DomainError(f"family {kf.family} has no sinh profile")


def kink_value(kf: KinkFamily, x, t):
    """Phase U(x, t) of the family; always inside (0, 2 pi)."""
    xi = traveling_coordinate(kf, x, t)
    if kf.family is Family.BASIC:
        return pi_transform(xi)
    y = _profile_y(kf, xi)
    out = 2.0 * pi_transform(np.arcsinh(y))
    return out if np.ndim(out) else float(out)


def _du_dxi(kf: KinkFamily, xi):
    """Exact dU/dxi for each family."""
    xi = np.asarray(xi, dtype=float)
    if kf.family is Family.BASIC:
        return 1.0 / np.cosh(xi)
    y = _profile_y(kf, xi)
    if kf.family is Family.GAMMA0:
        return -2.0 * y / (1.0 + y * y)
    s = kf.r0 - xi
    return (4.0 / (s * s)) / (1.0 + y * y)


def kink_u_x(kf: KinkFamily, x, t):
    return _du_dxi(kf, traveling_coordinate(kf, x, t)) / kf.alpha


def kink_u_t(kf: KinkFamily, x, t):
    return -kink_u_x(kf, x, t)


def residual(u, params: ModelParams, xs, ts, h_fd: float = 1e-3):
    """Pointwise defect U_xx - U_tt - alpha U_t - sin U - gamma for a callable u.

    Derivatives are 4th-order central differences with step h_fd, evaluated
    on the tensor grid xs x ts; u must be evaluable with stencil margin.
    """
    X, T = np.meshgrid(np.asarray(xs, float), np.asarray(ts, float), indexing="ij")
    u_xx = diffops.d2(lambda y: u(y, T), X, h_fd)
    u_tt = diffops.d2(lambda s: u(X, s), T, h_fd)
    u_t = diffops.d1(lambda s: u(X, s), T, h_fd)
    return u_xx - u_tt - params.alpha * u_t - np.sin(u(X, T)) - params.gamma_bias


def reduction_rhs(f, gamma_bias: float):
    """Right-hand side -tanh f + (gamma/2) cosh f of the profile equation."""
    f = np.asarray(f, dtype=float)
    out = -np.tanh(f) + 0.5 * gamma_bias * np.cosh(f)
    return out if out.ndim else float(out)


def ode_rhs_check(kf: KinkFamily, xi) -> float:
    """Residual df/dxi - (-tanh f + (gamma/2) cosh f) of the family profile.

    Raises DenominatorZero at equilibria of the reduction, where the
    separated form df/rhs = dxi is meaningless.
    """
    xi = float(xi)
    y = float(_profile_y(kf, xi))
    f = math.asinh(y)
    if kf.family is Family.GAMMA0:
        dy = -y
    else:
        s = kf.r0 - xi
        dy = 2.0 / (s * s)
    df_dxi = dy / math.sqrt(1.0 + y * y)
    rhs = float(reduction_rhs(f, kf.gamma_bias))
    if abs(rhs) < 1e-14:
        raise DenominatorZero(f"profile equilibrium at xi={xi} (rhs={rhs})")
    return df_dxi - rhs


def u_xxt_basic(alpha: float, x, t):
    """Mixed third derivative of the basic kink.

    Equal to -(2/alpha^3)(e^{2 xi} - 6 + e^{-2 xi})/(e^xi + e^{-xi})^3 with
    xi = (x - t)/alpha, evaluated in the underflow-safe sech form
    -(sech xi - 2 sech^3 xi)/alpha^3.
    """
    xi = (np.asarray(x, dtype=float) - np.asarray(t, dtype=float)) / alpha
    with np.errstate(over="ignore"):
        sech = 1.0 / np.cosh(xi)
    out = -(sech - 2.0 * sech**3) / alpha**3
    return out if out.ndim else float(out)


def boundedness_certificate(alpha: float) -> float:
    """sup over xi of |U_xxt| for the basic kink, by scan plus local refinement.

    A finite value certifies the bounded-derivative hypothesis of the
    remainder estimate for this family.
    """
    if not alpha > 0:
        raise DomainError(f"alpha={alpha} must be > 0")
    xi = np.linspace(-40.0, 40.0, 4001)
    vals = np.abs(u_xxt_basic(alpha, alpha * xi, 0.0))
    i = int(np.argmax(vals))
    lo = xi[max(i - 1, 0)]
    hi = xi[min(i + 1, xi.size - 1)]
    res = minimize_scalar(
        lambda z: -abs(u_xxt_basic(alpha, alpha * z, 0.0)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return max(float(-res.fun), float(vals[i]))


def neumann_data_from(kf: KinkFamily, params: ModelParams) -> NeumannData:
    """Initial and flux data generated by the family's exact derivatives.

    The family must match the forcing: Basic and Gamma0 require
    gamma_bias = 0, Gamma1 requires gamma_bias = 1.
    """
    if kf.gamma_bias != params.gamma_bias:
        raise DomainError(
            f"family {kf.family.value} requires gamma_bias={kf.gamma_bias}, "
            f"got {params.gamma_bias}"
        )
    ell = params.ell

    def h0(x):
        return kink_value(kf, x, 0.0)

    def h1(x):
        return kink_u_t(kf, x, 0.0)

    def phi0(t):
        return kink_u_x(kf, 0.0, t)

    def phi1(t):
        return kink_u_x(kf, ell, t)

    return NeumannData(h0=h0, h1=h1, phi0=phi0, phi1=phi1)
