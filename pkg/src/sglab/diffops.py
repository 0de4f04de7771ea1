"""Finite-difference stencils used as derivative oracles for closed forms.

Kept independent of any closed-form module so the residual checks certify
formulas rather than restating them.
"""
from __future__ import annotations

import numpy as np


def d1(f, x, h):
    """4th-order central first derivative of a callable at x."""
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def d2(f, x, h):
    """4th-order central second derivative of a callable at x."""
    return (
        -f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)
    ) / (12 * h * h)


def mixed_xxt(u, x, t, h):
    """4th-order d/dt of d^2/dx^2 for a callable u(x, t)."""
    return d1(lambda s: d2(lambda y: u(y, s), x, h), t, h)


def richardson(values_h, values_h2, order=4):
    """Richardson error estimate for a stencil of the given order.

    values_h and values_h2 are the same quantity computed with steps h and
    h/2; the return value estimates the error of values_h2.
    """
    return np.max(np.abs(values_h2 - values_h)) / (2**order - 1)
