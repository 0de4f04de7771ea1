"""Model parameters and series-truncation policy."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class ModelParams:
    """Parameters of the Neumann problem on [0, ell] x [0, horizon].

    ell         junction length (> 0)
    alpha       dissipation coefficient (> 0)
    eps         diffusion coefficient of the u_xxt term (>= 0)
    gamma_bias  constant forcing
    horizon     final time (> 0)

    Solvers accept any alpha > 0 and eps >= 0.  All estimate-verification
    operations additionally require the standing hypothesis
    0 < alpha < 1 and 0 < eps < 1; see `require_estimate_hypothesis`.
    """

    ell: float
    alpha: float
    eps: float
    gamma_bias: float = 0.0
    horizon: float = 1.0

    def __post_init__(self):
        if not self.ell > 0:
            raise DomainError(f"ell={self.ell} must be > 0")
        if not self.horizon > 0:
            raise DomainError(f"horizon={self.horizon} must be > 0")
        if not self.alpha > 0:
            raise DomainError(f"alpha={self.alpha} must be > 0")
        if not self.eps >= 0:
            raise DomainError(f"eps={self.eps} must be >= 0")

    def require_estimate_hypothesis(self):
        """Enforce 0 < alpha < 1 and 0 < eps < 1 (standing hypothesis)."""
        if not 0 < self.alpha < 1:
            raise DomainError(
                f"alpha={self.alpha} violates the standing hypothesis 0 < alpha < 1"
            )
        if not 0 < self.eps < 1:
            raise DomainError(
                f"eps={self.eps} violates the standing hypothesis 0 < eps < 1"
            )

    def with_eps(self, eps: float) -> "ModelParams":
        return replace(self, eps=eps)


@dataclass(frozen=True)
class TruncationPolicy:
    """Series cutoff: hard cap on summed modes plus a tail-bound tolerance."""

    max_modes: int = 2_000_000
    tail_tol: float = 1e-8

    def __post_init__(self):
        if self.max_modes < 1:
            raise DomainError(f"max_modes={self.max_modes} must be >= 1")
        if not self.tail_tol > 0:
            raise DomainError(f"tail_tol={self.tail_tol} must be > 0")
