"""Exception types shared across the laboratory."""


class SgLabError(Exception):
    """Base class for all laboratory errors."""


class DomainError(SgLabError):
    """A parameter violates its admissibility range."""


class PreconditionViolation(SgLabError):
    """An operation was called outside its stated precondition."""


class TailNotConverged(SgLabError):
    """Series truncation hit the mode cap with the tail bound above tolerance."""

    def __init__(self, n_modes, bound, tol):
        self.n_modes = n_modes
        self.bound = bound
        self.tol = tol
        super().__init__(
            f"tail bound {bound:.3e} still above tol {tol:.3e} after {n_modes} modes"
        )


class CflViolation(SgLabError):
    """Time step too large for the grid (dt <= dx required)."""


class DivergenceError(SgLabError):
    """A solver produced a non-finite or absurdly large value."""

    def __init__(self, x, t, value):
        self.x = x
        self.t = t
        self.value = value
        super().__init__(f"field diverged at (x={x:.6g}, t={t:.6g}): {value!r}")


class LinearSolveError(SgLabError):
    """The per-step tridiagonal system could not be solved."""


class GridMismatch(SgLabError):
    """Two fields do not share a grid."""


class NoConvergence(SgLabError):
    """Fixed-point iteration exhausted its iteration budget."""

    def __init__(self, max_iter, last_delta):
        self.max_iter = max_iter
        self.last_delta = last_delta
        super().__init__(
            f"no contraction after {max_iter} iterations (last delta {last_delta:.3e})"
        )


class PoleError(SgLabError):
    """A closed-form solution was evaluated at (or too close to) its pole."""


class DenominatorZero(SgLabError):
    """The traveling-wave reduction was evaluated at an equilibrium."""


class DegenerateFit(SgLabError):
    """Regression attempted on fewer than 3 points or zero spread."""


class GridNotConverged(SgLabError):
    """Grid refinement budget exhausted before the stabilization target."""
