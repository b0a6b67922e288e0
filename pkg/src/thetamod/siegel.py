"""Points of the Siegel upper half space H_g."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

DEFAULT_SYM_TOL = 1e-12

# keeps the cached eigenvalue bound on the safe side of rounding in inv(Im tau)
_LB_SLACK = 1.0 - 1e-9


class SiegelError(ValueError):
    pass


class NotSymmetric(SiegelError):
    pass


class NotPositiveDefinite(SiegelError):
    pass


@dataclass(frozen=True, eq=False)
class SiegelMatrix:
    """Complex symmetric matrix with positive definite imaginary part.

    Build with :func:`validate_siegel`; the entries array is read-only.
    """

    entries: np.ndarray
    im_min_eig_lb: float
    _chol: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def imag(self) -> np.ndarray:
        return self.entries.imag

    @property
    def real(self) -> np.ndarray:
        return self.entries.real

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SiegelMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __mul__(self, m: int) -> SiegelMatrix:
        return scale(self, m)

    __rmul__ = __mul__

    def to_json(self) -> dict[str, Any]:
        return {"g": self.dim, "re": self.real.tolist(), "im": self.imag.tolist()}


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _bound_from_cholesky(chol: np.ndarray) -> float:
    # lambda_min(Y) >= 1 / ||Y^-1||_1,  Y^-1 = L^-T L^-1
    g = chol.shape[0]
    linv = np.linalg.solve(chol, np.eye(g))
    yinv = linv.T @ linv
    return _LB_SLACK / float(np.abs(yinv).sum(axis=0).max())


def validate_siegel(raw: Any, sym_tol: float = DEFAULT_SYM_TOL) -> SiegelMatrix:
    """Check that ``raw`` lies in H_g and return it symmetrized."""
    a = np.atleast_2d(np.asarray(raw, dtype=complex))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SiegelError(f"tau must be a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise SiegelError("tau has non-finite entries")
    asym = float(np.abs(a - a.T).max())
    if asym > sym_tol:
        raise NotSymmetric(f"tau is not symmetric: max |tau - tau^T| = {asym:.3g} > {sym_tol:.3g}")
    sym = (a + a.T) / 2
    try:
        chol = np.linalg.cholesky(sym.imag)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("Im(tau) is not positive definite") from exc
    if not np.all(np.diag(chol) > 0):
        raise NotPositiveDefinite("Im(tau) is not positive definite")
    return SiegelMatrix(_frozen(sym), _bound_from_cholesky(chol), chol)


def min_eig_lower_bound(tau: SiegelMatrix) -> float:
    """A rigorous positive lower bound on the smallest eigenvalue of Im(tau)."""
    return tau.im_min_eig_lb


def scale(tau: SiegelMatrix, m: int) -> SiegelMatrix:
    """The matrix ``m * tau`` for a positive integer ``m``."""
    if int(m) != m or m < 1:
        raise ValueError(f"scale factor must be a positive integer, got {m!r}")
    m = int(m)
    if m == 1:
        return tau
    return SiegelMatrix(_frozen(tau.entries * m), tau.im_min_eig_lb * m, tau._chol * np.sqrt(m))


def siegel_from_json(obj: dict[str, Any] | str, sym_tol: float = DEFAULT_SYM_TOL) -> SiegelMatrix:
    """Parse ``{"g": n, "re": [[...]], "im": [[...]]}`` (dict or JSON text)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        g = int(obj["g"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise SiegelError(f"bad matrix JSON: {exc}") from exc
    if re.shape != (g, g) or im.shape != (g, g):
        raise SiegelError(f"matrix JSON declares g={g} but has shapes {re.shape} and {im.shape}")
    return validate_siegel(re + 1j * im, sym_tol)
