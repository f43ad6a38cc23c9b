"""Weighted operator means and the Tsallis relative operator entropy.

The central object is

    A natural_p B = A^{1/2} (A^{-1/2} B A^{-1/2})^p A^{1/2}

for SPD A and positive B and any real p (written #_p when restricted
to p in [0, 1], where it is the operator-monotone weighted geometric
mean).  The Tsallis relative operator entropy is its normalized chord,

    T_p(A|B) = (A natural_p B - A) / p,   p != 0,

which converges to the relative operator entropy as p -> 0.

Every mean evaluation decomposes W = A^{-1/2} B A^{-1/2} once and
reports the extreme eigenvalues of W alongside the result, because the
inequality checks need exactly those numbers (the sandwich constants)
and should not repeat the work.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import linalg
from .errors import DimensionMismatch, NotPositiveDefinite, ZeroParameter


class MeanResult(NamedTuple):
    """A natural_p B together with the spectrum edge of A^{-1/2} B A^{-1/2}."""

    value: np.ndarray
    p: float
    inner_spectrum: tuple[float, float]


class SandwichBounds(NamedTuple):
    """Canonical constants for the hypothesis m <= 1 <= W <= M.

    lam_min and lam_max are the extreme eigenvalues of
    W = A^{-1/2} B A^{-1/2}; m and M clip them into the admissible
    pattern (m <= 1 <= M).  hypothesis_ok records whether the
    unclipped spectrum already satisfies 1 <= lam_min, i.e. A <= B.
    """

    m: float
    M: float
    lam_min: float
    lam_max: float
    hypothesis_ok: bool


def _inner_operator(a, b) -> np.ndarray:
    am = linalg.as_square(a)
    bm = linalg.require_symmetric(b, "second operand")
    if am.shape != bm.shape:
        raise DimensionMismatch(
            f"operands must share a dimension, got {am.shape} and {bm.shape}"
        )
    _, inv_half = linalg.sqrt_factors(am)
    return linalg.symmetrize(inv_half @ bm @ inv_half)


def weighted_mean(a, b, p: float) -> MeanResult:
    """A natural_p B by functional calculus on W = A^{-1/2} B A^{-1/2}.

    A must be SPD.  B must be positive semidefinite for p >= 0 and
    strictly positive definite for p < 0 (otherwise W^p blows up).
    """
    p = float(p)
    am = linalg.as_square(a)
    w = _inner_operator(am, b)
    dec = linalg.spectral_decompose(w)
    lam = dec.eigenvalues
    floor = 1e-10 * max(1.0, float(np.abs(lam).max()))
    if p < 0.0 and lam[0] <= floor:
        raise NotPositiveDefinite(
            f"negative weight {p} needs B positive definite relative to A, "
            f"inner spectrum reaches {lam[0]:.3e}"
        )
    half, _ = linalg.sqrt_factors(am)
    wp = linalg.power(w, p)
    value = linalg.symmetrize(half @ wp @ half)
    return MeanResult(value=value, p=p, inner_spectrum=(float(lam[0]), float(lam[-1])))


def tsallis_entropy(a, b, p: float) -> np.ndarray:
    """T_p(A|B) = (A natural_p B - A) / p for p != 0.

    p = 1 short-circuits to B - A, which is the exact value there.
    """
    p = float(p)
    if p == 0.0:
        raise ZeroParameter("tsallis_entropy requires p != 0")
    am = linalg.as_square(a)
    if p == 1.0:
        return linalg.require_symmetric(b, "second operand") - am
    mean = weighted_mean(am, b, p)
    return (mean.value - am) / p


def tsallis_from_mean(a: np.ndarray, mean: MeanResult) -> np.ndarray:
    """T_p(A|B) reusing an already computed mean (checks call this)."""
    if mean.p == 0.0:
        raise ZeroParameter("tsallis entropy requires p != 0")
    if mean.p == 1.0:
        # value is B up to rounding; the difference is what matters
        return mean.value - a
    return (mean.value - a) / mean.p


def compute_sandwich(a, b) -> SandwichBounds:
    """Extreme eigenvalues of A^{-1/2} B A^{-1/2} and clipped (m, M).

    The returned m = min(lam_min, 1) and M = max(lam_max, 1) always
    satisfy the pattern 0 < m <= 1 <= M required by the additive
    bounds; hypothesis_ok is True exactly when lam_min >= 1 - 1e-12,
    i.e. the order hypothesis A <= B holds on the nose.
    """
    w = _inner_operator(a, b)
    lam = linalg.eigvals_sym(w)
    lam_min = float(lam[0])
    lam_max = float(lam[-1])
    if lam_min <= 0.0:
        raise NotPositiveDefinite(
            f"sandwich constants need B positive definite relative to A, "
            f"inner spectrum reaches {lam_min:.3e}"
        )
    return SandwichBounds(
        m=min(lam_min, 1.0),
        M=max(lam_max, 1.0),
        lam_min=lam_min,
        lam_max=lam_max,
        hypothesis_ok=lam_min >= 1.0 - 1e-12,
    )
