"""Unital positive linear maps on real symmetric matrices.

Four concrete families cover everything the checks need:

  normalized_trace   X -> [Tr(X)/n]          (1x1 output)
  compression        X -> V^T X V             for an isometry V (V^T V = I)
  pinching           X -> sum_i P_i X P_i     for a projection partition
  mixed_unitary      X -> sum_i w_i U_i^T X U_i,  w_i > 0, sum w_i = 1

All four are unital (Phi(I) = I) and positive; compression with a
strict isometry is the only one that changes dimension besides the
trace map.  MapSpec is a plain frozen description so instances can be
serialized to JSON and rebuilt bit-for-bit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InvalidSpec

log = logging.getLogger(__name__)

NORMALIZED_TRACE = "normalized_trace"
COMPRESSION = "compression"
PINCHING = "pinching"
MIXED_UNITARY = "mixed_unitary"

KINDS = (NORMALIZED_TRACE, COMPRESSION, PINCHING, MIXED_UNITARY)

_ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class MapSpec:
    """Serializable description of one unital positive linear map."""

    kind: str
    in_dim: int
    out_dim: int
    isometry: np.ndarray | None = field(default=None, repr=False)
    partition: tuple[tuple[int, ...], ...] | None = None
    weights: np.ndarray | None = field(default=None, repr=False)
    unitaries: tuple[np.ndarray, ...] | None = field(default=None, repr=False)

    @classmethod
    def normalized_trace(cls, n: int) -> "MapSpec":
        if n < 1:
            raise InvalidSpec("normalized trace needs dimension >= 1")
        return cls(kind=NORMALIZED_TRACE, in_dim=int(n), out_dim=1)

    @classmethod
    def compression(cls, isometry) -> "MapSpec":
        v = np.asarray(isometry, dtype=float)
        if v.ndim != 2 or v.shape[0] < v.shape[1] or v.shape[1] < 1:
            raise InvalidSpec(f"isometry must be n x k with 1 <= k <= n, got {v.shape}")
        gram = v.T @ v
        if float(np.max(np.abs(gram - np.eye(v.shape[1])))) > _ORTHO_TOL:
            raise InvalidSpec("isometry columns are not orthonormal")
        return cls(
            kind=COMPRESSION, in_dim=v.shape[0], out_dim=v.shape[1], isometry=v
        )

    @classmethod
    def pinching(cls, partition, n: int) -> "MapSpec":
        blocks = tuple(tuple(int(i) for i in blk) for blk in partition)
        seen = [i for blk in blocks for i in blk]
        if sorted(seen) != list(range(n)):
            raise InvalidSpec(
                f"partition must cover 0..{n - 1} exactly once, got {blocks}"
            )
        if any(len(blk) == 0 for blk in blocks):
            raise InvalidSpec("partition blocks must be nonempty")
        return cls(kind=PINCHING, in_dim=int(n), out_dim=int(n), partition=blocks)

    @classmethod
    def mixed_unitary(cls, weights, unitaries) -> "MapSpec":
        w = np.asarray(weights, dtype=float)
        us = tuple(np.asarray(u, dtype=float) for u in unitaries)
        if w.ndim != 1 or len(us) != w.size or w.size < 1:
            raise InvalidSpec("need one weight per unitary")
        if np.any(w <= 0.0) or abs(float(w.sum()) - 1.0) > _ORTHO_TOL:
            raise InvalidSpec("weights must be positive and sum to 1")
        n = us[0].shape[0]
        for u in us:
            if u.shape != (n, n):
                raise InvalidSpec("unitaries must share one square shape")
            if float(np.max(np.abs(u.T @ u - np.eye(n)))) > _ORTHO_TOL:
                raise InvalidSpec("matrix is not orthogonal")
        return cls(
            kind=MIXED_UNITARY, in_dim=n, out_dim=n, weights=w, unitaries=us
        )

    def to_json_dict(self) -> dict:
        if self.kind == NORMALIZED_TRACE:
            return {"kind": self.kind, "dim": self.in_dim}
        if self.kind == COMPRESSION:
            return {"kind": self.kind, "isometry": self.isometry.tolist()}
        if self.kind == PINCHING:
            return {
                "kind": self.kind,
                "dim": self.in_dim,
                "partition": [list(b) for b in self.partition],
            }
        return {
            "kind": self.kind,
            "weights": self.weights.tolist(),
            "unitaries": [u.tolist() for u in self.unitaries],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "MapSpec":
        kind = obj.get("kind")
        try:
            if kind == NORMALIZED_TRACE:
                return cls.normalized_trace(int(obj["dim"]))
            if kind == COMPRESSION:
                return cls.compression(obj["isometry"])
            if kind == PINCHING:
                return cls.pinching(obj["partition"], int(obj["dim"]))
            if kind == MIXED_UNITARY:
                return cls.mixed_unitary(obj["weights"], obj["unitaries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed map spec: {exc}") from exc
        raise InvalidSpec(f"unknown map kind {kind!r}, expected one of {KINDS}")


def apply_map(spec: MapSpec, x) -> np.ndarray:
    """Evaluate Phi(X).  X must be square with the map's input dimension."""
    m = linalg.as_square(x)
    if m.shape[0] != spec.in_dim:
        raise DimensionMismatch(
            f"map expects dimension {spec.in_dim}, got {m.shape[0]}"
        )
    if spec.kind == NORMALIZED_TRACE:
        return np.array([[float(np.trace(m)) / spec.in_dim]])
    if spec.kind == COMPRESSION:
        out = spec.isometry.T @ m @ spec.isometry
    elif spec.kind == PINCHING:
        out = np.zeros_like(m)
        for blk in spec.partition:
            idx = np.ix_(blk, blk)
            out[idx] = m[idx]
    else:
        out = np.zeros_like(m)
        for w, u in zip(spec.weights, spec.unitaries):
            out += w * (u.T @ m @ u)
    # a symmetric input must map to an exactly symmetric output so the
    # Loewner comparisons downstream never trip on rounding asymmetry
    return linalg.symmetrize(out) if linalg.is_symmetric(m) else out


def verify_map(spec: MapSpec, trials: int = 32, seed: int = 0) -> bool:
    """Spot-check unitality, linearity and positivity on random inputs.

    Returns True when every probe passes; a failing witness is logged
    at WARNING level so interactive callers can see what broke.
    """
    rng = np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), 0]))
    n = spec.in_dim
    ident = apply_map(spec, np.eye(n))
    if float(np.max(np.abs(ident - np.eye(spec.out_dim)))) > 1e-10:
        log.warning("map %s is not unital: Phi(I) deviates by %.3e",
                    spec.kind, float(np.max(np.abs(ident - np.eye(spec.out_dim)))))
        return False
    for t in range(trials):
        x = rng.normal(size=(n, n))
        y = rng.normal(size=(n, n))
        x = linalg.symmetrize(x)
        y = linalg.symmetrize(y)
        alpha, beta = rng.normal(size=2)
        lhs = apply_map(spec, alpha * x + beta * y)
        rhs = alpha * apply_map(spec, x) + beta * apply_map(spec, y)
        scale = max(1.0, linalg.norm_op(lhs), linalg.norm_op(rhs))
        if float(np.max(np.abs(lhs - rhs))) > 1e-10 * scale:
            log.warning("map %s linearity probe %d failed by %.3e",
                        spec.kind, t, float(np.max(np.abs(lhs - rhs))))
            return False
        g = rng.normal(size=(n, n))
        psd = g @ g.T
        out = apply_map(spec, psd)
        floor = -1e-9 * max(1.0, linalg.norm_op(psd))
        if float(linalg.eigvals_sym(out)[0]) < floor:
            log.warning("map %s positivity probe %d failed: min eig %.3e",
                        spec.kind, t, float(linalg.eigvals_sym(out)[0]))
            return False
    return True
