"""Frames on the real Grassmannian Gr_i(R^n) and the cosine between subspaces."""

from dataclasses import dataclass

import numpy as np

from characters.errors import DomainError, ValidationError

ORTHONORMAL_TOL = 1e-12
ORTHOGONAL_GROUP_TOL = 1e-10
CLAMP_TOL = 1e-12


def _check_dims(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise DomainError(f"Gr_i(R^n) needs 1 <= i <= n - 1, got n = {n}, i = {i}")


@dataclass(frozen=True, eq=False)
class Frame:
    """An n x i matrix with orthonormal columns spanning a point of Gr_i(R^n)."""

    columns: np.ndarray

    def __post_init__(self) -> None:
        q = np.array(self.columns, dtype=float)
        if q.ndim != 2:
            raise ValidationError(f"a frame is a 2-d array, got shape {q.shape}", field="columns")
        _check_dims(*q.shape)
        gram_error = np.max(np.abs(q.T @ q - np.eye(q.shape[1])))
        if gram_error > ORTHONORMAL_TOL:
            raise ValidationError(f"columns are not orthonormal (error {gram_error:.3e})", field="columns")
        q.setflags(write=False)
        object.__setattr__(self, "columns", q)

    @classmethod
    def from_span(cls, vectors) -> "Frame":
        """Orthonormalize the columns of ``vectors`` (full column rank required)."""
        a = np.asarray(vectors, dtype=float)
        if a.ndim == 1:
            a = a[:, None]
        q, r = np.linalg.qr(a)
        if np.min(np.abs(np.diag(r))) < 1e-14:
            raise ValidationError("spanning vectors are linearly dependent", field="columns")
        return cls(q)

    @property
    def n(self) -> int:
        return self.columns.shape[0]

    @property
    def i(self) -> int:
        return self.columns.shape[1]

    def projector(self) -> np.ndarray:
        return self.columns @ self.columns.T

    def to_json(self) -> list:
        return self.columns.tolist()


def _clamp(values: np.ndarray) -> np.ndarray:
    over = (values > 1.0) & (values <= 1.0 + CLAMP_TOL)
    return np.where(over, 1.0, np.clip(values, 0.0, None))


def cosine(E: Frame, F: Frame) -> float:
    """|cos(E, F)|: volume distortion of the orthogonal projection E -> F.

    Computed as the product of the singular values of Q_F^T Q_E.
    """
    if E.n != F.n or E.i != F.i:
        raise ValidationError(f"frames of shape {E.columns.shape} and {F.columns.shape} differ", field="frame")
    sv = np.linalg.svd(F.columns.T @ E.columns, compute_uv=False)
    return float(_clamp(np.prod(sv)))


def cosines_batch(E: Frame, frames: np.ndarray) -> np.ndarray:
    """cosine(E, F_k) for a stack of frames of shape (size, n, i)."""
    if frames.shape[1:] != E.columns.shape:
        raise ValidationError(f"frame stack shape {frames.shape} does not match {E.columns.shape}", field="frame")
    sv = np.linalg.svd(np.swapaxes(frames, 1, 2) @ E.columns, compute_uv=False)
    return _clamp(np.prod(sv, axis=-1))


def sample_frames(n: int, i: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` invariantly distributed frames, stacked as (size, n, i).

    Orthonormalizes Gaussian n x i matrices; the signs of R's diagonal are
    folded into Q so the frame itself is Haar on the Stiefel manifold.
    """
    _check_dims(n, i)
    g = rng.standard_normal((size, n, i))
    q, r = np.linalg.qr(g)
    signs = np.sign(np.diagonal(r, axis1=1, axis2=2))
    signs[signs == 0] = 1.0
    return q * signs[:, None, :]


def sample_frame(n: int, i: int, rng: np.random.Generator) -> Frame:
    return Frame(sample_frames(n, i, 1, rng)[0])


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """A Haar-distributed element of O(n) (sign-corrected QR)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def act_orthogonal(g: np.ndarray, E: Frame) -> Frame:
    """The frame g . E.

    g @ Q_E is re-orthonormalized (sign-corrected QR, same span), so any g
    accepted at the group tolerance yields a frame.

    Raises:
        ValidationError: if g is not orthogonal to 1e-10 or has the wrong size.
    """
    g = np.asarray(g, dtype=float)
    if g.shape != (E.n, E.n):
        raise ValidationError(f"g has shape {g.shape}, expected {(E.n, E.n)}", field="g")
    if np.max(np.abs(g.T @ g - np.eye(E.n))) > ORTHOGONAL_GROUP_TOL:
        raise ValidationError("g is not orthogonal", field="g")
    q, r = np.linalg.qr(g @ E.columns)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return Frame(q * signs)
