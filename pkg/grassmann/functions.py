"""Functions on Gr_i(R^n) that the Monte-Carlo engine can integrate.

Each function evaluates a whole stack of frames at once.
"""

from typing import Callable, Dict

import numpy as np

from characters.errors import ValidationError
from grassmann.frames import Frame


class FrameFunction:
    """Base class: ``evaluate_batch`` maps (size, n, i) frames to (size,) values."""

    name = "abstract"

    def evaluate_batch(self, frames: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, frame: Frame) -> float:
        return float(self.evaluate_batch(frame.columns[None, :, :])[0])


class Constant(FrameFunction):
    name = "const"

    def __init__(self, value: float = 1.0) -> None:
        self.value = value

    def evaluate_batch(self, frames: np.ndarray) -> np.ndarray:
        return np.full(frames.shape[0], self.value)


class ProjectionNorm(FrameFunction):
    """F -> |P_F v|^2, the squared length of the projection of v onto F."""

    name = "proj"

    def __init__(self, vector) -> None:
        self.vector = np.asarray(vector, dtype=float)

    def evaluate_batch(self, frames: np.ndarray) -> np.ndarray:
        coords = np.swapaxes(frames, 1, 2) @ self.vector
        return np.sum(coords * coords, axis=-1)

    def pullback(self, g: np.ndarray) -> "ProjectionNorm":
        """f o g, i.e. F -> |P_{gF} v|^2 = |P_F g^T v|^2."""
        return ProjectionNorm(np.asarray(g).T @ self.vector)


class CallableFunction(FrameFunction):
    """Wraps a plain ``Frame -> float`` callable; evaluates frame by frame."""

    name = "callable"

    def __init__(self, fn: Callable[[Frame], float]) -> None:
        self.fn = fn

    def evaluate_batch(self, frames: np.ndarray) -> np.ndarray:
        return np.array([self.fn(Frame(q)) for q in frames], dtype=complex)


def _e1(n: int) -> FrameFunction:
    v = np.zeros(n)
    v[0] = 1.0
    return ProjectionNorm(v)


REGISTRY: Dict[str, Callable[[int], FrameFunction]] = {
    "const": lambda n: Constant(),
    "e1": _e1,
}


def get_function(name: str, n: int) -> FrameFunction:
    """Look up a named function on Gr_i(R^n) (``const`` or ``e1``)."""
    try:
        return REGISTRY[name](n)
    except KeyError as exc:
        raise ValidationError(f"unknown function {name!r}; known: {sorted(REGISTRY)}", field="f") from exc
