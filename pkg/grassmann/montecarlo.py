"""Monte-Carlo evaluation of the cosine transform

    (T_alpha f)(E) = integral over Gr_i(R^n) of |cos(E, F)|^alpha f(F) dF

for re(alpha) > -1, where the integral converges absolutely.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Union

import numpy as np

from characters.errors import DomainError, ValidationError
from grassmann.accumulator import SampleAccumulator, pairwise_reduce
from grassmann.frames import Frame, cosines_batch, sample_frames
from grassmann.functions import CallableFunction, FrameFunction, get_function

logger = logging.getLogger(__name__)

BATCH_SIZE = 8192

FunctionLike = Union[FrameFunction, str, Callable[[Frame], float]]


@dataclass(frozen=True)
class MCEstimate:
    """A Monte-Carlo estimate; ``stderr`` is the sample sd over sqrt(samples)."""

    value: float
    stderr: float
    samples: int
    seed: int
    rejected: int = 0
    value_im: float = 0.0
    stderr_im: float = 0.0
    workers: int = 1

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "stderr": self.stderr,
            "value_im": self.value_im,
            "stderr_im": self.stderr_im,
            "samples": self.samples,
            "seed": self.seed,
            "rejected": self.rejected,
            "workers": self.workers,
        }


def _as_function(f: FunctionLike, n: int) -> FrameFunction:
    if isinstance(f, FrameFunction):
        return f
    if isinstance(f, str):
        return get_function(f, n)
    if callable(f):
        return CallableFunction(f)
    raise ValidationError(f"cannot integrate {f!r}", field="f")


def _kernel(c: np.ndarray, alpha: complex) -> np.ndarray:
    if alpha == 0:
        return np.ones_like(c)
    positive = c > 0
    safe = np.where(positive, c, 1.0)
    if alpha.imag == 0:
        return np.where(positive, safe ** alpha.real, 0.0)
    return np.where(positive, np.exp(alpha * np.log(safe)), 0.0)


def _run_worker(
    worker: int,
    seed_seq: np.random.SeedSequence,
    count: int,
    f: FrameFunction,
    E: Frame,
    alpha: complex,
    batch_size: int,
) -> SampleAccumulator:
    rng = np.random.Generator(np.random.Philox(seed_seq))
    acc = SampleAccumulator(f"W{worker}")
    remaining = count
    while remaining > 0:
        size = min(batch_size, remaining)
        frames = sample_frames(E.n, E.i, size, rng)
        c = cosines_batch(E, frames)
        if alpha.real <= 0:
            zero = c == 0.0
            while zero.any():
                # |cos|^alpha is infinite or undefined here; redraw
                acc.add_rejections(int(zero.sum()))
                frames[zero] = sample_frames(E.n, E.i, int(zero.sum()), rng)
                c = cosines_batch(E, frames)
                zero = c == 0.0
        acc.add_batch(_kernel(c, alpha) * f.evaluate_batch(frames))
        remaining -= size
    return acc


def cosine_transform_mc(
    f: FunctionLike,
    E: Frame,
    alpha: Union[complex, float, int],
    N: int,
    seed: int = 42,
    workers: int = 1,
    batch_size: int = BATCH_SIZE,
) -> MCEstimate:
    """Estimate (T_alpha f)(E) from N invariant samples F_j.

    Args:
        f: A ``FrameFunction``, a registered name (``const``, ``e1``) or a
            callable on frames.
        E: The base point.
        alpha: Exponent with re(alpha) > -1; may be complex.
        N: Total number of samples.
        seed: Root seed; each worker draws from its own Philox stream spawned
            from it, so results are reproducible at a fixed worker count.
        workers: Number of independent streams, merged pairwise in order.
        batch_size: Frames drawn per vectorized step.

    Raises:
        DomainError: if re(alpha) <= -1; the continuation is computed
            spectrally instead.
    """
    alpha = complex(alpha)
    if alpha.real <= -1:
        raise DomainError(
            f"the cosine transform integral diverges for re(alpha) = {alpha.real} <= -1; "
            "use the spectral engine for the continuation"
        )
    if not isinstance(N, int) or N < 2:
        raise ValidationError(f"need at least 2 samples, got {N!r}", field="N")
    if not isinstance(workers, int) or workers < 1:
        raise ValidationError(f"workers must be a positive integer, got {workers!r}", field="workers")
    fn = _as_function(f, E.n)
    children = np.random.SeedSequence(seed).spawn(workers)
    counts = [N // workers + (1 if w < N % workers else 0) for w in range(workers)]
    logger.info("MC: n=%d i=%d alpha=%s N=%d seed=%d workers=%d", E.n, E.i, alpha, N, seed, workers)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_run_worker, w, children[w], counts[w], fn, E, alpha, batch_size) for w in range(workers)
        ]
        accs = [fut.result() for fut in futures]
    total = pairwise_reduce([a for a in accs if a.count])
    mean, se = total.mean(), total.stderr()
    if total.rejected:
        logger.info("MC: %d samples with zero cosine redrawn", total.rejected)
    return MCEstimate(
        value=mean.real,
        stderr=se.real,
        samples=total.count,
        seed=seed,
        rejected=total.rejected,
        value_im=mean.imag,
        stderr_im=se.imag,
        workers=workers,
    )


def mc_convergence(
    f: FunctionLike,
    E: Frame,
    alpha: Union[complex, float, int],
    start: int = 1000,
    doublings: int = 6,
    seed: int = 42,
) -> List[MCEstimate]:
    """Estimates along the schedule start, 2*start, ..., start * 2^doublings."""
    return [cosine_transform_mc(f, E, alpha, start * 2 ** k, seed=seed) for k in range(doublings + 1)]
