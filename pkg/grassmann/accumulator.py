from typing import List, Optional

import numpy as np


class SampleAccumulator:
    """Running mean and variance of complex samples owned by one worker.

    Real and imaginary parts are tracked separately with Welford-style
    moments; batches and other accumulators are merged with Chan's formula,
    which is associative up to rounding.

    Attributes:
        worker_id: Identifier of the worker that owns this accumulator.
        count: Number of samples absorbed.
        rejected: Number of samples that were drawn and discarded.
    """

    def __init__(self, worker_id: str) -> None:
        """Initialize an empty accumulator.

        Args:
            worker_id: Identifier for this worker.
        """
        self.worker_id: str = worker_id
        self.count: int = 0
        self.rejected: int = 0
        self._mean = np.zeros(2)
        self._m2 = np.zeros(2)

    def _combine(self, count: int, mean: np.ndarray, m2: np.ndarray) -> None:
        if count == 0:
            return
        total = self.count + count
        delta = mean - self._mean
        self._mean = self._mean + delta * (count / total)
        self._m2 = self._m2 + m2 + delta * delta * (self.count * count / total)
        self.count = total

    def add_batch(self, values: np.ndarray) -> None:
        """Absorb a batch of (possibly complex) samples.

        Args:
            values: 1-d array of samples.
        """
        values = np.asarray(values)
        if values.size == 0:
            return
        parts = np.stack([values.real, values.imag], axis=-1).astype(float)
        mean = parts.mean(axis=0)
        m2 = ((parts - mean) ** 2).sum(axis=0)
        self._combine(values.size, mean, m2)

    def add_rejections(self, count: int) -> None:
        self.rejected += int(count)

    def merge(self, other: "SampleAccumulator") -> "SampleAccumulator":
        """Return a new accumulator holding the samples of both."""
        merged = SampleAccumulator(f"{self.worker_id}+{other.worker_id}")
        merged._combine(self.count, self._mean, self._m2)
        merged._combine(other.count, other._mean, other._m2)
        merged.rejected = self.rejected + other.rejected
        return merged

    def mean(self) -> complex:
        return complex(self._mean[0], self._mean[1])

    def stderr(self) -> Optional[complex]:
        """Sample standard deviation over sqrt(count), per component."""
        if self.count < 2:
            return None
        sd = np.sqrt(self._m2 / (self.count - 1))
        se = sd / np.sqrt(self.count)
        return complex(se[0], se[1])

    def display(self) -> None:
        """Print a one-line summary of this accumulator."""
        print(f"Worker {self.worker_id}: {self.count} samples, mean {self.mean():.6g}, rejected {self.rejected}")


def pairwise_reduce(accumulators: List[SampleAccumulator]) -> SampleAccumulator:
    """Merge accumulators in a balanced binary tree, left to right."""
    if not accumulators:
        return SampleAccumulator("empty")
    level = list(accumulators)
    while len(level) > 1:
        nxt = [level[k].merge(level[k + 1]) for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]
