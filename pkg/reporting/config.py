from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Mapping, Optional

from characters.errors import ValidationError

OUTPUT_FORMATS = ("json", "csv")


@dataclass(frozen=True)
class ToolkitConfig:
    """Run-wide defaults.

    Attributes:
        seed: Root seed for Monte-Carlo streams.
        truncation: Default number M of harmonic rows in spectral tables.
        mc_samples: Default Monte-Carlo sample count.
        workers: Number of Monte-Carlo worker streams.
        quad_tol: Absolute tolerance of the quadrature oracle.
        output_format: ``json`` or ``csv``.
    """

    seed: int = 42
    truncation: int = 40
    mc_samples: int = 100_000
    workers: int = 1
    quad_tol: float = 1e-12
    output_format: str = "json"

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(f"must be one of {OUTPUT_FORMATS}, got {self.output_format!r}", field="output_format")
        for name in ("truncation", "mc_samples", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValidationError(f"must be a positive integer, got {value!r}", field=name)
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValidationError(f"must be a 64-bit unsigned integer, got {self.seed!r}", field="seed")

    @classmethod
    def from_mapping(cls, data: Optional[Mapping[str, Any]], base: Optional["ToolkitConfig"] = None) -> "ToolkitConfig":
        """Overlay the known keys of ``data`` on ``base`` (or the defaults)."""
        base = base or cls()
        if not data:
            return base
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValidationError(f"unknown configuration keys {unknown}", field="config")
        return replace(base, **dict(data))

    def override(self, **values: Any) -> "ToolkitConfig":
        """Apply non-``None`` overrides, e.g. from command-line flags."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    def to_json(self) -> dict:
        return asdict(self)
