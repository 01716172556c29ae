"""Scenario parsing and dispatch to the engines.

A scenario is ``{"verb": ..., "params": {...}, "seed": ..., "output": "json"|"csv",
"config": {...}}``; ``run_scenario`` turns it into a report dictionary whose
rationals are ``"num/den"`` strings.
"""

import logging
import platform
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

import networkx
import numpy
import scipy

from characters.character import Character, trivial_character
from characters.codec import character_to_json, parse_character
from characters.errors import ValidationError
from characters.field import FieldKind
from characters.induced import InducedRepDesc, normalize
from characters.rational import fraction_str, to_fraction
from derivatives.profile import composition_profile
from derivatives.rank import OrbitClosureGraph, closure_chain
from derivatives.tower_graph import TowerGraph
from grassmann.frames import Frame
from grassmann.montecarlo import cosine_transform_mc
from infchar.segments import infchar_of, is_generalized_segment
from reducibility.criteria import (
    finite_dim_quotient,
    finite_dim_submodule,
    is_reducible_closed,
    length_upper_bound,
)
from reducibility.recursion import is_reducible_recursive
from reporting.config import OUTPUT_FORMATS, ToolkitConfig
from reporting.digest import generate_digest
from spectral.exceptional import exceptional_alphas, invertibility_crosscheck
from spectral.invertibility import spectral_invertibility

logger = logging.getLogger(__name__)

TOOLKIT_VERSION = "0.1.0"
VERBS = ("decide", "profile", "infchar", "mc", "spectrum", "exceptional", "crosscheck")


@dataclass(frozen=True)
class Scenario:
    verb: str
    params: Dict[str, Any]
    seed: Optional[int] = None
    output: str = "json"
    config: Dict[str, Any] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {"verb": self.verb, "params": self.params, "seed": self.seed, "output": self.output}


def parse_scenario(data: Mapping[str, Any]) -> Scenario:
    """Validate the envelope of a scenario; verb parameters are checked on dispatch.

    Raises:
        ValidationError: naming the offending key.
    """
    if not isinstance(data, Mapping):
        raise ValidationError("a scenario is a JSON object", field="scenario")
    verb = data.get("verb")
    if verb not in VERBS:
        raise ValidationError(f"must be one of {VERBS}, got {verb!r}", field="verb")
    params = data.get("params", {})
    if not isinstance(params, Mapping):
        raise ValidationError("must be an object", field="params")
    seed = data.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64):
        raise ValidationError(f"must be a 64-bit unsigned integer, got {seed!r}", field="seed")
    output = data.get("output", "json")
    if output not in OUTPUT_FORMATS:
        raise ValidationError(f"must be one of {OUTPUT_FORMATS}, got {output!r}", field="output")
    config = data.get("config") or {}
    if not isinstance(config, Mapping):
        raise ValidationError("must be an object", field="config")
    return Scenario(verb, dict(params), seed, output, dict(config))


def _require(params: Mapping[str, Any], key: str) -> Any:
    if key not in params:
        raise ValidationError("missing required parameter", field=key)
    return params[key]


def _int_param(params: Mapping[str, Any], key: str, default: Optional[int] = None) -> int:
    value = params.get(key, default) if default is not None else _require(params, key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"must be an integer, got {value!r}", field=key)
    return value


def _character_param(params: Mapping[str, Any], key: str, field: FieldKind, p: int) -> Character:
    text = params.get(key, "1")
    if isinstance(text, Mapping):
        raise ValidationError("give characters in the text grammar, e.g. \"eps*nu^{3/2}\"", field=key)
    return parse_character(str(text), field, p, ramified=bool(params.get("ramified", False)), name=key)


def _induced_params(params: Mapping[str, Any]) -> Tuple[FieldKind, int, int, Character]:
    """Read (field, n, p1, chi) from either ``chi`` or a full ``chi1``/``chi2`` pair."""
    field = FieldKind.parse(_require(params, "field"))
    n = _int_param(params, "n")
    p1 = _int_param(params, "p1")
    if "chi1" in params or "chi2" in params:
        p2 = _int_param(params, "p2", n - p1)
        rep = InducedRepDesc(
            field, n, p1, p2, _character_param(params, "chi1", field, p1), _character_param(params, "chi2", field, p2)
        )
        chi, _ = normalize(rep)
        return field, n, p1, chi
    # an out-of-range p1 is reported by the engines as a domain error
    return field, n, p1, _character_param(params, "chi", field, max(p1, 1))


def _rational_param(params: Mapping[str, Any], key: str, default: Any = None) -> Fraction:
    value = params.get(key, default)
    if value is None:
        raise ValidationError("missing required parameter", field=key)
    if isinstance(value, float):
        raise ValidationError(f"give rationals as \"num/den\" strings or integers, got {value!r}", field=key)
    return to_fraction(value, key)


def _alpha_param(params: Mapping[str, Any]) -> complex:
    value = _require(params, "alpha")
    if isinstance(value, Mapping):
        return complex(float(to_fraction(value.get("re", 0), "alpha")), float(to_fraction(value.get("im", 0), "alpha")))
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    return complex(float(to_fraction(value, "alpha")))


def _decide(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    field, n, p1, chi = _induced_params(params)
    closed = is_reducible_closed(field, n, p1, chi)
    recursive = is_reducible_recursive(field, n, p1, chi)
    sub = finite_dim_submodule(field, n, p1, chi)
    quot = finite_dim_quotient(field, n, p1, chi)
    return {
        "chi": character_to_json(chi),
        "chi_text": str(chi),
        **closed.to_json(),
        "length_upper_bound": length_upper_bound(field, n, p1, chi),
        "recursive": recursive.to_json(),
        "methods_agree": closed.reducible == recursive.reducible,
        "finite_dim_submodule": None if sub is None else sub.to_json(),
        "finite_dim_quotient": None if quot is None else quot.to_json(),
    }


def _profile(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    field, n, p1, chi = _induced_params(params)
    profile = composition_profile(field, n, p1, chi)
    tower = TowerGraph(InducedRepDesc(field, n, p1, n - p1, chi, trivial_character(field, n - p1)))
    r = profile.rank_of_parent
    orbits = OrbitClosureGraph(n, r)
    return {
        "chi_text": str(chi),
        **profile.to_json(),
        "tower": [dict(data, depth=k) for k, data in tower.graph.nodes(data=True)],
        "orbits": [
            {"partition": o.notation, "literal_notation": o.literal_notation, "dimension": o.orbit_dimension()}
            for o in closure_chain(n, r)
        ],
        "top_orbit": orbits.top(),
    }


def _infchar(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    field, n, p1, chi = _induced_params(params)
    reading = params.get("reading", "derived")
    result = infchar_of(field, n, p1, chi, reading=reading)
    parts = list(result) if isinstance(result, tuple) else [result]
    return {
        "reading": reading,
        "multisets": [ms.to_json() for ms in parts],
        "text": [str(ms) for ms in parts],
        "generalized_segment": [is_generalized_segment(ms) for ms in parts],
    }


def _mc(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    n = _int_param(params, "n")
    i = _int_param(params, "i")
    frame = params.get("E")
    if frame is None:
        E = Frame(numpy.eye(n)[:, :i])
    else:
        E = Frame.from_span(numpy.asarray(frame, dtype=float))
    N = _int_param(params, "N", config.mc_samples)
    estimate = cosine_transform_mc(
        params.get("f", "const"), E, _alpha_param(params), N, seed=config.seed, workers=config.workers
    )
    return {"E": E.to_json(), "f": params.get("f", "const"), **estimate.to_json()}


def _spectrum(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    n = _int_param(params, "n")
    alpha0 = _rational_param(params, "alpha0")
    M = _int_param(params, "M", config.truncation)
    invertible, table = spectral_invertibility(n, alpha0, M)
    return {"invertible": invertible, **table.to_json()}


def _exceptional(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    n = _int_param(params, "n")
    i = _int_param(params, "i", 1)
    result: Dict[str, Any] = {}
    if "lo" in params or "hi" in params:
        alphas = exceptional_alphas(n, i, _rational_param(params, "lo"), _rational_param(params, "hi"))
        result["exceptional"] = [fraction_str(a) for a in sorted(alphas)]
    if "alpha0" in params:
        result["invertibility"] = invertibility_crosscheck(n, i, _rational_param(params, "alpha0")).to_json()
    if not result:
        raise ValidationError("give a range lo/hi, a point alpha0, or both", field="params")
    return result


def _crosscheck(params: Mapping[str, Any], config: ToolkitConfig) -> dict:
    from crosscheck import crosscheck_grid

    return crosscheck_grid(params, config)


DISPATCH: Dict[str, Callable[[Mapping[str, Any], ToolkitConfig], dict]] = {
    "decide": _decide,
    "profile": _profile,
    "infchar": _infchar,
    "mc": _mc,
    "spectrum": _spectrum,
    "exceptional": _exceptional,
    "crosscheck": _crosscheck,
}


def versions() -> Dict[str, str]:
    return {
        "toolkit": TOOLKIT_VERSION,
        "python": platform.python_version(),
        "numpy": numpy.__version__,
        "scipy": scipy.__version__,
        "networkx": networkx.__version__,
    }


def run_scenario(scenario: Scenario, config: Optional[ToolkitConfig] = None) -> Dict[str, Any]:
    """Run one scenario and build its report.

    The report echoes the inputs and the effective configuration, records
    versions, seed and wall time, and carries a digest over everything except
    the wall time.  Engine errors propagate unchanged after being logged with
    the verb as context.
    """
    config = ToolkitConfig.from_mapping(scenario.config, config)
    seed = scenario.seed if scenario.seed is not None else scenario.params.get("seed")
    if seed is not None:
        config = config.override(seed=seed)
    config = config.override(output_format=scenario.output)
    started = time.perf_counter()
    try:
        outputs = DISPATCH[scenario.verb](scenario.params, config)
    except Exception:
        logger.error("verb %s failed on params %s", scenario.verb, scenario.params)
        raise
    report: Dict[str, Any] = {
        "verb": scenario.verb,
        "inputs": scenario.to_json(),
        "config": config.to_json(),
        "outputs": outputs,
        "warnings": _warnings(outputs),
        "versions": versions(),
        "seed": config.seed,
        "wall_time": round(time.perf_counter() - started, 6),
    }
    report["digest"] = generate_digest(report)
    logger.info("verb %s done in %.3fs", scenario.verb, report["wall_time"])
    return report


def _warnings(outputs: Mapping[str, Any]) -> list:
    found = list(outputs.get("notes", []))
    inv = outputs.get("invertibility")
    if isinstance(inv, Mapping) and not inv.get("consistent", True):
        found.append("consistency alarm: invertibility and translated reducibility disagree")
    return found
