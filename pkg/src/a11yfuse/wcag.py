"""WCAG 2.0 success-criterion catalog, deficiency frames and weighting.

The shipped catalog tags each of the 61 WCAG 2.0 success criteria with the
deficiency categories it primarily serves; it is plain JSON data so users can
override the mapping, the conformance-level weights and the discretization
thresholds from a file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Optional, Union

from .errors import SchemaError, UnknownFrame


class ConformanceLevel(Enum):
    A = "A"
    AA = "AA"
    AAA = "AAA"


class DeficiencyFrame(Enum):
    VISUAL = "visual"
    HEARING = "hearing"
    MOTOR = "motor"
    COGNITIVE = "cognitive"


#: Pseudo-frame meaning "all criteria", kept out of the DeficiencyFrame enum.
GLOBAL = "global"

FrameOrGlobal = Union[DeficiencyFrame, str]

FRAME_ORDER = (DeficiencyFrame.VISUAL, DeficiencyFrame.HEARING,
               DeficiencyFrame.MOTOR, DeficiencyFrame.COGNITIVE)


def resolve_frame(name: FrameOrGlobal) -> FrameOrGlobal:
    """Map a frame name (or enum member) to its canonical form."""
    if isinstance(name, DeficiencyFrame) or name == GLOBAL:
        return name
    try:
        return DeficiencyFrame(str(name).lower())
    except ValueError:
        raise UnknownFrame(f"unknown frame {name!r}; expected one of "
                           f"visual, hearing, motor, cognitive, global") from None


@dataclass(frozen=True)
class WeightConfig:
    """Conformance-level weights, certainty coefficients, source
    reliabilities and the four discretization thresholds."""

    alpha_a: float = 1.0
    alpha_aa: float = 0.8
    alpha_aaa: float = 0.6
    beta_err: float = 1.0
    beta_likely: float = 0.5
    beta_potential: float = 1.0
    deltas: tuple = (1.0, 1.0)
    s1: float = 0.6
    s2: float = 0.7
    s3: float = 0.8
    s4: float = 0.9

    def __post_init__(self):
        if not 0.0 < self.alpha_aaa <= self.alpha_aa <= self.alpha_a <= 1.0:
            raise SchemaError("level weights must satisfy "
                              "0 < alpha_aaa <= alpha_aa <= alpha_a <= 1")
        if not 0.0 < self.s1 < self.s2 < self.s3 < self.s4 < 1.0:
            raise SchemaError("thresholds must satisfy 0 < s1 < s2 < s3 < s4 < 1")
        for b in (self.beta_err, self.beta_likely, self.beta_potential):
            if not 0.0 <= b <= 1.0:
                raise SchemaError(f"certainty coefficient {b} outside [0, 1]")

    @property
    def thresholds(self) -> tuple:
        return (self.s1, self.s2, self.s3, self.s4)


def default_weights() -> WeightConfig:
    """The stock constants: alpha=(1, 0.8, 0.6), beta=(1, 0.5, 1),
    delta=(1, 1), thresholds=(0.6, 0.7, 0.8, 0.9)."""
    return WeightConfig()


def alpha_for(level: ConformanceLevel, w: WeightConfig) -> float:
    """Weight attached to a criterion's conformance level."""
    return {ConformanceLevel.A: w.alpha_a,
            ConformanceLevel.AA: w.alpha_aa,
            ConformanceLevel.AAA: w.alpha_aaa}[level]


@dataclass(frozen=True)
class CriterionSpec:
    """One WCAG success criterion and its frame memberships."""

    id: str
    level: ConformanceLevel
    frames: FrozenSet[DeficiencyFrame]
    alpha: float

    def __post_init__(self):
        if not self.frames:
            raise SchemaError(f"criterion {self.id} belongs to no frame")
        if not 0.0 < self.alpha <= 1.0:
            raise SchemaError(f"criterion {self.id} weight outside (0, 1]")


@dataclass(frozen=True)
class CriterionCatalog:
    """Immutable id -> CriterionSpec mapping."""

    criteria: Dict[str, CriterionSpec] = field(default_factory=dict)

    def __contains__(self, criterion_id: str) -> bool:
        return criterion_id in self.criteria

    def __len__(self) -> int:
        return len(self.criteria)

    def get(self, criterion_id: str) -> Optional[CriterionSpec]:
        return self.criteria.get(criterion_id)


def criteria_in_frame(catalog: CriterionCatalog,
                      frame: FrameOrGlobal) -> set:
    """Criteria belonging to one deficiency frame, or all of them for the
    global pseudo-frame."""
    frame = resolve_frame(frame)
    if frame == GLOBAL:
        return set(catalog.criteria.values())
    return {c for c in catalog.criteria.values() if frame in c.frames}


def _build_catalog(entries: Iterable[dict], w: WeightConfig) -> CriterionCatalog:
    criteria: Dict[str, CriterionSpec] = {}
    for entry in entries:
        try:
            cid = str(entry["id"])
            level = ConformanceLevel(entry["level"])
            frames = frozenset(DeficiencyFrame(f) for f in entry["frames"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad catalog entry {entry!r}: {exc}") from exc
        if cid in criteria:
            raise SchemaError(f"duplicate criterion id {cid}")
        criteria[cid] = CriterionSpec(cid, level, frames, alpha_for(level, w))
    return CriterionCatalog(criteria)


def _weights_from_json(doc: dict, base: WeightConfig) -> WeightConfig:
    kwargs = {}
    weights = doc.get("weights", {})
    mapping = {"a": "alpha_a", "aa": "alpha_aa", "aaa": "alpha_aaa",
               "beta_err": "beta_err", "beta_likely": "beta_likely",
               "beta_potential": "beta_potential"}
    for key, attr in mapping.items():
        if key in weights:
            kwargs[attr] = float(weights[key])
    if "thresholds" in doc:
        ts = doc["thresholds"]
        if not (isinstance(ts, (list, tuple)) and len(ts) == 4):
            raise SchemaError("thresholds must be a list of 4 values")
        kwargs.update(s1=float(ts[0]), s2=float(ts[1]),
                      s3=float(ts[2]), s4=float(ts[3]))
    if not kwargs:
        return base
    merged = {**base.__dict__, **kwargs}
    return WeightConfig(**merged)


def load_catalog(source: Union[str, Path, dict, list],
                 weights: Optional[WeightConfig] = None):
    """Load a catalog file (or already-parsed document).

    Accepts either a bare array of criterion entries or an object
    {"criteria": [...], "weights": {...}, "thresholds": [...]}.
    Returns (catalog, effective_weights).
    """
    if isinstance(source, (str, Path)):
        try:
            doc = json.loads(Path(source).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"catalog is not valid JSON: {exc}") from exc
    else:
        doc = source
    base = weights or default_weights()
    if isinstance(doc, list):
        return _build_catalog(doc, base), base
    if isinstance(doc, dict):
        w = _weights_from_json(doc, base)
        entries = doc.get("criteria")
        if entries is None:
            raise SchemaError("catalog object lacks a 'criteria' array")
        return _build_catalog(entries, w), w
    raise SchemaError("catalog must be a JSON array or object")


def default_catalog(weights: Optional[WeightConfig] = None):
    """The packaged WCAG 2.0 catalog. Returns (catalog, weights)."""
    data = resources.files(__package__).joinpath("data/wcag20_criteria.json")
    doc = json.loads(data.read_text(encoding="utf-8"))
    return load_catalog(doc, weights)
