"""Canonical assessor-report schema: parsing, validation, serialization
and a deterministic fixture generator.

A report is one assessor's evaluation of one page: the assessor profile
(certainty weakening coefficients and reliability), per-criterion defect
counts at three certainty levels, and the derived total test count.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass, field
from typing import Dict, Optional

from .errors import CountInconsistency, SchemaError, UnknownCriterion
from .wcag import CriterionCatalog, default_catalog

FIXTURE_KINDS = ("balanced", "error-heavy", "potential-heavy")


@dataclass(frozen=True)
class AssessorProfile:
    """Identity and trust parameters of one automatic assessor."""

    name: str
    beta_err: float = 1.0
    beta_likely: float = 0.5
    beta_potential: float = 1.0
    delta: float = 1.0

    def __post_init__(self):
        if not self.name:
            raise SchemaError("assessor name must be non-empty")
        for label, v in (("beta_err", self.beta_err),
                         ("beta_likely", self.beta_likely),
                         ("beta_potential", self.beta_potential),
                         ("delta", self.delta)):
            if not 0.0 <= v <= 1.0:
                raise SchemaError(f"{label}={v} outside [0, 1]")


@dataclass(frozen=True)
class CriterionObservation:
    """One assessor's counts for one criterion."""

    criterion_id: str
    n_err: int = 0
    n_ok: int = 0
    n_likely: int = 0
    n_potential: int = 0
    t_err: int = 0
    t_likely: int = 0
    t_potential: int = 0

    def __post_init__(self):
        counts = (self.n_err, self.n_ok, self.n_likely, self.n_potential,
                  self.t_err, self.t_likely, self.t_potential)
        for v in counts:
            if not isinstance(v, int) or v < 0:
                raise SchemaError(
                    f"criterion {self.criterion_id}: counts must be "
                    f"non-negative integers, got {v!r}")
        for n, t, label in ((self.n_err, self.t_err, "errors"),
                            (self.n_likely, self.t_likely, "likely problems"),
                            (self.n_potential, self.t_potential,
                             "potential problems")):
            if n > t:
                raise CountInconsistency(
                    f"criterion {self.criterion_id}: {n} {label} observed "
                    f"but only {t} applicable tests")

    @property
    def tests_run(self) -> int:
        return self.n_err + self.n_likely + self.n_potential + self.n_ok


@dataclass(frozen=True)
class AssessorReport:
    """One assessor's validated evaluation of one page."""

    profile: AssessorProfile
    url: str
    observations: Dict[str, CriterionObservation] = field(default_factory=dict)

    def __post_init__(self):
        for cid, obs in self.observations.items():
            if cid != obs.criterion_id:
                raise SchemaError(f"observation keyed {cid} carries "
                                  f"criterion id {obs.criterion_id}")

    @property
    def total_tests(self) -> int:
        return total_tests(self)


def total_tests(report: AssessorReport) -> int:
    """Total tests run by the assessor, summed over all observations."""
    return sum(o.tests_run for o in report.observations.values())


_OBS_KEYS = ("n_err", "n_ok", "n_likely", "n_potential",
             "t_err", "t_likely", "t_potential")


def parse_report(document, catalog: Optional[CriterionCatalog] = None,
                 unknown_criterion: str = "skip") -> AssessorReport:
    """Parse and validate a canonical report (JSON text or parsed dict).

    Criteria missing from the catalog are skipped with a warning by default;
    pass unknown_criterion="reject" to fail instead. A stored total_tests
    field must match the recomputed sum (corruption guard) or be absent.
    """
    if unknown_criterion not in ("skip", "reject"):
        raise ValueError("unknown_criterion must be 'skip' or 'reject'")
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"report is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise SchemaError("report must be a JSON object")

    try:
        assessor = document["assessor"]
        url = document["url"]
        raw_obs = document["observations"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"report lacks required field: {exc}") from exc
    if not isinstance(url, str) or not url:
        raise SchemaError("url must be a non-empty string")
    if not isinstance(raw_obs, list):
        raise SchemaError("observations must be an array")

    try:
        profile = AssessorProfile(
            name=str(assessor["name"]),
            beta_err=float(assessor.get("beta_err", 1.0)),
            beta_likely=float(assessor.get("beta_likely", 0.5)),
            beta_potential=float(assessor.get("beta_potential", 1.0)),
            delta=float(assessor.get("delta", 1.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad assessor block: {exc}") from exc

    observations: Dict[str, CriterionObservation] = {}
    for entry in raw_obs:
        if not isinstance(entry, dict) or "criterion" not in entry:
            raise SchemaError(f"bad observation entry: {entry!r}")
        cid = str(entry["criterion"])
        if cid in observations:
            raise SchemaError(f"duplicate observation for criterion {cid}")
        if catalog is not None and cid not in catalog:
            if unknown_criterion == "reject":
                raise UnknownCriterion(f"criterion {cid} not in catalog")
            warnings.warn(f"skipping unknown criterion {cid}", stacklevel=2)
            continue
        kwargs = {}
        for key in _OBS_KEYS:
            v = entry.get(key, 0)
            if isinstance(v, bool) or not isinstance(v, int):
                raise SchemaError(f"criterion {cid}: {key} must be an "
                                  f"integer, got {v!r}")
            kwargs[key] = v
        observations[cid] = CriterionObservation(criterion_id=cid, **kwargs)

    report = AssessorReport(profile=profile, url=url, observations=observations)
    if "total_tests" in document:
        stored = document["total_tests"]
        if stored != report.total_tests:
            raise CountInconsistency(
                f"stored total_tests={stored} does not match the "
                f"recomputed sum {report.total_tests}")
    return report


def serialize_report(report: AssessorReport) -> str:
    """Canonical JSON rendering; parse_report round-trips it exactly."""
    doc = {
        "assessor": {
            "name": report.profile.name,
            "beta_err": report.profile.beta_err,
            "beta_likely": report.profile.beta_likely,
            "beta_potential": report.profile.beta_potential,
            "delta": report.profile.delta,
        },
        "url": report.url,
        "observations": [
            {"criterion": o.criterion_id,
             **{k: getattr(o, k) for k in _OBS_KEYS}}
            for o in report.observations.values()
        ],
        "total_tests": report.total_tests,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def generate_fixture(seed: int, profile_kind: str = "balanced") -> str:
    """Deterministic pseudo-random report, valid under the schema.

    Kinds mimic the statistical signatures of real tools: "error-heavy"
    emits near-zero likely problems, "potential-heavy" emits a constant
    potential-test count across criteria, "balanced" mixes everything.
    Two fixtures with the same seed share a URL regardless of kind, so they
    can be grouped as two assessments of one page.
    """
    if profile_kind not in FIXTURE_KINDS:
        raise ValueError(f"profile_kind must be one of {FIXTURE_KINDS}")
    rng = random.Random(f"{profile_kind}:{seed}")
    catalog, _ = default_catalog()
    ids = sorted(catalog.criteria)
    chosen = sorted(rng.sample(ids, k=rng.randint(18, 32)))

    constant_t_potential = rng.randint(3, 7)
    observations = []
    for cid in chosen:
        t_err = rng.randint(1, 10)
        if profile_kind == "error-heavy":
            n_err = rng.randint(0, t_err)
            t_likely = rng.randint(0, 2)
            n_likely = 0
            t_potential = rng.randint(0, 6)
        elif profile_kind == "potential-heavy":
            n_err = rng.randint(0, max(1, t_err // 2))
            t_likely = rng.randint(0, 5)
            n_likely = rng.randint(0, t_likely)
            t_potential = constant_t_potential
        else:
            n_err = rng.randint(0, max(1, t_err // 2))
            t_likely = rng.randint(0, 5)
            n_likely = rng.randint(0, t_likely)
            t_potential = rng.randint(0, 6)
        n_potential = rng.randint(0, t_potential)
        n_ok = rng.randint(t_err - n_err, t_err - n_err + 8)
        observations.append({
            "criterion": cid, "n_err": n_err, "n_ok": n_ok,
            "n_likely": n_likely, "n_potential": n_potential,
            "t_err": t_err, "t_likely": t_likely,
            "t_potential": t_potential})

    total = sum(o["n_err"] + o["n_likely"] + o["n_potential"] + o["n_ok"]
                for o in observations)
    doc = {
        "assessor": {"name": f"{profile_kind}-assessor",
                     "beta_err": 1.0, "beta_likely": 0.5,
                     "beta_potential": 1.0, "delta": 1.0},
        "url": f"https://example.test/page-{seed}",
        "observations": observations,
        "total_tests": total,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
