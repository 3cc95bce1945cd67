"""Per-frame scoring pipeline.

For each assessor: estimate accessibility / non-accessibility / uncertainty
from the criterion counts of one deficiency frame, normalize the estimates
into a mass function, discount by the assessor's reliability; then fuse all
assessors conjunctively, take the pignistic decision and discretize it into
five levels rendered as arrow glyphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable

from . import belief
from .belief import MassFunction
from .errors import EmptySourceSet, MixedUrls, OutOfRange
from .reports import AssessorReport
from .wcag import (
    GLOBAL,
    CriterionCatalog,
    DeficiencyFrame,
    FRAME_ORDER,
    FrameOrGlobal,
    WeightConfig,
    criteria_in_frame,
    resolve_frame,
)


@dataclass(frozen=True)
class EstimationTriple:
    """Raw (unnormalized) evidence estimates for one assessor and frame."""

    e_ac: float
    e_nac: float
    e_omega: float

    @property
    def total(self) -> float:
        return self.e_ac + self.e_nac + self.e_omega


@dataclass(frozen=True)
class EstimationParts:
    """Numerators and denominators behind an EstimationTriple, kept for
    explain-style traces."""

    num_ac: float
    den_ac: float
    num_nac: float
    den_nac: float
    num_omega: float
    den_omega: float

    def triple(self) -> EstimationTriple:
        return EstimationTriple(
            e_ac=self.num_ac / self.den_ac if self.den_ac > 0 else 0.0,
            e_nac=self.num_nac / self.den_nac if self.den_nac > 0 else 0.0,
            e_omega=(self.num_omega / self.den_omega
                     if self.den_omega > 0 else 0.0))


class AccessLevel(Enum):
    VERY_BAD = "very bad"
    BAD = "bad"
    MODERATE = "moderate"
    GOOD = "good"
    VERY_GOOD = "very good"

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]

    @property
    def ascii_glyph(self) -> str:
        return _ASCII_GLYPHS[self]


_GLYPHS = {
    AccessLevel.VERY_BAD: "↓",   # down
    AccessLevel.BAD: "↘",        # down-right
    AccessLevel.MODERATE: "→",   # right
    AccessLevel.GOOD: "↗",       # up-right
    AccessLevel.VERY_GOOD: "↑",  # up
}

_ASCII_GLYPHS = {
    AccessLevel.VERY_BAD: "v",
    AccessLevel.BAD: "\\",
    AccessLevel.MODERATE: "-",
    AccessLevel.GOOD: "/",
    AccessLevel.VERY_GOOD: "^",
}


@dataclass(frozen=True)
class FrameDecision:
    """Fused evidence and the resulting decision for one frame."""

    frame: FrameOrGlobal
    fused: MassFunction
    decision: float
    level: AccessLevel
    per_source: Dict[str, MassFunction]


def estimate_parts(report: AssessorReport, frame: FrameOrGlobal,
                   catalog: CriterionCatalog,
                   w: WeightConfig) -> EstimationParts:
    """Evidence sums for one frame, with numerators and denominators split
    out.

    Correct checkpoints are normalized by the assessor's total test count
    over ALL frames; errors and uncertain problems are normalized by the
    frame-restricted test totals. Criteria absent from the report contribute
    nothing.
    """
    frame_ids = {c.id for c in criteria_in_frame(catalog, frame)}
    p = report.profile
    num_ac = num_nac = num_omega = 0.0
    den_nac = den_omega = 0
    for cid, obs in report.observations.items():
        if cid not in frame_ids:
            continue
        alpha = catalog.criteria[cid].alpha
        num_ac += obs.n_ok * alpha
        num_nac += obs.n_err * alpha * p.beta_err
        den_nac += obs.t_err
        num_omega += (obs.n_likely * alpha * p.beta_likely
                      + obs.n_potential * alpha * p.beta_potential)
        den_omega += obs.t_likely + obs.t_potential
    return EstimationParts(num_ac=num_ac, den_ac=float(report.total_tests),
                           num_nac=num_nac, den_nac=float(den_nac),
                           num_omega=num_omega, den_omega=float(den_omega))


def estimate(report: AssessorReport, frame: FrameOrGlobal,
             catalog: CriterionCatalog, w: WeightConfig) -> EstimationTriple:
    """Accessibility / non-accessibility / uncertainty estimates for one
    assessor restricted to one frame. Zero denominators yield zero terms."""
    return estimate_parts(report, frame, catalog, w).triple()


def masses_from_estimates(e: EstimationTriple) -> MassFunction:
    """Normalize the estimate triple into a mass function.

    With no evidence at all (all three estimates zero) the source commits
    to nothing: the result is vacuous.
    """
    s = e.total
    if s <= 0.0:
        return belief.vacuous()
    return belief.make_mass(e.e_ac / s, e.e_nac / s, e.e_omega / s)


def discretize(d: float, w: WeightConfig) -> AccessLevel:
    """Map a decision value onto the five-level scale.

    Bands are lower-bound inclusive, so an exact threshold value gets the
    better level.
    """
    if not 0.0 <= d <= 1.0:
        raise OutOfRange(f"decision value {d} outside [0, 1]")
    if d >= w.s4:
        return AccessLevel.VERY_GOOD
    if d >= w.s3:
        return AccessLevel.GOOD
    if d >= w.s2:
        return AccessLevel.MODERATE
    if d >= w.s1:
        return AccessLevel.BAD
    return AccessLevel.VERY_BAD


def source_mass(report: AssessorReport, frame: FrameOrGlobal,
                catalog: CriterionCatalog, w: WeightConfig) -> MassFunction:
    """One assessor's discounted mass function for one frame."""
    m = masses_from_estimates(estimate(report, frame, catalog, w))
    return belief.discount(m, report.profile.delta)


def score_frame(reports: Iterable[AssessorReport], frame: FrameOrGlobal,
                catalog: CriterionCatalog, w: WeightConfig) -> FrameDecision:
    """Fuse all assessors' evidence for one frame and decide."""
    frame = resolve_frame(frame)
    report_list = list(reports)
    if not report_list:
        raise EmptySourceSet("no reports to score")
    urls = {r.url for r in report_list}
    if len(urls) > 1:
        raise MixedUrls(f"reports refer to different pages: {sorted(urls)}")

    per_source: Dict[str, MassFunction] = {}
    for idx, report in enumerate(report_list):
        name = report.profile.name
        if name in per_source:
            name = f"{name}#{idx}"
        per_source[name] = source_mass(report, frame, catalog, w)

    fused = belief.combine_all(per_source.values())
    decision = belief.pignistic(fused)
    return FrameDecision(frame=frame, fused=fused, decision=decision,
                         level=discretize(decision, w),
                         per_source=per_source)


def score_page(reports: Iterable[AssessorReport], catalog: CriterionCatalog,
               w: WeightConfig) -> Dict[FrameOrGlobal, FrameDecision]:
    """Decisions for the four deficiency frames plus the global view."""
    report_list = list(reports)
    result: Dict[FrameOrGlobal, FrameDecision] = {}
    for frame in (*FRAME_ORDER, GLOBAL):
        result[frame] = score_frame(report_list, frame, catalog, w)
    return result
