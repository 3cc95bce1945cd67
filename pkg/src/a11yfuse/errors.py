"""Exception hierarchy for the accessibility fusion pipeline."""


class IndicatorError(Exception):
    """Base class for all library errors."""


class NegativeMass(IndicatorError):
    """A mass component is negative beyond numeric tolerance."""


class NotNormalized(IndicatorError):
    """Mass components do not sum to 1 within tolerance."""


class ConflictPresent(IndicatorError):
    """Discounting applied to a mass that already carries conflict."""


class EmptySourceSet(IndicatorError):
    """Fusion requested over zero sources."""


class TotalConflict(IndicatorError):
    """All mass sits on the empty set; no decision can be taken."""


class OutOfRange(IndicatorError):
    """A scalar argument lies outside its admissible interval."""


class SchemaError(IndicatorError):
    """A report document does not conform to the canonical schema."""


class CountInconsistency(IndicatorError):
    """Observed defect counts exceed the number of applicable tests."""


class UnknownCriterion(IndicatorError):
    """A report references a criterion absent from the catalog."""


class MixedUrls(IndicatorError):
    """Reports grouped as one page refer to different URLs."""


class UnknownFrame(IndicatorError):
    """A frame name does not match any deficiency frame or 'global'."""
