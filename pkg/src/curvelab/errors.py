"""Exception types shared across the package."""


class CurveLabError(Exception):
    """Base class for all curvelab errors."""


class SpecError(CurveLabError):
    """Malformed or contradictory curve/plot specification.

    Carries ``field`` with the offending JSON path when available.
    """

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class RegularityError(CurveLabError):
    """The velocity vector vanishes (below tolerance) at the requested parameter."""


class FlatError(CurveLabError):
    """The curvature vanishes (below tolerance); the radius of curvature overflows."""


class NotClosedError(CurveLabError):
    """Operation requires a closed curve."""


class DegenerateSingularSetError(CurveLabError):
    """The singular-set equation vanishes identically on a parameter subinterval
    (circle-like input); no isolated singular parameters exist."""


class OnSigmaError(CurveLabError):
    """Evaluation requested on (or too close to) the singular set of the front."""


class DegenerateSigmaPointError(CurveLabError):
    """Signed singular curvature is undefined at this singular-set point
    (swallowtail parameter)."""


class BorderlineClassification(CurveLabError):
    """A zero of the classification discriminant has no detectable sign change
    at the working tolerance; refusing to classify silently."""


class IoError(CurveLabError):
    """Failed to write an output artifact."""
