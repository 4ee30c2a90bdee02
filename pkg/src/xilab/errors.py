"""Exception types shared across the package."""


class XiLabError(Exception):
    """Base class for all package-specific failures."""


class PoleError(XiLabError):
    """Evaluation requested exactly at a pole of the function."""


class AccuracyError(XiLabError):
    """The configured term/step budget cannot meet the accuracy target."""


class RealnessViolation(AccuracyError):
    """A value that must be real carries an imaginary residue above tolerance.

    This signals an upstream accuracy failure, not a mathematical finding.
    """


class StepTooCoarse(XiLabError):
    """Two sign changes were detected inside a single scan step."""


class NoSignChange(XiLabError):
    """A bracket handed to the root refiner does not straddle a sign change."""


class SchemaError(XiLabError):
    """A catalog file does not conform to the versioned JSON schema."""


class MonotonicityError(SchemaError):
    """Catalog entries are not strictly increasing / contiguously indexed."""


class UnknownIndex(XiLabError):
    """A zero index was requested that the catalog does not contain."""


class NearPoleOfFactor(XiLabError):
    """Deleted-product division requested too close to the deleted zero.

    Pass ``limit=True`` to route the evaluation through the limiting stencil.
    """


class FitDegenerate(XiLabError):
    """The quadratic-surrogate fit has no usable slope signal."""


class NotAnExtremum(XiLabError):
    """A saddle test was requested at a point that is not a critical point."""


class ComplexRoot(XiLabError):
    """The closed-form extremum-shift discriminant is negative."""
