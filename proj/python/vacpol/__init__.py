"""Renormalized vacuum polarization of a scalar field near a flat wall."""

from ._core import (
    Check,
    DiagonalCoefficients,
    Error,
    FieldConfig,
    InfraredDivergence,
    LaurentFit,
    NumericalFailure,
    ParameterError,
    PolarizationValue,
    ReflectingBC,
    RobinCoefficient,
    SemitransparentBC,
    SpectrumReport,
    heat,
    reflecting,
    semitransparent,
    specialfns,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Check",
    "DiagonalCoefficients",
    "Error",
    "FieldConfig",
    "InfraredDivergence",
    "LaurentFit",
    "NumericalFailure",
    "ParameterError",
    "PolarizationValue",
    "ReflectingBC",
    "RobinCoefficient",
    "SemitransparentBC",
    "SpectrumReport",
    "heat",
    "reflecting",
    "semitransparent",
    "specialfns",
    "validate",
]
