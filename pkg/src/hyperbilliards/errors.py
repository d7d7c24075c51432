"""Exception types raised by the geometry and dynamics layers."""


class HyperbilliardsError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveNormError(HyperbilliardsError):
    """Vector cannot be scaled onto the hyperboloid (norm squared <= 0)."""


class UnsupportedParametersError(HyperbilliardsError):
    """Semi-axes do not match either supported boundary ordering."""


class PoleParameterError(HyperbilliardsError):
    """Family parameter coincides with a pole of the confocal form."""


class AtInfinityError(HyperbilliardsError):
    """Central projection undefined: point lies on the x0 = 0 plane."""


class NotTangentError(HyperbilliardsError):
    """Direction is not tangent to the hyperboloid at the given point."""


class SingularPointError(HyperbilliardsError):
    """Boundary normal is light-like; the billiard map is undefined here."""


class DegenerateReflectionError(HyperbilliardsError):
    """Reflection undefined (normal with vanishing self-product)."""


class DegenerateTangencyError(HyperbilliardsError):
    """Chord equation degenerates (grazing start with no usable data)."""


class UnsupportedTableError(HyperbilliardsError):
    """Operation restricted to the other boundary kind."""


class ZeroConstantTermError(HyperbilliardsError):
    """Series square root needs a nonzero value at the expansion point."""


class NoTangentDirectionError(HyperbilliardsError):
    """No real direction at this point is tangent to the requested conic."""
