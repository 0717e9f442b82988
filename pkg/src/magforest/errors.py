"""Exception hierarchy shared by every module."""


class MagnetError(Exception):
    """Base class for all domain errors raised by magforest."""


class DimensionError(MagnetError, ValueError):
    """Vectors of mismatched or unsupported dimension."""


class TopologyError(MagnetError, ValueError):
    """A curve is malformed or not simple."""


class SamplingError(MagnetError, ValueError):
    """Invalid boundary sampling request."""


class LocationError(MagnetError, ValueError):
    """A point is not strictly inside the curve."""


class OriginError(MagnetError, ValueError):
    """The zero vector was given where it is excluded."""


class DegenerateMagnetError(MagnetError, ValueError):
    """A magnet sits at the origin, so its direction is undefined."""


class ParseError(MagnetError, ValueError):
    """A scene document could not be parsed."""
