"""Exception types shared across the package.

Every error raised by rasterbound derives from :class:`RasterBoundError`, so
callers (and the HTTP service) can catch library failures in one place.
"""


class RasterBoundError(Exception):
    """Base class for all rasterbound errors."""


class GeometryError(RasterBoundError):
    """Structurally invalid geometry (too few vertices, zero area, NaN)."""


class DomainError(RasterBoundError):
    """A value falls outside the configured grid domain or is empty."""


class CapacityError(RasterBoundError):
    """A requested resolution exceeds what the code space / canvas supports."""


class ConfigError(RasterBoundError):
    """Inconsistent or unsupported configuration (mixed grids, bad widths)."""


class SchemaError(RasterBoundError):
    """Reference to an attribute that does not exist in the dataset."""


class ShapeError(RasterBoundError):
    """Canvas operands do not have matching dimensions or placement."""


class UnsupportedTransform(RasterBoundError):
    """Affine transform outside the supported pixel-exact family."""
