"""Exception hierarchy shared by all wedgelab modules."""


class WedgeLabError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WedgeLabError):
    """Bad user input: malformed files, invalid parameters, rejected data."""


class DuplicateEntryError(InputError):
    """An input set contained the same point or value twice."""


class OriginPointError(InputError):
    """A point set contained the origin, which is reserved as the triangle apex."""


class FormatError(InputError):
    """A data file did not match its documented text format."""


class GeneratorError(InputError):
    """A dataset generator could not satisfy its parameters."""


class CapExceededError(WedgeLabError):
    """An exhaustive-enumeration routine was asked to exceed its size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class CollinearPairError(WedgeLabError):
    """A transformation line was requested for a collinear (wedge-zero) pair."""


class RotationExhaustedError(WedgeLabError):
    """No rotation in the configured enumeration made the set generic."""


class ProjectionError(WedgeLabError):
    """A 4D line cannot be projected to 3D by dropping the last coordinate."""


class X4DirectionError(ProjectionError):
    """The line is parallel to the dropped axis; its shadow is a point."""


class X1SectionError(ProjectionError):
    """The line lies in the first-coordinate-zero section, where the inverse
    map x4 = (1 + x2*x3)/x1 is undefined."""


class CoincidentLinesError(WedgeLabError):
    """Two supposedly distinct family lines turned out to be the same line."""
