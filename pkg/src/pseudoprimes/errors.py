"""Exception types shared across the package."""


class CapacityError(Exception):
    """A requested computation exceeds a documented size or cost guard."""


class InputFormatError(ValueError):
    """An external input stream violates its documented format."""
