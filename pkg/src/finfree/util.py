"""Shared plumbing: enumeration caps and exact-rational coercion."""

from fractions import Fraction

# Defaults for the enumeration guards. Partition and tableau searches grow
# super-polynomially and set partitions grow like Bell numbers, so sizes past
# these need an explicit cap override from the caller.
PARTITION_CAP = 10
SET_PARTITION_CAP = 8
MOMENT_CAP = 6
DIMENSION_CAP = 4
IMMANANT_CAP = 9
MULTILINEAR_CAP = 5


class CapExceededError(ValueError):
    """Raised when an enumeration would exceed its configured cap."""


def check_cap(value, cap, what):
    if value > cap:
        raise CapExceededError(f"{what} {value} exceeds cap {cap}")


def to_fraction(value):
    """Coerce an int, Fraction, or 'p/q' string to Fraction; floats are refused."""
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: exact arithmetic only")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError as exc:
            raise ValueError(f"zero denominator in {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_str(value):
    """Serialize a Fraction as 'p' or 'p/q'."""
    return str(Fraction(value))
