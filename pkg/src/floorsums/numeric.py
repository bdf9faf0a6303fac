"""Exact integer and rational primitives shared by every other module.

Integers are plain Python ints (arbitrary precision).  Rationals are
``fractions.Fraction``: always stored in lowest terms with a positive
denominator, which is exactly the normalization contract the rest of the
package relies on.
"""

from fractions import Fraction

from .errors import InvalidArgumentError, NotInvertibleError

# Public alias: every exact fractional value in this package is one of these.
Rational = Fraction

try:
    # Internal fast rational type for the recursion-heavy code paths.
    # Semantically identical to Fraction (exact, auto-normalized).
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def to_rational(x) -> Fraction:
    """Convert an internal rational (mpq or Fraction) to the public type."""
    if isinstance(x, Fraction):
        return x
    return Fraction(int(x.numerator), int(x.denominator))


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with g = gcd(x, y) > 0 and u*x + v*y = g."""
    if x == 0 and y == 0:
        raise InvalidArgumentError("ext_gcd(0, 0) is undefined")
    old_r, r = abs(x), abs(y)
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if x < 0:
        old_u = -old_u
    if y < 0:
        old_v = -old_v
    return old_r, old_u, old_v


def mod_inverse(x: int, m: int) -> int:
    """Inverse of x modulo m, in [0, m).  mod_inverse(x, 1) == 0."""
    if m < 1:
        raise InvalidArgumentError(f"modulus must be >= 1, got {m}")
    try:
        return pow(x, -1, m)
    except ValueError:
        raise NotInvertibleError(f"{x} is not invertible modulo {m}") from None


def floor_mod(x: int, m: int) -> int:
    """Remainder of x modulo m in [0, m), with floored-division semantics.

    Python's % already floors, so negative dividends land in [0, m) as
    required (e.g. floor_mod(-15, 5) == 0, floor_mod(-20, 3) == 1).
    """
    if m < 1:
        raise InvalidArgumentError(f"modulus must be >= 1, got {m}")
    return x % m


def sum_first(h: int) -> int:
    """1 + 2 + ... + h = h(h+1)/2; 0 for h == 0."""
    if h < 0:
        raise InvalidArgumentError(f"bound must be >= 0, got {h}")
    return h * (h + 1) // 2


def sum_squares(h: int) -> int:
    """1^2 + 2^2 + ... + h^2 = h(h+1)(2h+1)/6; 0 for h == 0."""
    if h < 0:
        raise InvalidArgumentError(f"bound must be >= 0, got {h}")
    return h * (h + 1) * (2 * h + 1) // 6
