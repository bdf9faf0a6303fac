"""Closed forms for two-generator nonrepresentable numbers.

For coprime a, b, the numbers not expressible as ax + by with x, y >= 0
have count (a-1)(b-1)/2 (Sylvester) and sum (a-1)(b-1)(2ab-a-b-1)/12
(Brown-Shiue).  Combining the two also counts solutions of
ax + by + z + u = n in closed form for 0 <= n < ab.
"""

import math
from dataclasses import dataclass

from .errors import InternalInvariantError, InvalidArgumentError, OutOfDomainError


def _check_coprime(a: int, b: int):
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"need a, b >= 1, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise InvalidArgumentError(f"a and b must be coprime, got ({a}, {b})")


def nonrep_count(a: int, b: int) -> int:
    """Number of nonnegative integers not representable as ax + by."""
    _check_coprime(a, b)
    return (a - 1) * (b - 1) // 2


def nonrep_sum(a: int, b: int) -> int:
    """Sum of the nonrepresentable numbers."""
    _check_coprime(a, b)
    num = (a - 1) * (b - 1) * (2 * a * b - a - b - 1)
    if num % 12:
        raise InternalInvariantError(f"nonrep_sum not integral for ({a}, {b})")
    return num // 12


def _tail_correction(a: int, b: int, n: int) -> int:
    """sum of (i - n - 1) over nonrepresentable i > n.

    The closed form below subtracts (n + 1 - i) for every nonrepresentable i,
    including those above n that never occur in the actual count, so this is
    exactly its overcount.  Nonrepresentables mirror representables under
    i -> g - i with g = ab - a - b, so the sum runs over representable
    r = ax + by <= g - n - 1 (each value hit once since r < ab), with the
    inner y-sum in closed form.  Iterates over the larger generator, so at
    most min(a, b) rounds.
    """
    g = a * b - a - b
    m = g - n - 1
    if m < 0:
        return 0
    if a < b:
        a, b = b, a
    total = 0
    for x in range(m // a + 1):
        c = m - a * x
        k = c // b
        total += (k + 1) * c - b * k * (k + 1) // 2
    return total


def four_var_count(a: int, b: int, n: int) -> int:
    """Number of nonnegative integer solutions of ax + by + z + u = n.

    Valid only for 0 <= n < ab, where ax + by = i has 0 or 1 solutions.  The
    closed form alone is exact once n reaches the Frobenius number
    ab - a - b (the only regime the reciprocity machinery uses); below it an
    exact correction term is added.
    """
    _check_coprime(a, b)
    if not 0 <= n < a * b:
        raise OutOfDomainError(f"need 0 <= n < a*b, got n={n}, a*b={a * b}")
    num = 6 * (n + 1) * (n + 2) + (a - 1) * (b - 1) * (2 * a * b - a - b - 6 * n - 7)
    if num % 12:
        raise InternalInvariantError(f"four_var_count not integral for ({a}, {b}, {n})")
    return num // 12 - _tail_correction(a, b, n)


@dataclass(frozen=True)
class FrobeniusSummary:
    a: int
    b: int
    nonrep_count: int
    nonrep_sum: int


def summary(a: int, b: int) -> FrobeniusSummary:
    return FrobeniusSummary(a, b, nonrep_count(a, b), nonrep_sum(a, b))
