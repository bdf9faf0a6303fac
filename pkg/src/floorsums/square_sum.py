"""S(a,b;h), T1(a,b;h) = sum {ib/a}^2 and sum r_i^2 via reciprocity.

Define S(a,b;h) = (a/2)*T1(a,b;h) + (a/2 + 1)*sum floor(ib/a).  For coprime
a > b the reciprocity

    S(a,b;h) + S(b,a;H) = eta2(a,b,h)

swaps the arguments with a strictly smaller bound H <= b-1, and for b >= a
the division step

    S(a,b;h) = S(a, b mod a; h) + floor(b/a)*h(h+1)(a+2)/4

shrinks b, so alternating the two walks down a Euclidean remainder chain in
O(log max(a,b)) steps.  All arithmetic is exact rational.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError, InvalidArgumentError
from .floor_sum import floor_sum
from .models import Instance
from .numeric import _Q, floor_mod, mod_inverse, sum_first, to_rational
from .trace import RULE_BASE, RULE_DIVISION, RULE_PERIOD, RULE_RECIPROCITY


@dataclass(frozen=True)
class ReciprocityTerms:
    """All intermediate quantities of one reciprocity application."""

    n0: int
    n: int
    n1: int
    H: int
    alpha: int
    beta: int
    gamma: Fraction
    eta1: Fraction
    eta2: Fraction


def _canonical(a, b, h):
    if a < 1 or b < 0 or h < 0:
        raise InvalidArgumentError(f"need a >= 1, b >= 0, h >= 0, got ({a}, {b}, {h})")
    g = math.gcd(a, b)
    return (a, b, h) if g <= 1 else (a // g, b // g, h)


def _terms(a, b, h):
    # Internal variant of reciprocity_terms that keeps the fast rational type.
    n0 = floor_mod(-b * (h + 1), a)
    n = a * b - a + n0
    n1 = floor_mod(-n * mod_inverse(a, b), b)
    if n1 == 0:
        # Remainder 0 is promoted to b so that H = n1 - 1 stays >= 0; the
        # reciprocity is false under the H = -1 reading.
        n1 = b
    big_h = n1 - 1

    alpha = a * b * (a + b - 2) // 2
    beta3 = 3 * a * b * (a - 1) * (b - 1) // 2 + a * b * ((a - 1) * (a - 2) + (b - 1) * (b - 2))
    if beta3 % 3:
        raise InternalInvariantError("beta is not integral")
    beta = beta3 // 3
    ab = a * b
    gamma = _Q(2 * alpha * alpha - ab * beta, 2 * ab**3)

    eta1 = (
        (h + big_h + 1)
        + n * gamma
        + _Q(n * (n + 3) * (a + b - 2), 4 * ab)
        + _Q(n * (n * n + 6 * n + 11), 6 * ab)
        + _Q((h + 1) * (a - 1) * (a - 5), 12 * a)
        + _Q((big_h + 1) * (b - 1) * (b - 5), 12 * b)
        - _Q(b * h * (h + 1) * (a + 2), 4 * a)
        - _Q(a * big_h * (big_h + 1) * (b + 2), 4 * b)
    )
    eta2 = (
        _Q((n + 1) * (n + 2), 2)
        + _Q((a - 1) * (b - 1) * (2 * ab - a - b - 6 * n - 7), 12)
        - eta1
    )
    return n0, n, n1, big_h, alpha, beta, gamma, eta1, eta2


def reciprocity_terms(a: int, b: int, h: int) -> ReciprocityTerms:
    """Evaluate n0, n, n1, H, alpha, beta, gamma, eta1, eta2 for one swap.

    Requires a >= 2, b >= 1, gcd(a, b) = 1, h >= 0.
    """
    if a < 2 or b < 1 or h < 0:
        raise InvalidArgumentError(f"need a >= 2, b >= 1, h >= 0, got ({a}, {b}, {h})")
    if math.gcd(a, b) != 1:
        raise InvalidArgumentError(f"a and b must be coprime, got ({a}, {b})")
    n0, n, n1, big_h, alpha, beta, gamma, eta1, eta2 = _terms(a, b, h)
    return ReciprocityTerms(
        n0, n, n1, big_h, alpha, beta,
        to_rational(gamma), to_rational(eta1), to_rational(eta2),
    )


def _s_chain(a, b, h, trace):
    # Requires gcd(a,b) = 1 and h < a unless a == 1 or b == 0 or h == 0.
    total = _Q(0)
    sign = 1
    while True:
        if h == 0 or b == 0:
            if trace is not None:
                trace.record(RULE_BASE, a, b, h, {}, 0)
            return total
        if a == 1:
            c = _Q(3 * b * sum_first(h), 2)
            total += sign * c
            if trace is not None:
                trace.record(RULE_BASE, a, b, h, {}, to_rational(sign * c))
            return total
        if b == 1 and h < a:
            # All floors vanish: S = T1*a/2 = sum (i/a)^2 * a/2.
            c = _Q(h * (h + 1) * (2 * h + 1), 12 * a)
            total += sign * c
            if trace is not None:
                trace.record(RULE_BASE, a, b, h, {}, to_rational(sign * c))
            return total
        if b >= a:
            q, r = divmod(b, a)
            c = _Q(q * h * (h + 1) * (a + 2), 4)
            total += sign * c
            if trace is not None:
                trace.record(RULE_DIVISION, a, b, h, {"q": q, "r": r}, to_rational(sign * c))
            b = r
            continue
        n0, n, n1, big_h, _alpha, _beta, _gamma, _eta1, eta2 = _terms(a, b, h)
        total += sign * eta2
        if trace is not None:
            trace.record(
                RULE_RECIPROCITY, a, b, h,
                {"n0": n0, "n": n, "n1": n1, "H": big_h},
                to_rational(sign * eta2),
            )
        a, b, h = b, a, big_h
        sign = -sign


def _s_value_q(a, b, h, trace):
    # Full S computation returning the fast rational type.
    a, b, h = _canonical(a, b, h)
    if h >= a and a >= 2 and b >= 1:
        # T1 is periodic in h with period a (full-period value
        # (a-1)(2a-1)/(6a)) and the floor sum reduces in closed form, so
        # only the tail h mod a enters the reciprocity chain.
        q_blocks, m = divmod(h, a)
        delta_q = floor_sum(Instance(a, b, h)) - floor_sum(Instance(a, b, m))
        head = _Q(q_blocks * (a - 1) * (2 * a - 1), 12) + _Q(a + 2, 2) * delta_q
        if trace is not None:
            trace.record(RULE_PERIOD, a, b, h, {"Q": q_blocks, "m": m}, to_rational(head))
        return head + _s_chain(a, b, m, trace)
    return _s_chain(a, b, h, trace)


def s_value(a: int, b: int, h: int, trace=None) -> Fraction:
    """Exact S(a,b;h) = (a/2)*T1 + (a/2 + 1)*sum floor(ib/a)."""
    return to_rational(_s_value_q(a, b, h, trace))


def t1(a: int, b: int, h: int, trace=None) -> Fraction:
    """Exact T1(a,b;h) = sum_{i=1..h} {ib/a}^2, extracted from S."""
    a, b, h = _canonical(a, b, h)
    s = _s_value_q(a, b, h, trace)
    q = floor_sum(Instance(a, b, h), trace)
    return to_rational((2 * s - (a + 2) * q) / a)


def remainder_square_sum(a: int, b: int, h: int) -> int:
    """Exact sum_{i=1..h} r_i^2 = a^2 * T1(a,b;h) for the canonical (a,b)."""
    a, b, h = _canonical(a, b, h)
    value = t1(a, b, h) * a * a
    if value.denominator != 1:
        raise InternalInvariantError(f"a^2*T1 is not integral for ({a}, {b}, {h}): {value}")
    return int(value)
