"""Exact rational helpers: integer roots, cubic discriminants, the sextic criterion."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly import MultiPoly, as_scalar


def integer_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n, or None. Negative n allowed for odd k."""
    if k < 1:
        raise ValueError("root degree must be positive")
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    # Newton iteration from an overestimate
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def rational_root(q, k: int) -> Fraction | None:
    """Rational c with c**k == q when one exists (the positive one for even k)."""
    q = as_scalar(q)
    if not isinstance(q, Fraction):
        raise TypeError("rational input required")
    num = integer_root(q.numerator, k)
    den = integer_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def rational_cube_root(q) -> Fraction | None:
    """Return c with c**3 == q, or None when q is not a rational cube."""
    return rational_root(q, 3)


def _univariate_coeffs(p: MultiPoly) -> list:
    if len(p.variables) != 1:
        raise ValueError("univariate polynomial expected")
    d = p.degree()
    coeffs = [Fraction(0)] * (d + 1)
    for (e,), c in p.terms.items():
        coeffs[e] = c
    return coeffs


def cubic_discriminant(p: MultiPoly) -> Fraction:
    """Discriminant of a cubic, computed as -4P^3 - 27Q^2 of its depressed form.

    Non-monic input a*t^3 + ... is handled by scaling: disc = a^4 * disc(p / a).
    """
    coeffs = _univariate_coeffs(p)
    if len(coeffs) != 4:
        raise ValueError(f"cubic expected, got degree {len(coeffs) - 1}")
    d, c, b, a = coeffs
    b, c, d = b / a, c / a, d / a
    # t = s - b/3 gives s^3 + P s + Q
    P = c - b * b / 3
    Q = 2 * b ** 3 / 27 - b * c / 3 + d
    return a ** 4 * (-4 * P ** 3 - 27 * Q ** 2)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(coeffs: list) -> list[Fraction]:
    """Rational roots of a polynomial with rational coefficients (lowest first)."""
    coeffs = [as_scalar(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) < 2:
        return []
    roots = []
    while not coeffs[0]:
        roots.append(Fraction(0))
        coeffs = coeffs[1:]
        if len(coeffs) < 2:
            return roots
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    lead, const = ints[-1], ints[0]
    found = set()
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in found:
                    continue
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if not val:
                    found.add(cand)
    return roots + sorted(found)


def sextic_reducibility_criterion(b) -> bool:
    """Whether there are rationals n, m with b^2 = n^3 and b = m^3 - 3mn.

    From b^2 = n^3 with s = b/n one gets s^3 = b and n = s^2, so the search
    reduces to a cube test on b and rational roots of m^3 - 3 s^2 m - b.
    """
    b = as_scalar(b)
    if not b:
        raise ValueError("b must be nonzero")
    s = rational_cube_root(b)
    if s is None:
        return False
    return bool(rational_roots([-b, -3 * s * s, 0, 1]))
