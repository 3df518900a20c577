"""Sparse multivariate polynomials with exact coefficients and optional variable weights."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .cyclotomic import Cyclotomic


def as_scalar(x):
    """Coerce to an exact scalar (Fraction or Cyclotomic); floats are refused."""
    if isinstance(x, (Fraction, Cyclotomic)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


class MultiPoly:
    """Polynomial as a map from exponent tuples to nonzero coefficients.

    ``variables`` fixes the coordinate order; ``weights`` default to 1.
    Two polynomials can only be combined when their variable tables agree.
    """

    __slots__ = ("variables", "weights", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None,
                 weights: Sequence[int] | None = None):
        self.variables = tuple(variables)
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.variables)
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.variables) or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")
            c = as_scalar(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -----------------------------------------------------
    @classmethod
    def gens(cls, variables: Sequence[str], weights: Sequence[int] | None = None) -> tuple[MultiPoly, ...]:
        n = len(variables)
        return tuple(
            cls(variables, {tuple(int(i == j) for j in range(n)): 1}, weights) for i in range(n)
        )

    @classmethod
    def constant(cls, variables: Sequence[str], c, weights: Sequence[int] | None = None) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c}, weights)

    def _like(self, terms) -> MultiPoly:
        p = MultiPoly.__new__(MultiPoly)
        p.variables = self.variables
        p.weights = self.weights
        p.terms = {e: c for e, c in terms.items() if c}
        return p

    def _check(self, other: MultiPoly):
        if other.variables != self.variables or other.weights != self.weights:
            raise ValueError("polynomials live in different variable tables")

    def _lift(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.variables, as_scalar(other), self.weights)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_scalar(other)
            return self._like({e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1, self.weights)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def weighted_degree_of(self, exp: tuple) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def degree(self) -> int:
        """Weighted total degree (max over terms); -1 for the zero polynomial."""
        return max((self.weighted_degree_of(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.weighted_degree_of(e) for e in self.terms}) <= 1

    def used_variables(self) -> set[str]:
        return {v for e in self.terms for v, k in zip(self.variables, e) if k}

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading(self) -> tuple[tuple, object]:
        return self.sorted_terms()[0]

    def coefficient(self, exp: tuple):
        return self.terms.get(tuple(exp), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def evaluate(self, values: Mapping[str, object]):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.variables, e):
                if k:
                    t = t * as_scalar(values[v]) ** k
            total = total + t
        return total


def poly_substitute(p: MultiPoly, assignment: Mapping[str, object]) -> MultiPoly:
    """Replace each variable of ``p`` by a polynomial (all in one target table)."""
    missing = p.used_variables() - set(assignment)
    if missing:
        raise KeyError(f"unassigned variables: {sorted(missing)}")
    images = [assignment.get(v) for v in p.variables]
    target = next((a for a in images if isinstance(a, MultiPoly)), None)
    if target is None:
        return MultiPoly.constant(p.variables, p.evaluate(assignment), p.weights)
    vars_, weights = target.variables, target.weights
    one = MultiPoly.constant(vars_, 1, weights)
    imgs = [a if isinstance(a, MultiPoly) or a is None else one * a for a in images]
    power_cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in power_cache:
            power_cache[key] = imgs[i] ** k
        return power_cache[key]

    result = MultiPoly(vars_, {}, weights)
    for e, c in p.terms.items():
        t = one * c
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        result = result + t
    return result


def poly_compose_linear(F: MultiPoly, M) -> MultiPoly:
    """F(M x): variable i is replaced by the linear form given by row i of M."""
    n = len(F.variables)
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError(f"matrix must be {n}x{n} to act on {F.variables}")
    xs = MultiPoly.gens(F.variables, F.weights)
    assignment = {}
    for i, v in enumerate(F.variables):
        form = MultiPoly(F.variables, {}, F.weights)
        for j in range(n):
            if M[i][j]:
                form = form + xs[j] * M[i][j]
        assignment[v] = form
    return poly_substitute(F, assignment)


# -- univariate helpers for binary forms --------------------------------------

def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _univariate_gcd(f: list, g: list) -> list:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        r = list(f)
        while len(r) >= len(g) and r:
            q = r[-1] / g[-1]
            shift = len(r) - len(g)
            for i, c in enumerate(g):
                r[shift + i] = r[shift + i] - q * c
            r.pop()
            _trim(r)
        f, g = g, r
    return f


def _dehomogenize(f: MultiPoly) -> tuple[list, object]:
    """Return (coefficients of f(t, 1) lowest first, coefficient of x^deg)."""
    if len(f.variables) != 2:
        raise ValueError("binary form expected")
    if not f.is_homogeneous():
        raise ValueError("binary form must be homogeneous")
    d = f.degree()
    coeffs = [Fraction(0)] * (d + 1)
    for (i, _), c in f.terms.items():
        coeffs[i] = c
    return coeffs, f.coefficient((d, 0))


def binary_forms_common_root(forms: Sequence[MultiPoly]) -> bool:
    """True iff all nonzero binary forms in ``forms`` vanish at one point of P^1."""
    nonzero = [f for f in forms if f]
    if not nonzero:
        raise ValueError("all forms are zero")
    coeff_lists = []
    at_infinity = True
    for f in nonzero:
        coeffs, lead = _dehomogenize(f)
        coeff_lists.append(coeffs)
        at_infinity = at_infinity and not lead
    g = coeff_lists[0]
    for c in coeff_lists[1:]:
        g = _univariate_gcd(g, c)
    return at_infinity or len(_trim(list(g))) > 1


def binary_form_common_root(f: MultiPoly, g: MultiPoly) -> bool:
    """True iff the binary forms f, g share a root in P^1 over the algebraic closure."""
    if not f or not g:
        raise ValueError("zero polynomial has no well-defined root set")
    return binary_forms_common_root([f, g])
