"""Exact verification of finite automorphism groups of rational surfaces over Q.

Subpackages: ``exactalg`` (scalars, polynomials), ``projlin`` (projective
linear algebra), ``groupkit`` (finite group closure), ``picard`` (Picard
lattice combinatorics), ``delpezzo`` (surface models) and ``verifier``
(suites, reports and the ``cremonaq`` command).
"""

__version__ = "0.1.0"
