"""Bounded-digit continued fractions.

Thin wrappers over the C++ core. Exact values travel as text and come back
as ``int`` / ``fractions.Fraction``; fit and solver reports come back as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CountTable,
    DomainError,
    brute_force_real,
    default_alphabet,
    enumerate_real,
    is_zaremba_denominator,
    leading_eigenvalue,
    omega_count,
    sigma_count,
    thickened_count,
)

__all__ = [
    "CountTable",
    "DomainError",
    "brute_force_real",
    "cf_expand",
    "cf_expand_complex",
    "default_alphabet",
    "enumerate_complex",
    "enumerate_real",
    "estimate_B",
    "fit_exponent",
    "height_squared",
    "is_zaremba_denominator",
    "leading_eigenvalue",
    "omega_count",
    "omega_fit",
    "reconstruct",
    "reconstruct_complex",
    "sigma_count",
    "smoothing_experiment",
    "solve_dimension",
    "solve_pole",
    "thickened_count",
]


def _text(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def cf_expand(x):
    """Partial quotients of a rational in [0, 1)."""
    return [int(a) for a in _core.cf_expand(_text(x))]


def reconstruct(digits):
    return Fraction(_core.reconstruct([str(int(a)) for a in digits]))


def cf_expand_complex(d, z):
    """Digits of z in Q(sqrt(-d)), as strings like "2+1w"."""
    return _core.cf_expand_complex(d, _text(z))


def reconstruct_complex(d, digits):
    return _core.reconstruct_complex(d, list(digits))


def height_squared(d, z):
    return int(_core.height_squared(d, _text(z)))


def enumerate_complex(d, N, alphabet=None, norm_bound=8, collect_lengths=True, threads=1):
    if alphabet is None:
        alphabet = default_alphabet(d, norm_bound)
    return _core.enumerate_complex(d, list(alphabet), N, collect_lengths, threads)


def solve_dimension(A, tol=1e-12, m=32):
    return json.loads(_core.solve_dimension(A, tol, m))


def solve_pole(A, w, tol=1e-12, m=32):
    return json.loads(_core.solve_pole(A, w, tol, m))


def fit_exponent(samples):
    """samples: iterable of (N, count)."""
    return json.loads(_core.fit_exponent([(int(n), float(c)) for n, c in samples]))


def omega_fit(table, grid):
    return json.loads(_core.omega_fit(table, list(grid)))


def smoothing_experiment(table, delta, gamma, grid):
    return json.loads(_core.smoothing_experiment(table, delta, gamma, list(grid)))


def estimate_B(table, w, s0, grid):
    return _core.estimate_B(table, w, s0, list(grid))
