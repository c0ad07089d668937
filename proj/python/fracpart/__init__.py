"""Exact fractional partition coefficients and congruence checks."""

import json
from fractions import Fraction

from . import _core
from ._core import NotLIntegral, PreconditionError

__version__ = _core.__version__


def coefficients(alpha, n):
    """p_alpha(0..n) as Fractions."""
    return [Fraction(s) for s in _core.coefficients(str(Fraction(alpha)), n)]


def eta_power(d, n):
    """a_d(0..n), the coefficients of eta(24/gcd(d,24) tau)^d."""
    return [int(s) for s in _core.eta_power(d, n)]


def padic_ord(x, ell):
    """ell-adic valuation of a rational; None for zero."""
    return _core.padic_ord(str(Fraction(x)), ell)


def is_d_satisfactory(d, ell):
    return _core.is_d_satisfactory(d, ell)


def find_w(ell, v):
    return _core.find_w(ell, v)


def find_residues(d, ell, target_ord, count):
    return [int(s) for s in _core.find_residues(d, ell, target_ord, count)]


def a2_prime_power_sequence(ell, v, i_max):
    return [int(s) for s in _core.a2_prime_power_sequence(ell, v, i_max)]


def verify(family, alpha, ell, r, *, d=0, v=1, n_max=None, threads=1):
    """Build a claim, check it on 0 <= n <= n_max and return the certificate."""
    # strings may be expressions such as "2/(13^13+1)"
    a = alpha if isinstance(alpha, str) else str(Fraction(alpha))
    line = _core.certificate(family, a, d, ell, str(r), v, n_max, threads)
    return json.loads(line)


__all__ = [
    "NotLIntegral",
    "PreconditionError",
    "a2_prime_power_sequence",
    "coefficients",
    "eta_power",
    "find_residues",
    "find_w",
    "is_d_satisfactory",
    "padic_ord",
    "verify",
]
