"""Exact certification of real-rootedness from second quotients.

Rationals go in as ``Fraction``, ``int`` or strings such as ``"7/2"`` and
come back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExhausted, Error, HypothesisError, InvalidArgument

__version__ = _core.__version__

__all__ = [
    "BudgetExhausted", "Error", "HypothesisError", "InvalidArgument",
    "quotients", "normalize", "from_quotients", "is_hyperbolic", "count_real_roots",
    "certify", "build_witness", "verify_certificate", "beta_bound", "condition_b",
    "lemma_statement_a", "theta_section", "theta_threshold", "sweep",
]


def _s(x):
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, an int or a string")
    return str(x)


def _ss(xs):
    return [_s(x) for x in xs]


def _fs(xs):
    return [Fraction(x) for x in xs]


def quotients(coeffs):
    return _fs(_core.quotients(_ss(coeffs)))


def normalize(coeffs):
    return _fs(_core.normalize(_ss(coeffs)))


def from_quotients(q, a0=1, a1=1):
    return _fs(_core.from_quotients(_ss(q), _s(a0), _s(a1)))


def is_hyperbolic(coeffs):
    return _core.is_hyperbolic(_ss(coeffs))


def count_real_roots(coeffs, lo=None, hi=None):
    """Distinct real roots in (lo, hi]; None means infinite."""
    return _core.count_real_roots(_ss(coeffs), None if lo is None else _s(lo), None if hi is None else _s(hi))


def certify(coeffs):
    return json.loads(_core.certify(_ss(coeffs)))


def build_witness(coeffs, alpha=None, budget=200):
    """Certificate dict with "points", "windows" and "mode" (rationals as strings)."""
    return json.loads(_core.build_witness(_ss(coeffs), None if alpha is None else _s(alpha), budget))


def verify_certificate(coeffs, certificate, signs_only=False):
    """Returns (valid, failing_index, reason)."""
    return _core.verify_certificate(_ss(coeffs), json.dumps(certificate), signs_only)


def beta_bound(alpha):
    return Fraction(_core.beta_bound(_s(alpha)))


def condition_b(alpha, beta):
    return _core.condition_b(_s(alpha), _s(beta))


def lemma_statement_a(alpha, beta, resolution=10):
    return _core.lemma_statement_a(_s(alpha), _s(beta), resolution)


def theta_section(a_squared, degree):
    return _fs(_core.theta_section(_s(a_squared), degree))


def theta_threshold(degree, tol="1/10000"):
    return Fraction(_core.theta_threshold(degree, _s(tol)))


def sweep(alpha_grid, beta_grid, degrees, samples=1, sampler="constant", seed=0, threads=0):
    """CSV text: alpha,beta,degree,sampler,n_samples,n_hyperbolic,inside_t1,inside_tc."""
    return _core.sweep(_ss(alpha_grid), _ss(beta_grid), list(degrees), samples, sampler, seed, threads)
