"""Entropy functionals of polynomials whose zeros all lie on the unit circle."""

import json
from fractions import Fraction

from . import _circent
from ._circent import (
    CircentError,
    CirclePoly,
    extremal_entropy_value,
    gamma_remainder,
    h_fourier_quadrature,
    log_pair_quadrature,
    log_pair_spectral,
    normalize_self_inversive,
    objective,
    parseval_norm,
    perturb_roots,
    polar_factor,
    ratio_functional,
    reflect,
)

__all__ = [
    "CircentError",
    "CirclePoly",
    "coalescence",
    "extremal_entropy_value",
    "gamma_remainder",
    "h_fourier",
    "h_fourier_quadrature",
    "log_pair_quadrature",
    "log_pair_spectral",
    "minimize",
    "moments",
    "normalize_self_inversive",
    "objective",
    "parseval_norm",
    "perturb_roots",
    "polar_factor",
    "ratio_functional",
    "reflect",
    "suite_summary",
    "telescoping_closed_form",
    "telescoping_sum",
    "verify",
]


def h_fourier(k):
    return Fraction(_circent.h_fourier(k))


def telescoping_sum(n):
    return Fraction(_circent.telescoping_sum(n))


def telescoping_closed_form(n):
    return Fraction(_circent.telescoping_closed_form(n))


def verify(p, cross_check=False, precision=53):
    """Full report as a dict with the same keys as the CLI output."""
    return json.loads(_circent.verify_json(p, cross_check, precision))


def moments(p, extra=6, precision=53):
    data = json.loads(_circent.moments_json(p, extra, precision))
    data["moments"] = [complex(re, im) for re, im in data["moments"]]
    data["over_range"] = [complex(re, im) for re, im in data["over_range"]]
    return data


def minimize(n, restarts=8, seed=1):
    return json.loads(_circent.minimize_json(n, restarts, seed))


def coalescence(p, schedule, seed=0):
    return json.loads(_circent.coalescence_json(p, list(schedule), seed))


def suite_summary(degree_min, degree_max, count, seed=42):
    return json.loads(_circent.suite_summary_json(degree_min, degree_max, count, seed))
