"""Discrete-series invariants of affine Hecke algebras with unequal parameters."""

from fractions import Fraction

from . import _hecke
from ._hecke import (
    InternalError,
    PreconditionError,
    UsageError,
    bipartitions,
    elliptic_class_count,
    point_for_row,
    residual_points,
    singular_locus,
    table_checksum,
)

__all__ = [
    "InternalError",
    "PreconditionError",
    "UsageError",
    "acceptance",
    "bipartitions",
    "cn_module",
    "elliptic_class_count",
    "fdeg_c",
    "mass",
    "point_for_row",
    "reconcile",
    "reeder",
    "residual_points",
    "run",
    "sign_graded",
    "singular_locus",
    "table_checksum",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _at(at):
    if isinstance(at, str):
        return dict(item.split("=", 1) for item in at.split(",") if item)
    return {k: _q(v) for k, v in at.items()}


def run(*args):
    """Run a command line; returns (exit_code, stdout, stderr)."""
    return _hecke.run([str(a) for a in args])


def mass(type, row, at, v=2):
    return _hecke.mass(type, row, _at(at), _q(v))


def sign_graded(type, row, at):
    return _hecke.sign_graded(type, row, _at(at))


def reeder(type, row, q=(2, 3, 5)):
    return _hecke.reeder(type, row, [_q(x) for x in q])


def cn_module(bp, params):
    if not isinstance(params, str):
        params = ",".join(_q(x) for x in params)
    return _hecke.cn_module(bp, params)


def fdeg_c(bp, m_plus, m_minus, v=2):
    return _hecke.fdeg_c(bp, _q(m_plus), _q(m_minus), _q(v))


def reconcile(type):
    return _hecke.reconcile(type)


def acceptance(seedless=False, only=()):
    return _hecke.acceptance(seedless, list(only))
