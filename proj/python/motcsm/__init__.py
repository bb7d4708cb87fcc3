"""Exact motivic and Chern-Schwartz-MacPherson identity checks.

The command functions take plain Python objects (dicts, lists) and return the
decoded report dict.
"""

import json

from . import _motcsm
from ._motcsm import (
    InputError,
    MotivicClass,
    affine_class,
    div_by_projective,
    hyperplane_stratum_class,
    projective_class,
    torus_class,
    verify_simplex,
    verify_simplexcor,
)

__all__ = [
    "InputError",
    "MotivicClass",
    "affine_class",
    "blowup_run",
    "chi",
    "cfun_push",
    "div_by_projective",
    "export_system",
    "hyperplane_stratum_class",
    "motivic_eval",
    "projective_class",
    "run_program",
    "stringy_pushforward",
    "surface_report",
    "surface_verify",
    "torus_class",
    "verify_identities",
    "verify_invariance",
    "verify_simplex",
    "verify_simplexcor",
]


def _enc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def verify_identities(which="simplex", d_max=6, mu_max=4, mu0_offset=0):
    return json.loads(_motcsm.cmd_verify_identities(which, d_max, mu_max, mu0_offset))


def verify_invariance(seed=1, cases=200, max_divisors=8):
    return json.loads(_motcsm.cmd_verify_invariance(seed, cases, max_divisors))


def blowup_run(program, emit_snapshots=False):
    return json.loads(_motcsm.cmd_blowup_run(_enc(program), emit_snapshots))


def surface_verify(surface, stage=None):
    return json.loads(_motcsm.cmd_surface_verify(_enc(surface), stage))


def surface_report(surface, stage=None):
    return json.loads(_motcsm.cmd_surface_report(_enc(surface), stage))


def cfun_push(surface, function):
    return json.loads(_motcsm.cmd_cfun_push(_enc(surface), _enc(function)))


def motivic_eval(cls, at=None):
    return json.loads(_motcsm.cmd_motivic_eval(_enc(cls), at))


def chi(system, locus=None):
    return _motcsm.chi(_enc(system), locus)


def run_program(program):
    return json.loads(_motcsm.run_program(_enc(program)))


def export_system(surface, stage=0):
    return json.loads(_motcsm.export_system(_enc(surface), stage))


def stringy_pushforward(surface, stage=0):
    return json.loads(_motcsm.stringy_pushforward(_enc(surface), stage))
