"""Quaternionic boundary Nevanlinna-Pick interpolation."""

import json

from ._qnp import QnpError, Quaternion, Solution, geometric_sum
from . import _qnp

__all__ = ["QnpError", "Quaternion", "Solution", "geometric_sum", "check", "solve", "solve_report", "verify"]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def solve(problem):
    """Solve a problem (dict or JSON text) and return the Solution object."""
    return _qnp.solve(_text(problem))


def _run(fn, *args):
    code, report, message = fn(*map(_text, args))
    return code, json.loads(report), message


def check(problem):
    """Pick matrix report as (exit_code, report, message), with the CLI's exit codes."""
    return _run(_qnp.check_command, problem)


def solve_report(problem):
    return _run(_qnp.solve_command, problem)


def verify(problem, solution):
    return _run(_qnp.verify_command, problem, solution)
