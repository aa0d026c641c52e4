"""Exact Hodge decomposition tables for monomial convolution algebras.

Thin wrapper over the compiled ``_core`` extension: reports cross the
boundary as JSON strings and are parsed here, so the python surface is
plain dicts and lists.
"""

import json

from . import _core

__all__ = ["hodge_table", "hodge_table_csv", "verify", "derivation_norms"]


def hodge_table(k, n_max, deg_max, module="regular", cap=200000, jobs=1):
    """Dimension table with embedded self-checks, as a dict.

    ``module`` is one of ``regular``, ``trunc:M``, ``var:I``.
    """
    text = _core.hodge_table_json(k, n_max, deg_max, module, cap, jobs, False)
    return json.loads(text)


def hodge_table_csv(k, n_max, deg_max, module="regular", cap=200000, jobs=1):
    """The cells of :func:`hodge_table` as CSV text."""
    return _core.hodge_table_json(k, n_max, deg_max, module, cap, jobs, True)


def verify(suite, k=-1, n_max=-1, deg_max=-1, p=-1):
    """Run a named verification suite; negative ranges pick the default.

    Returns the checks-only report as a dict.
    """
    return json.loads(_core.run_suite_json(suite, k, n_max, deg_max, p))


def derivation_norms(p, n_max):
    """Norms of the p-th coordinate derivation on degree blocks 1..n_max."""
    return list(_core.derivation_norms(p, n_max))
