"""Exact Hecke-algebra character tables and twisted Markov traces of S_n."""

import json as _json

from ._core import (
    Partition,
    RatFun,
    __version__,
    check_names,
    enumerate_partitions,
    graded_matrix,
    hecke_char_table,
    markov_trace_table,
    schur_spec_product,
    sn_char_table,
)
from ._core import _run_check_json


def verify(check, n, N=1):
    """Run a named identity check; returns the report as a dict."""
    return _json.loads(_run_check_json(check, n, N))


__all__ = [
    "Partition",
    "RatFun",
    "check_names",
    "enumerate_partitions",
    "graded_matrix",
    "hecke_char_table",
    "markov_trace_table",
    "schur_spec_product",
    "sn_char_table",
    "verify",
]
