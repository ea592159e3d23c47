"""Python bindings for the latgraph C++ library."""

import json

from ._latgraph import (
    ParseError,
    cs_experiment,
    frame_report,
    mutual_coherence,
    normalize,
    simplex_etf_csv,
    steiner_etf,
    welch_bound,
)
from . import _latgraph


def graph_lattice(expr, eigenvalue=None, identify=True):
    if eigenvalue is not None:
        eigenvalue = str(eigenvalue)
    return json.loads(_latgraph.graph_lattice(expr, eigenvalue, identify))


def table1():
    return json.loads(_latgraph.table1())


def table2(n_max=7):
    return json.loads(_latgraph.table2(n_max))


def identify_gram(text):
    return json.loads(_latgraph.identify_gram(text))


__all__ = [
    "ParseError",
    "cs_experiment",
    "frame_report",
    "graph_lattice",
    "identify_gram",
    "mutual_coherence",
    "normalize",
    "simplex_etf_csv",
    "steiner_etf",
    "table1",
    "table2",
    "welch_bound",
]
