"""Exact checks and invariants for vertex algebroids given by structure constants."""

import json
from fractions import Fraction

from . import _valab
from ._valab import (
    AlgebroidFile,
    ValabError,
    corpus_ids,
    ex61,
    ex62,
    ex63,
    is_gorenstein,
    load_file,
    parse_file,
    semisimple,
)

__all__ = [
    "AlgebroidFile",
    "ValabError",
    "check",
    "corpus_ids",
    "ex61",
    "ex62",
    "ex63",
    "heisenberg",
    "invariants",
    "is_gorenstein",
    "jacobson_radical",
    "load_file",
    "mutate",
    "parse_file",
    "semiconformal",
    "semisimple",
    "socle",
    "solve_l1",
]


def _report(raw):
    out = json.loads(raw["report_json"])
    out["exit_code"] = raw["exit_code"]
    out["errors"] = list(raw["errors"])
    return out


def _fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def check(file):
    return _report(_valab.check(file))


def invariants(file):
    return _report(_valab.invariants(file))


def semiconformal(file):
    return _report(_valab.semiconformal(file))


def mutate(file, seed, count):
    return _report(_valab.mutate(file, seed, count))


def jacobson_radical(file):
    return _fractions(_valab.jacobson_radical(file))


def socle(file):
    return _fractions(_valab.socle(file))


def solve_l1(file):
    raw = _valab.solve_l1(file)
    return {
        "particular": [Fraction(x) for x in raw["particular"]],
        "directions": _fractions(raw["directions"]),
    }


def heisenberg(file):
    raw = _valab.heisenberg(file)
    out = {k: raw[k] for k in ("normalized",)}
    for key in ("g", "h_prime", "h"):
        if key in raw:
            out[key] = [Fraction(x) for x in raw[key]]
    out["rho"] = Fraction(raw["rho"])
    out["beta"] = Fraction(raw["beta"])
    return out
