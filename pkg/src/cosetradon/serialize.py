"""Bit-stable serialization of functions, measures, subspaces, and matrices.

Rationals serialize as canonical "p/q" strings (plain integers stay bare, so
1/2 and 0 come out as "1/2" and "0"); JSON keys are sorted.  Functions and
measures are arrays indexed by element or coset position; subspaces are
arrays of coset-index lists (their partition blocks).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .measures import QuotientMeasure, RhoFunction
from .radon import OperatorMatrix
from .spaces import GroupFunction, InvariantSubspace, QuotientFunction


def rational_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def str_to_rational(text: str) -> Fraction:
    return Fraction(text)


def values_to_json(values: Sequence[Fraction]) -> str:
    return json.dumps([rational_to_str(v) for v in values], sort_keys=True) + "\n"


def function_to_json(f: GroupFunction | QuotientFunction) -> str:
    return values_to_json(f.values)


def rho_to_json(rho: RhoFunction) -> str:
    return values_to_json(rho.values)


def measure_to_json(mu: QuotientMeasure) -> str:
    return values_to_json(mu.weights)


def subspace_to_json(subspace: InvariantSubspace) -> str:
    blocks = [list(block) for block in subspace.blocks]
    return json.dumps(blocks, sort_keys=True) + "\n"


def matrix_to_json(matrix: OperatorMatrix) -> str:
    payload = {
        "domain": {"space": matrix.domain.label, "dim": matrix.domain.dim},
        "codomain": {"space": matrix.codomain.label, "dim": matrix.codomain.dim},
        "entries": [[rational_to_str(x) for x in row] for row in matrix.entries],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def matrix_to_csv(matrix: OperatorMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in matrix.entries:
        writer.writerow([rational_to_str(x) for x in row])
    return buffer.getvalue()


def matrix_from_json(text: str) -> OperatorMatrix:
    from .radon import SpaceRef

    payload = json.loads(text)
    return OperatorMatrix(
        domain=SpaceRef(payload["domain"]["space"], payload["domain"]["dim"]),
        codomain=SpaceRef(payload["codomain"]["space"], payload["codomain"]["dim"]),
        entries=tuple(
            tuple(str_to_rational(x) for x in row) for row in payload["entries"]
        ),
    )
