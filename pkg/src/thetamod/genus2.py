"""Genus-2 catalog of quartic and prime-3 relations between even theta constants.

Two-digit labels name g=2 characteristics column by column with the digit
code ``0 = [0;0], 1 = [1;0], 2 = [0;1], 3 = [1;1]``; e.g. ``"03"`` is
``[0,1; 0,1]``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .characteristics import Characteristic, Phase, is_even
from .identities import Factor, Identity, ResidualReport, Term, verify_identity
from .siegel import SiegelMatrix
from .theta import EvalParams, ThetaCache

DIGITS = {"0": (0, 0), "1": (1, 0), "2": (0, 1), "3": (1, 1)}

# LABEL_MATRIX repeats "22" and never uses "12". LABEL_MATRIX_CORRECTED puts "12"
# at (3,3), which makes 00 = 11 + 20 + 12 its main-diagonal Type I relation.
LABEL_MATRIX: tuple[tuple[str, ...], ...] = (
    ("11", "01", "10"),
    ("22", "20", "02"),
    ("33", "21", "22"),
)
LABEL_MATRIX_CORRECTED: tuple[tuple[str, ...], ...] = (
    ("11", "01", "10"),
    ("22", "20", "02"),
    ("33", "21", "12"),
)
DISTINGUISHED = "00"


class Kind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class Form(Enum):
    POWER4 = "power4"
    PRIME3 = "prime3"


def decode(label: str) -> Characteristic:
    if len(label) != 2 or any(d not in DIGITS for d in label):
        raise ValueError(f"bad label {label!r}")
    a, b = DIGITS[label[0]], DIGITS[label[1]]
    return Characteristic([a[0], b[0]], [a[1], b[1]])


def matrix_labels(matrix: Sequence[Sequence[str]] = LABEL_MATRIX) -> list[str]:
    return [lab for row in matrix for lab in row] + [DISTINGUISHED]


def labels_distinct_and_even(matrix: Sequence[Sequence[str]]) -> bool:
    chars = [decode(lab) for lab in matrix_labels(matrix)]
    return len(set(chars)) == len(chars) and all(is_even(c) for c in chars)


def _factors(label: str, form: Form) -> tuple[Factor, ...]:
    ch = decode(label)
    if form is Form.POWER4:
        return (Factor(ch, 1, 4),)
    return (Factor(ch, 1, 1), Factor(ch, 3, 1))


def _relation(name: str, lhs: Iterable[str], rhs: Iterable[str], form: Form, cells) -> Identity:
    lhs, rhs = list(lhs), list(rhs)
    terms = [Term(Phase(0), _factors(lab, form)) for lab in lhs]
    terms += [Term(Phase(1), _factors(lab, form)) for lab in rhs]
    text = " + ".join(lhs) + " = " + " + ".join(rhs)
    return Identity(f"{name} {form.value}: {text}", tuple(terms), meta={"cells": tuple(cells)})


def catalog_identities(
    kind: Kind,
    form: Form = Form.POWER4,
    matrix: Sequence[Sequence[str]] = LABEL_MATRIX,
) -> list[Identity]:
    """Type I: 00 against each of the 6 generalized diagonals.
    Type II: for each of the 9 2x2 submatrices, diagonal pair = antidiagonal pair.

    ``meta["cells"]`` records the matrix positions used.
    """
    out = []
    if kind is Kind.TYPE_I:
        for perm in itertools.permutations(range(3)):
            cells = [(i, perm[i]) for i in range(3)]
            out.append(_relation("TypeI", [DISTINGUISHED], [matrix[i][j] for i, j in cells], form, cells))
    else:
        for r1, r2 in itertools.combinations(range(3), 2):
            for c1, c2 in itertools.combinations(range(3), 2):
                cells = [(r1, c1), (r2, c2), (r1, c2), (r2, c1)]
                out.append(
                    _relation(
                        "TypeII",
                        [matrix[r1][c1], matrix[r2][c2]],
                        [matrix[r1][c2], matrix[r2][c1]],
                        form,
                        cells,
                    )
                )
    return out


def full_catalog(matrix: Sequence[Sequence[str]] = LABEL_MATRIX) -> list[Identity]:
    """Type I and II identities in power-4 then prime-3 form."""
    return [i for f in Form for k in Kind for i in catalog_identities(k, f, matrix)]


@dataclass
class CatalogAudit:
    identity: Identity
    reports: list[ResidualReport]

    @property
    def worst_relative(self) -> float:
        return max(r.relative for r in self.reports)

    @property
    def flagged(self) -> bool:
        return not all(r.passed for r in self.reports)


def audit_catalog(
    taus: Sequence[SiegelMatrix],
    matrix: Sequence[Sequence[str]] = LABEL_MATRIX,
    params: EvalParams = EvalParams(),
    rel_tol: float = 1e-9,
    tau_seed: int | None = None,
) -> list[CatalogAudit]:
    """Verify every Type I/II identity in both forms at each tau; failures are flagged, not dropped."""
    identities = full_catalog(matrix)
    caches = [ThetaCache(t, params) for t in taus]
    out = []
    for ident in identities:
        reports = [
            verify_identity(ident, c, rel_tol=rel_tol, tau_seed=tau_seed, sample=n) for n, c in enumerate(caches)
        ]
        out.append(CatalogAudit(ident, reports))
    return out
