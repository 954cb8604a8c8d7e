# Copyright 2026 The pmeq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact principal minor equivalence, rank-one PIT and DPP kernel checks."""

from fractions import Fraction

from ._core import (
    Field,
    Matrix,
    PmeqError,
    RankOnePencil,
    apply_cut_sequence,
    brute_force_pit,
    brute_force_pme,
    cut_transpose,
    determinant,
    dpp_equivalent,
    is_cut,
    make_pencil,
    minimal_cut,
    pit_check,
    pme_check,
    principal_minor,
    subset_probability,
    verify_certificate,
)

__all__ = [
    "Field",
    "Matrix",
    "PmeqError",
    "RankOnePencil",
    "apply_cut_sequence",
    "brute_force_pit",
    "brute_force_pme",
    "cut_transpose",
    "determinant",
    "dpp_equivalent",
    "is_cut",
    "make_pencil",
    "matrix",
    "minimal_cut",
    "pit_check",
    "pme_check",
    "principal_minor",
    "subset_probability",
    "to_fractions",
    "verify_certificate",
]


def matrix(rows, field=None):
    """Builds a Matrix over `field` (rationals by default).

    Entries may be ints, Fractions or strings such as "3/4".
    """
    return Matrix(field if field is not None else Field.rationals(), rows)


def to_fractions(m):
    """Entries of a rational matrix as nested lists of Fraction."""
    if m.field != Field.rationals():
        raise ValueError("to_fractions needs a rational matrix")
    return [[Fraction(x) for x in row] for row in m.tolist()]
