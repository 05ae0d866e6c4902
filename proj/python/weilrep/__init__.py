"""Exact Weil representations of finite symplectic groups.

The heavy lifting lives in the C++ extension: exact cyclotomic arithmetic,
the Schroedinger-model operators, the square-root tower of central
extensions, the characteristic-2 affine symplectic objects, and the
verification suites that check the structural identities by literal
equality of cyclotomic matrices.
"""

from ._core import (
    Cyclotomic,
    dump_json,
    gauss_sum,
    list_suites,
    verify,
)

__all__ = [
    "Cyclotomic",
    "dump_json",
    "gauss_sum",
    "list_suites",
    "verify",
]
