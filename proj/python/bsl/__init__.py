"""Association schemes on GR(4,e): eigenmatrices, fusions, Butson Hadamard weights."""

from ._bsl import (
    check_identity,
    chm_class3_search,
    chm_search,
    chm_verify,
    eigenmatrix,
    fusion_table,
    identity_names,
    ring_summary,
    verify_scheme,
)

__all__ = [
    "check_identity",
    "chm_class3_search",
    "chm_search",
    "chm_verify",
    "eigenmatrix",
    "fusion_table",
    "identity_names",
    "ring_summary",
    "verify_scheme",
]
