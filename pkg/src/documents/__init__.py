# This file makes the 'documents' directory a Python package.

from .parser import (
    dump_problem,
    load_document,
    parse_evaluations_csv,
    parse_families,
    parse_gtsf_sets,
    parse_problem,
)
from .schemas import AnyDocument, FamiliesDocument, ProblemDocument, SetsDocument

__all__ = [
    "AnyDocument",
    "FamiliesDocument",
    "ProblemDocument",
    "SetsDocument",
    "dump_problem",
    "load_document",
    "parse_evaluations_csv",
    "parse_families",
    "parse_gtsf_sets",
    "parse_problem",
]
