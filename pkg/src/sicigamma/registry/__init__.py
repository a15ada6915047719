"""Catalog of identities with executable left and right sides."""

from .model import (
    CATEGORIES, TOL_CLASSES, IdentityRecord, Param, ParameterError, Report, UnknownIdentityError,
    VerificationResult,
)
from .runner import CATALOG, evaluate_identity, get_record, list_identities, run_suite

__all__ = [
    "CATALOG", "CATEGORIES", "TOL_CLASSES", "IdentityRecord", "Param", "ParameterError", "Report",
    "UnknownIdentityError", "VerificationResult", "evaluate_identity", "get_record", "list_identities",
    "run_suite",
]
