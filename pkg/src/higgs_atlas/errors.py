"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the command-line
layer can report failures as structured JSON without string matching.
Some errors also carry a ``payload`` dict with extra structured detail
(for example a pointer to a retraction descriptor when a parameterization
does not exist).
"""

from __future__ import annotations


class HiggsAtlasError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.payload = payload


class UnresolvedDegreeError(HiggsAtlasError):
    code = "unresolved-degree"


class DimensionMismatchError(HiggsAtlasError):
    code = "dimension-mismatch"


class UnresolvedActionError(HiggsAtlasError):
    code = "unresolved-action"


class MissingSpinError(HiggsAtlasError):
    code = "missing-spin"


class BoundError(HiggsAtlasError):
    code = "bound"


class PreconditionError(HiggsAtlasError):
    code = "precondition"


class WrongGroupError(HiggsAtlasError):
    code = "wrong-group"


class UnsupportedGroupError(HiggsAtlasError):
    code = "unsupported-group"


class UnrecognizedShapeError(HiggsAtlasError):
    code = "unrecognized-shape"


class BudgetError(HiggsAtlasError):
    code = "budget"


class ContradictionError(HiggsAtlasError):
    code = "contradiction"


class ParityViolationError(HiggsAtlasError):
    code = "parity-violation"


class ModelInvariantError(HiggsAtlasError):
    code = "model-invariant"


class ParseError(HiggsAtlasError):
    code = "parse"
