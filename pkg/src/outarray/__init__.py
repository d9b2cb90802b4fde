"""Output arrays and output sequences of nondecreasing integer input sequences."""

from .engine import OutputArray, Row, WidthLimitExceeded, build, maximal_entry, output_sequence
from .sequence import InputSequenceSpec, SequenceRecord, catalog, prefix, term, validate

__all__ = [
    "InputSequenceSpec",
    "OutputArray",
    "Row",
    "SequenceRecord",
    "WidthLimitExceeded",
    "build",
    "catalog",
    "maximal_entry",
    "output_sequence",
    "prefix",
    "term",
    "validate",
]
