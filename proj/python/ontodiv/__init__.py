"""Python bindings for the ontodiv C++ library."""

from ontodiv._core import (
    Division,
    InputError,
    MatchingTask,
    Ontology,
    coverage_ratio,
    divide,
    lexindex,
    load_ontology,
    parse_ontology,
    porter_stem,
    precision_recall_f,
    read_alignment,
    size_ratio,
    write_division,
)

__all__ = [
    "Division",
    "InputError",
    "MatchingTask",
    "Ontology",
    "coverage_ratio",
    "divide",
    "lexindex",
    "load_ontology",
    "parse_ontology",
    "porter_stem",
    "precision_recall_f",
    "read_alignment",
    "size_ratio",
    "write_division",
]
