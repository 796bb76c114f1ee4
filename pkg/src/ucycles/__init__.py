"""Universal cycles of function classes via overlap digraphs."""

from .census import CensusReport, census, census_table, cross_check
from .classes import ClassSpec, ExistenceVerdict, cardinality, enumerate_class, is_member
from .connect import PathTrace, connect, connect_inequitable, connect_onto, validate_trace
from .graph import (
    CycleDecomposition,
    DegreeAudit,
    TransitionGraph,
    UCycle,
    audit_degrees,
    build,
    decompose_cycles,
    eulerian_circuit,
    existence,
    generate,
    is_connected,
    to_dot,
    verify_ucycle,
)
from .words import Word, format_word, minimal_period, parse_word, rotate, window

__version__ = "0.1.0"
