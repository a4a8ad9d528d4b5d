"""Constructions of 3-sun systems and of 3-sun decompositions of K_{n+u} minus K_n."""

from .core import HoleGraph, Sun, Vertex, check_sun, cyc, inf, make_sun, orbit, sun_edges, translate
from .errors import (
    BoundViolated,
    DegenerateSun,
    InvalidEdge,
    NoCaseMatch,
    NonExistent,
    NotAdmissible,
    NotTwoFactor,
    PreconditionViolated,
    SunSystemError,
    UnsupportedBase,
)
from .lemmas import LEMMAS, LemmaOutput
from .oracle import BASE_ORDERS, SearchResult, base_system, brute_force_decompose
from .planner import (
    build_plan,
    construct_3ss,
    counting_feasible,
    decompose_hole,
    embed,
    embedding_params,
    hole_residues,
    is_admissible_order,
    matching_cases,
    min_embedding_order,
    min_hole_size,
)
from .verify import Decomposition, VerificationReport, verify_partition

__version__ = "0.1.0"
