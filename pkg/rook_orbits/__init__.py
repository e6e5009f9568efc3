"""
rook_orbits - Exact verification of coadjoint orbits of rook placements.

Builds root systems of type A, G2 and F4 with their Chevalley bases, samples
coadjoint orbits of unitriangular groups exactly over the rationals, and
checks the basic-subvariety descriptions: Andre's minors in type A, the
twelve G2 systems, and distinctness certificates for orthogonal rook
placements in F4.
"""

__version__ = "1.0.0"

from rook_orbits.rootsys import Root, RookPlacement, RootSystem, build_root_system
from rook_orbits.chevalley import StructureTable, build_chevalley
from rook_orbits.coadjoint import LinearForm, coadjoint_act, kirillov_rank
from rook_orbits.andre import MatrixForm, decompose, membership
from rook_orbits.g2_orbits import G2Case, classify, g2_constants
from rook_orbits.f4_certify import Certificate, certify_all, certify_distinctness
from rook_orbits.models import CheckResult, Report, RunConfig, Status
from rook_orbits.reporting import ReportWriter

__all__ = [
    "Root",
    "RookPlacement",
    "RootSystem",
    "build_root_system",
    "StructureTable",
    "build_chevalley",
    "LinearForm",
    "coadjoint_act",
    "kirillov_rank",
    "MatrixForm",
    "decompose",
    "membership",
    "G2Case",
    "classify",
    "g2_constants",
    "Certificate",
    "certify_all",
    "certify_distinctness",
    "CheckResult",
    "Report",
    "RunConfig",
    "Status",
    "ReportWriter",
]
