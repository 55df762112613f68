"""Exact-arithmetic engine for semistability of Schubert varieties under
one-parameter-subgroup linearizations and the resulting GIT quotients."""

from .rootsys import (
    RootSystem,
    RootSystemError,
    WeightVec,
    build_root_system,
)
from .weyl import (
    CosetSystem,
    WeylElement,
    bruhat_leq,
    enumerate_WJ,
    from_word,
    maximal_coset,
)
from .semistable import (
    LinearizationContext,
    UniquenessError,
    admits_semistable,
    admits_semistable_T,
    make_context,
    minimal_admitting,
    minimal_schubert_minuscule,
    minuscule_context,
    ss_equals_s_whole_space,
    stable_equals_semistable,
    tau_sc,
)
from .catalog import CatalogEntry, catalog_entry, verify_catalog
from .quotient import (
    MatrixProj,
    OutsideProvedCases,
    Point,
    ProjSpace,
    QuotientReport,
    decompose_Rk,
    invariant_hilbert_dim,
    quotient_of_minimal,
)

__version__ = "0.1.0"
