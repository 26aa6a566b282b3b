"""Exact matrix models of homological braid representations and the
Hecke-algebra checks built on them."""

from .braid_hecke import (
    BraidWord,
    HeckeElement,
    Partition,
    QuadraticRelationFails,
    braid_relations_check,
    braid_to_hecke,
    compositions,
    hecke_relations_check,
    hecke_to_braid,
    quadratic_check,
)
from .forms import (
    FormVanishesAtSpecialization,
    NotNormalizable,
    SesquiForm,
    Specialization,
    definiteness_probe,
    hermitian_normalize,
    invariant_form_space,
    radical,
    radical_filtration,
)
from .harness import (
    ConjectureCase,
    UnsupportedM,
    build_W,
    conjecture_check,
    verify_section5,
)
from .homreps import (
    basis_change_u_to_v,
    burau_reduced,
    burau_unreduced,
    hmbm_dimension,
    lk_rep,
    specialize_rep,
    trivial_rep,
)
from .linalg import Matrix, MatrixRep, Subspace, intertwiners, nullspace, rref, spin
from .report import VerificationReport, emit_report
from .scalars import (
    GENERIC_Q,
    GENERIC_QT,
    CyclotomicNumber,
    DenominatorVanishes,
    LaurentPoly,
    RationalFunction,
    bar,
    cyclotomic,
    specialize,
)
from .specht import (
    DimensionMismatch,
    NotAPartition,
    d_lambda,
    dj_form,
    hook_dim,
    lambda_from_mu,
    nonzero_classification,
    specht_rep,
    standard_tableaux,
)

__version__ = "0.1.0"
