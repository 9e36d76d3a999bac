"""Braided Lie bialgebras in categories of Yetter-Drinfeld modules over finite abelian groups."""

from .cyclotomic import Scalar, root_of_unity
from .graded import BasisVector, GradedObject, GroupData, Morphism
from .structures import (
    ActionData,
    BraidedLieAlgebra,
    BraidedLieBialgebra,
    BraidedLieCoalgebra,
    CheckReport,
    PairBundle,
    check_all,
    check_axiom,
    check_corollary_hypotheses,
)

__all__ = [
    "Scalar", "root_of_unity", "BasisVector", "GradedObject", "GroupData", "Morphism",
    "ActionData", "BraidedLieAlgebra", "BraidedLieBialgebra", "BraidedLieCoalgebra",
    "CheckReport", "PairBundle", "check_all", "check_axiom", "check_corollary_hypotheses",
]
