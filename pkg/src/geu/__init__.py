"""Exact eigenvalue and Jordan-chain computation for rank-one updates.

Given A with known Jordan structure, a generalized eigenvector x_m of A, and
an arbitrary vector b, this package computes the spectrum and the
generalized-eigenvector chains of A + x_m b* in closed form over the
Gaussian rationals, and verifies every result against brute-force oracles.
"""

from .chains import (
    ChainCoefficients,
    UpdatedChainVector,
    distinct_eig_chain,
    other_block_chain,
    same_block_beta,
    same_block_chain,
)
from .model import ChainLocator, JordanBlock, JordanSpec
from .perturb import (
    PerturbationProblem,
    UpdateFactor,
    changed_eigenvalue_bound,
    det_rank1_update,
    new_eigenvalues,
    resolvent_action,
    update_char_factor,
    updated_char_poly,
)
from .poly import Poly
from .scalars import GaussScalar, gs

__all__ = [
    "ChainCoefficients",
    "ChainLocator",
    "GaussScalar",
    "JordanBlock",
    "JordanSpec",
    "PerturbationProblem",
    "Poly",
    "UpdateFactor",
    "UpdatedChainVector",
    "changed_eigenvalue_bound",
    "det_rank1_update",
    "distinct_eig_chain",
    "gs",
    "new_eigenvalues",
    "other_block_chain",
    "resolvent_action",
    "same_block_beta",
    "same_block_chain",
    "update_char_factor",
    "updated_char_poly",
]
