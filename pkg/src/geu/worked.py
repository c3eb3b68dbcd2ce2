"""The bundled 11x11 worked example.

A is the direct sum of blocks (2, size 6), (2, size 3), (1, size 2) with the
per-block cumulative-sum similarity, so each chain vector is e_1 + ... + e_j
within its block.  The update uses the rank-2 vector of the first block and
b = 3 e_1 - 5 e_2 + e_7 + e_10.
"""
from __future__ import annotations

from fractions import Fraction

from .model import ChainLocator, JordanBlock, JordanSpec, chain_basis_similarity
from .perturb import PerturbationProblem
from .scalars import gs


def worked_problem() -> PerturbationProblem:
    blocks = (
        JordanBlock(gs(2), 6),
        JordanBlock(gs(2), 3),
        JordanBlock(gs(1), 2),
    )
    bare = JordanSpec(blocks)
    spec = JordanSpec(blocks, chain_basis_similarity(bare))
    b = [0] * 11
    b[0], b[1], b[6], b[9] = 3, -5, 1, 1
    return PerturbationProblem(spec, ChainLocator(0, 2), tuple(gs(v) for v in b))


# Exact values the computation must reproduce, keyed for the CLI example
# command and the golden tests.
GOLDEN = {
    "f_monomial": [gs(-3), gs(-2), gs(1)],  # t^2 - 2t - 3
    "moments": [gs(3), gs(-2)],
    "new_eigenvalues": [gs(-1), gs(3)],
    "beta": gs(3),
    "same_block": {
        (2, 1): gs(Fraction(8, 3)),
        (3, 1): gs(Fraction(40, 9)),
        (3, 2): gs(Fraction(8, 3)),
        (4, 1): gs(Fraction(176, 27)),
        (4, 2): gs(Fraction(40, 9)),
    },
    "other_block": {
        (1, 1): gs(Fraction(-1, 3)),
        (2, 1): gs(Fraction(-5, 9)),
        (2, 2): gs(Fraction(-1, 3)),
        (3, 1): gs(Fraction(-22, 27)),
        (3, 2): gs(Fraction(-5, 9)),
    },
    "distinct": {
        (1, 2): gs(Fraction(1, 4)),
        (1, 1): gs(Fraction(-1, 4)),
        (2, 2): gs(0),
        (2, 1): gs(Fraction(-1, 4)),
    },
    # Jordan block multiset of the updated matrix
    "structure": [
        (gs(-1), 1),
        (gs(1), 2),
        (gs(2), 4),
        (gs(2), 3),
        (gs(3), 1),
    ],
}
