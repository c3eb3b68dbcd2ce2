"""Generalized-eigenvector chains of A + x_m b* for preserved eigenvalues.

Three cases are covered: the eigenvalue staying in the source block, the same
eigenvalue sitting in a different block, and a different eigenvalue entirely.
Each produces a coefficient table beta[(target_rank, chain_index)] filled by
recurrence, then linear combinations of the original chain vectors.

The table builders are written against bare scalar arithmetic so they run
unchanged over GaussScalar (exact mode) and complex floats (float mode).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from . import linalg
from .errors import (
    DegenerateDenominator,
    EigenvalueMismatch,
    RankOutOfRange,
)
from .linalg import Vector
from .model import ChainLocator, chain_vector
from .perturb import PerturbationProblem
from .scalars import GS_ZERO, GaussScalar

SAME_BLOCK = "same_block"
OTHER_BLOCK = "other_block"
DISTINCT_EIGENVALUE = "distinct_eigenvalue"


@dataclass(frozen=True)
class ChainCoefficients:
    case_tag: str
    beta: GaussScalar | None
    table: Mapping[tuple[int, int], GaussScalar]

    def coeff(self, t: int, j: int):
        """beta_j^{(t)}, with the zero-subscript convention built in."""
        if t <= 0 or j <= 0:
            return GS_ZERO
        return self.table.get((t, j), GS_ZERO)


@dataclass(frozen=True)
class UpdatedChainVector:
    rank: int
    eigenvalue: GaussScalar
    vector: Vector
    coefficients: ChainCoefficients


# -- scalar recurrences (generic over the scalar type) ---------------------


def same_block_table(mom: Callable, beta, m: int, t_max: int, zero):
    """beta_j^{(t)} for the source-block case; mom(j) = b*x_j."""
    table = {}

    def get(t, j):
        return table.get((t, j), zero)

    for t in range(1, t_max + 1):
        limit = min(t - 1, m)
        for j in range(2, limit + 1):
            table[(t, j)] = get(t - 1, j - 1)
        if t < 2:
            continue
        if t <= m + 1:
            s = zero
            for j in range(2, t):
                s = s + get(t - 1, j - 1) * mom(j)
            num = -mom(t) - s - beta * mom(m + t)
        else:
            s = zero
            for j in range(2, m + 1):
                s = s + get(t - 1, j - 1) * mom(j)
            num = get(t - 1, m) - mom(t) - s - beta * mom(m + t)
        table[(t, 1)] = num / mom(1)
    return table


def other_block_table(mom: Callable, ymom: Callable, m: int, t_max: int, zero):
    """beta_j^{(t)} for a second block of the same eigenvalue; ymom(t) = b*y_t."""
    table = {}

    def get(t, j):
        return table.get((t, j), zero)

    for t in range(1, t_max + 1):
        limit = min(t, m)
        for j in range(2, limit + 1):
            table[(t, j)] = get(t - 1, j - 1)
        if t <= m:
            s = zero
            for j in range(2, t + 1):
                s = s + get(t - 1, j - 1) * mom(j)
            num = -ymom(t) - s
        else:
            s = zero
            for j in range(2, m + 1):
                s = s + get(t - 1, j - 1) * mom(j)
            num = get(t - 1, m) - ymom(t) - s
        table[(t, 1)] = num / mom(1)
    return table


def distinct_eig_table(
    mom: Callable, zmom: Callable, d, denom, m: int, t_max: int, zero
):
    """beta_j^{(t)} for an eigenvalue mu != lambda; d = mu - lambda.

    Per target rank, the index-m entry comes first, then j = m-1 .. 1 by
    back-substitution; denom is d^{m+1} - sum_j d^j b*x_j.
    """
    table = {}

    def get(t, j):
        return table.get((t, j), zero)

    for t in range(1, t_max + 1):
        s = zero
        for j in range(1, m + 1):
            inner = zero
            for i in range(0, m - j):
                inner = inner + d ** (i + j) * get(t - 1, m - 1 - i)
            s = s + mom(j) * inner
        bm = (d**m * (zmom(t) - get(t - 1, m)) - s) / denom
        table[(t, m)] = bm
        for j in range(m - 1, 0, -1):
            inner = zero
            for i in range(0, m - j):
                inner = inner + d**i * get(t - 1, m - 1 - i)
            table[(t, j)] = d ** (j - m) * (bm - inner)
    return table


# -- exact chain construction ----------------------------------------------


def same_block_beta(problem: PerturbationProblem) -> GaussScalar:
    """-b*x_1 / (1 + b*x_{m+1}); the coefficient on the rank-shifted tail."""
    if problem.m + 1 > problem.r:
        raise RankOutOfRange(
            f"need rank m+1={problem.m + 1} in a block of size {problem.r}"
        )
    den = problem.moment(problem.m + 1) + 1
    if not den:
        raise DegenerateDenominator(
            "1 + b*x_{m+1} = 0: same-block formulas do not apply", den
        )
    return -problem.moment(1) / den


def default_same_block_t_max(problem: PerturbationProblem) -> int:
    return problem.r - problem.m


def same_block_chain(
    problem: PerturbationProblem, t_max: int | None = None
) -> list[UpdatedChainVector]:
    """u_1..u_t_max associated with lambda in the source block."""
    if t_max is None:
        t_max = default_same_block_t_max(problem)
    m, lam = problem.m, problem.lam
    if m + t_max > problem.r:
        raise RankOutOfRange(
            f"m + t_max = {m + t_max} exceeds source block size {problem.r}"
        )
    if t_max < 1:
        return []
    beta = same_block_beta(problem)
    if t_max >= 2 and not problem.moment(1):
        raise DegenerateDenominator(
            "b*x_1 = 0: same-block recurrence undefined for rank >= 2",
            problem.moment(1),
        )
    table = same_block_table(problem.moment, beta, m, t_max, GS_ZERO)
    coeffs = ChainCoefficients(SAME_BLOCK, beta, table)
    out = []
    for t in range(1, t_max + 1):
        v = problem.source_chain(t)
        for j in range(1, min(t - 1, m) + 1):
            v = linalg.vec_add(v, linalg.vec_scale(coeffs.coeff(t, j), problem.source_chain(j)))
        v = linalg.vec_add(v, linalg.vec_scale(beta, problem.source_chain(m + t)))
        out.append(UpdatedChainVector(t, lam, v, coeffs))
    return out


def other_block_chain(
    problem: PerturbationProblem, other_block: int, t_max: int | None = None
) -> list[UpdatedChainVector]:
    """v_1..v_t_max associated with lambda sitting in another block."""
    spec = problem.spec
    if other_block == problem.source.block_index:
        raise EigenvalueMismatch("other_block must differ from the source block")
    block = spec.blocks[other_block]
    if block.eigenvalue != problem.lam:
        raise EigenvalueMismatch(
            f"block {other_block} has eigenvalue {block.eigenvalue!r}, "
            f"expected {problem.lam!r}"
        )
    if t_max is None:
        t_max = block.size
    if t_max > block.size:
        raise RankOutOfRange(
            f"t_max = {t_max} exceeds block size {block.size}"
        )
    if t_max < 1:
        return []
    if not problem.moment(1):
        raise DegenerateDenominator(
            "b*x_1 = 0: other-block recurrence undefined", problem.moment(1)
        )
    m, lam = problem.m, problem.lam

    def y(t):
        return chain_vector(spec, ChainLocator(other_block, t))

    def ymom(t):
        return linalg.conj_dot(problem.b, y(t))

    table = other_block_table(problem.moment, ymom, m, t_max, GS_ZERO)
    coeffs = ChainCoefficients(OTHER_BLOCK, None, table)
    out = []
    for t in range(1, t_max + 1):
        v = y(t)
        for j in range(1, min(t, m) + 1):
            v = linalg.vec_add(v, linalg.vec_scale(coeffs.coeff(t, j), problem.source_chain(j)))
        out.append(UpdatedChainVector(t, lam, v, coeffs))
    return out


def distinct_eig_denominator(
    problem: PerturbationProblem, mu: GaussScalar
) -> GaussScalar:
    """(mu-lambda)^{m+1} - sum_{j=1}^m (mu-lambda)^j b*x_j."""
    d = mu - problem.lam
    out = d ** (problem.m + 1)
    for j in range(1, problem.m + 1):
        out = out - d**j * problem.moment(j)
    return out


def distinct_eig_chain(
    problem: PerturbationProblem, mu_block: int, t_max: int | None = None
) -> list[UpdatedChainVector]:
    """w_1..w_t_max associated with an eigenvalue mu != lambda."""
    spec = problem.spec
    block = spec.blocks[mu_block]
    mu = block.eigenvalue
    if mu == problem.lam:
        raise EigenvalueMismatch(
            f"block {mu_block} carries lambda itself; use the same-eigenvalue cases"
        )
    if t_max is None:
        t_max = block.size
    if t_max > block.size:
        raise RankOutOfRange(f"t_max = {t_max} exceeds block size {block.size}")
    if t_max < 1:
        return []
    denom = distinct_eig_denominator(problem, mu)
    if not denom:
        raise DegenerateDenominator(
            "update factor vanishes at mu: distinct-eigenvalue formulas do not apply",
            denom,
        )
    m = problem.m
    d = mu - problem.lam

    def z(t):
        return chain_vector(spec, ChainLocator(mu_block, t))

    def zmom(t):
        return linalg.conj_dot(problem.b, z(t))

    table = distinct_eig_table(problem.moment, zmom, d, denom, m, t_max, GS_ZERO)
    coeffs = ChainCoefficients(DISTINCT_EIGENVALUE, None, table)
    out = []
    for t in range(1, t_max + 1):
        v = z(t)
        for j in range(1, m + 1):
            v = linalg.vec_add(v, linalg.vec_scale(coeffs.coeff(t, j), problem.source_chain(j)))
        out.append(UpdatedChainVector(t, mu, v, coeffs))
    return out
