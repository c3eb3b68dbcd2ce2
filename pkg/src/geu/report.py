"""Compute-and-verify driver producing serializable reports.

A report gathers the update factor, new eigenvalues, the changed-eigenvalue
bound, every applicable chain construction, and oracle verdicts for each.
The overall status is PASS only when every verdict passes.
"""
from __future__ import annotations

from . import chains, floatmode, oracle, perturb
from .chains import UpdatedChainVector
from .errors import DegenerateDenominator, ExactModeUnavailable
from .perturb import PerturbationProblem
from .poly import poly_roots
from .scalars import encode_scalar


def _encode_chain_vector(cv: UpdatedChainVector) -> dict:
    coeffs = cv.coefficients
    return {
        "rank": cv.rank,
        "eigenvalue": encode_scalar(cv.eigenvalue),
        "vector": [encode_scalar(v) for v in cv.vector],
        "coefficients": {
            f"{t},{j}": encode_scalar(val)
            for (t, j), val in sorted(coeffs.table.items())
        },
    }


def _chain_cases(problem: PerturbationProblem, which: str):
    """Yield (case, block_index, constructor) for every applicable case."""
    src = problem.source.block_index
    if which in ("all", "same") and problem.r - problem.m >= 1:
        yield chains.SAME_BLOCK, src, lambda: chains.same_block_chain(problem)
    for i, block in enumerate(problem.spec.blocks):
        if i == src:
            continue
        if block.eigenvalue == problem.lam:
            if which in ("all", "other"):
                yield (
                    chains.OTHER_BLOCK,
                    i,
                    lambda i=i: chains.other_block_chain(problem, i),
                )
        elif which in ("all", "distinct"):
            yield (
                chains.DISTINCT_EIGENVALUE,
                i,
                lambda i=i: chains.distinct_eig_chain(problem, i),
            )


def run_problem(
    problem: PerturbationProblem,
    mode: str = "exact",
    which_chains: str = "all",
    tolerance: float = 1e-9,
) -> dict:
    if mode == "float":
        return run_problem_float(problem, which_chains, tolerance)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")

    factor = perturb.update_char_factor(problem)
    report = {
        "mode": "exact",
        "n": problem.spec.n,
        "lambda": encode_scalar(problem.lam),
        "m": problem.m,
        "f": {
            "monomial": [encode_scalar(c) for c in factor.f.coeffs],
            "moments": [encode_scalar(c) for c in factor.moments],
        },
        "bound": perturb.changed_eigenvalue_bound(problem),
    }
    try:
        roots = poly_roots(factor.f, "exact")
        report["new_eigenvalues"] = [
            {"value": encode_scalar(r), "multiplicity": k} for r, k in roots
        ]
        exact_roots = [r for r, _ in roots]
    except ExactModeUnavailable:
        roots = poly_roots(factor.f, "numeric")
        report["new_eigenvalues"] = [
            {"value": [z.real, z.imag], "multiplicity": k, "numeric": True}
            for z, k in roots
        ]
        exact_roots = None

    updated = oracle.apply_update(problem)
    all_ok = True
    chain_reports = []
    verdicts = []
    for case, block_index, build in _chain_cases(problem, which_chains):
        entry = {"case": case, "block": block_index}
        try:
            vectors = build()
        except DegenerateDenominator as exc:
            entry["degenerate"] = str(exc)
            if exc.value is not None:
                entry["denominator"] = encode_scalar(exc.value)
            chain_reports.append(entry)
            continue
        entry["vectors"] = [_encode_chain_vector(cv) for cv in vectors]
        chain_reports.append(entry)
        if not vectors:
            continue
        verdict = oracle.verify_chain(
            updated, vectors[0].eigenvalue, [cv.vector for cv in vectors]
        )
        ranks_ok = all(
            oracle.generalized_rank(updated, cv.eigenvalue, cv.vector)
            == cv.rank
            for cv in vectors
        )
        ok = verdict.ok and ranks_ok
        all_ok = all_ok and ok
        verdicts.append(
            {
                "case": case,
                "block": block_index,
                "chain_relation": verdict.ok,
                "failed_index": verdict.failed_index,
                "ranks": ranks_ok,
                "ok": ok,
            }
        )
    report["chains"] = chain_reports

    identity_ok = (
        perturb.updated_char_poly(problem) == oracle.char_poly_direct(updated)
    )
    all_ok = all_ok and identity_ok
    oracle_report = {
        "char_poly_identity": identity_ok,
        "chain_verdicts": verdicts,
    }
    if exact_roots is not None:
        candidates = problem.spec.distinct_eigenvalues() + exact_roots
        try:
            structure = oracle.jordan_structure(updated, candidates)
            oracle_report["jordan_structure"] = [
                {
                    "eigenvalue": encode_scalar(eig),
                    "block_sizes": list(sizes),
                }
                for eig, sizes in structure.entries
            ]
        except Exception as exc:
            oracle_report["jordan_structure"] = None
            oracle_report["structure_error"] = str(exc)
    else:
        oracle_report["jordan_structure"] = None
        oracle_report["structure_error"] = "spectrum not Gaussian-rational"
    report["oracle"] = oracle_report
    report["status"] = "PASS" if all_ok else "FAILED"
    return report


def run_problem_float(
    problem: PerturbationProblem,
    which_chains: str = "all",
    tolerance: float = 1e-9,
) -> dict:
    fp = floatmode.FloatProblem(problem)
    scale = fp.residual_scale()
    report = {
        "mode": "float",
        "n": problem.spec.n,
        "m": problem.m,
        "tolerance": tolerance,
        "new_eigenvalues": [
            [z.real, z.imag] for z in floatmode.float_new_eigenvalues(problem)
        ],
        "bound": perturb.changed_eigenvalue_bound(problem),
    }
    src = problem.source.block_index
    cases = []
    if which_chains in ("all", "same") and problem.r - problem.m >= 1:
        cases.append((chains.SAME_BLOCK, src,
                      lambda: floatmode.same_block_chain_float(fp)))
    for i, block in enumerate(problem.spec.blocks):
        if i == src:
            continue
        if block.eigenvalue == problem.lam:
            if which_chains in ("all", "other"):
                cases.append(
                    (chains.OTHER_BLOCK, i,
                     lambda i=i: floatmode.other_block_chain_float(fp, i))
                )
        elif which_chains in ("all", "distinct"):
            cases.append(
                (chains.DISTINCT_EIGENVALUE, i,
                 lambda i=i: floatmode.distinct_eig_chain_float(fp, i))
            )
    max_residual = 0.0
    chain_reports = []
    for case, block_index, build in cases:
        entry = {"case": case, "block": block_index}
        try:
            produced = build()
        except DegenerateDenominator as exc:
            entry["degenerate"] = str(exc)
            chain_reports.append(entry)
            continue
        if produced:
            eig = produced[0][1]
            residual = floatmode.chain_residual(
                fp, eig, [v for _, _, v in produced]
            )
            entry["ranks"] = [t for t, _, _ in produced]
            entry["residual"] = residual
            max_residual = max(max_residual, residual)
        chain_reports.append(entry)
    report["chains"] = chain_reports
    report["max_residual"] = max_residual
    report["residual_scale"] = scale
    report["status"] = (
        "PASS" if max_residual <= tolerance * max(scale, 1.0) else "FAILED"
    )
    return report
