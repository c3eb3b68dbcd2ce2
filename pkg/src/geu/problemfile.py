"""JSON problem/matrix/vector file parsing and encoding.

All scalars are exact: 'p/q' strings for rationals, {re, im} objects for
complex values.  Floats are rejected so golden outputs stay bit-exact.
"""
from __future__ import annotations

import json

from . import linalg
from .errors import ParseError
from .linalg import Matrix, Vector
from .model import ChainLocator, JordanBlock, JordanSpec, validate_spec
from .perturb import PerturbationProblem
from .scalars import GaussScalar, encode_scalar, parse_scalar


def _require(cond: bool, message: str, field: str):
    if not cond:
        raise ParseError(f"{field}: {message}", field=field)


def parse_vector(obj, field: str) -> Vector:
    _require(isinstance(obj, list), "expected a list of scalars", field)
    return tuple(
        parse_scalar(v, field=f"{field}[{i}]") for i, v in enumerate(obj)
    )


def parse_matrix(obj, field: str) -> Matrix:
    _require(isinstance(obj, list) and obj, "expected a list of rows", field)
    rows = tuple(parse_vector(r, f"{field}[{i}]") for i, r in enumerate(obj))
    width = len(rows[0])
    _require(
        all(len(r) == width for r in rows), "ragged rows", field
    )
    return rows


def parse_problem(doc: dict) -> PerturbationProblem:
    _require(isinstance(doc, dict), "expected a JSON object", "")
    _require("blocks" in doc, "missing", "blocks")
    _require(isinstance(doc["blocks"], list) and doc["blocks"],
             "expected a nonempty list", "blocks")
    blocks = []
    for i, raw in enumerate(doc["blocks"]):
        field = f"blocks[{i}]"
        _require(isinstance(raw, dict), "expected an object", field)
        _require("size" in raw, "missing size", f"{field}.size")
        size = raw["size"]
        _require(isinstance(size, int) and size >= 1,
                 "size must be a positive integer", f"{field}.size")
        eig = parse_scalar(raw.get("eigenvalue", "0"), f"{field}.eigenvalue")
        blocks.append(JordanBlock(eig, size))
    similarity = None
    if doc.get("similarity") is not None:
        similarity = parse_matrix(doc["similarity"], "similarity")
    spec = JordanSpec(tuple(blocks), similarity)
    for diag in validate_spec(spec):
        raise ParseError(f"similarity: {diag.message}", field="similarity")

    _require("source" in doc and isinstance(doc["source"], dict),
             "missing source object", "source")
    src = doc["source"]
    block_index = src.get("block")
    _require(isinstance(block_index, int)
             and 0 <= block_index < len(blocks),
             f"must be an index in [0, {len(blocks)})", "source.block")
    rank = src.get("rank")
    _require(isinstance(rank, int) and rank >= 1,
             "must be a positive integer", "source.rank")
    _require(rank <= blocks[block_index].size,
             f"exceeds block size {blocks[block_index].size}", "source.rank")

    _require("b" in doc, "missing", "b")
    b = parse_vector(doc["b"], "b")
    _require(len(b) == spec.n, f"length {len(b)}, expected {spec.n}", "b")
    return PerturbationProblem(spec, ChainLocator(block_index, rank), b)


def load_problem(path: str) -> PerturbationProblem:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})")
    return parse_problem(doc)


def encode_problem(problem: PerturbationProblem) -> dict:
    spec = problem.spec
    doc = {
        "blocks": [
            {"eigenvalue": encode_scalar(b.eigenvalue), "size": b.size}
            for b in spec.blocks
        ],
        "b": [encode_scalar(v) for v in problem.b],
        "source": {
            "block": problem.source.block_index,
            "rank": problem.source.rank,
        },
    }
    if spec.similarity is not None:
        doc["similarity"] = [
            [encode_scalar(v) for v in row] for row in spec.similarity
        ]
    return doc


def load_matrix(path: str) -> Matrix:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})")
    m = parse_matrix(doc, "matrix")
    _require(len(m) == len(m[0]), "matrix must be square", "matrix")
    return m


def load_vectors(path: str) -> list[Vector]:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})")
    _require(isinstance(doc, list) and doc, "expected a list of vectors",
             "vectors")
    return [parse_vector(v, f"vectors[{i}]") for i, v in enumerate(doc)]


def parse_eigenvalue_arg(text: str) -> GaussScalar:
    """CLI eigenvalue argument: 'p/q' or 'p/q,p/q' (real,imag)."""
    parts = text.split(",")
    if len(parts) == 1:
        return parse_scalar(parts[0], "eigenvalue")
    if len(parts) == 2:
        return parse_scalar({"re": parts[0], "im": parts[1]}, "eigenvalue")
    raise ParseError("eigenvalue: expected 'p/q' or 'p/q,p/q'",
                     field="eigenvalue")
