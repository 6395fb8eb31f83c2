"""Mechanised degree arguments.

Given two curved objects and a target degree, enumerate the full
candidate space of morphisms in that degree (finite, by the exponent
equations), cut out the closed ones by exact linear algebra, and
optionally quotient by the exact ones.  This replaces hand degree
arguments of the form "for degree reasons the map must look like ...".
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .degrees import TriDegree
from .linalg import nullspace, rank
from .complexes import (
    FMObject,
    SeqMorphism,
    hom_differential,
    morphism_basis,
    morphism_to_vector,
    unit_to_morphism,
)


@dataclass
class DegreeSearchProblem:
    source: FMObject
    target: FMObject
    degree: TriDegree
    quotient_by_exact: bool = True
    report_shape: bool = False
    reverse_enumeration: bool = False  # determinism control: flips basis order only

    @property
    def fld(self):
        return self.source.field


def candidate_space(problem: DegreeSearchProblem) -> List[SeqMorphism]:
    """Basis of all degree-homogeneous morphisms, one per canonical unit."""
    units = morphism_basis(
        problem.source.seq,
        problem.target.seq,
        problem.degree,
        reverse=problem.reverse_enumeration,
    )
    return [
        unit_to_morphism(problem.fld, problem.source.seq, problem.target.seq, problem.degree, u)
        for u in units
    ]


def candidate_shape(problem: DegreeSearchProblem) -> Dict[Tuple[int, int, int, int], int]:
    """Per-block dimensions of the candidate space."""
    units = morphism_basis(problem.source.seq, problem.target.seq, problem.degree)
    shape: Dict[Tuple[int, int, int, int], int] = {}
    for key, _, _ in units:
        shape[key] = shape.get(key, 0) + 1
    return shape


def _differential_matrix(problem: DegreeSearchProblem, degree: TriDegree):
    """Columns: images under the morphism differential of the degree basis."""
    fld = problem.fld
    units = morphism_basis(
        problem.source.seq, problem.target.seq, degree, reverse=problem.reverse_enumeration
    )
    image_units = morphism_basis(
        problem.source.seq, problem.target.seq, degree + TriDegree(1, 0, 0)
    )
    index = {u: pos for pos, u in enumerate(image_units)}
    width = len(image_units)
    vectors = []
    for u in units:
        f = unit_to_morphism(fld, problem.source.seq, problem.target.seq, degree, u)
        img = hom_differential(f, problem.source, problem.target)
        vectors.append(morphism_to_vector(img, index, width))
    rows = [[vec[r] for vec in vectors] for r in range(width)]
    return units, rows


def closed_subspace(problem: DegreeSearchProblem) -> List[SeqMorphism]:
    """Basis of the closed morphisms in the given degree."""
    fld = problem.fld
    units, rows = _differential_matrix(problem, problem.degree)
    if not units:
        return []
    basis = []
    for coeffs in nullspace(rows, len(units), fld):
        combo = None
        for c, u in zip(coeffs, units):
            if not c:
                continue
            term = unit_to_morphism(
                fld, problem.source.seq, problem.target.seq, problem.degree, u
            ).scale(c)
            combo = term if combo is None else combo + term
        if combo is not None:
            basis.append(combo)
    return basis


def boundary_rank(problem: DegreeSearchProblem) -> int:
    """Rank of the differential out of the degree one step below."""
    fld = problem.fld
    lower = problem.degree - TriDegree(1, 0, 0)
    units, rows = _differential_matrix(problem, lower)
    if not units:
        return 0
    return rank(rows, len(units), fld)


def cohomology_dim(problem: DegreeSearchProblem) -> int:
    closed = closed_subspace(problem)
    if not problem.quotient_by_exact:
        return len(closed)
    return len(closed) - boundary_rank(problem)


def search_report(problem: DegreeSearchProblem) -> dict:
    """The dimensions (and optional shape) for a degree-search problem."""
    candidates = morphism_basis(problem.source.seq, problem.target.seq, problem.degree)
    closed = closed_subspace(problem)
    report = {
        "degree": list(problem.degree),
        "dim_candidates": len(candidates),
        "dim_closed": len(closed),
    }
    if problem.quotient_by_exact:
        report["dim_cohomology"] = len(closed) - boundary_rank(problem)
    if problem.report_shape:
        report["shape"] = {
            "(%d,%d)->(%d,%d)" % key: dim for key, dim in sorted(candidate_shape(problem).items())
        }
    return report
