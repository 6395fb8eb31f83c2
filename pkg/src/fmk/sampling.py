"""Seeded random generators for the property-law suites.

Sampling is deterministic given (field, seed).  Exponents are kept
small so degrees stay within the configured window; coefficients are
small nonzero integers.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .algebra import (
    AlgebraElement,
    Monomial,
    N_GENERATORS,
    enumerate_monomials,
)
from .degrees import TriDegree
from .complexes import DiagramSequence, SeqMorphism, unit_to_morphism, morphism_basis
from .homs import CANONICAL_DIAGRAMS, DIAGRAMS, HomElement, ObjectLabel


def random_monomial(rng: random.Random, max_poly_exp: int = 2) -> Monomial:
    exps = [rng.randint(0, max_poly_exp) for _ in range(4)]
    exps += [rng.randint(0, 1) for _ in range(4)]
    return Monomial(exps)


def random_element(rng: random.Random, field, max_terms: int = 3) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        mono = random_monomial(rng)
        terms[mono] = terms.get(mono, field.zero) + field.from_int(c)
    return AlgebraElement(field, terms)


def random_homogeneous_element(rng: random.Random, field) -> AlgebraElement:
    """A homogeneous element: random coefficients over one degree's monomials."""
    anchor = random_monomial(rng)
    monos = enumerate_monomials(anchor.degree)
    terms = {}
    for mono in monos:
        if rng.random() < 0.5:
            terms[mono] = field.from_int(rng.choice([-2, -1, 1, 2]))
    if not terms:
        terms[anchor] = field.one
    return AlgebraElement(field, terms)


def random_label(rng: random.Random, word: Optional[str] = None) -> ObjectLabel:
    word = word or rng.choice(("E", "S"))
    return ObjectLabel(word, rng.randint(-2, 2), rng.randint(-1, 1))


def random_hom(rng: random.Random, field, source=None, target=None, max_terms: int = 3) -> HomElement:
    source = source or random_label(rng)
    target = target or random_label(rng)
    diagrams = CANONICAL_DIAGRAMS[(source.word, target.word)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        diag = rng.choice(diagrams)
        mono = random_monomial(rng)
        c = field.from_int(rng.choice([-2, -1, 1, 2]))
        key = (mono, diag)
        terms[key] = terms.get(key, field.zero) + c
    return HomElement(field, source, target, terms)


def random_sequence(
    rng: random.Random, words=("E", "S"), max_positions: int = 2, max_summands: int = 2
) -> DiagramSequence:
    positions = {}
    for _ in range(rng.randint(1, max_positions)):
        p = rng.randint(-2, 2)
        labs = tuple(
            random_label(rng, rng.choice(words)) for _ in range(rng.randint(1, max_summands))
        )
        positions[p] = positions.get(p, ()) + labs
    return DiagramSequence(positions)


def random_seq_morphism(
    rng: random.Random,
    field,
    source: DiagramSequence,
    target: DiagramSequence,
    max_terms: int = 2,
) -> Optional[SeqMorphism]:
    """A homogeneous morphism built from one random canonical unit's degree."""
    src = list(source.summands())
    tgt = list(target.summands())
    for _ in range(40):
        p, si, src_lab = rng.choice(src)
        q, ti, tgt_lab = rng.choice(tgt)
        mono = random_monomial(rng, max_poly_exp=1)
        diagrams = CANONICAL_DIAGRAMS[(src_lab.word, tgt_lab.word)]
        diag = rng.choice(diagrams)
        if not DIAGRAMS[diag].free and mono[6]:
            mono = mono.with_exponent(6, 0)
        intrinsic = (
            mono.degree
            + DIAGRAMS[diag].degree
            - TriDegree(0, tgt_lab.soergel - src_lab.soergel, tgt_lab.hochschild - src_lab.hochschild)
        )
        degree = TriDegree(intrinsic.i + (q - p), intrinsic.j, intrinsic.k)
        units = morphism_basis(source, target, degree)
        if not units:
            continue
        rng.shuffle(units)
        result = None
        for unit in units[: rng.randint(1, max_terms)]:
            term = unit_to_morphism(field, source, target, degree, unit).scale(
                field.from_int(rng.choice([-2, -1, 1, 2]))
            )
            result = term if result is None else result + term
        if result is not None and not result.is_zero():
            return result
    return None
