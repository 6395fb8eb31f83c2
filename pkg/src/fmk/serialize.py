"""JSON forms for elements, morphisms and curved objects.

Coefficients serialise as strings ("3/4", "-2"); monomials as maps from
generator names to nonzero exponents; a morphism as a list of
{"coeff": <element>, "diagram": <name>} terms.  A curved object is its
sequence plus a dense block matrix over the summands sorted by
(position, index).
"""

from __future__ import annotations

from .algebra import (
    GENERATOR_INDEX,
    GENERATOR_NAMES,
    N_GENERATORS,
    AlgebraElement,
    Monomial,
)
from .complexes import DiagramSequence, FMObject, SeqMorphism
from .degrees import TriDegree
from .homs import HomElement, ObjectLabel


def monomial_to_json(mono: Monomial) -> dict:
    return {GENERATOR_NAMES[i]: e for i, e in enumerate(mono) if e}


def monomial_from_json(data: dict) -> Monomial:
    exps = [0] * N_GENERATORS
    for name, e in data.items():
        exps[GENERATOR_INDEX[name]] = int(e)
    return Monomial(exps)


def algebra_to_json(el: AlgebraElement) -> list:
    return [
        {"coeff": el.field.scalar_str(el.terms[mono]), "monomial": monomial_to_json(mono)}
        for mono in sorted(el.terms)
    ]


def algebra_from_json(field, data: list) -> AlgebraElement:
    terms = {}
    for item in data:
        mono = monomial_from_json(item.get("monomial", {}))
        coeff = field.from_string(str(item["coeff"]))
        terms[mono] = terms.get(mono, field.zero) + coeff
    return AlgebraElement(field, terms)


def label_to_json(label: ObjectLabel) -> dict:
    out = {"word": label.word}
    if label.soergel:
        out["soergel"] = label.soergel
    if label.hochschild:
        out["hochschild"] = label.hochschild
    return out


def label_from_json(data: dict) -> ObjectLabel:
    return ObjectLabel(data["word"], int(data.get("soergel", 0)), int(data.get("hochschild", 0)))


def hom_to_json(h: HomElement) -> dict:
    terms = []
    for diag in ("one", "u", "d", "l", "h", "uh", "hd", "beta", "hbeta"):
        coeff = h.coefficient(diag)
        if not coeff.is_zero():
            terms.append({"coeff": algebra_to_json(coeff), "diagram": diag})
    return {
        "source": label_to_json(h.source),
        "target": label_to_json(h.target),
        "terms": terms,
    }


def hom_from_json(field, data: dict) -> HomElement:
    source = label_from_json(data["source"])
    target = label_from_json(data["target"])
    terms = {}
    for item in data.get("terms", []):
        coeff = algebra_from_json(field, item["coeff"])
        diag = item["diagram"]
        for mono, c in coeff.terms.items():
            key = (mono, diag)
            terms[key] = terms.get(key, field.zero) + c
    return HomElement(field, source, target, terms)


def sequence_to_json(seq: DiagramSequence) -> dict:
    return {
        "positions": {
            str(p): [label_to_json(lab) for lab in seq.positions[p]]
            for p in sorted(seq.positions)
        }
    }


def sequence_from_json(data: dict) -> DiagramSequence:
    return DiagramSequence(
        {
            int(p): tuple(label_from_json(item) for item in labs)
            for p, labs in data["positions"].items()
        }
    )


def seq_morphism_to_json(f: SeqMorphism) -> dict:
    return {
        "degree": list(f.degree),
        "source": sequence_to_json(f.source),
        "target": sequence_to_json(f.target),
        "blocks": [
            {"from": [p, si], "to": [q, ti], "entry": hom_to_json(elem)}
            for (p, si, q, ti), elem in sorted(f.blocks.items())
        ],
    }


def seq_morphism_from_json(field, data: dict) -> SeqMorphism:
    source = sequence_from_json(data["source"])
    target = sequence_from_json(data["target"])
    blocks = {}
    for item in data["blocks"]:
        p, si = item["from"]
        q, ti = item["to"]
        blocks[(p, si, q, ti)] = hom_from_json(field, item["entry"])
    return SeqMorphism(field, source, target, TriDegree(*data["degree"]), blocks)


def fm_to_json(fm: FMObject) -> dict:
    """Sequence plus the differential as a dense summand-by-summand matrix."""
    summands = [(p, idx) for p, idx, _ in fm.seq.summands()]
    order = {key: pos for pos, key in enumerate(summands)}
    size = len(summands)
    matrix = [[None] * size for _ in range(size)]
    for (p, si, q, ti), elem in fm.delta.blocks.items():
        matrix[order[(q, ti)]][order[(p, si)]] = hom_to_json(elem)
    return {
        "sequence": sequence_to_json(fm.seq),
        "summands": [list(key) for key in summands],
        "delta": matrix,
    }


def fm_from_json(field, data: dict) -> FMObject:
    seq = sequence_from_json(data["sequence"])
    summands = [tuple(item) for item in data["summands"]]
    blocks = {}
    for r, row in enumerate(data["delta"]):
        for c, entry in enumerate(row):
            if entry is None:
                continue
            p, si = summands[c]
            q, ti = summands[r]
            blocks[(p, si, q, ti)] = hom_from_json(field, entry)
    delta = SeqMorphism(field, seq, seq, TriDegree(1, 0, 0), blocks)
    return FMObject(seq, delta)
