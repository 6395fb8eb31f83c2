"""The named verification registry.

Every check is an exact computation: it either reproduces an identity
on the nose or reports the offending blocks.  Sampled law checks are
deterministic given (field, seed).  Each check accepts a ``mutate``
flag that deliberately corrupts its input or expectation; a mutated
check must fail, which keeps the suite falsifiable.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, Tuple

from . import algebra
from .algebra import AlgebraElement, enumerate_monomials
from .degrees import TriDegree, parity
from .homs import (
    HomElement,
    ObjectLabel,
    PRESENTATION_RELATIONS,
    compose,
    dim_in_degree,
    dim_in_degree_presentation,
    left_box,
    right_box,
)
from .complexes import (
    DiagramSequence,
    FMObject,
    SeqMorphism,
    T_empty,
    T_s,
    box_morphism,
    check_curved,
    coefficient_morphism,
    eps_h_s,
    eps_s,
    eta_h_s,
    eta_s,
    forcing_homotopy,
    hom_differential,
    identity_morphism,
    is_exact,
    phi_s,
    seq_compose,
    star_morphism,
    t_s_delta_blocks,
    t_s_labels,
    t_s_sequence,
    theta_big,
)
from .search import DegreeSearchProblem, candidate_shape, closed_subspace, cohomology_dim
from .sampling import (
    random_element,
    random_homogeneous_element,
    random_hom,
    random_label,
    random_monomial,
    random_seq_morphism,
    random_sequence,
)


@dataclass
class VerifyContext:
    field: object
    seed: int = 0
    samples: int = 200
    mutate: frozenset = frozenset()

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail"
    statement: str
    details: dict
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "statement": self.statement,
            "details": self.details,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _describe_blocks(f: SeqMorphism):
    return ["(%d,%d)->(%d,%d): %s" % (key + (elem,)) for key, elem in sorted(f.blocks.items())]


def _expect_zero(name, f: SeqMorphism, failures: list):
    if not f.is_zero():
        failures.append({"identity": name, "residual": _describe_blocks(f)})


def _expect_equal(name, got: SeqMorphism, want: SeqMorphism, failures: list):
    diff = got - want
    if not diff.is_zero():
        failures.append({"identity": name, "difference": _describe_blocks(diff)})


# ---------------------------------------------------------------------------
# coefficient algebra checks


def check_theta_identities(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    th = algebra.theta(fld)
    ths = algebra.theta_s(fld)
    if mutate:
        ths = th  # corrupt the twisted companion
    nus = algebra.nu_s(fld)
    asv = algebra.alpha_s_v(fld)
    g = lambda n: AlgebraElement.generator(n, fld)
    quadratic = (g("y1") + g("y2")) * g("nu1") * g("nu2")
    failures = []

    def eq(label, lhs, rhs):
        if lhs != rhs:
            failures.append({"identity": label, "lhs": str(lhs), "rhs": str(rhs)})

    eq("theta - theta_s = nu_s*alpha_s_v", th - ths, nus * asv)
    eq("(y1+y2)nu1nu2 = nu_s*theta_s", quadratic, nus * ths)
    eq("nu_s*theta_s = nu_s*theta", nus * ths, nus * th)
    eq("nu_s*theta = -theta_s*nu_s", nus * th, -(ths * nus))
    eq("-theta_s*nu_s = -theta*nu_s", -(ths * nus), -(th * nus))
    eq("theta^2 = 0", th * th, AlgebraElement.zero(fld))
    eq("theta_s^2 = 0", ths * ths, AlgebraElement.zero(fld))
    eq("kappa(theta) = x1y1 + x2y2", th.kappa(), g("x1") * g("y1") + g("x2") * g("y2"))
    eq("kappa(theta_s) = x2y1 + x1y2", ths.kappa(), g("x2") * g("y1") + g("x1") * g("y2"))
    return not failures, {"failures": failures}


def check_algebra_laws_sampled(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    rng = ctx.rng()
    failures = []
    nu1 = AlgebraElement.generator("nu1", fld)
    nu2 = AlgebraElement.generator("nu2", fld)
    for trial in range(ctx.samples):
        a = random_element(rng, fld)
        b = random_element(rng, fld)
        c = random_element(rng, fld)
        hom_a = random_homogeneous_element(rng, fld)
        if trial == 0:
            hom_a, b = nu1, nu2  # pinned cohomologically odd Leibniz case
        if a.kappa().kappa():
            failures.append({"law": "kappa^2 = 0", "at": str(a)})
        deg = hom_a.degree()
        sign = -1 if (deg and deg.i % 2) else 1
        if mutate:
            sign = 1  # drop the Leibniz sign
        if (hom_a * b).kappa() != hom_a.kappa() * b + (hom_a * b.kappa()).scale(sign):
            failures.append({"law": "Leibniz", "a": str(hom_a), "b": str(b)})
        if a.s_action().s_action() != a:
            failures.append({"law": "s^2 = id", "at": str(a)})
        if a.kappa().s_action() != a.s_action().kappa():
            failures.append({"law": "s kappa = kappa s", "at": str(a)})
        if (a * b).s_action() != a.s_action() * b.s_action():
            failures.append({"law": "s(ab) = s(a)s(b)", "a": str(a), "b": str(b)})
        m = AlgebraElement.from_monomial(random_monomial(rng), 1, fld)
        n = AlgebraElement.from_monomial(random_monomial(rng), 1, fld)
        p = parity(m.degree(), n.degree())
        if m * n != (n * m).scale(-1 if p else 1):
            failures.append({"law": "super-commutativity", "m": str(m), "n": str(n)})
        if (a * b) * c != a * (b * c):
            failures.append({"law": "associativity", "at": (str(a), str(b), str(c))})
        if a * (b + c) != a * b + a * c:
            failures.append({"law": "distributivity", "at": (str(a), str(b), str(c))})
        if len(failures) > 5:
            break
    return not failures, {"failures": failures, "samples": ctx.samples}


# ---------------------------------------------------------------------------
# diagram calculus checks


def check_derived_dot_relations(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    xis = algebra.xi_s(fld)
    if mutate:
        xis = AlgebraElement.generator("xi1", fld)
    als = algebra.alpha_s(fld)
    diag = lambda n: HomElement.diagram(fld, n)
    failures = []

    def eq(label, lhs, rhs):
        if lhs != rhs:
            failures.append({"identity": label, "lhs": str(lhs), "rhs": str(rhs)})

    eq("u o hd = hbeta", compose(diag("u"), diag("hd")), diag("hbeta"))
    eq("uh o d = hbeta", compose(diag("uh"), diag("d")), diag("hbeta"))
    eq("xi_s * d = alpha_s * hd", left_box(xis, diag("d")), left_box(als, diag("hd")))
    eq("xi_s * u = alpha_s * uh", left_box(xis, diag("u")), left_box(als, diag("uh")))
    eq("xi_s * h = 0", left_box(xis, diag("h")), HomElement.zero(fld, diag("h").source, diag("h").target))
    eq("h * xi_s = 0", right_box(diag("h"), xis), HomElement.zero(fld, diag("h").source, diag("h").target))
    eq("d o u = alpha_s", compose(diag("d"), diag("u")), left_box(als, diag("one")))
    eq("hd o u = xi_s", compose(diag("hd"), diag("u")), left_box(algebra.xi_s(fld), diag("one")))
    eq("d o uh = xi_s", compose(diag("d"), diag("uh")), left_box(algebra.xi_s(fld), diag("one")))
    eq("h o h = 0", compose(diag("h"), diag("h")), HomElement.zero(fld, diag("h").source, diag("h").target))
    eq("h o beta = hbeta", compose(diag("h"), diag("beta")), diag("hbeta"))
    eq("beta o h = hbeta", compose(diag("beta"), diag("h")), diag("hbeta"))
    return not failures, {"failures": failures}


def check_composition_laws_sampled(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    rng = ctx.rng()
    failures = []
    if mutate:
        # wrong sign for a Hochschild-odd diagram passing a xi coefficient
        got = compose(HomElement.diagram(fld, "hd"), left_box(
            AlgebraElement.generator("xi2", fld), HomElement.diagram(fld, "u")))
        xi1xi2 = AlgebraElement.generator("xi1", fld) * AlgebraElement.generator("xi2", fld)
        want = left_box(-xi1xi2, HomElement.diagram(fld, "one"))
        if got != want:
            failures.append({"law": "composition sign", "got": str(got), "want": str(want)})
        return not failures, {"failures": failures}
    for _ in range(ctx.samples):
        a_lab = random_label(rng)
        b_lab = random_label(rng)
        c_lab = random_label(rng)
        d_lab = random_label(rng)
        f = random_hom(rng, fld, a_lab, b_lab)
        g = random_hom(rng, fld, b_lab, c_lab)
        h = random_hom(rng, fld, c_lab, d_lab)
        if compose(h, compose(g, f)) != compose(compose(h, g), f):
            failures.append({"law": "associativity", "f": str(f), "g": str(g), "h": str(h)})
        fe = random_element(rng, fld)
        ge = random_element(rng, fld)
        if left_box(fe, left_box(ge, f)) != left_box(fe * ge, f):
            failures.append({"law": "left boxes multiply", "f": str(fe), "g": str(ge)})
        if right_box(left_box(fe, f), ge) != left_box(fe, right_box(f, ge)):
            failures.append({"law": "left/right boxes commute", "f": str(fe), "g": str(ge)})
        dg = compose(g, f).tridegree()
        if f.tridegree() is not None and g.tridegree() is not None and dg is not None:
            if dg != f.tridegree() + g.tridegree():
                failures.append({"law": "degree additivity", "f": str(f), "g": str(g)})
        if len(failures) > 5:
            break
    return not failures, {"failures": failures, "samples": ctx.samples}


def check_hom_dim_table(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    allowed = ("x1", "x2", "xi1", "xi2")
    labels = {"E": ObjectLabel("E"), "S": ObjectLabel("S")}
    mismatches = []
    pinned = [
        ("E", "S", TriDegree(0, 1, 0), 1),
        ("E", "S", TriDegree(0, 1, 1), 3),
        ("E", "E", TriDegree(0, 0, 0), 1),
    ]
    for sw, tw, deg, want in pinned:
        got = dim_in_degree(labels[sw], labels[tw], deg, allowed)
        if got != want:
            mismatches.append({"hom": "%s->%s" % (sw, tw), "degree": list(deg), "got": got, "want": want})
    checked = 0
    for sw in ("E", "S"):
        for tw in ("E", "S"):
            relations = PRESENTATION_RELATIONS[(sw, tw)]
            if mutate and relations:
                relations = relations[:-1]  # drop the torsion-killing relation
            for i in range(-4, 5):
                for j in range(-6, 7):
                    for k in range(-2, 3):
                        deg = TriDegree(i, j, k)
                        canonical = dim_in_degree(labels[sw], labels[tw], deg, allowed)
                        by_rank = dim_in_degree_presentation(
                            labels[sw], labels[tw], deg, fld, allowed, relations=relations
                        )
                        checked += 1
                        if canonical != by_rank:
                            mismatches.append(
                                {
                                    "hom": "%s->%s" % (sw, tw),
                                    "degree": [i, j, k],
                                    "normal_form": canonical,
                                    "rank_oracle": by_rank,
                                }
                            )
    return not mismatches, {"degrees_checked": checked, "mismatches": mismatches[:10]}


# ---------------------------------------------------------------------------
# curved complex checks


def t_s_sign_mutations(field):
    """Six single-entry sign flips of the length-one differential."""
    out = []
    for key in [
        (-1, 0, -1, 0),
        (-1, 0, 0, 0),
        (-1, 0, 1, 0),
        (0, 0, 1, 0),
        (1, 0, 0, 0),
        (1, 0, 1, 0),
    ]:
        blocks = t_s_delta_blocks(field)
        blocks[key] = -blocks[key]
        out.append(("flip sign of block (%d,%d)->(%d,%d)" % key, blocks))
    return out


def check_curvature_T_empty(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    obj = T_empty(fld)
    delta = obj.delta if not mutate else -obj.delta
    report = check_curved(fld, obj.seq, delta)
    return report.ok, {"residual": report.describe()}


def check_curvature_T_s(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    seq = t_s_sequence()
    blocks = t_s_delta_blocks(fld)
    if mutate:
        blocks[(-1, 0, 1, 0)] = -blocks[(-1, 0, 1, 0)]  # +nu_s instead of -nu_s
    delta = SeqMorphism(fld, seq, seq, TriDegree(1, 0, 0), blocks)
    report = check_curved(fld, seq, delta)
    return report.ok, {"residual": report.describe()}


def check_theta_centrality(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    rng = ctx.rng()
    failures = []
    odd_seen = 0
    for _ in range(ctx.samples):
        F = random_sequence(rng)
        G = random_sequence(rng)
        f = random_seq_morphism(rng, fld, F, G)
        if f is None:
            continue
        if f.degree.i % 2:
            odd_seen += 1
        sign = -1 if f.degree.i % 2 else 1
        if mutate:
            sign = 1
        for name, coeff in (("theta", algebra.theta(fld)), ("theta_s", algebra.theta_s(fld))):
            lhs = seq_compose(coefficient_morphism(G, coeff), f)
            rhs = seq_compose(f, coefficient_morphism(F, coeff)).scale(sign)
            if lhs != rhs:
                failures.append({"law": "%s is graded central" % name, "blocks": _describe_blocks(lhs - rhs)})
        if len(failures) > 3:
            break
    ok = not failures and odd_seen > 0
    return ok, {"failures": failures[:3], "odd_degree_samples": odd_seen}


def check_theta_big_central(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    rng = ctx.rng()
    failures = []

    def theta_of(seq):
        if not mutate:
            return theta_big(fld, seq)
        # corrupted version: wrong polynomial on the empty-word blocks
        blocks = dict(theta_big(fld, seq).blocks)
        bad = AlgebraElement.generator("y1", fld) * AlgebraElement.generator("x1", fld) + \
            AlgebraElement.generator("y2", fld) * AlgebraElement.generator("x1", fld)
        for p, idx, lab in seq.summands():
            if lab.word == "E":
                blocks[(p, idx, p, idx)] = left_box(bad, HomElement.identity(fld, lab))
        return SeqMorphism(fld, seq, seq, TriDegree(2, 0, 0), blocks)

    for name, obj in (("T_empty", T_empty(fld)), ("T_s", T_s(fld))):
        th = theta_of(obj.seq)
        _expect_zero("Theta closed on %s" % name, hom_differential(th, obj, obj), failures)
    for _ in range(ctx.samples // 4):
        F = random_sequence(rng)
        G = random_sequence(rng)
        f = random_seq_morphism(rng, fld, F, G)
        if f is None:
            continue
        if not theta_of(F).kappa().is_zero():
            failures.append({"law": "kappa(Theta) = 0"})
        _expect_equal(
            "Theta central",
            seq_compose(theta_of(G), f),
            seq_compose(f, theta_of(F)),
            failures,
        )
        if len(failures) > 3:
            break
    return not failures, {"failures": failures[:3]}


def _superexchange_case(fld, lf, lf2, rg, rg2, drop_sign: bool):
    lhs = seq_compose(star_morphism(lf2, rg2), star_morphism(lf, rg))
    sign = parity(rg2.degree, lf.degree)
    if drop_sign:
        sign = 0
    rhs = star_morphism(seq_compose(lf2, lf), seq_compose(rg2, rg)).scale(-1 if sign else 1)
    return lhs, rhs, parity(rg2.degree, lf.degree)


def check_superexchange_sampled(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    rng = ctx.rng()
    failures = []
    produced = 0
    odd_crossings = 0
    # pinned case where the crossing parity is odd and nothing collapses:
    # a xi-box sliding past a hollow-dot strand endomorphism
    strand = DiagramSequence({0: (ObjectLabel("S"),)})
    sdiag = lambda name: SeqMorphism(
        fld, strand, strand,
        HomElement.diagram(fld, name).tridegree(),
        {(0, 0, 0, 0): HomElement.diagram(fld, name)},
    )
    cases = [
        (box_morphism(AlgebraElement.generator("xi1", fld)),
         box_morphism(AlgebraElement.generator("y1", fld)),
         sdiag("l"), sdiag("h")),
    ]
    attempts = 0
    while produced < ctx.samples and attempts < ctx.samples * 10:
        attempts += 1
        E1, E2, E3 = (random_sequence(rng, words=("E",)) for _ in range(3))
        W1, W2, W3 = (random_sequence(rng) for _ in range(3))
        f = random_seq_morphism(rng, fld, E1, E2)
        f2 = random_seq_morphism(rng, fld, E2, E3)
        g = random_seq_morphism(rng, fld, W1, W2)
        g2 = random_seq_morphism(rng, fld, W2, W3)
        if None in (f, f2, g, g2):
            continue
        produced += 1
        if rng.random() < 0.5:
            cases.append((f, f2, g, g2))
        else:
            cases.append((g, g2, f, f2))
    for lf, lf2, rg, rg2 in cases:
        lhs, rhs, crossing = _superexchange_case(fld, lf, lf2, rg, rg2, mutate)
        if crossing and not lhs.is_zero():
            odd_crossings += 1
        if lhs != rhs:
            failures.append(
                {
                    "law": "super-exchange",
                    "degrees": [list(lf.degree), list(rg.degree), list(lf2.degree), list(rg2.degree)],
                    "difference": _describe_blocks(lhs - rhs),
                }
            )
            if len(failures) > 3:
                break
    ok = not failures and produced >= min(ctx.samples, 20) and odd_crossings > 0
    return ok, {
        "failures": failures[:3],
        "samples_exercised": produced,
        "odd_crossings_exercised": odd_crossings,
    }


def check_phi_closed(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    obj = T_s(fld)
    phi = phi_s(fld)
    if mutate:
        blocks = dict(phi.blocks)
        blocks[(1, 0, -1, 0)] = -blocks[(1, 0, -1, 0)]
        phi = SeqMorphism(fld, phi.source, phi.target, phi.degree, blocks)
    failures = []
    _expect_zero("phi is closed", hom_differential(phi, obj, obj), failures)
    # the coefficient differential of phi, entry by entry
    em1, s0, ep1 = t_s_labels()
    als = algebra.alpha_s(fld)
    want_kappa = SeqMorphism(
        fld, obj.seq, obj.seq, TriDegree(-1, 2, 1),
        {
            (0, 0, -1, 0): left_box(-als, HomElement.diagram(fld, "hd", s0, em1)),
            (1, 0, 0, 0): left_box(als, HomElement.diagram(fld, "uh", ep1, s0)),
        },
    )
    _expect_equal("kappa(phi) matrix", phi_s(fld).kappa(), want_kappa, failures)
    return not failures, {"failures": failures}


def _ansatz_morphism(fld, r1, r2, r3, xi) -> SeqMorphism:
    """The general degree-(-2,2,1) endomorphism shape of the length-one object."""
    em1, s0, ep1 = t_s_labels()
    seq = t_s_sequence()
    blocks = {}
    if r3 and not r3.is_zero():
        blocks[(0, 0, -1, 0)] = left_box(r3, HomElement.diagram(fld, "hd", s0, em1))
    if xi and not xi.is_zero():
        blocks[(1, 0, -1, 0)] = left_box(xi, HomElement.diagram(fld, "one", ep1, em1))
    if r2 and not r2.is_zero():
        blocks[(0, 0, 0, 0)] = left_box(r2, HomElement.diagram(fld, "h", s0, s0))
    if r1 and not r1.is_zero():
        blocks[(1, 0, 0, 0)] = left_box(r1, HomElement.diagram(fld, "uh", ep1, s0))
    return SeqMorphism(fld, seq, seq, TriDegree(-2, 2, 1), blocks)


def _expected_delta_f(fld, r1, r2, r3, xi) -> SeqMorphism:
    em1, s0, ep1 = t_s_labels()
    seq = t_s_sequence()
    th = algebra.theta(fld)
    ths = algebra.theta_s(fld)
    nus = algebra.nu_s(fld)
    xis = algebra.xi_s(fld)
    diag = lambda n, a, b: HomElement.diagram(fld, n, a, b)
    blocks = {
        (0, 0, -1, 0): left_box(th * r3, diag("hd", s0, em1)),
        (1, 0, -1, 0): left_box(th * xi, diag("one", ep1, em1)),
        (0, 0, 0, 0): left_box(-r3, diag("hbeta", s0, s0)) + left_box(ths * r2, diag("h", s0, s0)),
        (1, 0, 0, 0): left_box(xi, diag("u", ep1, s0)) + left_box(ths * r1, diag("uh", ep1, s0)),
        (0, 0, 1, 0): left_box(r2 - nus * r3, diag("hd", s0, ep1)),
        (1, 0, 1, 0): left_box(-(nus * xi) - r1 * xis, diag("one", ep1, ep1)),
    }
    blocks = {k: v for k, v in blocks.items() if not v.is_zero()}
    return SeqMorphism(fld, seq, seq, TriDegree(-1, 2, 1), blocks)


def _expected_f_delta(fld, r1, r2, r3, xi) -> SeqMorphism:
    em1, s0, ep1 = t_s_labels()
    seq = t_s_sequence()
    ths = algebra.theta_s(fld)
    nus = algebra.nu_s(fld)
    xis = algebra.xi_s(fld)
    asv = algebra.alpha_s_v(fld)
    diag = lambda n, a, b: HomElement.diagram(fld, n, a, b)
    blocks = {
        (-1, 0, -1, 0): left_box(r3 * xis - nus * xi, diag("one", em1, em1)),
        (0, 0, -1, 0): left_box(-(r3 * ths), diag("hd", s0, em1)) + left_box(xi, diag("d", s0, em1)),
        (1, 0, -1, 0): left_box(r3 * asv * xis + ths * xi, diag("one", ep1, em1)),
        (-1, 0, 0, 0): left_box(r2 + r1 * nus, diag("uh", em1, s0)),
        (0, 0, 0, 0): left_box(r2 * ths, diag("h", s0, s0)) + left_box(r1, diag("hbeta", s0, s0)),
        (1, 0, 0, 0): left_box(r2 * asv, diag("uh", ep1, s0)) + left_box(-(r1 * ths), diag("uh", ep1, s0)),
    }
    blocks = {k: v for k, v in blocks.items() if not v.is_zero()}
    return SeqMorphism(fld, seq, seq, TriDegree(-1, 2, 1), blocks)


def check_delta_product_fixtures(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    delta = T_s(fld).delta
    g = lambda n: AlgebraElement.generator(n, fld)
    zero = AlgebraElement.zero(fld)
    instantiations = [
        (g("nu1"), g("nu1") * g("nu2"), g("nu2"), g("xi1")),
        (g("nu2"), g("nu1") * g("nu2"), g("nu1"), g("xi2")),
        (g("nu1") - g("nu2"), zero, zero, zero),
        (zero, zero, zero, g("xi1") + g("xi2").scale(2)),
    ]
    failures = []
    entries_checked = 0
    for r1, r2, r3, xi in instantiations:
        f = _ansatz_morphism(fld, r1, r2, r3, xi)
        want_df = _expected_delta_f(fld, r1, r2, r3, xi)
        if mutate:
            key = (0, 0, 0, 0)
            if key in want_df.blocks:
                blocks = dict(want_df.blocks)
                blocks[key] = -blocks[key]
                want_df = SeqMorphism(fld, want_df.source, want_df.target, want_df.degree, blocks)
        got_df = seq_compose(delta, f)
        got_fd = seq_compose(f, delta)
        want_fd = _expected_f_delta(fld, r1, r2, r3, xi)
        for p, idx, _ in T_s(fld).seq.summands():
            for q, jdx, _ in T_s(fld).seq.summands():
                key = (p, idx, q, jdx)
                entries_checked += 2
                for tag, got, want in (("delta o f", got_df, want_df), ("f o delta", got_fd, want_fd)):
                    gb = got.blocks.get(key)
                    wb = want.blocks.get(key)
                    if gb is None and wb is None:
                        continue
                    if gb is None or wb is None or gb != wb:
                        failures.append(
                            {
                                "product": tag,
                                "entry": "(%d,%d)->(%d,%d)" % key,
                                "got": str(gb) if gb else "0",
                                "want": str(wb) if wb else "0",
                            }
                        )
    return not failures, {"entries_checked": entries_checked, "failures": failures[:6]}


def check_phi_squared_zero(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    phi = phi_s(fld)
    square = seq_compose(phi, phi)
    ok = square.is_zero()
    if mutate:
        ok = not ok  # inverted expectation: no degree-valid corruption can
        # make the square nonzero, its only candidate entry carries nu_s^2
    return ok, {"residual": _describe_blocks(square)}


def check_hbarbell_image(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    eta = eta_s(fld)
    if mutate:
        blocks = dict(eta.blocks)
        blocks[(0, 0, 1, 0)] = -blocks[(0, 0, 1, 0)]
        eta = SeqMorphism(fld, eta.source, eta.target, eta.degree, blocks)
    got = seq_compose(eps_s(fld), seq_compose(phi_s(fld), eta))
    want = coefficient_morphism(T_empty(fld).seq, algebra.xi_s(fld))
    failures = []
    _expect_equal("eps o phi o eta = xi_s", got, want, failures)
    return not failures, {"failures": failures}


def check_eta_eps_closed(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    eta = eta_s(fld)
    if mutate:
        blocks = dict(eta.blocks)
        blocks[(0, 0, -1, 0)] = -blocks[(0, 0, -1, 0)]
        eta = SeqMorphism(fld, eta.source, eta.target, eta.degree, blocks)
    failures = []
    te, ts = T_empty(fld), T_s(fld)
    _expect_zero("eta closed", hom_differential(eta, te, ts), failures)
    _expect_zero("eps closed", hom_differential(eps_s(fld), ts, te), failures)
    _expect_zero("eta_h closed", hom_differential(eta_h_s(fld), te, ts), failures)
    _expect_zero("eps_h closed", hom_differential(eps_h_s(fld), ts, te), failures)
    _expect_equal("eta_h = phi o eta", eta_h_s(fld), seq_compose(phi_s(fld), eta), failures)
    _expect_equal("eps_h = eps o phi", eps_h_s(fld), seq_compose(eps_s(fld), phi_s(fld)), failures)
    return not failures, {"failures": failures}


def check_xi_box_image_closed(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    te = T_empty(fld)
    g = lambda n: AlgebraElement.generator(n, fld)
    coefficients = [g("xi1"), g("xi2"), g("xi1") * g("xi2")]
    if mutate:
        coefficients.append(g("nu1"))
    failures = []
    for coeff in coefficients:
        f = coefficient_morphism(te.seq, coeff)
        _expect_zero("box %s on the unit object is closed" % coeff, hom_differential(f, te, te), failures)
    return not failures, {"failures": failures}


def check_lemma_phi_unique(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    obj = T_s(fld)
    degree = TriDegree(-2, 2, 1)
    problem = DegreeSearchProblem(obj, obj, degree)
    if mutate:
        blocks = t_s_delta_blocks(fld)
        blocks[(-1, 0, 1, 0)] = -blocks[(-1, 0, 1, 0)]
        seq = t_s_sequence()
        bad = SeqMorphism(fld, seq, seq, TriDegree(1, 0, 0), blocks)
        bad_obj = FMObject.__new__(FMObject)  # bypass curvature validation
        bad_obj.seq = seq
        bad_obj.delta = bad
        problem = DegreeSearchProblem(bad_obj, bad_obj, degree)
    failures = []
    if enumerate_monomials(TriDegree(-4, 4, 1)):
        failures.append({"fact": "degree (-4,4,1) admits no monomials"})
    shape = candidate_shape(problem)
    if shape.get((-1, 0, 1, 0), 0) != 0:
        failures.append({"fact": "corner block has no candidates", "got": shape.get((-1, 0, 1, 0))})
    closed = closed_subspace(problem)
    if len(closed) != 1:
        failures.append({"fact": "closed space is one-dimensional", "got": len(closed)})
    dim = cohomology_dim(problem)
    if dim != 1:
        failures.append({"fact": "cohomology is one-dimensional", "got": dim})
    reversed_dim = cohomology_dim(
        DegreeSearchProblem(problem.source, problem.target, degree, reverse_enumeration=True)
    )
    if dim != reversed_dim:
        failures.append({"fact": "dimension independent of enumeration order", "got": reversed_dim})
    if closed and len(closed) == 1:
        v = closed[0]
        phi = phi_s(fld)
        ratio = None
        key = (0, 0, -1, 0)
        pk = phi.blocks.get(key)
        vk = v.blocks.get(key)
        if pk is None or vk is None:
            failures.append({"fact": "solution touches the hollow-dot block"})
        else:
            (mono, diag), c = next(iter(pk.terms.items()))
            vc = vk.terms.get((mono, diag))
            if vc is None:
                failures.append({"fact": "solution matches the shape of the canonical map"})
            else:
                ratio = vc / c
        if ratio is not None and v != phi.scale(ratio):
            failures.append({"fact": "closed solution is proportional to the canonical map"})
        # the forced constraint chain: middle hollow-dot entry vanishes,
        # corner coefficient is a multiple of xi_s, the two dotted entries
        # carry opposite multiples of nu_s
        if (0, 0, 0, 0) in v.blocks:
            failures.append({"fact": "middle entry is forced to vanish"})
        corner = v.blocks.get((1, 0, -1, 0))
        if corner is not None:
            coeff = corner.coefficient("one")
            if coeff.s_action() != -coeff:
                failures.append({"fact": "corner coefficient is a multiple of xi_s"})
        upper = v.blocks.get(key)
        lower = v.blocks.get((1, 0, 0, 0))
        if upper is not None and lower is not None:
            if upper.coefficient("hd") != -(lower.coefficient("uh")):
                failures.append({"fact": "dotted entries carry opposite coefficients"})
    shape_table = {"(%d,%d)->(%d,%d)" % key: val for key, val in sorted(shape.items())}
    return not failures, {"failures": failures, "closed_dim": len(closed), "cohomology_dim": dim, "shape": shape_table}


def check_end_m321_zero(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    obj = T_s(fld)
    degree = TriDegree(-3, 2, 1) if not mutate else TriDegree(0, 0, 0)
    problem = DegreeSearchProblem(obj, obj, degree)
    failures = []
    shape = candidate_shape(problem)
    if shape:
        failures.append({"fact": "candidate space is empty", "shape": {str(k): v for k, v in shape.items()}})
    witness = is_exact(phi_s(fld), obj, obj)
    if witness is not None:
        failures.append({"fact": "the canonical hollow-dot map admits no homotopy witness"})
    return not failures, {"failures": failures}


def check_exterior_forcing_lemma(ctx: VerifyContext, mutate: bool):
    fld = ctx.field
    obj = T_s(fld)
    ident = identity_morphism(fld, obj.seq)
    eta_h_eps = seq_compose(eta_h_s(fld), eps_s(fld))
    failures = []
    g = lambda n: AlgebraElement.generator(n, fld)
    for label, xi in (("xi1", g("xi1")), ("xi2", g("xi2")), ("xi_s", algebra.xi_s(fld))):
        pairing = xi.alpha_pairing()
        f = star_morphism(ident, box_morphism(xi)) - star_morphism(box_morphism(xi.s_action()), ident)
        if not mutate:
            f = f - eta_h_eps.scale(pairing)
        _expect_zero("difference for %s is closed" % label, hom_differential(f, obj, obj), failures)
        witness = forcing_homotopy(fld).scale(pairing)
        recovered = witness.kappa() + seq_compose(obj.delta, witness) + seq_compose(witness, obj.delta)
        _expect_equal("stated witness certifies %s" % label, recovered, f, failures)
        solved = is_exact(f, obj, obj)
        if solved is None:
            failures.append({"identity": "solver finds a homotopy for %s" % label})
        else:
            recovered2 = solved.kappa() + seq_compose(obj.delta, solved) + seq_compose(solved, obj.delta)
            _expect_equal("solver witness certifies %s" % label, recovered2, f, failures)
    return not failures, {"failures": failures[:4]}


# ---------------------------------------------------------------------------
# registry

CheckFunc = Callable[[VerifyContext, bool], Tuple[bool, dict]]

CHECKS: Dict[str, Tuple[CheckFunc, str]] = {
    "theta_identities": (
        check_theta_identities,
        "theta - theta_s = nu_s*alpha_s_v; (y1+y2)nu1nu2 = nu_s*theta_s = nu_s*theta "
        "= -theta_s*nu_s = -theta*nu_s; theta^2 = theta_s^2 = 0; kappa(theta) = x1y1+x2y2",
    ),
    "algebra_laws_sampled": (
        check_algebra_laws_sampled,
        "kappa^2 = 0, cohomological Leibniz rule, s involution laws, "
        "super-commutativity, associativity, distributivity (sampled)",
    ),
    "derived_dot_relations": (
        check_derived_dot_relations,
        "u o hd = uh o d; xi_s forces dots to hollow dots through alpha_s; "
        "xi_s kills the hollow-dot strand from either side; barbell values",
    ),
    "composition_laws_sampled": (
        check_composition_laws_sampled,
        "composition associativity, degree additivity, box multiplicativity, "
        "left/right box confluence (sampled)",
    ),
    "hom_dim_table": (
        check_hom_dim_table,
        "graded hom dimensions by normal-form counting agree with the "
        "rank-based presentation oracle on |i|<=4, |j|<=6, |k|<=2",
    ),
    "curvature_T_empty": (
        check_curvature_T_empty,
        "kappa(delta) + delta^2 = Theta for the unit object",
    ),
    "curvature_T_s": (
        check_curvature_T_s,
        "kappa(delta) + delta^2 = Theta for the length-one object",
    ),
    "theta_centrality": (
        check_theta_centrality,
        "theta_w o f = (-1)^|f| f o theta_w for homogeneous f (sampled)",
    ),
    "theta_big_central": (
        check_theta_big_central,
        "Theta is kappa-closed, closed under the morphism differential, and central",
    ),
    "superexchange_sampled": (
        check_superexchange_sampled,
        "(f' * g') o (f * g) = (-1)^<deg g', deg f> (f' o f) * (g' o g) (sampled)",
    ),
    "phi_closed": (
        check_phi_closed,
        "the degree (-2,2,1) endomorphism is closed; its coefficient "
        "differential matches the stated two-entry matrix",
    ),
    "delta_product_fixtures": (
        check_delta_product_fixtures,
        "both products of the differential with the general degree-(-2,2,1) "
        "ansatz reproduce the recorded 9+9 entries, signs included",
    ),
    "phi_squared_zero": (
        check_phi_squared_zero,
        "the degree (-2,2,1) endomorphism squares to zero",
    ),
    "hbarbell_image": (
        check_hbarbell_image,
        "eps o phi o eta equals the xi_s box on the unit object",
    ),
    "eta_eps_closed": (
        check_eta_eps_closed,
        "eta, eps and their hollow-dot composites are closed; the composites "
        "match their stated matrices",
    ),
    "xi_box_image_closed": (
        check_xi_box_image_closed,
        "exterior coefficient boxes on the unit object are closed",
    ),
    "lemma_phi_unique": (
        check_lemma_phi_unique,
        "End^(-2,2,1) of the length-one object is one-dimensional, spanned by "
        "the canonical map; the corner block is empty for degree reasons",
    ),
    "end_m321_zero": (
        check_end_m321_zero,
        "End^(-3,2,1) of the length-one object vanishes, so the canonical "
        "map is not nullhomotopic",
    ),
    "exterior_forcing_lemma": (
        check_exterior_forcing_lemma,
        "id * xi - s(xi) * id - <alpha_s, xi> eta_h o eps is exact: the stated "
        "one-entry witness works and the solver finds one independently",
    ),
}


def run_check(name: str, ctx: VerifyContext) -> CheckResult:
    if name not in CHECKS:
        raise KeyError("unknown check %r" % name)
    func, statement = CHECKS[name]
    mutate = name in ctx.mutate
    start = time.perf_counter()
    try:
        ok, details = func(ctx, mutate)
    except Exception as err:  # a crash is a failure with a diff
        ok, details = False, {"error": "%s: %s" % (type(err).__name__, err)}
    elapsed = (time.perf_counter() - start) * 1000.0
    if mutate:
        details = dict(details)
        details["mutated"] = True
    if not ok and not details:
        details = {"error": "check failed without detail"}
    return CheckResult(name, "pass" if ok else "fail", statement, details, elapsed)


def run_all(ctx: VerifyContext, names=None):
    names = list(names) if names else list(CHECKS)
    return [run_check(name, ctx) for name in names]
