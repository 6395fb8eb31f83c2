"""Curved complexes: curvature, closedness, homotopies, the star product."""

import random

import pytest

from fmk.algebra import AlgebraElement, alpha_s, alpha_s_v, nu_s, theta, theta_s, xi_s
from fmk.degrees import TriDegree, ZERO, parity
from fmk.homs import HomElement, ObjectLabel, left_box
from fmk.complexes import (
    CurvatureError,
    DiagramSequence,
    FMObject,
    SeqMorphism,
    T_empty,
    T_s,
    angle_shift,
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
    morphism_basis,
    phi_s,
    seq_compose,
    shift_morphism,
    star,
    star_morphism,
    t_s_delta_blocks,
    t_s_labels,
    t_s_sequence,
    theta_big,
    unit_sequence,
)
from fmk.sampling import random_seq_morphism, random_sequence
from fmk.scalars import QQ

F = QQ


def g(name):
    return AlgebraElement.generator(name, F)


def test_theta_big_on_unit():
    got = theta_big(F, unit_sequence())
    blocks = got.blocks[(0, 0, 0, 0)]
    want = left_box(
        g("y1") * g("x1") + g("y2") * g("x2"),
        HomElement.identity(F, ObjectLabel("E")),
    )
    assert blocks == want


def test_theta_big_on_strand():
    seq = DiagramSequence({0: (ObjectLabel("S"),)})
    got = theta_big(F, seq).blocks[(0, 0, 0, 0)]
    ident = HomElement.identity(F, ObjectLabel("S"))
    beta = HomElement.diagram(F, "beta")
    want = left_box(g("y1") * g("x2") + g("y2") * g("x1"), ident) + left_box(alpha_s_v(F), beta)
    assert got == want


def test_theta_big_on_empty_sequence():
    assert theta_big(F, DiagramSequence({})).is_zero()


def test_curvature_of_builtins():
    te = T_empty(F)
    assert check_curved(F, te.seq, te.delta).ok
    ts = T_s(F)
    assert check_curved(F, ts.seq, ts.delta).ok


def test_curvature_rejects_sign_flip():
    seq = t_s_sequence()
    blocks = t_s_delta_blocks(F)
    blocks[(-1, 0, 1, 0)] = -blocks[(-1, 0, 1, 0)]  # +nu_s instead of -nu_s
    delta = SeqMorphism(F, seq, seq, TriDegree(1, 0, 0), blocks)
    report = check_curved(F, seq, delta)
    assert not report.ok
    assert report.residual_blocks  # the report names the offending blocks
    with pytest.raises(CurvatureError):
        FMObject(seq, delta)


def test_all_six_sign_mutations_rejected():
    from fmk.checks import t_s_sign_mutations

    seq = t_s_sequence()
    mutations = t_s_sign_mutations(F)
    assert len(mutations) == 6
    for description, blocks in mutations:
        delta = SeqMorphism(F, seq, seq, TriDegree(1, 0, 0), blocks)
        assert not check_curved(F, seq, delta).ok, description


def test_identity_is_closed():
    te = T_empty(F)
    ident = identity_morphism(F, te.seq)
    assert hom_differential(ident, te, te).is_zero()


def test_phi_is_closed_and_squares_to_zero():
    ts = T_s(F)
    phi = phi_s(F)
    assert phi.degree == TriDegree(-2, 2, 1)
    assert hom_differential(phi, ts, ts).is_zero()
    assert seq_compose(phi, phi).is_zero()


def test_kappa_of_phi_matrix():
    em1, s0, ep1 = t_s_labels()
    want = SeqMorphism(
        F, t_s_sequence(), t_s_sequence(), TriDegree(-1, 2, 1),
        {
            (0, 0, -1, 0): left_box(-alpha_s(F), HomElement.diagram(F, "hd", s0, em1)),
            (1, 0, 0, 0): left_box(alpha_s(F), HomElement.diagram(F, "uh", ep1, s0)),
        },
    )
    assert phi_s(F).kappa() == want


def test_unit_and_counit_are_closed():
    te, ts = T_empty(F), T_s(F)
    assert hom_differential(eta_s(F), te, ts).is_zero()
    assert hom_differential(eps_s(F), ts, te).is_zero()
    assert hom_differential(eta_h_s(F), te, ts).is_zero()
    assert hom_differential(eps_h_s(F), ts, te).is_zero()


def test_hollow_unit_counit_are_composites():
    assert eta_h_s(F) == seq_compose(phi_s(F), eta_s(F))
    assert eps_h_s(F) == seq_compose(eps_s(F), phi_s(F))


def test_hollow_barbell_image():
    got = seq_compose(eps_s(F), seq_compose(phi_s(F), eta_s(F)))
    assert got == coefficient_morphism(T_empty(F).seq, xi_s(F))


def test_xi_box_commutes_with_differential():
    te = T_empty(F)
    for coeff in (g("xi1"), g("xi2"), g("xi1") * g("xi2")):
        f = coefficient_morphism(te.seq, coeff)
        assert hom_differential(f, te, te).is_zero()


def test_hom_differential_squares_to_zero():
    rng = random.Random(5)
    te, ts = T_empty(F), T_s(F)
    seen = 0
    for _ in range(60):
        src, tgt = rng.choice([(te, te), (te, ts), (ts, te), (ts, ts)])
        f = random_seq_morphism(rng, F, src.seq, tgt.seq)
        if f is None:
            continue
        seen += 1
        assert hom_differential(hom_differential(f, src, tgt), src, tgt).is_zero()
    assert seen > 20


def test_forcing_difference_is_exact():
    ts = T_s(F)
    ident = identity_morphism(F, ts.seq)
    eta_h_eps = seq_compose(eta_h_s(F), eps_s(F))
    for xi in (g("xi1"), g("xi2"), xi_s(F)):
        pairing = xi.alpha_pairing()
        f = (
            star_morphism(ident, box_morphism(xi))
            - star_morphism(box_morphism(xi.s_action()), ident)
            - eta_h_eps.scale(pairing)
        )
        assert hom_differential(f, ts, ts).is_zero()
        # the stated one-entry witness
        h = forcing_homotopy(F).scale(pairing)
        recovered = h.kappa() + seq_compose(ts.delta, h) + seq_compose(h, ts.delta)
        assert recovered == f
        # and an independent solve
        solved = is_exact(f, ts, ts)
        assert solved is not None
        recovered2 = solved.kappa() + seq_compose(ts.delta, solved) + seq_compose(solved, ts.delta)
        assert recovered2 == f


def test_forcing_difference_matrix_shape():
    ts = T_s(F)
    ident = identity_morphism(F, ts.seq)
    xi = g("xi1")
    f = (
        star_morphism(ident, box_morphism(xi))
        - star_morphism(box_morphism(xi.s_action()), ident)
        - seq_compose(eta_h_s(F), eps_s(F))
    )
    em1, s0, ep1 = t_s_labels()
    want = SeqMorphism(
        F, ts.seq, ts.seq, TriDegree(0, 0, 1),
        {
            (-1, 0, 0, 0): left_box(nu_s(F), HomElement.diagram(F, "uh", em1, s0)),
            (0, 0, 0, 0): HomElement.diagram(F, "hbeta", s0, s0),
            (1, 0, 1, 0): left_box(xi_s(F), HomElement.diagram(F, "one", ep1, ep1)),
        },
    )
    assert f == want


def test_phi_is_not_nullhomotopic():
    ts = T_s(F)
    assert is_exact(phi_s(F), ts, ts) is None


def test_zero_morphism_is_exact():
    ts = T_s(F)
    zero = SeqMorphism.zero(F, ts.seq, ts.seq, TriDegree(0, 0, 1))
    witness = is_exact(zero, ts, ts)
    assert witness is not None and witness.is_zero()


def test_id_star_box_applies_right_boxes():
    ts = T_s(F)
    ident = identity_morphism(F, ts.seq)
    out = star_morphism(ident, box_morphism(g("xi1")))
    em1, s0, ep1 = t_s_labels()
    assert out.blocks[(-1, 0, -1, 0)] == left_box(g("xi1"), HomElement.identity(F, em1))
    assert out.blocks[(1, 0, 1, 0)] == left_box(g("xi1"), HomElement.identity(F, ep1))
    strand = out.blocks[(0, 0, 0, 0)]
    want = left_box(g("xi2"), HomElement.identity(F, s0)) + HomElement.diagram(F, "hbeta", s0, s0)
    assert strand == want


def test_star_with_even_right_factor_has_no_signs():
    # f * id juxtaposes blockwise when the right factor has even degree
    seq = DiagramSequence({1: (ObjectLabel("E"),)})
    ident = identity_morphism(F, seq)
    ts = T_s(F)
    f = ts.delta
    out = star_morphism(f, ident)
    for (p, si, q, ti), elem in out.blocks.items():
        assert elem == f.blocks[(p - 1, si, q - 1, ti)]


def test_star_position_sign_on_odd_right_factor():
    # (f * g) at source position p carries (-1)^(p deg g)
    for p, sign in ((0, 1), (1, -1), (2, 1)):
        seq = DiagramSequence({p: (ObjectLabel("E"),)})
        ident = identity_morphism(F, seq)
        gmor = box_morphism(g("nu1"))  # cohomological degree -1
        out = star_morphism(ident, gmor)
        entry = out.blocks[(p, 0, p, 0)]
        want = left_box(g("nu1").scale(sign), HomElement.identity(F, ObjectLabel("E")))
        assert entry == want


def test_star_rejects_two_strand_words():
    ts = T_s(F)
    with pytest.raises(ValueError):
        star(ts.seq, ts.seq)


def test_superexchange_sampled():
    rng = random.Random(23)
    seen = 0
    for _ in range(120):
        E1, E2, E3 = (random_sequence(rng, words=("E",)) for _ in range(3))
        W1, W2, W3 = (random_sequence(rng) for _ in range(3))
        f = random_seq_morphism(rng, F, E1, E2)
        f2 = random_seq_morphism(rng, F, E2, E3)
        gm = random_seq_morphism(rng, F, W1, W2)
        g2 = random_seq_morphism(rng, F, W2, W3)
        if None in (f, f2, gm, g2):
            continue
        seen += 1
        lhs = seq_compose(star_morphism(f2, g2), star_morphism(f, gm))
        sign = parity(g2.degree, f.degree)
        rhs = star_morphism(seq_compose(f2, f), seq_compose(g2, gm)).scale(-1 if sign else 1)
        assert lhs == rhs
    assert seen > 30


def test_theta_w_graded_centrality():
    rng = random.Random(29)
    seen = 0
    for _ in range(80):
        Fs = random_sequence(rng)
        Gs = random_sequence(rng)
        f = random_seq_morphism(rng, F, Fs, Gs)
        if f is None:
            continue
        seen += 1
        sign = -1 if f.degree.i % 2 else 1
        for coeff in (theta(F), theta_s(F)):
            lhs = seq_compose(coefficient_morphism(Gs, coeff), f)
            rhs = seq_compose(f, coefficient_morphism(Fs, coeff)).scale(sign)
            assert lhs == rhs
    assert seen > 30


def test_theta_big_closed_and_central():
    te, ts = T_empty(F), T_s(F)
    for obj in (te, ts):
        th = theta_big(F, obj.seq)
        assert th.kappa().is_zero()
        assert hom_differential(th, obj, obj).is_zero()
    rng = random.Random(31)
    seen = 0
    for _ in range(60):
        Fs = random_sequence(rng)
        Gs = random_sequence(rng)
        f = random_seq_morphism(rng, F, Fs, Gs)
        if f is None:
            continue
        seen += 1
        assert seq_compose(theta_big(F, Gs), f) == seq_compose(f, theta_big(F, Fs))
    assert seen > 20


def _translate(f, l):
    return SeqMorphism(
        f.field,
        f.source.shifted(l),
        f.target.shifted(l),
        f.degree,
        {(p - l, si, q - l, ti): elem for (p, si, q, ti), elem in f.blocks.items()},
    )


def test_shift_signs():
    phi = phi_s(F)  # even cohomological degree: no sign under [1]
    assert shift_morphism(phi, l=1) == _translate(phi, 1)
    eta = eta_s(F)  # odd degree: [1] flips the sign
    assert shift_morphism(eta, l=1) == -_translate(eta, 1)
    # <1> = [1](-1), and shifts invert cleanly
    assert angle_shift(eta) == shift_morphism(eta, l=1, m=-1)
    assert shift_morphism(shift_morphism(eta, l=1, m=2, n=1), l=-1, m=-2, n=-1) == eta


def test_shift_commutes_with_composition():
    # (g o f)[1] = g[1] o f[1]: the conventional signs multiply coherently
    phi = phi_s(F)
    eta = eta_s(F)
    lhs = shift_morphism(seq_compose(phi, eta), l=1, m=2, n=1)
    rhs = seq_compose(shift_morphism(phi, l=1, m=2, n=1), shift_morphism(eta, l=1, m=2, n=1))
    assert lhs == rhs
    eps = eps_s(F)
    lhs2 = shift_morphism(seq_compose(eps, eta), l=1)
    rhs2 = seq_compose(shift_morphism(eps, l=1), shift_morphism(eta, l=1))
    assert lhs2 == rhs2


def test_morphism_basis_degree_homogeneous():
    ts = T_s(F)
    degree = TriDegree(-2, 2, 1)
    units = morphism_basis(ts.seq, ts.seq, degree)
    assert len(units) == 7
    from fmk.complexes import unit_to_morphism

    for unit in units:
        f = unit_to_morphism(F, ts.seq, ts.seq, degree, unit)
        assert f.degree == degree  # constructor validates homogeneity


def test_seq_morphism_rejects_bad_degree():
    te = T_empty(F)
    ident = HomElement.identity(F, ObjectLabel("E"))
    with pytest.raises(ValueError):
        SeqMorphism(F, te.seq, te.seq, TriDegree(1, 0, 0), {(0, 0, 0, 0): ident})
