"""Simplex models: seeds, builders, cosimplicial structure, symmetry."""

from fractions import Fraction
from itertools import permutations

import pytest

from freedgl.lie import Elt, SolveError, ConfigError, DomainError, zero_elt
from freedgl.series import bch, exp_ad, bernoulli_op, is_mc, twist
from freedgl.simplex import (
    faces_of_simplex, face_name, simplex_genset,
    seed_family, ModelFamily, interval_model, triangle_model, tetra_model,
    interval_top_diff, triangle_top_diff, tetra_top_diff, vertex_top_diff,
    bch_transgression, solve_boundary, build_model, build_symmetric_model,
    permutation_map, equivariance_residues, reynolds_sign_project,
    subdivision_morphism, barycentric_mc, check_model_axioms,
    check_cosimplicial_identities, generator_homology,
    invariant_linear_homology,
)

HALF = Fraction(1, 2)


def barycenter(model):
    out = zero_elt(model.gens, model.N)
    for i in range(model.n + 1):
        out = out + Fraction(1, model.n + 1) * model.gen((i,))
    return out


def test_face_enumeration_and_naming():
    faces = faces_of_simplex(2)
    assert faces[:3] == [(0,), (1,), (2,)]
    assert faces[-1] == (0, 1, 2)
    assert len(faces) == 7
    assert face_name((0, 1, 2)) == "a012"
    assert face_name((0, 11)) == "a_0_11"
    g = simplex_genset(2)
    assert g.degrees[g.index("a0")] == -1
    assert g.degrees[g.index("a01")] == 0
    assert g.degrees[g.index("a012")] == 1


def test_interval_model():
    m = interval_model(6)
    rep = check_model_axioms(m)
    assert rep["ok"], rep
    a = m.gen((0,))
    b = m.gen((1,))
    x = m.gen((0, 1))
    dx = m.dgl.d(x)
    assert dx.length_part(1) == b - a
    quad = dx.length_part(2)
    from freedgl.lie import bracket
    assert quad == bracket(x, b) - HALF * bracket(x, b - a)


def test_interval_two_closed_forms():
    m = interval_model(6)
    a = m.gen((0,))
    b = m.gen((1,))
    x = m.gen((0, 1))
    from freedgl.lie import bracket
    form_b = bracket(x, b) + bernoulli_op(x, b - a)
    form_a = bracket(x, a) + bernoulli_op(-x, b - a)
    assert m.dgl.d(x) == form_b
    assert form_a == form_b


def test_triangle_model_axioms_and_twisted_diff():
    m = triangle_model(5)
    rep = check_model_axioms(m)
    assert rep["ok"], rep
    tw = twist(m.dgl, m.gen((0,)))
    got = tw.d(m.gen((0, 1, 2)))
    want = bch(m.gen((0, 1)), m.gen((1, 2)), -m.gen((0, 2)))
    assert got == want


def test_tetra_model_axioms():
    m = tetra_model(4)
    rep = check_model_axioms(m)
    assert rep["ok"], rep


def test_tetra_twisted_diff_shape():
    N = 4
    m = tetra_model(N)
    tw = twist(m.dgl, m.gen((0,)))
    e_list = [m.gen((0, 1, 2)), m.gen((0, 2, 3)), -m.gen((0, 1, 3))]
    B = bch_transgression(e_list, tw)
    got = tw.d(m.gen((0, 1, 2, 3)))
    want = exp_ad(m.gen((0, 1)), m.gen((1, 2, 3))) - B
    assert got == want


def test_transgression_identity():
    N = 4
    m = tetra_model(N)
    tw = twist(m.dgl, m.gen((0,)))
    e_list = [m.gen((0, 1, 2)), m.gen((0, 2, 3)), -m.gen((0, 1, 3))]
    B = bch_transgression(e_list, tw)
    assert B.length_part(1) == e_list[0] + e_list[1] + e_list[2]
    assert tw.d(B) == bch(*[tw.d(e) for e in e_list])


def test_transgression_single_input():
    m = triangle_model(4)
    tw = twist(m.dgl, m.gen((0,)))
    e = m.gen((0, 1, 2))
    assert bch_transgression([e], tw) == e
    with pytest.raises(DomainError):
        bch_transgression([m.gen((0, 1))], tw)
    with pytest.raises(DomainError):
        bch_transgression([], tw)


def test_solve_boundary_exact_and_zero():
    m = interval_model(5)
    allowed = list(range(len(m.gens)))
    x = m.gen((0, 1))
    beta = solve_boundary(m.dgl, m.dgl.d(x), allowed)
    assert beta == x
    assert solve_boundary(m.dgl, m.dgl.zero(), allowed).is_zero()


def test_solve_boundary_infeasible_has_witness():
    m = interval_model(5)
    a = m.gen((0,))
    b = m.gen((1,))
    with pytest.raises(SolveError) as exc:
        solve_boundary(m.dgl, b - a, [m.gens.index("a0"), m.gens.index("a1")])
    assert "witness" in str(exc.value)


def test_built_triangle_matches_closed_form():
    m = build_model(2, 5)
    assert check_model_axioms(m)["ok"]
    built = m.dgl.diff.images[m.gens.index("a012")]
    assert built == triangle_top_diff(5)


def test_built_tetra_axioms():
    m = build_model(3, 3)
    rep = check_model_axioms(m)
    assert rep["ok"], rep
    # linear part of the top cell is the simplicial chain differential
    top = m.gen((0, 1, 2, 3))
    want = (m.gen((1, 2, 3)) - m.gen((0, 2, 3))
            + m.gen((0, 1, 3)) - m.gen((0, 1, 2)))
    assert m.dgl.d1(top) == want


def test_builder_rejects_broken_seeds():
    N = 4
    bad_interval = interval_top_diff(N) * 2
    with pytest.raises(SolveError):
        build_model(2, N, seeds=[vertex_top_diff(N), bad_interval])
    with pytest.raises(ConfigError):
        build_model(3, N, seeds=[vertex_top_diff(N)])


def test_symmetric_models_axioms_and_equivariance():
    for n in (2, 3):
        m = build_symmetric_model(n, 3)
        rep = check_model_axioms(m)
        assert rep["ok"], rep
        for sigma in permutations(range(n + 1)):
            for name, res in equivariance_residues(m, sigma):
                assert res.is_zero(), (sigma, name, res.pretty())


def test_seed_family_not_equivariant():
    m = triangle_model(3)
    swap = (1, 0, 2)
    assert any(not r.is_zero() for _, r in equivariance_residues(m, swap))


def test_permutation_action_is_signed_automorphism():
    m = triangle_model(3)
    sigma = (2, 0, 1)
    f = permutation_map(m, sigma)
    assert f(m.gen((0, 1))) == -m.gen((0, 2))
    assert f(m.gen((1, 2))) == m.gen((0, 1))
    assert f(m.gen((0, 1, 2))) == m.gen((0, 1, 2))
    tau = (1, 0, 2)
    g = permutation_map(m, tau)
    assert g(m.gen((0, 1, 2))) == -m.gen((0, 1, 2))


def test_reynolds_projection_is_idempotent_on_sign_part():
    m = build_symmetric_model(2, 3)
    top_image = m.dgl.diff.images[m.gens.index("a012")]
    assert reynolds_sign_project(m, top_image) == top_image


def test_cosimplicial_identities_symmetric():
    fam = ModelFamily(3, "symmetric")
    rep = check_cosimplicial_identities(fam, 3)
    assert rep
    bad = [lbl for lbl, ok in rep if not ok]
    assert not bad, bad


def test_cosimplicial_identities_seed_cofaces():
    fam = seed_family(3)
    rep = check_cosimplicial_identities(fam, 3)
    bad = [lbl for lbl, ok in rep if not ok]
    assert not bad, bad
    assert all(lbl.startswith("delta") for lbl, _ in rep)
    with pytest.raises(DomainError):
        fam.codegeneracy(0, 1)


def test_cofaces_are_chain_maps_seed():
    fam = seed_family(4)
    for n in (0, 1, 2):
        for i in range(n + 2):
            assert fam.coface(i, n).is_chain_map(), (i, n)


def test_subdivision_morphism_chain_map():
    g = subdivision_morphism(5)
    assert g.is_chain_map()
    src = g.source
    x = Elt(src.gens, src.N, {(src.gens.index("a01"),): Fraction(1)})
    img = g(x)
    t = g.target.gens
    assert img.length_part(1) == (
        Elt(t, src.N, {(t.index("a01"),): Fraction(1)})
        + Elt(t, src.N, {(t.index("a12"),): Fraction(1)}))


def test_barycentric_mc():
    for n, N in [(1, 5), (2, 4), (3, 3)]:
        m = seed_family(N).model(n)
        x = barycentric_mc(m)
        assert is_mc(m.dgl, x)
        assert x.length_part(1) == barycenter(m)
        one_skeleton = [i for i, name in enumerate(m.gens.names)
                        if len(name) <= 3]
        assert x.support_in(one_skeleton)


def test_generator_homology_point_like():
    for n, N in [(1, 4), (2, 4), (3, 3)]:
        m = seed_family(N).model(n)
        dims, reps = generator_homology(m)
        assert dims == {-1: 1}
        idims, ireps = generator_homology(m, invariant=True)
        assert idims == {-1: 1}
        assert len(ireps[-1]) == 1
        assert ireps[-1][0] == barycenter(m)


def test_invariant_slice_homology_triangle():
    m = build_symmetric_model(2, 3)
    dims = invariant_linear_homology(m)
    # one class in degree -1 (the barycenter) and its bracket square
    assert dims == {(-1, 1): 1, (-2, 2): 1}
