"""BCH, exponential conjugation, Bernoulli operator, gauge, twist."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freedgl.lie import (
    GenSet, Elt, FreeDGL, DomainError, bracket, generator_elt,
    lyndon_slice_basis, elt_from_slice_coords,
)
from freedgl.series import (
    bernoulli_numbers, bch, exp_ad, bernoulli_op, bernoulli_op_inverse,
    is_mc, mc_residue, gauge, twist,
)


def test_bernoulli_first_kind():
    B = bernoulli_numbers(8)
    assert B[0] == 1
    assert B[1] == Fraction(-1, 2)
    assert B[2] == Fraction(1, 6)
    assert B[3] == 0
    assert B[4] == Fraction(-1, 30)
    assert B[5] == 0
    assert B[6] == Fraction(1, 42)
    assert B[8] == Fraction(-1, 30)


GENS3 = GenSet([("x", 0), ("y", 0), ("z", 0)])
N = 5


def g3(name, n=N):
    return generator_elt(GENS3, n, name)


def random_degree0(seed_coeffs):
    """A degree-0 element from coefficient lists over the Lyndon slices."""
    total = Elt(GENS3, N, {})
    for length in (1, 2, 3):
        basis = lyndon_slice_basis(GENS3, 0, length)
        coords = [seed_coeffs[(length * 7 + i) % len(seed_coeffs)]
                  for i in range(len(basis))]
        total = total + elt_from_slice_coords(GENS3, N, basis, coords)
    return total


def test_bch_expansion_through_length_3():
    x, y = g3("x"), g3("y")
    z = bch(x, y)
    expect = (x + y + Fraction(1, 2) * bracket(x, y)
              + Fraction(1, 12) * bracket(x, bracket(x, y))
              - Fraction(1, 12) * bracket(y, bracket(x, y)))
    assert z.truncated(3) == expect.truncated(3)


def test_bch_identity_and_inverse():
    x = g3("x")
    zero = Elt(GENS3, N, {})
    assert bch(x, zero) == x
    assert bch(zero, x) == x
    assert bch(x, -x).is_zero()


@given(st.lists(st.builds(Fraction,
                          st.integers(min_value=-6, max_value=6),
                          st.integers(min_value=1, max_value=4)),
                min_size=1, max_size=10))
@settings(max_examples=25, deadline=None)
def test_bch_associative(coeffs):
    x = random_degree0(coeffs)
    y = random_degree0(list(reversed(coeffs)))
    z = random_degree0(coeffs[::2] + coeffs[1::2])
    assert bch(bch(x, y), z) == bch(x, bch(y, z))


@given(st.lists(st.builds(Fraction,
                          st.integers(min_value=-6, max_value=6),
                          st.integers(min_value=1, max_value=4)),
                min_size=1, max_size=10))
@settings(max_examples=25, deadline=None)
def test_exp_ad_composes_along_bch(coeffs):
    x = random_degree0(coeffs)
    y = random_degree0(list(reversed(coeffs)))
    v = g3("z")
    assert exp_ad(bch(x, y), v) == exp_ad(x, exp_ad(y, v))


def test_exp_ad_is_bracket_automorphism():
    x, y, z = g3("x"), g3("y"), g3("z")
    u = bracket(y, z)
    assert exp_ad(x, u) == bracket(exp_ad(x, y), exp_ad(x, z))


def test_bch_rejects_nonzero_degree():
    g = GenSet([("a", -1), ("x", 0)])
    a = generator_elt(g, 3, "a")
    x = generator_elt(g, 3, "x")
    with pytest.raises(DomainError):
        bch(a, x)
    with pytest.raises(DomainError):
        exp_ad(a, x)


def test_bernoulli_op_values():
    x, v = g3("x"), g3("y")
    out = bernoulli_op(x, v)
    assert out.length_part(1) == v
    assert out.length_part(2) == Fraction(-1, 2) * bracket(x, v)
    assert out.length_part(3) == Fraction(1, 12) * bracket(x, bracket(x, v))


def test_bernoulli_op_inverse_is_inverse():
    x, v = g3("x"), g3("y")
    assert bernoulli_op(x, bernoulli_op_inverse(x, v)) == v
    assert bernoulli_op_inverse(x, bernoulli_op(x, v)) == v


def _ls_dgl(n):
    """Free DGL on two MC vertices and one degree-0 edge, with the edge
    differential d(x) = ad_x(b) + sum B_k/k! ad_x^k(b - a)."""
    g = GenSet([("a", -1), ("b", -1), ("x", 0)])
    a = generator_elt(g, n, "a")
    b = generator_elt(g, n, "b")
    x = generator_elt(g, n, "x")
    dx = bracket(x, b) + bernoulli_op(x, b - a)
    return FreeDGL(g, n, {
        0: Fraction(-1, 2) * bracket(a, a),
        1: Fraction(-1, 2) * bracket(b, b),
        2: dx,
    })


def test_is_mc_examples():
    L = _ls_dgl(4)
    a = L.gen("a")
    b = L.gen("b")
    assert is_mc(L, a)
    assert is_mc(L, b)
    assert is_mc(L, L.zero() * 0)
    assert not is_mc(L, a + b)
    assert mc_residue(L, a + b) == bracket(a, b)
    with pytest.raises(DomainError):
        is_mc(L, L.gen("x"))


def test_gauge_identity_and_linear_part():
    L = _ls_dgl(5)
    a, b, x = L.gen("a"), L.gen("b"), L.gen("x")
    assert gauge(L.zero(), b, L) == b
    moved = gauge(x, b, L)
    # length-1 part drops by the linear part of d(x) = b - a
    assert moved.length_part(1) == b.length_part(1) - L.d1(x)
    assert is_mc(L, moved)


def test_gauge_connects_interval_endpoints():
    L = _ls_dgl(6)
    a, b, x = L.gen("a"), L.gen("b"), L.gen("x")
    assert gauge(x, b, L) == a


def test_gauge_is_group_action_along_bch():
    # one MC generator, two non-commuting degree-0 generators with d(x)=[x,a]
    g = GenSet([("a", -1), ("x", 0), ("y", 0)])
    n = 5
    a = generator_elt(g, n, "a")
    x = generator_elt(g, n, "x")
    y = generator_elt(g, n, "y")
    L = FreeDGL(g, n, {
        0: Fraction(-1, 2) * bracket(a, a),
        1: bracket(x, a),
        2: bracket(y, a),
    })
    assert L.check_d_squared() == []
    u = x + Fraction(1, 3) * bracket(x, y)
    v = y - 2 * x
    lhs = gauge(bch(u, v), a, L)
    rhs = gauge(u, gauge(v, a, L), L)
    assert lhs == rhs
    assert is_mc(L, lhs)


def test_gauge_rejects_non_mc_target():
    L = _ls_dgl(4)
    with pytest.raises(DomainError):
        gauge(L.gen("x"), L.gen("a") + L.gen("b"), L)


def test_twist_definitional_difference():
    L = _ls_dgl(5)
    a = L.gen("a")
    T = twist(L, a)
    for name in ("a", "b", "x"):
        g = L.gen(name)
        assert T.d(g) - L.d(g) == bracket(a, g)
    assert T.check_d_squared() == []
    # twist by zero changes nothing
    Z = twist(L, L.zero())
    for name in ("a", "b", "x"):
        assert Z.d(L.gen(name)) == L.d(L.gen(name))


def test_twist_rejects_non_mc():
    L = _ls_dgl(4)
    with pytest.raises(DomainError):
        twist(L, L.gen("a") + L.gen("b"))


def test_twisted_interval_differential():
    # d_a(a) = da + [a,a] = (1/2)[a,a]
    L = _ls_dgl(4)
    a = L.gen("a")
    T = twist(L, a)
    assert T.d(a) == Fraction(1, 2) * bracket(a, a)
