"""Exact sparse elimination: rank, solve, kernel, row/column agreement."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from freedgl.linalg import (
    SpanReducer, solve_columns, kernel_columns, rank_columns,
    transpose, vec_add, vec_scale,
)


def F(n, d=1):
    return Fraction(n, d)


def test_reducer_basics():
    red = SpanReducer()
    assert red.insert({0: F(2), 1: F(4)}, "a")[0] == 0
    # same direction: dependent, expressed through the first tag
    piv, comb = red.insert({0: F(1), 1: F(2)}, "b")
    assert piv is None
    assert comb == {"a": F(1, 2)}
    piv, _ = red.insert({1: F(1)}, "c")
    assert piv == 1
    # rows stay mutually reduced: pivot 0 row has no entry at 1 anymore
    assert red.rows[0] == {0: F(1)}
    assert red.rows[1] == {1: F(1)}


def test_solve_columns_exact_and_canonical():
    cols = [{0: F(1), 1: F(1)}, {0: F(2), 1: F(2)}, {1: F(1)}]
    x, residual = solve_columns(cols, {0: F(3), 1: F(5)})
    assert residual is None
    # column 1 is dependent on column 0, so it stays free (zero)
    assert x == {0: F(3), 2: F(2)}
    x, residual = solve_columns([{0: F(1)}], {1: F(1)})
    assert x is None
    assert residual == {1: F(1)}


def test_kernel_columns():
    cols = [{0: F(1)}, {0: F(2)}, {1: F(1)}, {0: F(1), 1: F(3)}]
    ker = kernel_columns(cols)
    assert ker == [{0: F(-2), 1: F(1)}, {0: F(-1), 2: F(-3), 3: F(1)}]
    for k in ker:
        total = {}
        for j, c in k.items():
            total = vec_add(total, cols[j], c)
        assert total == {}


matrices = st.lists(
    st.lists(st.builds(Fraction,
                       st.integers(min_value=-5, max_value=5),
                       st.integers(min_value=1, max_value=3)),
             min_size=4, max_size=4),
    min_size=1, max_size=6)


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_row_rank_equals_column_rank(dense):
    cols = []
    for col in dense:
        cols.append({i: c for i, c in enumerate(col) if c != 0})
    rows = transpose(cols)
    assert rank_columns(cols) == rank_columns(rows)


@given(matrices, st.lists(st.integers(min_value=-4, max_value=4),
                          min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_solutions_verify(dense, coeffs):
    cols = [{i: c for i, c in enumerate(col) if c != 0} for col in dense]
    b = {}
    for j, col in enumerate(cols):
        b = vec_add(b, col, Fraction(coeffs[j % len(coeffs)]))
    x, residual = solve_columns(cols, b)
    assert residual is None
    total = {}
    for j, c in x.items():
        total = vec_add(total, cols[j], c)
    assert total == b


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(dense):
    cols = [{i: c for i, c in enumerate(col) if c != 0} for col in dense]
    assert rank_columns(cols) + len(kernel_columns(cols)) == len(cols)
