"""Sparse exact linear algebra against brute-force oracles."""

from hypothesis import given, strategies as st

from nlielab.fields import GF, QQ
from nlielab.linalg import SparseMatrix, Span, nullspace, rank, rref, solve_linear, vec_add_scaled

F5 = GF(5)


def matrices(field, max_rows=5, max_cols=5):
    def build(entries, nrows, ncols):
        rows = [{} for _ in range(nrows)]
        for (i, j, v) in entries:
            rows[i % nrows][j % ncols] = field.scalar(v)
        rows = [{k: v for k, v in r.items() if v} for r in rows]
        return SparseMatrix(field, rows, ncols=ncols)

    return st.builds(
        build,
        st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(-6, 6)), max_size=12),
        st.integers(1, max_rows),
        st.integers(1, max_cols),
    )


def matvec(m: SparseMatrix, x: dict):
    out = {}
    for i, row in enumerate(m.rows):
        acc = m.field.zero()
        for j, c in row.items():
            acc = acc + c * x.get(j, m.field.zero())
        if acc:
            out[i] = acc
    return out


@given(matrices(QQ))
def test_rank_plus_nullity(m):
    assert rank(m) + len(nullspace(m)) == m.ncols


@given(matrices(F5))
def test_rank_plus_nullity_mod_p(m):
    assert rank(m) + len(nullspace(m)) == m.ncols


@given(matrices(QQ))
def test_nullspace_vectors_are_solutions(m):
    for v in nullspace(m):
        assert matvec(m, v) == {}


@given(matrices(QQ))
def test_rref_pivots_are_unit_columns(m):
    r, pivots = rref(m)
    assert rank(m) == len(pivots)
    for i, j in enumerate(pivots):
        assert r.rows[i][j] == QQ.one()
        for k in range(r.nrows):
            if k != i:
                assert j not in r.rows[k]


@given(matrices(F5), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_solve_linear_solves_consistent_systems(m, xs):
    x = {j: F5.scalar(c) for j, c in enumerate(xs[: m.ncols]) if F5.scalar(c)}
    b_dict = matvec(m, x)
    b = [b_dict.get(i, F5.zero()) for i in range(m.nrows)]
    sol = solve_linear(m, b)
    assert sol is not None
    assert matvec(m, sol) == b_dict


def test_solve_linear_detects_inconsistency():
    m = SparseMatrix(QQ, [{0: QQ.one()}, {0: QQ.one()}], ncols=1)
    assert solve_linear(m, [QQ.one(), QQ.scalar(2)]) is None
    assert solve_linear(m, [QQ.one(), QQ.one()]) == {0: QQ.one()}


def test_span_dedupes_dependent_vectors():
    s = Span(QQ)
    one = QQ.one()
    assert s.insert({0: one, 1: one}) is True
    assert s.insert({0: QQ.scalar(2), 1: QQ.scalar(2)}) is False
    assert s.dim == 1
    assert s.insert({1: one}) is True
    assert s.dim == 2
    assert s.contains({0: QQ.scalar(5)})
    assert not s.contains({2: one})


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=6))
def test_span_dim_matches_matrix_rank(vecs):
    s = Span(QQ)
    rows = []
    for v in vecs:
        d = {j: QQ.scalar(c) for j, c in enumerate(v) if c}
        s.insert(dict(d))
        if d:
            rows.append(d)
    assert s.dim == rank(SparseMatrix(QQ, rows, ncols=3))


def test_vec_add_scaled_cancels():
    target = {0: QQ.one(), 1: QQ.scalar(2)}
    vec_add_scaled(target, {0: QQ.one(), 2: QQ.one()}, QQ.scalar(-1))
    assert target == {1: QQ.scalar(2), 2: QQ.scalar(-1)}
