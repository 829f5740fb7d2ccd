import pytest
from hypothesis import given, settings, strategies as st

from alexdual.algebra import (
    INTEGERS,
    RATIONALS,
    ContractError,
    GroupInvariants,
    IntMatrix,
    RingSpec,
    prime_field,
    quotient_invariants,
    rank_over,
    smith_normal_form,
)
from oracles import rank_by_minors, rank_fraction, smith_by_minors

# Reduced boundary d_1 of the triangle boundary: rows e1 e2 e3, columns e12 e13 e23.
TRIANGLE_D1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]

small_matrices = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: IntMatrix(r, c, rows))
    )
)


def test_ring_parse():
    assert RingSpec.parse("z") == INTEGERS
    assert RingSpec.parse("Q") == RATIONALS
    assert RingSpec.parse("fp:3") == prime_field(3)
    for bad in ("fp:4", "fp:1", "fp:x", "r", ""):
        with pytest.raises(ValueError):
            RingSpec.parse(bad)


def test_ring_needs_prime():
    with pytest.raises(ValueError):
        prime_field(9)
    assert str(prime_field(7)) == "F7"


def test_matrix_shape_checked():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, [[1, 2]])
    assert IntMatrix(0, 3).transpose().shape == (3, 0)
    assert (IntMatrix(2, 0) @ IntMatrix(0, 3)) == IntMatrix.zeros(2, 3)


def test_snf_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal == (1, 6)
    zero = smith_normal_form(IntMatrix.zeros(3, 2))
    assert zero.diagonal == () and zero.rank == 0
    tri = smith_normal_form(IntMatrix.from_rows(TRIANGLE_D1))
    assert tri.diagonal == (1, 1)
    assert list(tri.diagonal) == smith_by_minors(TRIANGLE_D1)


def test_snf_needs_divisibility_fixup():
    # Already diagonal but not a divisibility chain; only the fix-up pass repairs it.
    assert smith_normal_form(IntMatrix.from_rows([[4, 0, 0], [0, 6, 0], [0, 0, 10]])).diagonal == (2, 2, 60)


def test_rank_examples():
    assert rank_over(IntMatrix.from_rows([[2]]), prime_field(2)) == 0
    assert rank_over(IntMatrix.from_rows([[2]]), RATIONALS) == 1
    m = IntMatrix.from_rows(TRIANGLE_D1)
    assert rank_over(m, prime_field(3)) == 2
    assert rank_by_minors(TRIANGLE_D1, 3) == 2


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_snf_matches_determinantal_divisors(m):
    snf = smith_normal_form(m)
    assert list(snf.diagonal) == smith_by_minors(m.tolist())
    assert all(b % a == 0 for a, b in zip(snf.diagonal, snf.diagonal[1:]))
    assert snf.rank <= min(m.shape)


@given(small_matrices)
def test_snf_idempotent(m):
    snf = smith_normal_form(m)
    diag = [[snf.diagonal[i] if i == j and i < snf.rank else 0 for j in range(m.cols)] for i in range(m.rows)]
    assert smith_normal_form(IntMatrix(m.rows, m.cols, diag)) == snf


@given(small_matrices)
def test_snf_deterministic(m):
    assert smith_normal_form(m) == smith_normal_form(IntMatrix(m.rows, m.cols, m.tolist()))


@given(small_matrices)
def test_rational_rank_is_snf_rank(m):
    assert rank_over(m, RATIONALS) == smith_normal_form(m).rank == rank_fraction(m.tolist())


@settings(max_examples=200, deadline=None)
@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_prime_rank_from_snf(m, p):
    snf = smith_normal_form(m)
    expected = snf.rank - sum(1 for d in snf.diagonal if d % p == 0)
    assert rank_over(m, prime_field(p)) == expected == rank_by_minors(m.tolist(), p)


def test_large_entries_stay_exact():
    big = 10 ** 40
    m = IntMatrix.from_rows([[big, big + 1], [big - 1, big]])
    assert smith_normal_form(m).diagonal == (1, 1)


def test_quotient_triangle_cycle():
    d1 = IntMatrix.from_rows(TRIANGLE_D1)
    d2 = IntMatrix.zeros(3, 0)
    cycle = IntMatrix.from_rows([[1], [-1], [1]])
    assert (d1 @ cycle).is_zero()
    assert quotient_invariants(d1, d2, INTEGERS) == GroupInvariants(INTEGERS, 1)


def test_quotient_of_zero_modules():
    assert quotient_invariants(IntMatrix.zeros(0, 0), IntMatrix.zeros(0, 0), INTEGERS).is_trivial


def test_quotient_detects_torsion():
    # Z -> Z, multiplication by 4: cokernel Z/4.
    inv = quotient_invariants(IntMatrix.zeros(0, 1), IntMatrix.from_rows([[4]]), INTEGERS)
    assert inv == GroupInvariants(INTEGERS, 0, (4,))
    assert quotient_invariants(IntMatrix.zeros(0, 1), IntMatrix.from_rows([[4]]), prime_field(2)).free_rank == 1
    assert quotient_invariants(IntMatrix.zeros(0, 1), IntMatrix.from_rows([[4]]), RATIONALS).is_trivial


def test_quotient_chain_condition_enforced():
    with pytest.raises(ContractError):
        quotient_invariants(IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1]]), INTEGERS)
    with pytest.raises(ContractError):
        quotient_invariants(IntMatrix.zeros(1, 2), IntMatrix.zeros(3, 1), INTEGERS)


@st.composite
def chain_pairs(draw):
    """A composable pair (a, b) with a @ b == 0."""
    m = draw(st.integers(1, 5))
    rows = draw(st.integers(0, 4))
    a = IntMatrix(rows, m, draw(st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m),
                                         min_size=rows, max_size=rows)))
    # Columns of b are integer combinations of kernel vectors of a.
    basis = _kernel_basis(a)
    k = len(basis)
    ncols = draw(st.integers(0, 4))
    coeffs = draw(st.lists(st.lists(st.integers(-4, 4), min_size=ncols, max_size=ncols),
                           min_size=k, max_size=k))
    b = [[sum(basis[t][r] * coeffs[t][c] for t in range(k)) for c in range(ncols)] for r in range(m)]
    return a, IntMatrix(m, ncols, b)


def _kernel_basis(a: IntMatrix):
    # Brute-force search over small vectors; need not span the whole kernel.
    from itertools import product
    m = a.cols
    vecs = []
    for v in product(range(-2, 3), repeat=m):
        if any(v) and all(sum(x * y for x, y in zip(row, v)) == 0 for row in a.tolist()):
            vecs.append(v)
    basis = []
    for v in sorted(vecs, key=lambda v: (sum(map(abs, v)), v)):
        if rank_fraction(basis + [list(v)]) > len(basis):
            basis.append(list(v))
    return basis


@settings(max_examples=100, deadline=None)
@given(chain_pairs())
def test_quotient_matches_direct_cokernel_route(pair):
    a, b = pair
    got = quotient_invariants(a, b, INTEGERS)
    # Torsion of ker a / im b equals the torsion of coker b: ker a is a direct summand.
    snf = smith_by_minors(b.tolist())
    assert got.torsion == tuple(d for d in snf if d > 1)
    assert got.free_rank == a.cols - rank_fraction(a.tolist()) - rank_fraction(b.tolist())
    for p in (2, 3):
        field = quotient_invariants(a, b, prime_field(p))
        assert field.free_rank == a.cols - rank_by_minors(a.tolist(), p) - rank_by_minors(b.tolist(), p)
    assert quotient_invariants(a, b, RATIONALS).torsion == ()


def test_group_invariants_validation():
    with pytest.raises(ValueError):
        GroupInvariants(RATIONALS, 0, (2,))
    with pytest.raises(ValueError):
        GroupInvariants(INTEGERS, 0, (2, 3))
    assert str(GroupInvariants(INTEGERS, 2, (2, 4))) == "Z^2 (+) Z/2 (+) Z/4"
    assert str(GroupInvariants(INTEGERS)) == "0"
    assert str(GroupInvariants(prime_field(3), 1)) == "F3"
