import random
from fractions import Fraction

from fmk.linalg import nullspace, rank, solve, solve_with_nullspace
from fmk.scalars import QQ, PrimeField


def _frac(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_identity_solve():
    rows = _frac([[1, 0], [0, 1]])
    assert solve(rows, [Fraction(2), Fraction(-3)], 2, QQ) == [Fraction(2), Fraction(-3)]


def test_zero_matrix_nullspace_is_everything():
    rows = _frac([[0, 0, 0]])
    basis = nullspace(rows, 3, QQ)
    assert len(basis) == 3


def test_one_by_two_nullspace():
    rows = _frac([[1, -1]])
    basis = nullspace(rows, 2, QQ)
    assert basis == [[Fraction(1), Fraction(1)]]


def test_inconsistent_system():
    rows = _frac([[1, 1], [1, 1]])
    assert solve(rows, [Fraction(0), Fraction(1)], 2, QQ) is None


def test_solution_plus_nullspace_random():
    rng = random.Random(0)
    for _ in range(25):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        x = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        rhs = [sum(r[c] * x[c] for c in range(n)) for r in rows]
        result = solve_with_nullspace(rows, rhs, n, QQ)
        assert result is not None
        part, basis = result
        assert [sum(r[c] * part[c] for c in range(n)) for r in rows] == rhs
        for vec in basis:
            assert all(sum(r[c] * vec[c] for c in range(n)) == 0 for r in rows)
        assert rank(rows, n, QQ) + len(basis) == n


def test_prime_field_solves():
    f5 = PrimeField(5)
    rows = [[f5.from_int(2), f5.from_int(1)], [f5.from_int(1), f5.from_int(4)]]
    sol = solve(rows, [f5.from_int(1), f5.from_int(2)], 2, f5)
    assert sol is not None
    assert rows[0][0] * sol[0] + rows[0][1] * sol[1] == f5.from_int(1)
    assert rows[1][0] * sol[0] + rows[1][1] * sol[1] == f5.from_int(2)
