from cmtilt import linalg
from cmtilt.fields import QQ, FieldSpec

F101 = FieldSpec.prime(101)


def test_rank_and_nullspace_rational():
    m = [[QQ.of(1), QQ.of(2)], [QQ.of(2), QQ.of(4)]]
    assert linalg.rank(QQ, m) == 1
    ns = linalg.right_nullspace(QQ, m)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + 2 * v[1] == 0


def test_rank_mod_p():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert linalg.rank(F101, m) == 2
    ns = linalg.right_nullspace(F101, m)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) % 101 == 0


def test_solve_and_inverse():
    m = [[2, 1], [1, 1]]
    inv = linalg.inverse(F101, m)
    assert linalg.mat_mul(F101, m, inv) == linalg.identity(F101, 2)
    x = linalg.solve_left(F101, m, [1, 0])
    assert [sum(a * b for a, b in zip(x, col)) % 101 for col in zip(*m)] == [1, 0]
    assert linalg.inverse(QQ, [[QQ.of(1), QQ.of(2)], [QQ.of(2), QQ.of(4)]]) is None


def test_solve_no_solution():
    m = [[1, 0], [1, 0]]
    assert linalg.solve_left(F101, [[1, 0]], [0, 1]) is None
    assert linalg.solve_right(F101, m, [1, 1]) is not None
    assert linalg.solve_right(F101, m, [1, 2]) is None


def test_subspace_tracker():
    t = linalg.SubspaceTracker(F101, 3)
    assert t.add([1, 2, 3])
    assert not t.add([2, 4, 6])
    assert t.add([0, 1, 0])
    assert t.rank == 2
    assert t.contains([1, 3, 3])
    coords = t.coordinates([1, 3, 3])
    assert coords is not None
    assert t.coordinates([0, 0, 1]) is None


def test_charpoly():
    # companion of t^2 + t + 1
    assert linalg.charpoly_rational([[0, 1], [-1, -1]]) == [1, 1, 1]
    assert linalg.charpoly_rational([[2]]) == [-2, 1]
    # diag(1, 2): (t-1)(t-2) = t^2 - 3t + 2
    assert linalg.charpoly_rational([[1, 0], [0, 2]]) == [2, -3, 1]
