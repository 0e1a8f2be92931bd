"""
测试精确有理数线性代数
"""

import pytest
from sympy import QQ

from errors import DimensionMismatchError, InputError, NotNilpotentError, ZeroPolynomialError
from exactla.matrix import entries, inverse, is_zero, matrix, mul, identity, rref
from exactla.polynomial import (
    check_jordan_chevalley,
    exp_nilpotent,
    is_semisimple,
    jordan_chevalley,
    minimal_polynomial,
    squarefree_part,
)
from exactla.subspace import (
    Subspace,
    is_direct_sum,
    kernel,
    kernel_image,
    image,
    push_forward,
    restrict,
    solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from formats.random_algebras import random_rational_matrix


class TestRationals:
    """测试有理数解析"""

    def test_parse_fraction(self):
        """测试 p/q 形式"""
        from exactla.matrix import qq
        assert qq("3/4") == QQ(3, 4)
        assert qq("-6/8") == QQ(-3, 4)
        assert qq(" 5 ") == QQ(5)

    def test_zero_denominator(self):
        """测试分母为零"""
        from exactla.matrix import qq
        with pytest.raises(InputError, match="zero denominator"):
            qq("1/0")

    def test_not_a_number(self):
        """测试非法字符串"""
        from exactla.matrix import qq
        with pytest.raises(InputError, match="not a rational"):
            qq("0.5")


class TestMatrix:
    """测试矩阵封装"""

    def test_ragged_rows(self):
        """测试行长度不一致"""
        with pytest.raises(DimensionMismatchError):
            matrix([[1, 2], [3]])

    def test_inverse(self):
        """测试逆矩阵"""
        m = matrix([[2, 1], [1, 1]])
        assert entries(mul(m, inverse(m))) == entries(identity(2))

    def test_singular(self):
        """测试奇异矩阵"""
        with pytest.raises(InputError, match="singular"):
            inverse(matrix([[1, 2], [2, 4]]))

    def test_rref_rank(self):
        """测试秩"""
        _, pivots, rank = rref(matrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))
        assert rank == 2
        assert pivots == [0, 2]


class TestSubspace:
    """测试子空间的规范形式与格运算"""

    def test_canonical_equality(self):
        """测试不同生成组给出同一 RREF 基"""
        u = Subspace.span([(2, 4, 0), (0, 0, 3)], 3)
        v = Subspace.span([(1, 2, 1), (1, 2, -1)], 3)
        assert u == v
        assert u.rows == ((1, 2, 0), (0, 0, 1))

    def test_zero_vectors_dropped(self):
        """测试零向量不影响张成"""
        assert Subspace.span([(0, 0)], 2).is_zero

    def test_wrong_length(self):
        """测试向量长度不符"""
        with pytest.raises(DimensionMismatchError):
            Subspace.span([(1, 2)], 3)

    def test_coordinates(self):
        """测试坐标与还原"""
        w = Subspace.span([(1, 0, 1), (0, 1, 1)], 3)
        v = (QQ(2), QQ(3), QQ(5))
        coords = w.coordinates(v)
        assert coords == (2, 3)
        assert w.vector(coords) == v
        with pytest.raises(ValueError):
            w.coordinates((1, 0, 0))

    def test_kernel_image(self):
        """测试秩-零化度"""
        m = matrix([[1, 1, 0], [0, 0, 1]])
        assert kernel(m).dim + image(m).dim == 3
        assert kernel(m) == Subspace.span([(1, -1, 0)], 3)
        k, im = kernel_image(identity(3))
        assert k.is_zero and im.is_full
        k, im = kernel_image(matrix([[0, 1], [0, 0]]))
        assert k == im == Subspace.span([(1, 0)], 2)

    def test_kernel_image_of_semisimple_part(self, paper5):
        """测试 ad x1 半单部分的核与像"""
        s, _ = jordan_chevalley(paper5.ad_basis[0])
        k, im = kernel_image(s)
        assert k == Subspace.span([(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 0, 1)], 5)
        assert im == Subspace.span([(0, 0, 1, 0, 0), (0, 0, 0, 1, 0)], 5)

    def test_sum_and_intersection(self):
        """测试和与交"""
        u = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
        v = Subspace.span([(0, 1, 0), (0, 0, 1)], 3)
        assert subspace_sum(u, v).is_full
        assert subspace_intersect(u, v) == Subspace.span([(0, 1, 0)], 3)
        assert subspace_contains(u, subspace_intersect(u, v))
        assert not is_direct_sum([u, v], Subspace.full(3))

    def test_lattice_laws(self, rng):
        """测试和与交的交换律、结合律、幂等律与吸收律"""

        def random_subspace():
            count = int(rng.integers(0, 4))
            return Subspace.span(rng.integers(-2, 3, size=(count, 5)).tolist(), 5)

        for _ in range(20):
            u, v, w = random_subspace(), random_subspace(), random_subspace()
            for op in (subspace_sum, subspace_intersect):
                assert op(u, v) == op(v, u)
                assert op(op(u, v), w) == op(u, op(v, w))
                assert op(u, u) == u
            assert subspace_sum(u, subspace_intersect(u, v)) == u
            assert subspace_intersect(u, subspace_sum(u, v)) == u
            assert subspace_sum(u, v).dim + subspace_intersect(u, v).dim == u.dim + v.dim

    def test_solve(self):
        """测试线性方程组"""
        x, null = solve(matrix([[1, 1], [1, -1]]), (QQ(3), QQ(1)))
        assert x == (2, 1)
        assert null.is_zero
        x, _ = solve(matrix([[1, 1], [2, 2]]), (QQ(1), QQ(3)))
        assert x is None

    def test_restrict(self):
        """测试不变子空间上的限制"""
        m = matrix([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
        w = Subspace.span([(1, 0, 0), (0, 0, 1)], 3)
        assert entries(restrict(m, w)) == [[2, 0], [0, 5]]
        with pytest.raises(ValueError):
            restrict(matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), w)

    def test_push_forward(self):
        """测试子空间的像"""
        m = matrix([[0, 1], [1, 0]])
        assert push_forward(m, Subspace.span([(1, 0)], 2)) == Subspace.span([(0, 1)], 2)


class TestPolynomial:
    """测试最小多项式与 Jordan–Chevalley 分解"""

    def test_minimal_polynomial(self):
        """测试 Jordan 块的最小多项式"""
        assert minimal_polynomial(matrix([[1, 1], [0, 1]])) == [1, -2, 1]
        assert minimal_polynomial(identity(3)) == [1, -1]

    def test_squarefree_part(self):
        """测试无平方部分"""
        assert squarefree_part([1, -2, 1]) == [1, -1]
        assert squarefree_part([1, 0, -1]) == [1, 0, -1]

    def test_zero_polynomial(self):
        """测试零多项式"""
        with pytest.raises(ZeroPolynomialError):
            squarefree_part([0])

    def test_jordan_block(self):
        """测试 λI + N 的分解"""
        m = matrix([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
        s_part, n_part = jordan_chevalley(m)
        assert entries(s_part) == [[2, 0, 0], [0, 2, 0], [0, 0, 3]]
        assert entries(n_part) == [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
        assert check_jordan_chevalley(m, s_part, n_part)

    def test_rotation_is_semisimple(self):
        """测试有理数域上不可对角化但半单的矩阵"""
        m = matrix([[0, -1], [1, 0]])
        assert is_semisimple(m)
        s_part, n_part = jordan_chevalley(m)
        assert is_zero(n_part)

    def test_random_matrices(self, rng):
        """测试 50 个随机 4×4 有理矩阵"""
        for _ in range(50):
            m = random_rational_matrix(rng, 4)
            s_part, n_part = jordan_chevalley(m)
            assert check_jordan_chevalley(m, s_part, n_part)

    def test_random_non_semisimple(self, rng):
        """测试共轭后的 Jordan 块"""
        p = matrix([[1, 1, 0, 0], [0, 1, 2, 0], [1, 0, 1, 1], [0, 0, 0, 1]])
        block = matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -2, 1], [0, 0, 0, -2]])
        m = mul(mul(p, block), inverse(p))
        s_part, n_part = jordan_chevalley(m)
        assert check_jordan_chevalley(m, s_part, n_part)
        assert not is_zero(n_part)

    def test_exp_nilpotent(self):
        """测试幂零矩阵的指数"""
        assert entries(exp_nilpotent(matrix([[0, 1], [0, 0]]))) == [[1, 1], [0, 1]]
        assert entries(exp_nilpotent(matrix([[0, 2, 0], [0, 0, 1], [0, 0, 0]]))) == [[1, 2, 1], [0, 1, 1], [0, 0, 1]]

    def test_exp_requires_nilpotent(self):
        """测试非幂零矩阵"""
        with pytest.raises(NotNilpotentError):
            exp_nilpotent(identity(2))
