"""
测试 Lie 代数核心：结构常数、理想与构造
"""

from itertools import combinations_with_replacement

import numpy as np
import pytest
from sympy import QQ

from errors import DimensionMismatchError, InputError, JacobiViolationError, NotAnIdealError, NotNilpotentError
from exactla.matrix import rref, unit_vector
from exactla.subspace import Subspace, push_forward, subspace_contains
from derivations.derivation_space import derivation_space
from formats.catalog import catalog
from liecore.algebra import ad, bracket_space, is_automorphism, is_ideal, subalgebra, validate_lie
from liecore.constructions import direct_product, inner_automorphism, product_subspace, quotient
from liecore.ideals import (
    LOWER_CENTRAL,
    c_infty,
    center,
    centralizer,
    classify_flags,
    derived_algebra,
    ideal_generated,
    is_characteristic_ideal,
    killing_radical,
    nilradical,
    normalizer,
    radical,
    series,
)

from conftest import ALL_NAMES, sample_nilpotent_element

PRODUCT_NAMES = ["aff1*sl2", "abelian(1)*sl2_std", "heis3*aff1"]


def span(g, *vectors):
    return Subspace.span(vectors, g.dim)


class TestValidateLie:
    """测试结构常数验证"""

    def test_jacobi_violation(self):
        """测试 Jacobi 恒等式失败时给出见证三元组"""
        brackets = {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}}
        with pytest.raises(JacobiViolationError, match=r"\(x1, x2, x3\)") as info:
            validate_lie(3, brackets)
        assert info.value.triple == (0, 1, 2)

    def test_antisymmetric_input(self):
        """测试 (j, i) 形式的括号自动取反"""
        g = validate_lie(2, {(1, 0): {1: -1}})
        assert g.basis_bracket(0, 1) == (0, 1)

    def test_conflicting_brackets(self):
        """测试同一括号给出两个值"""
        with pytest.raises(InputError, match="conflicting"):
            validate_lie(2, {(0, 1): {1: 1}, (1, 0): {1: 1}})

    def test_zero_dimension(self):
        """测试零维代数"""
        g = validate_lie(0, {})
        assert g.dim == 0
        assert center(g).is_zero
        assert derivation_space(g).dim == 0


class TestIdeals:
    """测试中心、级数、根基与幂零根基"""

    def test_center(self):
        """测试中心"""
        heis = catalog("heis3")
        assert center(heis) == span(heis, (0, 0, 1))
        assert center(catalog("sl2")).is_zero
        assert center(catalog("paper5")) == Subspace.span([(0, 0, 0, 0, 1)], 5)

    def test_series(self):
        """测试降中心列"""
        heis = catalog("heis3")
        lower = series(heis, LOWER_CENTRAL)
        assert [w.dim for w in lower] == [3, 1, 0]

    def test_c_infty(self, paper5):
        """测试 C^∞"""
        expected = Subspace.span([(0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)], 5)
        assert c_infty(paper5) == expected

    def test_radical_and_nilradical(self, aff1, paper5, sl2):
        """测试根基与幂零根基"""
        assert radical(sl2).is_zero
        assert radical(aff1).is_full
        assert nilradical(aff1) == span(aff1, (0, 1))
        expected = Subspace.span([unit_vector(5, i) for i in range(1, 5)], 5)
        assert nilradical(paper5) == expected

    def test_killing_radical(self, sl2):
        """测试 Killing 矩阵与根基"""
        killing, r = killing_radical(sl2)
        assert rref(killing)[2] == 3
        assert r.is_zero
        for name in ["aff1", "heis3", "paper5", "diag12", "jordan2"]:
            assert killing_radical(catalog(name))[1].is_full
        product = catalog("sl2*aff1")
        expected = Subspace.span([unit_vector(5, 3), unit_vector(5, 4)], 5)
        assert killing_radical(product)[1] == expected

    def test_nilradical_inside_radical(self):
        """测试 sl2 ⋉ K² 的根基"""
        g = catalog("sl2_std")
        r = radical(g)
        assert r.dim == 2
        assert nilradical(g) == r

    @pytest.mark.parametrize("name", ALL_NAMES + PRODUCT_NAMES)
    def test_semisimple_quotient(self, name):
        """测试 g / r 的根基为零"""
        g = catalog(name)
        q, _ = quotient(g, radical(g))
        assert radical(q).is_zero
        assert q.dim == g.dim - radical(g).dim

    @pytest.mark.parametrize("name", ALL_NAMES + PRODUCT_NAMES)
    def test_bracket_with_radical_in_nilradical(self, name):
        """测试 [g, r] ⊆ n"""
        g = catalog(name)
        assert subspace_contains(nilradical(g), bracket_space(g, g.full(), radical(g)))

    def test_flags(self, sl2, aff1):
        """测试分类标记"""
        flags = classify_flags(sl2)
        assert flags["semisimple"] and flags["perfect"]
        assert not flags["solvable"]
        flags = classify_flags(aff1)
        assert flags["solvable"] and not flags["nilpotent"]
        assert classify_flags(catalog("heis3"))["nilpotent"]
        assert classify_flags(catalog("abelian(2)"))["abelian"]

    def test_normalizer_and_centralizer(self, sl2):
        """测试 sl2 中 Cartan 子代数的正规化子"""
        cartan = span(sl2, (0, 0, 1))
        assert normalizer(sl2, cartan) == cartan
        assert centralizer(sl2, cartan) == cartan

    def test_ideal_generated(self, sl2):
        """测试单个元素生成的理想"""
        assert ideal_generated(sl2, span(sl2, (1, 0, 0))).is_full

    def test_characteristic(self):
        """测试特征理想"""
        heis = catalog("heis3")
        ders = derivation_space(heis).basis
        assert is_characteristic_ideal(heis, center(heis), ders)
        assert is_characteristic_ideal(heis, derived_algebra(heis), ders)
        plane = catalog("abelian(2)")
        line = span(plane, (1, 0))
        assert is_ideal(plane, line)
        assert not is_characteristic_ideal(plane, line, derivation_space(plane).basis)

    def test_characteristic_requires_ideal(self, aff1):
        """测试非理想"""
        with pytest.raises(NotAnIdealError):
            is_characteristic_ideal(aff1, span(aff1, (1, 0)), [])


class TestConstructions:
    """测试子代数、商代数、直积与内自同构"""

    def test_subalgebra(self, sl2):
        """测试 Borel 子代数"""
        borel, embedding = subalgebra(sl2, span(sl2, (1, 0, 0), (0, 0, 1)))
        assert borel.dim == 2
        assert borel.basis_names == ("e", "h")
        assert embedding.shape == (3, 2)
        assert not classify_flags(borel)["nilpotent"]

    def test_subalgebra_requires_closure(self, sl2):
        """测试不封闭的子空间"""
        with pytest.raises(InputError, match="not closed"):
            subalgebra(sl2, span(sl2, (1, 0, 0), (0, 1, 0)))

    def test_quotient(self):
        """测试 heis3 / Z = abelian(2)"""
        heis = catalog("heis3")
        q, projection = quotient(heis, center(heis))
        assert q.dim == 2
        assert q.is_abelian
        assert projection.shape == (2, 3)

    def test_quotient_requires_ideal(self, aff1):
        """测试非理想的商"""
        with pytest.raises(NotAnIdealError):
            quotient(aff1, span(aff1, (1, 0)))

    def test_direct_product(self, aff1, sl2):
        """测试直积的中心与根基"""
        g = direct_product(catalog("abelian(1)"), sl2)
        assert g.dim == 4
        assert center(g).dim == 1
        h = direct_product(aff1, sl2)
        assert radical(h).dim == 2
        assert nilradical(h).dim == 1

    def test_product_renames_clashing_basis(self, sl2):
        """测试基名冲突时加后缀"""
        g = direct_product(sl2, sl2)
        assert g.basis_names[0] == "e_1"
        assert g.basis_names[3] == "e_2"

    @pytest.mark.parametrize(
        "first,second",
        list(combinations_with_replacement(["abelian(1)", "aff1", "heis3", "sl2", "paper5"], 2)),
    )
    def test_product_center(self, first, second):
        """测试 Z(g1 × g2) = Z(g1) × Z(g2)"""
        g1, g2 = catalog(first), catalog(second)
        g = direct_product(g1, g2)
        assert center(g) == product_subspace(g1, g2, center(g1), center(g2))
        assert radical(g) == product_subspace(g1, g2, radical(g1), radical(g2))

    def test_product_subspace(self, aff1, sl2):
        """测试分块嵌入与维数检查"""
        w = product_subspace(aff1, sl2, span(aff1, (0, 1)), sl2.full())
        assert w.dim == 4
        assert w.contains_vector((0, 1, 0, 0, 0))
        assert not w.contains_vector((1, 0, 0, 0, 0))
        with pytest.raises(DimensionMismatchError):
            product_subspace(aff1, sl2, sl2.full(), aff1.full())

    def test_inner_automorphism(self, paper5):
        """测试 exp(ad x3) 保持括号"""
        phi = inner_automorphism(paper5, unit_vector(5, 2))
        assert is_automorphism(paper5, phi.matrix)

    @pytest.mark.parametrize("name", ALL_NAMES + PRODUCT_NAMES)
    def test_inner_automorphisms_fix_characteristic_ideals(self, name):
        """测试内自同构保持根基、幂零根基、中心与 C^∞"""
        g = catalog(name)
        ideals = (radical(g), nilradical(g), center(g), c_infty(g))
        rng = np.random.default_rng(11)
        for _ in range(5):
            phi = inner_automorphism(g, sample_nilpotent_element(g, rng))
            assert is_automorphism(g, phi.matrix)
            for w in ideals:
                assert push_forward(phi.matrix, w) == w

    def test_inner_automorphism_requires_nilpotent(self, aff1):
        """测试 ad x 非幂零"""
        with pytest.raises(NotNilpotentError):
            inner_automorphism(aff1, unit_vector(2, 0))

    def test_ad_is_bracket(self, sl2):
        """测试 ad x 作用"""
        e, f = unit_vector(3, 0), unit_vector(3, 1)
        assert ad(sl2, e)(f) == sl2.bracket(e, f) == (0, 0, 1)
        assert sl2.bracket(f, e) == (0, 0, QQ(-1))
