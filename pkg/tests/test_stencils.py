import math
from fractions import Fraction

import numpy as np
import pytest

import fcont.stencils as stencils
from fcont.hermite import s_exactness
from fcont.stencils import (Stencil, StencilSpec, boundary_derivatives,
                            make_stencil)


class TestKnownWeights:
    def test_two_point_difference(self):
        weights = make_stencil(StencilSpec(1, 1)).exact_weights
        assert weights == (Fraction(-1), Fraction(1))

    def test_first_derivative_order_two(self):
        weights = make_stencil(StencilSpec(1, 2)).exact_weights
        assert weights == (Fraction(-3, 2), Fraction(2), Fraction(-1, 2))

    def test_second_derivative_order_two(self):
        weights = make_stencil(StencilSpec(2, 2)).exact_weights
        assert weights == (Fraction(2), Fraction(-5), Fraction(4), Fraction(-1))

    def test_backward_shares_weights(self):
        fwd = make_stencil(StencilSpec(1, 3))
        bwd = make_stencil(StencilSpec(1, 3, side="backward"))
        assert fwd.exact_weights == bwd.exact_weights


class TestMomentConditions:
    def test_exact_for_all_small_stencils(self):
        for m in range(1, 12):
            for p in range(1, 12):
                if m + p > 12:
                    continue
                weights = make_stencil(StencilSpec(m, p)).exact_weights
                for q in range(m + p):
                    total = sum(w * k ** q for k, w in enumerate(weights))
                    assert total == (math.factorial(q) if q == m else 0)

    def test_weights_sum_to_zero(self):
        for m, p in ((1, 4), (3, 2), (4, 4)):
            assert sum(make_stencil(StencilSpec(m, p)).exact_weights) == 0

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            StencilSpec(0, 1)
        with pytest.raises(ValueError):
            StencilSpec(1, 0)
        with pytest.raises(ValueError):
            StencilSpec(33, 32)
        with pytest.raises(ValueError):
            StencilSpec(1, 1, side="sideways")


class TestPolynomialReproduction:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_degree_mp_minus_one(self, m, p):
        # Exact on polynomials up to degree m+p-1 on any grid long enough.
        n = 32
        xs = np.arange(n + 1) / n
        d = m + p - 1
        samples = (1.0 + xs) ** d
        matrix = boundary_derivatives(samples, n, m, p)
        exact0 = math.perm(d, m)
        exact1 = math.perm(d, m) * 2.0 ** (d - m)
        assert abs(matrix.entries[0][m] - exact0) <= 1e-9 * max(1.0, exact0)
        assert abs(matrix.entries[1][m] - exact1) <= 1e-9 * max(1.0, exact1)


class TestBoundaryDerivatives:
    def test_constant_annihilation(self):
        n = 16
        matrix = boundary_derivatives(np.full(n + 1, 5.0), n, 3, 2)
        expected = np.zeros((2, 4))
        expected[:, 0] = 5.0
        assert np.array_equal(matrix.entries, expected)

    def test_linear_function(self):
        n = 32
        samples = np.arange(n + 1) / n
        matrix = boundary_derivatives(samples, n, 3, 2)
        np.testing.assert_allclose(matrix.entries[:, 0], [0.0, 1.0], atol=0)
        np.testing.assert_allclose(matrix.entries[:, 1], [1.0, 1.0], atol=1e-12)
        assert np.max(np.abs(matrix.entries[:, 2:])) <= 1e-10

    def test_sin20_order_three_refinement(self):
        # Halving h reduces the max column error by about 2^p = 8.
        def err(n):
            xs = np.arange(n + 1) / n
            matrix = boundary_derivatives(np.sin(20 * xs), n, 3, 3)
            exact = np.array([[20.0 ** m * math.sin(m * math.pi / 2) for m in range(4)],
                              [20.0 ** m * math.sin(20 + m * math.pi / 2) for m in range(4)]])
            return np.max(np.abs(matrix.entries - exact))

        ratio = err(2 ** 8) / err(2 ** 9)
        assert 8 / 2 ** 0.3 <= ratio <= 8 * 2 ** 0.3

    def test_order_of_accuracy_sweep(self):
        # Least-squares order of the matrix error matches p within 0.3.
        for r, p in ((3, 3), (2, 2), (2, 1)):
            errors = []
            ns = [2 ** a for a in range(6, 13)]
            for n in ns:
                xs = np.arange(n + 1) / n
                matrix = boundary_derivatives(np.sin(20 * xs), n, r, p)
                exact = np.array(
                    [[20.0 ** m * math.sin(m * math.pi / 2) for m in range(r + 1)],
                     [20.0 ** m * math.sin(20 + m * math.pi / 2) for m in range(r + 1)]])
                errors.append(np.max(np.abs(matrix.entries - exact)))
            slope = -np.polyfit(np.log2(ns), np.log2(errors), 1)[0]
            assert abs(slope - p) <= 0.3

    def test_zero_exact_by_construction(self):
        n = 64
        xs = np.arange(n + 1) / n
        samples = np.sin(20 * xs)
        matrix = boundary_derivatives(samples, n, 3, 3)
        exact = np.array([[20.0 ** m * math.sin(m * math.pi / 2) for m in range(4)],
                          [20.0 ** m * math.sin(20 + m * math.pi / 2) for m in range(4)]])
        from fcont.hermite import BoundaryDataMatrix
        assert s_exactness(matrix, BoundaryDataMatrix(exact), 1e-13) >= 0

    def test_insufficient_samples(self):
        with pytest.raises(ValueError):
            boundary_derivatives(np.zeros(5), 4, 3, 3)
        with pytest.raises(ValueError):
            boundary_derivatives(np.zeros(5), 6, 1, 1)

    def test_debug_hook_breaks_annihilation(self, monkeypatch):
        n = 16
        monkeypatch.setattr(stencils, "DEBUG_WEIGHT_PERTURBATION", 0.25)
        matrix = boundary_derivatives(np.full(n + 1, 5.0), n, 1, 1)
        assert abs(matrix.entries[0][1]) > 1.0


def test_stencil_repr_shows_exact_weights():
    text = repr(make_stencil(StencilSpec(1, 2)))
    assert "-3/2" in text


def test_float_weights_match_exact():
    stencil = make_stencil(StencilSpec(3, 4))
    np.testing.assert_allclose(stencil.weights,
                               [float(w) for w in stencil.exact_weights])
    assert isinstance(stencil, Stencil)
