# -*- coding: utf-8 -*-
import os

import numpy as np

from pypenta.core.blaschke import BlaschkeProduct
from pypenta.core.domains import Point3, in_b_gamma, in_K0
from pypenta.core.error_classes import (
    BlaschkeZeroError, DegreeBoundError, DenominatorInDiscError,
    DenominatorMismatchError, DenominatorZeroError, GammaPartError,
    IdentityResidualError, InvalidInputError, MirroredZeroError,
    ModulusBoundError, N1ConstantTermError, N1DegreeError,
    NotUnimodularError, SelfInversiveError, UnreducedError)
from pypenta.core.inner import (
    GammaInnerFunction, PentaInnerFunction, ScalingWitness,
    VerificationReport, check_denominator_compatibility,
    coefficient_identity_residual, compose_inner, decompose_penta_inner,
    disc_sample_points, divide_blaschke, gamma_inner_eval, make_B0B_example,
    make_beta_example, make_gamma_inner, make_penta_inner, multiply_blaschke,
    normalize_triple, p_degree, penta_inner_eval,
    sufficient_condition_residual, verify_penta_inner)
from pypenta.core.polynomial import Polynomial, RationalFunction
from pypenta.util.testing import PypentaTest
from pypenta.util.tools import unit_circle_points

ONE = Polynomial([1])
POINTS = np.array([0, 0.3 + 0.1j, -0.7j, 0.5 - 0.5j, 1, -1j])


def tampered(x: PentaInnerFunction, factor: float = 1.01):
    return PentaInnerFunction(x.blaschke, x.N1 * factor, x.N2, x.D, x.n)


class GammaInnerFunctionTest(PypentaTest):
    def setUp(self) -> None:
        self.h = GammaInnerFunction(Polynomial([1, 1]), ONE, 1)

    def test_s_and_p(self):
        self.assertEqual(Polynomial([1, 1]), self.h.s.numerator)
        self.assertEqual(Polynomial([0, 1]), self.h.p.numerator)

    def test_msonable(self):
        self.assertMSONable(self.h)


class MakeGammaInnerTest(PypentaTest):
    def test_valid(self):
        h = make_gamma_inner(Polynomial(), ONE, 1)
        actual = gamma_inner_eval(h, 1j)
        self.assertAlmostEqual(0, actual.s)
        self.assertAlmostEqual(1j, actual.p)

        h = make_gamma_inner(Polynomial([1, 1]), ONE, 1)
        self.assertEqual(1, p_degree(h))

    def test_self_inversive(self):
        with self.assertRaises(SelfInversiveError):
            make_gamma_inner(Polynomial([0, 2]), ONE, 1)

    def test_degree_bound(self):
        with self.assertRaises(DegreeBoundError):
            make_gamma_inner(Polynomial([1, 0, 1]), ONE, 1)
        with self.assertRaises(DegreeBoundError):
            make_gamma_inner(Polynomial(), ONE, -1)

    def test_denominator_zero(self):
        with self.assertRaises(DenominatorZeroError):
            make_gamma_inner(Polynomial(), Polynomial([-0.5, 1]), 1)
        with self.assertRaises(DenominatorZeroError):
            make_gamma_inner(Polynomial(), Polynomial(), 1)

    def test_modulus_bound(self):
        with self.assertRaises(ModulusBoundError):
            make_gamma_inner(Polynomial([3, 3]), ONE, 1)

    def test_modulus_bound_is_scale_free(self):
        for theta in np.linspace(0, 2 * np.pi, 64, endpoint=False):
            x = make_beta_example(np.exp(1j * theta)).scaled(1e8)
            make_gamma_inner(x.N2, x.D, 1)
            make_penta_inner(x.blaschke, x.N1, x.N2, x.D, 1)
        with self.assertRaises(ModulusBoundError):
            make_gamma_inner(Polynomial([1e8, 1e8]) * 1.01,
                             Polynomial([1e8]), 1)

    def test_circle_maps_to_b_gamma(self):
        D = Polynomial.from_roots([2, -3j])
        N = D + D.conj_reflect(2)
        h = make_gamma_inner(N, D, 2)
        self.assertEqual(2, p_degree(h))
        for lam in unit_circle_points(256):
            self.assertTrue(in_b_gamma(gamma_inner_eval(h, lam)))

        p = h.p(unit_circle_points(256))
        self.assertArrayAlmostEqual(np.ones(256), np.abs(p), decimal=10)


class GammaInnerEvalTest(PypentaTest):
    def test(self):
        h = GammaInnerFunction(Polynomial(), ONE, 1)
        self.assertAlmostEqual(1j, gamma_inner_eval(h, 1j).p)

        h = GammaInnerFunction(Polynomial([1, 1]), ONE, 1)
        actual = gamma_inner_eval(h, 1)
        self.assertAlmostEqual(2, actual.s)
        self.assertAlmostEqual(1, actual.p)
        actual = gamma_inner_eval(h, 0)
        self.assertAlmostEqual(1, actual.s)
        self.assertAlmostEqual(0, actual.p)


class MakePentaInnerTest(PypentaTest):
    def setUp(self) -> None:
        self.N1 = Polynomial([0.5, -0.5])
        self.N2 = Polynomial([1, 1])

    def test_beta_instance(self):
        x = make_penta_inner(BlaschkeProduct(), self.N1, self.N2, ONE, 1)
        self.assertEqual(0.0, coefficient_identity_residual(x))

    def test_with_blaschke_factor(self):
        x = make_penta_inner(BlaschkeProduct([0]), self.N1, self.N2, ONE, 1)
        self.assertAlmostEqual(0.3 * 0.35, penta_inner_eval(x, 0.3).a)

    def test_constant(self):
        x = make_penta_inner(BlaschkeProduct(), ONE, Polynomial([0]), ONE, 0)
        self.assertArrayAlmostEqual([1, 0, 1],
                                    penta_inner_eval(x, 0.4j).as_array())

    def test_identity_residual(self):
        with self.assertRaises(IdentityResidualError):
            make_penta_inner(BlaschkeProduct(), ONE, self.N2, ONE, 1)

    def test_gamma_part(self):
        with self.assertRaises(GammaPartError):
            make_penta_inner(BlaschkeProduct(), self.N1, Polynomial([0, 2]),
                             ONE, 1)

    def test_n1_degree(self):
        with self.assertRaises(N1DegreeError):
            make_penta_inner(BlaschkeProduct(), Polynomial([0.5, -0.5, 0.1]),
                             self.N2, ONE, 1)

    def test_n1_constant_term(self):
        with self.assertRaises(N1ConstantTermError):
            make_penta_inner(BlaschkeProduct(), Polynomial([0, 1]),
                             self.N2, ONE, 1)

    def test_mirrored_zero(self):
        with self.assertRaises(MirroredZeroError) as cm:
            make_penta_inner(BlaschkeProduct(), Polynomial([-0.5, 1]),
                             Polynomial(), Polynomial([1, -0.5]), 1)
        self.assertIn("N1 mirror", str(cm.exception))

        # the same function with the factor moved into B is accepted
        x = make_penta_inner(BlaschkeProduct([0.5]), Polynomial([1]),
                             Polynomial(), Polynomial([1]), 0)
        self.assertAlmostEqual(0.0, penta_inner_eval(x, 0.5).a)

    def test_coefficient_residual_agrees_with_circle(self):
        rng = np.random.default_rng(13)
        for theta in 2 * np.pi * rng.random(10):
            x = make_beta_example(np.exp(1j * theta))
            self.assertTrue(coefficient_identity_residual(x) <= 1e-9)
            self.assertTrue(sufficient_condition_residual(x) <= 1e-9)

            t = tampered(x, 1 + rng.uniform(1e-3, 1e-1))
            self.assertTrue(coefficient_identity_residual(t) > 1e-9)
            self.assertTrue(sufficient_condition_residual(t) > 1e-9)

    def test_coefficient_residual_degree_overflow(self):
        x = PentaInnerFunction(BlaschkeProduct(), Polynomial([1, 1, 1]),
                               self.N2, ONE, 1)
        self.assertEqual(float("inf"), coefficient_identity_residual(x))


class PentaInnerFunctionTest(PypentaTest):
    def setUp(self) -> None:
        self.x = make_beta_example(1)

    def test_msonable(self):
        self.assertMSONable(self.x)
        self.assertMSONable(make_B0B_example(BlaschkeProduct([0.5], 1.0)))

    def test_from_dict_without_blaschke(self):
        d = self.x.as_dict()
        d.pop("blaschke")
        actual = PentaInnerFunction.from_dict(d)
        self.assertEqual(0, actual.blaschke.degree)

    def test_json_file(self):
        self.x.to_json_file("inner_for_test.json")
        try:
            actual = PentaInnerFunction.load_json("inner_for_test.json")
        finally:
            os.remove("inner_for_test.json")
        self.assertEqual(self.x.as_dict(), actual.as_dict())

    def test_load_test_file(self):
        actual = PentaInnerFunction.load_json(
            str(self.get_filename("scaled_beta_example.json")))
        self.assertIsInstance(actual, PentaInnerFunction)
        self.assertTrue(actual.D.allclose(Polynomial([-2]), 1e-12))

    def test_values_agree_with_rational_parts(self):
        x = make_B0B_example(BlaschkeProduct([0.5, -0.2j], 0.4))
        x1, x2, x3 = x.values(POINTS)
        self.assertArrayAlmostEqual(x.x1(POINTS), x1)
        self.assertArrayAlmostEqual(x.x2(POINTS), x2)
        self.assertArrayAlmostEqual(x.x3(POINTS), x3)
        self.assertEqual(Polynomial([0, 1]), self.x.gamma_part.p.numerator)


class PentaInnerEvalTest(PypentaTest):
    def test_beta_instance(self):
        x = make_beta_example(1)
        actual = penta_inner_eval(x, 1)
        self.assertArrayAlmostEqual([0, 2, 1], actual.as_array())
        self.assertTrue(in_K0(actual))
        actual = penta_inner_eval(x, -1)
        self.assertArrayAlmostEqual([1, 0, -1], actual.as_array())
        self.assertTrue(in_K0(actual))

    def test_b0b_instance(self):
        x = make_B0B_example(BlaschkeProduct([0]))
        self.assertArrayAlmostEqual([1j, 0, 1j],
                                    penta_inner_eval(x, 1j).as_array())


class VerifyPentaInnerTest(PypentaTest):
    def test_beta_family(self):
        for theta in [0, 0.7, 2.0, 4.5]:
            report = verify_penta_inner(make_beta_example(np.exp(1j * theta)))
            self.assertTrue(report.passed)
            self.assertTrue(report.circle_residual <= 1e-10)
            self.assertEqual(1.0, report.disc_pass_fraction)

    def test_b0b(self):
        x = make_B0B_example(BlaschkeProduct([0.5, -0.3 + 0.2j], 1.0))
        report = verify_penta_inner(x)
        self.assertTrue(report.passed)
        self.assertTrue(sufficient_condition_residual(x) <= 1e-10)

    def test_tampered(self):
        x = tampered(make_beta_example(1))
        report = verify_penta_inner(x)
        self.assertFalse(report.passed)
        self.assertTrue(report.circle_residual > 1e-3)
        self.assertAlmostEqual(0.0201, sufficient_condition_residual(x),
                               places=6)

    def test_sample_counts(self):
        with self.assertRaises(InvalidInputError):
            verify_penta_inner(make_beta_example(1), circle_samples=8)
        with self.assertRaises(InvalidInputError):
            verify_penta_inner(make_beta_example(1), disc_samples=15)

    def test_zero_denominator_fails(self):
        x = PentaInnerFunction(BlaschkeProduct(), ONE, Polynomial(),
                               Polynomial(), 0)
        with np.errstate(divide="ignore", invalid="ignore"):
            report = verify_penta_inner(x)
        self.assertFalse(report.passed)
        self.assertEqual(0.0, report.disc_pass_fraction)

    def test_report_msonable(self):
        report = VerificationReport(1e-12, 2e-12, 1.0, 0.0, True)
        self.assertMSONable(report)
        self.assertTrue(report.as_dict()["pass"])

    def test_disc_sample_points(self):
        points = disc_sample_points(50)
        self.assertEqual(50, len(points))
        self.assertTrue(np.all(np.abs(points) < 1))
        self.assertArrayAlmostEqual(points, disc_sample_points(50))


class BlaschkeMultiplicationTest(PypentaTest):
    def setUp(self) -> None:
        self.x = make_beta_example(1)

    def test_identity_element(self):
        actual = multiply_blaschke(self.x, BlaschkeProduct())
        self.assertArrayAlmostEqual(self.x.values(POINTS),
                                    actual.values(POINTS))

    def test_multiply_x1_only(self):
        core = make_B0B_example(BlaschkeProduct())
        actual = multiply_blaschke(core, BlaschkeProduct([0]))
        self.assertArrayAlmostEqual([0.3, 0, 1],
                                    penta_inner_eval(actual, 0.3).as_array())

    def test_double_application(self):
        actual = multiply_blaschke(
            multiply_blaschke(self.x, BlaschkeProduct([0])),
            BlaschkeProduct([0.5]))
        self.assertArrayAlmostEqual([0, 0.5], actual.blaschke.zeros)
        self.assertEqual(0.0, actual.blaschke.theta)

    def test_divide(self):
        core = make_B0B_example(BlaschkeProduct())
        b = BlaschkeProduct([0.2j, -0.4], 0.5)
        actual = divide_blaschke(multiply_blaschke(core, b))
        self.assertArrayAlmostEqual([1, 0, 1],
                                    penta_inner_eval(actual, 0.3).as_array())

        actual = divide_blaschke(multiply_blaschke(self.x, b), b)
        self.assertArrayAlmostEqual(self.x.values(POINTS),
                                    actual.values(POINTS))
        self.assertEqual(0, divide_blaschke(self.x).blaschke.degree)

    def test_divide_raise_error(self):
        with self.assertRaises(BlaschkeZeroError):
            divide_blaschke(self.x, BlaschkeProduct([0.5]))

    def test_invariance(self):
        rng = np.random.default_rng(17)
        for degree in range(1, 5):
            zeros = 0.9 * np.sqrt(rng.random(degree)) * np.exp(
                2j * np.pi * rng.random(degree))
            b = BlaschkeProduct(zeros, 2 * np.pi * rng.random())
            self.assertTrue(
                verify_penta_inner(multiply_blaschke(self.x, b)).passed)
            self.assertFalse(verify_penta_inner(
                multiply_blaschke(tampered(self.x), b)).passed)


class DenominatorCompatibilityTest(PypentaTest):
    @staticmethod
    def rational(den):
        return RationalFunction(ONE, Polynomial(den), reduced=True)

    def test(self):
        x1 = RationalFunction(Polynomial([0.5, -0.5]), ONE, reduced=True)
        x2 = RationalFunction(Polynomial([1, 1]), ONE, reduced=True)
        self.assertAlmostEqual(1, check_denominator_compatibility(x1, x2).t)

        actual = check_denominator_compatibility(self.rational([1, -0.5]),
                                                 self.rational([2, -1]))
        self.assertAlmostEqual(0.5, actual.t)
        self.assertTrue(actual.is_real)

    def test_mismatch(self):
        with self.assertRaises(DenominatorMismatchError):
            check_denominator_compatibility(self.rational([1, -0.5]),
                                            self.rational([1, -1 / 3]))
        with self.assertRaises(DenominatorMismatchError):
            check_denominator_compatibility(self.rational([1, -0.5]),
                                            self.rational([1]))

    def test_raise_error(self):
        with self.assertRaises(UnreducedError):
            check_denominator_compatibility(
                RationalFunction(ONE, ONE), self.rational([1]))
        with self.assertRaises(DenominatorInDiscError):
            check_denominator_compatibility(self.rational([-0.5, 1]),
                                            self.rational([-0.5, 1]))

    def test_validated_instance(self):
        phi = BlaschkeProduct([0.5], 0.3)
        x = compose_inner(make_beta_example(np.exp(0.4j)), phi)
        stripped = divide_blaschke(x)
        actual = check_denominator_compatibility(stripped.x1.reduce(),
                                                 x.x2.reduce())
        self.assertAlmostEqual(1, actual.t)


class ScalingWitnessTest(PypentaTest):
    def test(self):
        self.assertTrue(ScalingWitness(-0.5).is_real)
        self.assertFalse(ScalingWitness(1j).is_real)
        self.assertMSONable(ScalingWitness(2 - 1j))

    def test_raise_error(self):
        with self.assertRaises(ValueError):
            ScalingWitness(0)
        with self.assertRaises(ValueError):
            ScalingWitness(np.inf)

    def test_complex_t(self):
        x = make_beta_example(1)
        witness = ScalingWitness(1j)
        scaled = x.scaled(witness.t)
        self.assertEqual(Polynomial([1j]), scaled.D)
        _, normalized = normalize_triple(scaled)
        self.assertTrue(normalized.is_real)


class NormalizeTripleTest(PypentaTest):
    def setUp(self) -> None:
        self.x = make_beta_example(np.exp(0.9j))

    def test_unit_denominator(self):
        actual, witness = normalize_triple(self.x)
        self.assertEqual(1.0, witness.t)
        self.assertTrue(actual.N1.allclose(self.x.N1))

    def test_negative_denominator(self):
        actual, witness = normalize_triple(self.x.scaled(-2))
        self.assertAlmostEqual(-0.5, witness.t)
        self.assertTrue(actual.D.allclose(ONE))
        self.assertTrue(actual.N1.allclose(self.x.N1))
        self.assertTrue(actual.N2.allclose(self.x.N2))

    def test_scale_invariance(self):
        expected, _ = normalize_triple(self.x)
        actual, witness = normalize_triple(self.x.scaled(-3))
        self.assertAlmostEqual(-1 / 3, witness.t)
        self.assertTrue(actual.N1.allclose(expected.N1))

        rng = np.random.default_rng(19)
        for t in rng.uniform(0.1, 10, 5) * rng.choice([-1, 1], 5):
            actual, _ = normalize_triple(self.x.scaled(t))
            self.assertTrue(actual.D.allclose(expected.D))
            self.assertTrue(actual.N2.allclose(expected.N2))

    def test_idempotence(self):
        x = compose_inner(self.x, BlaschkeProduct([0.3 - 0.3j]))
        once, _ = normalize_triple(x)
        twice, witness = normalize_triple(once)
        self.assertAlmostEqual(1, witness.t)
        self.assertTrue(twice.D.allclose(once.D))

    def test_imaginary_constant_term(self):
        x = PentaInnerFunction(BlaschkeProduct(), ONE, Polynomial(),
                               Polynomial([2j]), 0)
        _, witness = normalize_triple(x)
        self.assertAlmostEqual(0.5, witness.t)


class ExamplesTest(PypentaTest):
    def test_beta_example(self):
        x = make_beta_example(1)
        self.assertEqual(Polynomial([0.5, -0.5]), x.N1)
        self.assertEqual(Polynomial([1, 1]), x.N2)
        self.assertEqual(ONE, x.D)
        self.assertEqual(0, x.blaschke.degree)

        x = make_beta_example(1j)
        self.assertEqual(Polynomial([0.5j, 0.5j]), x.N1)
        self.assertEqual(Polynomial([1j, -1j]), x.N2)

    def test_beta_example_raise_error(self):
        with self.assertRaises(NotUnimodularError):
            make_beta_example(2)
        for beta in [complex("nan"), complex("inf")]:
            with self.assertRaises(InvalidInputError):
                make_beta_example(beta)

    def test_b0b_example(self):
        x = make_B0B_example(BlaschkeProduct())
        self.assertArrayAlmostEqual([1, 0, 1],
                                    penta_inner_eval(x, 0.2).as_array())

        x = make_B0B_example(BlaschkeProduct([0]))
        self.assertArrayAlmostEqual([0.3, 0, 0.3],
                                    penta_inner_eval(x, 0.3).as_array())

        b = BlaschkeProduct([0.5])
        expected = (1j - 0.5) / (1 - 0.5j)
        self.assertArrayAlmostEqual([expected, 0, expected],
                                    penta_inner_eval(make_B0B_example(b),
                                                     1j).as_array())

    def test_b0b_example_phase(self):
        b = BlaschkeProduct([0.5, 0.1 + 0.6j], 2.5)
        x1, x2, x3 = make_B0B_example(b).values(POINTS)
        self.assertArrayAlmostEqual(b(POINTS), x1)
        self.assertArrayAlmostEqual(b(POINTS), x3)
        self.assertArrayAlmostEqual(np.zeros(len(POINTS)), x2)


class ComposeInnerTest(PypentaTest):
    def test_beta_example(self):
        x = make_beta_example(np.exp(0.4j))
        phi = BlaschkeProduct([0.5], 0.3)
        actual = compose_inner(x, phi)
        self.assertEqual(1, actual.n)
        self.assertArrayAlmostEqual(x.values(phi(POINTS)),
                                    actual.values(POINTS))
        self.assertTrue(verify_penta_inner(actual).passed)

    def test_b0b_example(self):
        x = make_B0B_example(BlaschkeProduct([0.2 - 0.4j], 1.2))
        phi = BlaschkeProduct([0.3j, -0.5], 4.0)
        actual = compose_inner(x, phi)
        self.assertEqual(2, actual.n)
        self.assertArrayAlmostEqual(x.values(phi(POINTS)),
                                    actual.values(POINTS))

    def test_zero_at_origin_moves_into_blaschke(self):
        x = make_beta_example(1)
        phi = BlaschkeProduct([0.0])
        actual = compose_inner(x, phi)
        self.assertEqual(0, actual.blaschke.degree)

        # N1 = c (lam - a) with |a| < 1 and phi(0) = a
        C = (0.875 + np.sqrt(0.75)) / 2
        c, a = np.sqrt(C), 0.0625 / C
        x = make_penta_inner(BlaschkeProduct(), Polynomial([-c * a, c]),
                             Polynomial([0.5, 0.5]), ONE, 1)
        phi = BlaschkeProduct([-a])
        actual = compose_inner(x, phi)
        self.assertEqual(1, actual.blaschke.degree)
        self.assertEqual(0, actual.N1.degree)
        self.assertArrayAlmostEqual(x.values(phi(POINTS)),
                                    actual.values(POINTS))

    def test_raise_error(self):
        with self.assertRaises(ValueError):
            compose_inner(make_beta_example(1), BlaschkeProduct())


class DecomposePentaInnerTest(PypentaTest):
    def assertSameFunction(self, expected, actual):
        self.assertArrayAlmostEqual(expected.values(POINTS),
                                    actual.values(POINTS))

    def test_beta_example(self):
        x = make_beta_example(1)
        actual = decompose_penta_inner(x.x1, x.x2, x.x3)
        self.assertEqual(1, actual.n)
        self.assertEqual(0, actual.blaschke.degree)
        self.assertSameFunction(x, actual)

    def test_b0b_example(self):
        x = make_B0B_example(BlaschkeProduct([0.5], 0.8))
        actual = decompose_penta_inner(x.x1, x.x2, x.x3)
        self.assertEqual(1, actual.blaschke.degree)
        self.assertSameFunction(x, actual)

    def test_composed_instance(self):
        x = multiply_blaschke(
            compose_inner(make_beta_example(np.exp(2j)),
                          BlaschkeProduct([0.4 + 0.1j], 0.6)),
            BlaschkeProduct([-0.3j]))
        actual = decompose_penta_inner(x.x1, x.x2, x.x3)
        self.assertEqual(x.n, actual.n)
        self.assertSameFunction(x, actual)

    def test_not_gamma_part(self):
        x3 = RationalFunction(Polynomial([0, 0.5]), ONE)
        with self.assertRaises(GammaPartError):
            decompose_penta_inner(x3, x3, x3)

    def test_point_values_are_in_k0_on_circle(self):
        x = make_beta_example(np.exp(1.1j))
        for lam in unit_circle_points(32):
            self.assertTrue(in_K0(Point3(*x.values(lam))))
