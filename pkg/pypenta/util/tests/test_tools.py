# -*- coding: utf-8 -*-
import numpy as np

from pypenta.core.error_classes import InvalidInputError
from pypenta.util.testing import PypentaTest
from pypenta.util.tools import (
    array_to_pairs, complex_to_pair, pair_to_complex, pairs_to_array,
    unit_circle_points)


class PairTest(PypentaTest):
    def test_complex_to_pair(self):
        self.assertEqual([1.0, -2.0], complex_to_pair(1 - 2j))
        self.assertEqual([3.0, 0.0], complex_to_pair(3))
        self.assertIsInstance(complex_to_pair(np.complex128(1j))[1], float)

    def test_pair_to_complex(self):
        self.assertEqual(1 - 2j, pair_to_complex([1, -2]))
        self.assertEqual(0.5, pair_to_complex(0.5))

    def test_pair_to_complex_raise_error(self):
        for bad in [True, "1", [1], [1, 2, 3], [1, "a"], [True, 0], None]:
            with self.assertRaises(InvalidInputError):
                pair_to_complex(bad)

    def test_arrays(self):
        values = [1j, 2, -0.5 + 0.25j]
        pairs = array_to_pairs(values)
        self.assertEqual([[0.0, 1.0], [2.0, 0.0], [-0.5, 0.25]], pairs)
        self.assertArrayAlmostEqual(values, pairs_to_array(pairs))
        self.assertEqual(0, len(pairs_to_array([])))

    def test_pairs_to_array_raise_error(self):
        with self.assertRaises(InvalidInputError):
            pairs_to_array("abc")
        with self.assertRaises(InvalidInputError):
            pairs_to_array({"re": 1})


class UnitCirclePointsTest(PypentaTest):
    def test(self):
        actual = unit_circle_points(4)
        self.assertArrayAlmostEqual([1, 1j, -1, -1j], actual)

