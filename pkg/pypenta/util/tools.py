# -*- coding: utf-8 -*-
from typing import Iterable, List

import numpy as np

from pypenta.core.error_classes import InvalidInputError

"""
This module provides supporting functions that are used for various purposes.
"""


def complex_to_pair(z: complex) -> List[float]:
    """Complex number to the [re, im] pair used in every JSON form. """
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_to_complex(pair) -> complex:
    """[re, im] pair (or a bare real number) to a complex number.

    Raises:
        InvalidInputError: when the pair is neither a number nor two numbers.
    """
    if isinstance(pair, bool):
        raise InvalidInputError(f"{pair} is not a number.")
    if isinstance(pair, (int, float)):
        return complex(pair)
    try:
        re, im = pair
        if isinstance(re, bool) or isinstance(im, bool):
            raise TypeError
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise InvalidInputError(f"{pair} is not a [re, im] pair.")


def array_to_pairs(values: Iterable[complex]) -> List[List[float]]:
    return [complex_to_pair(v) for v in values]


def pairs_to_array(pairs) -> np.ndarray:
    if not isinstance(pairs, (list, tuple)):
        raise InvalidInputError(f"{pairs} is not an array of [re, im] pairs.")
    return np.array([pair_to_complex(p) for p in pairs], dtype=complex)


def unit_circle_points(num: int) -> np.ndarray:
    """num equally spaced points on the unit circle starting from 1. """
    return np.exp(2j * np.pi * np.arange(num) / num)

