# -*- coding: utf-8 -*-
from pathlib import Path

import numpy as np
from pymatgen.util.testing import PymatgenTest


class PypentaTest(PymatgenTest):
    """ Extends PymatgenTest with some path modification. """
    MODULE_DIR = Path(__file__).absolute().parent
    TEST_FILES_DIR = MODULE_DIR / ".." / "test_files"

    # camelCase assertions are snake_case in recent pymatgen releases.
    if not hasattr(PymatgenTest, "assertArrayAlmostEqual"):
        assertArrayAlmostEqual = staticmethod(
            np.testing.assert_array_almost_equal)
    if not hasattr(PymatgenTest, "assertMSONable"):
        assertMSONable = staticmethod(PymatgenTest.assert_msonable)

    @classmethod
    def get_filename(cls, name):
        return cls.TEST_FILES_DIR / name

    @staticmethod
    def assertArrayAllClose(actual, desired, rtol=1e-7, atol=0.0,
                            err_msg=""):
        np.testing.assert_allclose(np.asarray(actual), np.asarray(desired),
                                   rtol=rtol, atol=atol, err_msg=err_msg)
