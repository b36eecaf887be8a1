import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetrabox import _pykernels as py
from tetrabox import kernels

cy = pytest.importorskip("tetrabox._speedups", reason="compiled extension not built")

coeff = st.fractions(min_value=-20, max_value=20, max_denominator=12)
poly = st.lists(coeff, max_size=9).map(py.trim)
nonzero_poly = poly.filter(bool)


@given(poly, poly)
def test_binary_kernels_agree(a, b):
    assert cy.add(a, b) == py.add(a, b)
    assert cy.sub(a, b) == py.sub(a, b)
    assert cy.mul(a, b) == py.mul(a, b)


@given(poly, nonzero_poly)
def test_division_agrees(a, b):
    assert cy.divmod_(a, b) == py.divmod_(a, b)


@given(poly, coeff)
def test_unary_kernels_agree(a, c):
    assert cy.scale(a, c) == py.scale(a, c)
    assert cy.neg(a) == py.neg(a)
    assert cy.evaluate(a, c) == py.evaluate(a, c)
    assert cy.shift(a, c) == py.shift(a, c)
    assert cy.divide_linear(a, c) == py.divide_linear(a, c)


def test_integer_fast_paths():
    a = py.trim([Fraction(k) for k in (3, -1, 0, 4)])
    for r in (0, 1, -1, 2):
        assert cy.divide_linear(a, Fraction(r)) == py.divide_linear(a, Fraction(r))
    assert cy.shift(a, Fraction(1)) == py.shift(a, Fraction(1))


def test_results_are_fractions():
    out = cy.mul((Fraction(1, 2), Fraction(3)), (Fraction(2, 3),))
    assert all(type(c) is Fraction for c in out)


def test_active_backend_is_compiled():
    if os.environ.get("TETRABOX_PURE", "") not in ("", "0"):
        pytest.skip("pure backend requested")
    assert kernels.BACKEND == "cython"


def test_pure_fallback_runs_a_suite():
    env = dict(os.environ, TETRABOX_PURE="1")
    code = "import tetrabox.kernels as k, tetrabox.verify as v; print(k.BACKEND); print(all(c.passed for c in v.run_suite('tetra')))"
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.stdout.split() == ["python", "True"], proc.stderr
