"""Acceptance suite: every exit criterion at its stated tolerance.

Each criterion prints one pass/fail line (run with ``pytest -s`` to see
them live).  The underlying checks live in hardylab.verify; this module
pins the criterion-to-suite mapping, the runtime budgets, and the
bit-identical determinism requirement.
"""

import time

import pytest

import hardylab.verify as verify
from hardylab.config import RunConfig
from hardylab.reportio import to_json

BUDGETS = {
    "functional-equation": 10.0,
    "z-agreement": 60.0,
    "dyadic-square": 600.0,
    "dyadic-odd": 900.0,
    "cubic-primitive": 600.0,
    "primitive-scaling": 300.0,
    "laurent": 300.0,
    "identities": 1200.0,
    "series-decomposition": 300.0,
    "divisor-oracle": 30.0,
}


@pytest.fixture(scope="module")
def first_run():
    cfg = RunConfig(threads=1)
    suites = {}
    elapsed = {}
    for name in verify.SUITES:
        t0 = time.perf_counter()
        bundle = verify.run([name], cfg)
        elapsed[name] = time.perf_counter() - t0
        suites[name] = bundle["suites"][name]
    full = {"seed": cfg.seed, "suites": suites,
            "pass": all(s["pass"] for s in suites.values())}
    return full, elapsed


def _criterion(first_run, number: int, suite: str) -> None:
    bundle, elapsed = first_run
    res = bundle["suites"][suite]
    took = elapsed[suite]
    status = "PASS" if res["pass"] else "FAIL"
    print(f"criterion {number:2d} [{status}] {suite} ({took:.1f}s)")
    for check in res["checks"]:
        assert check["pass"], (suite, check)
    assert took < BUDGETS[suite], f"{suite} exceeded runtime budget"


def test_criterion_01_functional_equation(first_run):
    _criterion(first_run, 1, "functional-equation")


def test_criterion_02_z_cross_validation(first_run):
    _criterion(first_run, 2, "z-agreement")


def test_criterion_03_square_window_residual(first_run):
    _criterion(first_run, 3, "dyadic-square")


def test_criterion_04_odd_window_residuals(first_run):
    _criterion(first_run, 4, "dyadic-odd")


def test_criterion_05_cubic_primitive(first_run):
    _criterion(first_run, 5, "cubic-primitive")


def test_criterion_06_primitive_scaling(first_run):
    _criterion(first_run, 6, "primitive-scaling")


def test_criterion_07_laurent_principal_part(first_run):
    _criterion(first_run, 7, "laurent")


def test_criterion_08_identity_suite(first_run):
    _criterion(first_run, 8, "identities")


def test_criterion_09_series_decomposition(first_run):
    _criterion(first_run, 9, "series-decomposition")


def test_criterion_10_divisor_oracle(first_run):
    _criterion(first_run, 10, "divisor-oracle")


def test_criterion_11_determinism(first_run):
    bundle1, _ = first_run
    second = verify.run(["all"], RunConfig(threads=8))
    b1 = to_json(bundle1)
    b2 = to_json(second)
    status = "PASS" if b1 == b2 else "FAIL"
    print(f"criterion 11 [{status}] determinism (bit-identical bundles)")
    assert b1 == b2
