"""Acceptance gate: one test per criterion, each printing its pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines,
or `pentafold report` for the same checks behind the CLI.
"""

from fractions import Fraction

from pentafold import acceptance
from pentafold import (
    euler_sum_alternating,
    pentagonal_power_sum,
    recurrence_terms,
    sigma_table,
    verify_basis_cancellation,
)


def _run(check):
    result = check()
    status = "PASS" if result.passed else "FAIL"
    print(f"ACCEPTANCE {result.number:2d} {result.name}: {status} ({result.detail})")
    assert result.passed, f"criterion {result.number} failed: {result.detail}"
    return result


def test_criterion_01_sigma_table_regression():
    result = _run(acceptance.check_sigma_table_regression)
    assert result.elapsed < 1e-3
    assert sigma_table(11, "brute").values[1:] == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12]


def test_criterion_02_recurrence_worked_examples():
    result = _run(acceptance.check_recurrence_worked_examples)
    assert result.elapsed < 1e-3
    assert recurrence_terms(12, sigma_table(11)) == [12, 18, -8, -6, 12]
    assert recurrence_terms(13, sigma_table(12)) == [28, 12, -15, -12, 1]


def test_criterion_03_oracle_equivalence():
    result = _run(acceptance.check_oracle_equivalence)
    assert result.elapsed < 30.0


def test_criterion_04_pentagonal_number_theorem():
    result = _run(acceptance.check_product_identity)
    assert result.elapsed < 5.0


def test_criterion_05_symmetric_function_values():
    _run(acceptance.check_symmetric_functions)


def test_criterion_06_period_cancellation():
    result = _run(acceptance.check_period_cancellation)
    assert result.elapsed < 1.0


def test_criterion_07_basis_cancellation():
    _run(acceptance.check_basis_cancellation)
    assert verify_basis_cancellation(5, 0).partial_sums == (1, 2, 1, 0, -1, -2, -1, 0)
    assert verify_basis_cancellation(1, 0).partial_sums == (1, 0, -1, 0)


def test_criterion_08_euler_summation_regressions():
    _run(acceptance.check_euler_summation_regressions)
    one = pentagonal_power_sum(1)
    two = pentagonal_power_sum(2)
    assert (one.s, one.t) == (Fraction(1, 8), Fraction(-1, 8))
    assert (two.s, two.t) == (Fraction(3, 16), Fraction(-3, 16))
    assert euler_sum_alternating([1] * 8) == Fraction(1, 2)


def test_criterion_09_generalized_power_sum_identity():
    _run(acceptance.check_power_sum_identity)


def test_criterion_10_abel_decay():
    result = _run(acceptance.check_abel_decay)
    assert result.elapsed < 60.0


def test_criterion_11_mutation_sensitivity():
    _run(acceptance.check_mutation_sensitivity)
