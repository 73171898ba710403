"""Divisor sums: brute oracle, recurrence, boundary rule, persistence."""

from math import gcd

import pytest

from pentafold import (
    is_pentagonal,
    load_table,
    recurrence_terms,
    save_table,
    sigma_brute,
    sigma_recurrence,
    sigma_table,
)

PAPER_TABLE = [1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12]  # sigma(1..11)


def test_brute_first_eleven():
    assert [sigma_brute(n) for n in range(1, 12)] == PAPER_TABLE
    assert sigma_brute(6) == 12
    assert sigma_brute(1) == 1
    assert sigma_brute(11) == 12


def test_brute_rejects_zero():
    with pytest.raises(ValueError):
        sigma_brute(0)


def test_brute_on_primes_and_composites():
    def is_prime(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(2, 200):
        if is_prime(n):
            assert sigma_brute(n) == n + 1
        else:
            assert sigma_brute(n) > n + 1


def test_brute_is_multiplicative_on_coprime_pairs():
    for p in range(2, 101):
        for q in range(2, 101):
            if gcd(p, q) == 1:
                assert sigma_brute(p * q) == sigma_brute(p) * sigma_brute(q)


def test_recurrence_trace_for_twelve():
    table = sigma_table(11, "brute")
    terms = recurrence_terms(12, table)
    assert terms == [12, 18, -8, -6, 12]
    assert sum(terms) == 28


def test_recurrence_trace_for_thirteen():
    table = sigma_table(12, "recurrence")
    terms = recurrence_terms(13, table)
    assert terms == [28, 12, -15, -12, 1]
    assert sum(terms) == 14


def test_recurrence_boundary_at_two():
    table = sigma_table(1, "brute")
    assert recurrence_terms(2, table) == [1, 2]
    assert sigma_recurrence(2, table) == sigma_brute(2) == 3


def test_recurrence_at_one_needs_no_history():
    table = sigma_table(1, "recurrence")
    assert table[1] == 1


def test_table_methods_agree():
    brute = sigma_table(300, "brute")
    recurrence = sigma_table(300, "recurrence")
    assert brute.values == recurrence.values


def test_table_examples():
    assert sigma_table(11, "brute").values[1:] == PAPER_TABLE
    assert sigma_table(1, "brute").values[1:] == [1]
    assert sigma_table(1, "recurrence").values[1:] == [1]
    assert sigma_table(13, "recurrence")[13] == 14


def test_table_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sigma_table(0)
    with pytest.raises(ValueError):
        sigma_table(5, "guess")


def test_table_lookup_bounds():
    table = sigma_table(5)
    with pytest.raises(ValueError):
        table[0]
    with pytest.raises(ValueError):
        table[6]


def test_recurrence_requires_table_coverage():
    table = sigma_table(3)
    with pytest.raises(ValueError):
        sigma_recurrence(20, table)


def test_disabling_boundary_rule_breaks_every_pentagonal_n():
    table = sigma_table(120, "brute")
    for n in range(1, 101):
        crippled = sigma_recurrence(n, table, boundary_rule=False)
        if is_pentagonal(n):
            assert crippled != sigma_brute(n), f"boundary rule was dead code at n={n}"
        else:
            assert crippled == sigma_brute(n)


def test_save_and_load_roundtrip(tmp_path):
    table = sigma_table(40)
    path = tmp_path / "sigma.csv"
    save_table(table, path)
    text = path.read_text(encoding="ascii")
    assert text.splitlines()[0] == "1,1"
    assert text.splitlines()[-1] == f"40,{sigma_brute(40)}"
    loaded = load_table(path)
    assert loaded.max_n == 40
    assert loaded.values == table.values


def test_load_rejects_gaps(tmp_path):
    path = tmp_path / "sigma.csv"
    path.write_text("1,1\n3,4\n", encoding="ascii")
    with pytest.raises(ValueError):
        load_table(path)


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "sigma.csv"
    path.write_text("1;1\n", encoding="ascii")
    with pytest.raises(ValueError):
        load_table(path)
