"""Truncated power series with exact integer coefficients: the product
(1-x)(1-x^2)(1-x^3)... against its sparse pentagonal expansion, plus the
symmetric functions and power sums of the reciprocal roots."""

from __future__ import annotations

from dataclasses import dataclass

from .pentagonal import iter_terms


@dataclass(frozen=True)
class DenseSeries:
    """coeffs[d] is the coefficient of x**d, for 0 <= d <= degree_cap."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")

    @property
    def degree_cap(self) -> int:
        return len(self.coeffs) - 1

    def nonzero(self) -> list[tuple[int, int]]:
        """(degree, coefficient) pairs for the nonzero coefficients."""
        return [(d, c) for d, c in enumerate(self.coeffs) if c]


def multiply_truncated(a: DenseSeries, b: DenseSeries, degree_cap: int) -> DenseSeries:
    """Convolve a and b, discarding every degree above degree_cap."""
    if degree_cap < 0:
        raise ValueError(f"degree cap must be non-negative, got {degree_cap}")
    out = [0] * (degree_cap + 1)
    for i, ca in enumerate(a.coeffs[: degree_cap + 1]):
        if not ca:
            continue
        top = degree_cap - i
        for j, cb in enumerate(b.coeffs[: top + 1]):
            if cb:
                out[i + j] += ca * cb
    return DenseSeries(tuple(out))


def euler_product(degree_cap: int) -> DenseSeries:
    """Expand the product of (1 - x^k) for k = 1..degree_cap, truncated there.

    Factors with k beyond the cap cannot touch the kept degrees, so the result
    agrees with the infinite product coefficient-for-coefficient.  Each factor
    is applied as one in-place shift-and-subtract pass.
    """
    if degree_cap < 0:
        raise ValueError(f"degree cap must be non-negative, got {degree_cap}")
    coeffs = [0] * (degree_cap + 1)
    coeffs[0] = 1
    for k in range(1, degree_cap + 1):
        for d in range(degree_cap, k - 1, -1):
            coeffs[d] -= coeffs[d - k]
    return DenseSeries(tuple(coeffs))


def pentagonal_series(degree_cap: int) -> DenseSeries:
    """Sparse construction 1 - x - x^2 + x^5 + x^7 - x^12 - ... up to the cap."""
    if degree_cap < 0:
        raise ValueError(f"degree cap must be non-negative, got {degree_cap}")
    coeffs = [0] * (degree_cap + 1)
    coeffs[0] = 1
    for term in iter_terms():
        if term.value > degree_cap:
            break
        coeffs[term.value] = term.sign
    return DenseSeries(tuple(coeffs))


def _require_monic(series: DenseSeries, count: int) -> None:
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if count > series.degree_cap:
        raise ValueError(
            f"need coefficients up to degree {count}, series stops at {series.degree_cap}"
        )
    if series.coeffs[0] != 1:
        raise ValueError(f"constant coefficient must be 1, got {series.coeffs[0]}")


def elementary_symmetric(series: DenseSeries, count: int) -> list[int]:
    """e_1..e_count of the reciprocal roots of the series read as a product of
    (1 - x/root) factors: e_k = (-1)**k times the coefficient of x**k."""
    _require_monic(series, count)
    return [-c if k % 2 else c for k, c in enumerate(series.coeffs[1 : count + 1], start=1)]


def power_sums(series: DenseSeries, count: int) -> list[int]:
    """p_1..p_count of the reciprocal roots, by Newton's identities on the
    elementary symmetric values; exact integers throughout."""
    e = elementary_symmetric(series, count)
    p: list[int] = []
    for k in range(1, count + 1):
        acc = (-1) ** (k - 1) * k * e[k - 1]
        for j in range(1, k):
            acc += (-1) ** (j - 1) * e[j - 1] * p[k - j - 1]
        p.append(acc)
    return p
