"""Exact Fourier and signed Walsh transforms over Z_2^n.

Two conventions live here side by side:

* the 0/1 Fourier transform ``f*(w) = sum_x (-1)^(w.x) f(x) / 2^n``, kept as
  integer numerators over the fixed denominator ``2^n``; the numerators are
  the Cayley graph eigenvalues;
* the signed Walsh transform ``S(w) = sum_x (-1)^(f(x) + w.x)``, which gives
  the nonlinearity directly.

They are related by ``S(w) = -2 * lambda_w`` for ``w != 0`` and
``S(0) = 2^n - 2 * lambda_0``.  All arithmetic is integral.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, dot
from .errors import WHT_MAX_N, InvariantError, check_limit


def butterfly(values) -> np.ndarray:
    """Unnormalised Hadamard transform along the last axis, O(n 2^n) adds.

    Accepts a 1-D sequence or a 2-D array (one transform per row).  Entries
    are widened to int64, which is exact for any |value| * 2^n < 2^63.
    """
    a = np.array(values, dtype=np.int64)
    size = a.shape[-1]
    if size & (size - 1):
        raise ValueError(f"length {size} is not a power of two")
    lead = a.shape[:-1]
    h = 1
    while h < size:
        a = a.reshape(*lead, -1, 2, h)
        lo = a[..., 0, :]
        hi = a[..., 1, :]
        a = np.stack((lo + hi, lo - hi), axis=-2)
        h <<= 1
    return a.reshape(*lead, size)


def naive_transform(values) -> list[int]:
    """sum_x (-1)^(w.x) values[x] for every w, by direct O(4^n) summation."""
    size = len(values)
    return [
        sum(-v if dot(w, x) else v for x, v in enumerate(values))
        for w in range(size)
    ]


@dataclass(frozen=True)
class FourierSpectrum:
    """f*(b(i)) = numerators[i] / 2^n."""

    n: int
    numerators: tuple[int, ...]

    def __post_init__(self):
        size = 1 << self.n
        if len(self.numerators) != size:
            raise InvariantError(f"spectrum length {len(self.numerators)} != 2^{self.n}")
        for i, c in enumerate(self.numerators):
            if abs(c) > size:
                raise InvariantError(f"|numerator[{i}]| = {abs(c)} exceeds 2^{self.n}")

    @property
    def denominator(self) -> int:
        return 1 << self.n

    def value(self, i: int):
        """f*(b(i)) as an exact fraction."""
        from fractions import Fraction

        return Fraction(self.numerators[i], self.denominator)


@dataclass(frozen=True)
class SignedWalshSpectrum:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise InvariantError(f"spectrum length {len(self.values)} != 2^{self.n}")
        energy = sum(v * v for v in self.values)
        if energy != 1 << (2 * self.n):
            raise InvariantError(f"Parseval fails: sum of squares {energy} != 2^{2 * self.n}")

    def nonlinearity(self) -> int:
        return (1 << (self.n - 1)) - max(abs(v) for v in self.values) // 2

    def is_flat(self) -> bool:
        if self.n % 2:
            return False
        target = 1 << (self.n // 2)
        return all(abs(v) == target for v in self.values)


@dataclass(frozen=True)
class CayleyEigenvalues:
    """Eigenvalue lambda_i belongs to the character Q_{b(i)}."""

    n: int
    indexed: tuple[int, ...]

    @property
    def multiset(self) -> Counter:
        return Counter(self.indexed)

    @property
    def largest(self) -> int:
        return self.indexed[0]

    def sorted_pairs(self) -> list[tuple[int, int]]:
        """(value, multiplicity) pairs, largest value first."""
        return sorted(self.multiset.items(), reverse=True)


def fourier(f: BooleanFunction, max_n: int = WHT_MAX_N) -> FourierSpectrum:
    check_limit("arity for fast transform", f.n, max_n)
    nums = tuple(butterfly(f.table).tolist())
    if nums[0] != f.weight:
        raise InvariantError("numerator 0 differs from the support size")
    return FourierSpectrum(f.n, nums)


def fourier_naive(f: BooleanFunction) -> FourierSpectrum:
    return FourierSpectrum(f.n, tuple(naive_transform(f.table)))


def cayley_eigenvalues(f: BooleanFunction) -> CayleyEigenvalues:
    ev = CayleyEigenvalues(f.n, fourier(f).numerators)
    if max(ev.indexed) != ev.largest:
        raise InvariantError("lambda_0 is not the largest eigenvalue")
    return ev


def signed_walsh(f: BooleanFunction, max_n: int = WHT_MAX_N) -> SignedWalshSpectrum:
    check_limit("arity for fast transform", f.n, max_n)
    signs = [1 - 2 * b for b in f.table]
    return SignedWalshSpectrum(f.n, tuple(butterfly(signs).tolist()))


def signed_walsh_from_fourier(spec: FourierSpectrum) -> tuple[int, ...]:
    """S(0) = 2^n - 2 lambda_0 and S(w) = -2 lambda_w otherwise."""
    nums = spec.numerators
    return ((1 << spec.n) - 2 * nums[0],) + tuple(-2 * c for c in nums[1:])
