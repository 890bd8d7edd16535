"""Instance generators: Maiorana-McFarland bent functions, field-multiplication
vectorial bent functions, exhaustive bent enumeration and seeded random tables."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, constant, dot
from .transform import butterfly
from .vectorial import VectorialFunction

# Irreducible polynomials over GF(2), bit d is the coefficient of x^d.
IRREDUCIBLE = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011011,   # x^8 + x^4 + x^3 + x + 1
}


@dataclass(frozen=True)
class Permutation:
    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("mapping is not a bijection on {0, ..., size-1}")

    @property
    def size(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    @classmethod
    def random(cls, size: int, rng: random.Random) -> Permutation:
        m = list(range(size))
        rng.shuffle(m)
        return cls(tuple(m))

    def __call__(self, y: int) -> int:
        return self.mapping[y]


def mm_bent(n: int, pi: Permutation | None = None, g: BooleanFunction | None = None) -> BooleanFunction:
    """f(x, y) = x . pi(y) + g(y), x the first n/2 input bits and y the last n/2.

    ``pi`` defaults to the identity and ``g`` to the zero function.
    """
    if n < 2 or n % 2:
        raise ValueError(f"arity must be even and at least 2, got {n}")
    h = n // 2
    if pi is None:
        pi = Permutation.identity(1 << h)
    if g is None:
        g = constant(h)
    if pi.size != 1 << h:
        raise ValueError(f"permutation has size {pi.size}, expected 2^{h} = {1 << h}")
    if g.n != h:
        raise ValueError(f"g has arity {g.n}, expected {h}")
    mask = (1 << h) - 1
    table = tuple(dot(i >> h, pi(i & mask)) ^ g.table[i & mask] for i in range(1 << n))
    return BooleanFunction(n, table)


def gf_mul(a: int, b: int, degree: int) -> int:
    """Product in GF(2^degree) modulo the pinned irreducible polynomial."""
    poly = IRREDUCIBLE[degree]
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> degree:
            a ^= poly
    return out


def nyberg_vectorial_bent(n: int) -> VectorialFunction:
    """F(x, y) = x * y in GF(2^(n/2)), an (n, n/2)-bent function."""
    if n < 2 or n % 2 or n // 2 not in IRREDUCIBLE:
        raise ValueError(f"unsupported arity {n}: need even n with n/2 in 1..8")
    h = n // 2
    mask = (1 << h) - 1
    values = [gf_mul(i >> h, i & mask, h) for i in range(1 << n)]
    return VectorialFunction.from_lookup(n, h, values)


def enumerate_bent(n: int) -> list[BooleanFunction]:
    """All bent functions of arity 2 or 4, in truth-table order.

    Every table is pushed through the batched Walsh butterfly and kept when
    its signed spectrum is flat.
    """
    if n not in (2, 4):
        raise ValueError(f"exhaustive enumeration supports n in (2, 4), got {n}")
    size = 1 << n
    idx = np.arange(1 << size, dtype=np.uint32)
    shifts = np.arange(size - 1, -1, -1, dtype=np.uint32)
    # Row t holds the table whose entry i is bit (size-1-i) of t, so table
    # order matches reading "b:..." strings as binary numbers.
    tables = ((idx[:, None] >> shifts[None, :]) & 1).astype(np.int64)
    spectra = butterfly(1 - 2 * tables)
    flat = np.all(np.abs(spectra) == 1 << (n // 2), axis=1)
    return [BooleanFunction(n, tuple(row)) for row in tables[flat].tolist()]


def random_function(n: int, seed: int) -> BooleanFunction:
    """Seeded table from Python's Mersenne Twister; entry i is bit i of getrandbits(2^n)."""
    bits = random.Random(seed).getrandbits(1 << n)
    return BooleanFunction(n, tuple((bits >> i) & 1 for i in range(1 << n)))


def random_mm_bent(n: int, seed: int) -> BooleanFunction:
    """MM bent function with a seeded random permutation and random g."""
    rng = random.Random(seed)
    h = n // 2
    pi = Permutation.random(1 << h, rng)
    bits = rng.getrandbits(1 << h)
    g = BooleanFunction(h, tuple((bits >> i) & 1 for i in range(1 << h)))
    return mm_bent(n, pi, g)
