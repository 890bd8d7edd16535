"""Boolean functions on Z_2^n stored as truth tables.

Bit order: entry ``i`` of a table is ``f(b(i))`` where ``b(i) = (x1, ..., xn)``
is the binary expansion of ``i`` with ``x1`` the most significant bit.  Points
of Z_2^n are handled as plain ints under that convention, so the GF(2) inner
product of two points is the parity of ``w & x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AFFINE_LIST_MAX_N, BRUTE_FORCE_MAX_N, check_limit


def dot(w: int, x: int) -> int:
    """GF(2) inner product of two points."""
    return (w & x).bit_count() & 1


def bits_str(x: int, n: int) -> str:
    """The n-bit string x1...xn of a point."""
    return format(x, f"0{n}b") if n else ""


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"arity must be at least 1, got {self.n}")
        if len(self.table) != 1 << self.n:
            raise ValueError(
                f"truth table has length {len(self.table)}, expected 2^{self.n} = {1 << self.n}"
            )
        for pos, bit in enumerate(self.table):
            if bit not in (0, 1):
                raise ValueError(f"non-binary entry {bit!r} at position {pos}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self):
        return len(self.table)

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        if other.n != self.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")
        return BooleanFunction(self.n, tuple(a ^ b for a, b in zip(self.table, other.table)))

    @property
    def weight(self) -> int:
        return sum(self.table)

    def complement(self) -> BooleanFunction:
        return BooleanFunction(self.n, tuple(1 - b for b in self.table))

    def translate(self, a: int) -> BooleanFunction:
        """x -> f(x ^ a)."""
        return BooleanFunction(self.n, tuple(self.table[x ^ a] for x in range(len(self.table))))

    def to_bits(self) -> str:
        return "".join(map(str, self.table))

    def to_hex(self) -> str:
        """Hex digits, four table entries per digit, first entry in the high bit."""
        if self.n < 2:
            raise ValueError("hex form needs at least 4 table entries (n >= 2)")
        s = self.to_bits()
        return "".join(format(int(s[i:i + 4], 2), "x") for i in range(0, len(s), 4))

    def as_array(self) -> np.ndarray:
        return np.fromiter(self.table, dtype=np.int8, count=len(self.table))


@dataclass(frozen=True)
class PointSet:
    """A set of n-bit points (members stored as ints)."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        top = 1 << self.n
        for p in self.members:
            if not 0 <= p < top:
                raise ValueError(f"point {p} does not fit in {self.n} bits")

    @classmethod
    def of(cls, n: int, points: Iterable[int | str]) -> PointSet:
        pts = []
        for p in points:
            if isinstance(p, str):
                if len(p) != n or set(p) - {"0", "1"}:
                    raise ValueError(f"{p!r} is not an {n}-bit string")
                p = int(p, 2)
            pts.append(p)
        return cls(n, frozenset(pts))

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def as_bits(self) -> list[str]:
        return [bits_str(p, self.n) for p in self]

    def indicator(self) -> BooleanFunction:
        return BooleanFunction(self.n, tuple(int(x in self.members) for x in range(1 << self.n)))


def from_truth_table(n: int, bits: str | Sequence[int]) -> BooleanFunction:
    """Build f with f(b(i)) = bits[i]; bits is a 0/1 string or int sequence."""
    expected = 1 << n
    if len(bits) != expected:
        raise ValueError(f"truth table has length {len(bits)}, expected 2^{n} = {expected}")
    table = []
    for pos, b in enumerate(bits):
        if b in ("0", 0):
            table.append(0)
        elif b in ("1", 1):
            table.append(1)
        else:
            raise ValueError(f"non-binary symbol {b!r} at position {pos}")
    return BooleanFunction(n, tuple(table))


def constant(n: int, c: int = 0) -> BooleanFunction:
    return BooleanFunction(n, (c,) * (1 << n))


def affine(n: int, a: int, c: int = 0) -> BooleanFunction:
    """l(x) = a.x + c."""
    return BooleanFunction(n, tuple(dot(a, x) ^ c for x in range(1 << n)))


def support(f: BooleanFunction) -> PointSet:
    return PointSet(f.n, frozenset(x for x, b in enumerate(f.table) if b))


def affine_functions(n: int, max_n: int = AFFINE_LIST_MAX_N) -> list[BooleanFunction]:
    """All 2^(n+1) affine functions, ordered by (a, c)."""
    if n < 1:
        raise ValueError(f"arity must be at least 1, got {n}")
    check_limit("arity for affine enumeration", n, max_n)
    return [affine(n, a, c) for a in range(1 << n) for c in (0, 1)]


def nonlinearity_brute_force(f: BooleanFunction, max_n: int = BRUTE_FORCE_MAX_N) -> int:
    """Minimum distance to the affine functions by direct comparison with each."""
    check_limit("arity for brute-force nonlinearity", f.n, max_n)
    size = 1 << f.n
    xs = np.arange(size, dtype=np.uint32)
    tt = f.as_array()
    best = size
    for a in range(size):
        lin = (np.bitwise_count(xs & a) & 1).astype(np.int8)
        d = int(np.count_nonzero(tt != lin))
        # c = 1 flips every comparison
        best = min(best, d, size - d)
    return best


def nonlinearity(f: BooleanFunction, method: str = "walsh") -> int:
    """Nl(f); ``method`` is "walsh" (fast, default) or "brute"."""
    if method == "brute":
        return nonlinearity_brute_force(f)
    if method != "walsh":
        raise ValueError(f"unknown method {method!r}")
    from .transform import signed_walsh

    return signed_walsh(f).nonlinearity()


def bent_nonlinearity(n: int) -> int:
    """(2^n - 2^(n/2)) / 2 for even n."""
    if n % 2:
        raise ValueError("arity must be even")
    return ((1 << n) - (1 << (n // 2))) // 2


@dataclass(frozen=True)
class BentResult:
    bent: bool
    reason: str

    def __bool__(self):
        return self.bent


def is_bent(f: BooleanFunction, method: str = "walsh") -> BentResult:
    if f.n % 2:
        return BentResult(False, "arity must be even")
    target = bent_nonlinearity(f.n)
    nl = nonlinearity(f, method)
    if nl == target:
        return BentResult(True, f"nonlinearity {nl} is maximal")
    return BentResult(False, f"nonlinearity {nl} < {target}")
