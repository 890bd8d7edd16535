"""Vectorial Boolean functions F = (f1, ..., fm) and symmetric differences of supports.

Output vectors and combination vectors are m-bit ints with f1 in the most
significant position, matching the input bit order of :mod:`bentgraph.boolfn`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfn import BooleanFunction, PointSet, bent_nonlinearity, constant, dot, is_bent, nonlinearity, support
from .cayley import CayleyGraph, build_cayley
from .errors import VECTORIAL_AFFINE_MAX_BITS, check_limit
from .srg import SrgParams, check_srg, lambda_equals_mu


@dataclass(frozen=True)
class VectorialFunction:
    n: int
    components: tuple[BooleanFunction, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("need at least one component")
        for i, f in enumerate(self.components, 1):
            if f.n != self.n:
                raise ValueError(f"component f{i} has arity {f.n}, expected {self.n}")

    @classmethod
    def of(cls, components: Sequence[BooleanFunction]) -> VectorialFunction:
        comps = tuple(components)
        if not comps:
            raise ValueError("need at least one component")
        return cls(comps[0].n, comps)

    @classmethod
    def from_lookup(cls, n: int, m: int, values: Sequence[int]) -> VectorialFunction:
        """From an S-box style table: values[x] is the m-bit output F(x)."""
        if len(values) != 1 << n:
            raise ValueError(f"lookup table has length {len(values)}, expected {1 << n}")
        comps = tuple(
            BooleanFunction(n, tuple((y >> (m - 1 - i)) & 1 for y in values))
            for i in range(m)
        )
        return cls(n, comps)

    @property
    def m(self) -> int:
        return len(self.components)

    def __call__(self, x: int) -> int:
        out = 0
        for f in self.components:
            out = (out << 1) | f.table[x]
        return out

    def supports(self) -> list[PointSet]:
        return [support(f) for f in self.components]


def _members(F: VectorialFunction, v: int) -> list[int]:
    """0-based component indices selected by the m-bit vector v."""
    return [i for i in range(F.m) if (v >> (F.m - 1 - i)) & 1]


def component_combination(F: VectorialFunction, v: int) -> BooleanFunction:
    """F.v, the XOR of the components selected by the nonzero m-bit vector v."""
    if not 0 < v < 1 << F.m:
        raise ValueError(f"combination vector must be a nonzero {F.m}-bit value, got {v}")
    out = constant(F.n)
    for i in _members(F, v):
        out = out ^ F.components[i]
    return out


def nl(F: VectorialFunction) -> int:
    """Minimum nonlinearity over the 2^m - 1 component combinations."""
    return min(nonlinearity(component_combination(F, v)) for v in range(1, 1 << F.m))


def vectorial_distance_nl(F: VectorialFunction, max_bits: int = VECTORIAL_AFFINE_MAX_BITS) -> int:
    """Minimum over all affine maps phi: Z_2^n -> Z_2^m of #{x : F(x) != phi(x)}.

    Each candidate phi is one affine Boolean function per output bit, so the
    disagreement set is the union of per-component disagreement masks.  The
    search is exhaustive with pruning on partial unions.
    """
    check_limit("m*(n+1) for vectorial affine search", F.m * (F.n + 1), max_bits)
    size = 1 << F.n
    full = (1 << size) - 1
    masks = []
    for f in F.components:
        fmask = sum(b << x for x, b in enumerate(f.table))
        per = []
        for a in range(size):
            lin = sum(dot(a, x) << x for x in range(size))
            d = fmask ^ lin
            per.append(d)
            per.append(d ^ full)
        masks.append(per)

    best = size

    def search(i: int, acc: int):
        nonlocal best
        cnt = acc.bit_count()
        if cnt >= best:
            return
        if i == len(masks):
            best = cnt
            return
        for d in masks[i]:
            search(i + 1, acc | d)

    search(0, 0)
    return best


@dataclass(frozen=True)
class VectorialBentResult:
    bent: bool
    witness: int | None = None

    def __bool__(self):
        return self.bent


def is_vectorial_bent(F: VectorialFunction) -> VectorialBentResult:
    """All 2^m - 1 combinations bent; otherwise the first failing v as witness."""
    for v in range(1, 1 << F.m):
        if not is_bent(component_combination(F, v)):
            return VectorialBentResult(False, v)
    return VectorialBentResult(True)


def nl_is_bent_value(F: VectorialFunction) -> bool:
    return F.n % 2 == 0 and nl(F) == bent_nonlinearity(F.n)


def symmetric_difference(a: PointSet, b: PointSet) -> PointSet:
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n}")
    return PointSet(a.n, a.members ^ b.members)


def nary_symmetric_difference(sets: Iterable[PointSet]) -> PointSet:
    """Points that belong to an odd number of the sets."""
    sets = list(sets)
    if not sets:
        raise ValueError("symmetric difference of an empty collection is not defined here")
    n = sets[0].n
    for s in sets:
        if s.n != n:
            raise ValueError(f"arity mismatch: {s.n} vs {n}")
    counts = Counter(p for s in sets for p in s.members)
    return PointSet(n, frozenset(p for p, c in counts.items() if c % 2))


@dataclass(frozen=True)
class SubsetReport:
    indicator: int
    subset: tuple[int, ...]
    support_size: int
    params: SrgParams | None
    lambda_eq_mu: bool
    bridge_ok: bool
    violation: str | None = None


def check_support_srg_condition(F: VectorialFunction) -> list[SubsetReport]:
    """For each nonempty index subset I (ordered by indicator), check that
    Cay(Z_2^n, symmetric difference of the supports in I) is srg with lambda = mu.

    ``bridge_ok`` records that the symmetric difference equals the support of
    the XOR of the selected components.
    """
    supports = F.supports()
    reports = []
    for v in range(1, 1 << F.m):
        idx = _members(F, v)
        omega = nary_symmetric_difference(supports[i] for i in idx)
        bridge = omega == support(component_combination(F, v))
        rep = check_srg(CayleyGraph(F.n, omega))
        ok = rep.is_srg and lambda_equals_mu(rep.params)
        reports.append(SubsetReport(
            indicator=v,
            subset=tuple(i + 1 for i in idx),
            support_size=len(omega),
            params=rep.params,
            lambda_eq_mu=ok,
            bridge_ok=bridge,
            violation=rep.violation,
        ))
    return reports


def subset_edge_sets_agree(F: VectorialFunction, v: int) -> bool:
    """Edge set of the symmetric-difference graph equals that of the XOR function's graph."""
    idx = _members(F, v)
    omega = nary_symmetric_difference(support(F.components[i]) for i in idx)
    g1 = CayleyGraph(F.n, omega)
    g2 = build_cayley(component_combination(F, v))
    return list(g1.edges()) == list(g2.edges()) and g1.has_loops == g2.has_loops

