"""Text forms of Boolean functions.

``b:0110...``      binary truth table, entry i is f(b(i))
``h:6a...``        hex, four entries per digit, first entry in the digit's high bit
``a:n=4: x1*x2 + x3*x4``  algebraic normal form; ``*`` is AND, ``+`` is XOR,
                   variables x1..xn, constants 0 and 1
"""

from __future__ import annotations

import re

from .boolfn import BooleanFunction

_HEX = set("0123456789abcdefABCDEF")


class SpecError(ValueError):
    pass


def _arity_of_length(length: int, what: str) -> int:
    if length < 2 or length & (length - 1):
        valid = ", ".join(str(1 << k) for k in range(1, 7))
        raise SpecError(f"{what} has {length} entries; length must be a power of two "
                        f"2^n with n >= 1 ({valid}, ...)")
    return length.bit_length() - 1


def parse_binary(body: str, offset: int = 0) -> BooleanFunction:
    for pos, ch in enumerate(body):
        if ch not in "01":
            raise SpecError(f"non-binary symbol {ch!r} at position {pos + offset}")
    n = _arity_of_length(len(body), "binary table")
    return BooleanFunction(n, tuple(int(c) for c in body))


def parse_hex(body: str, offset: int = 0) -> BooleanFunction:
    for pos, ch in enumerate(body):
        if ch not in _HEX:
            raise SpecError(f"non-hex symbol {ch!r} at position {pos + offset}")
    bits = "".join(format(int(ch, 16), "04b") for ch in body)
    if not bits:
        raise SpecError("empty hex table")
    _arity_of_length(len(bits), "hex table")
    return parse_binary(bits)


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|([01])|([*+]))")


def parse_anf(expr: str, n: int, offset: int = 0) -> BooleanFunction:
    """Evaluate a sum of monomials at every point of Z_2^n."""
    monomials: list[int] = []   # each monomial as a variable bitmask over table indices
    current: int | None = None  # mask of the monomial being built, None before a factor
    zero = False
    expect_factor = True
    pos = 0
    stripped_end = len(expr.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(expr, pos)
        if not m:
            bad = pos + len(expr[pos:]) - len(expr[pos:].lstrip())
            raise SpecError(f"unexpected character {expr[bad]!r} at position {bad + offset}")
        start = m.start(m.lastindex)
        if m.group(4):
            if expect_factor:
                raise SpecError(f"operator {m.group(4)!r} without operand at position {start + offset}")
            if m.group(4) == "+":
                if not zero:
                    monomials.append(current)
                current, zero = None, False
            expect_factor = True
        else:
            if not expect_factor:
                raise SpecError(f"missing operator before position {start + offset}")
            if m.group(1):
                k = int(m.group(2))
                if not 1 <= k <= n:
                    raise SpecError(f"variable x{k} at position {start + offset} outside x1..x{n}")
                bit = 1 << (n - k)
            else:
                bit = 0
                if m.group(3) == "0":
                    zero = True
            current = (current or 0) | bit
            expect_factor = False
        pos = m.end()
    if expect_factor:
        raise SpecError(f"expression ends without an operand at position {pos + offset}")
    if not zero:
        monomials.append(current)
    table = tuple(
        sum(1 for mask in monomials if x & mask == mask) & 1 for x in range(1 << n)
    )
    return BooleanFunction(n, table)


def parse_function(spec: str, n: int | None = None) -> BooleanFunction:
    """Parse ``b:``, ``h:`` or ``a:n=N:`` specs.  ``n``, if given, must agree."""
    spec = spec.strip()
    kind, sep, body = spec.partition(":")
    if not sep:
        raise SpecError("function spec must start with 'b:', 'h:' or 'a:'")
    if kind == "b":
        f = parse_binary(body, 2)
    elif kind == "h":
        f = parse_hex(body, 2)
    elif kind == "a":
        m = re.match(r"\s*n\s*=\s*(\d+)\s*:", body)
        if not m:
            raise SpecError("ANF spec must look like 'a:n=4: x1*x2 + x3*x4'")
        arity = int(m.group(1))
        if arity < 1:
            raise SpecError("arity must be at least 1")
        f = parse_anf(body[m.end():], arity, 2 + m.end())
    else:
        raise SpecError(f"unknown spec kind {kind!r}; use 'b:', 'h:' or 'a:'")
    if n is not None and f.n != n:
        raise SpecError(f"spec has arity {f.n} but n={n} was requested")
    return f


def format_function(f: BooleanFunction) -> str:
    return "b:" + f.to_bits()
