import pytest

from bentgraph import errors
from bentgraph.boolfn import (PointSet, affine, affine_functions, constant, from_truth_table,
                              is_bent, nonlinearity, nonlinearity_brute_force, support)
from bentgraph.cayley import build_cayley
from bentgraph.transform import cayley_eigenvalues

from conftest import all_functions, random_tables
from oracles import brute_nonlinearity


def test_from_truth_table_and(AND):
    assert AND.n == 2
    assert [AND(x) for x in range(4)] == [0, 0, 0, 1]


def test_from_truth_table_xor():
    f = from_truth_table(2, "0110")
    assert all(f(x) == ((x >> 1) ^ x) & 1 for x in range(4))


def test_from_truth_table_length_error():
    with pytest.raises(ValueError, match="expected 2\\^2 = 4"):
        from_truth_table(2, "010101")


def test_from_truth_table_symbol_error():
    with pytest.raises(ValueError, match="position 2"):
        from_truth_table(2, "01x1")


def test_support_examples(AND):
    assert support(AND).as_bits() == ["11"]
    assert len(support(constant(3))) == 0
    assert support(from_truth_table(2, "0111")).as_bits() == ["01", "10", "11"]


def test_support_size_is_weight():
    for f in random_tables(5, 50, seed=1):
        assert len(support(f)) == f.table.count(1)


def test_pointset_rejects_wide_points():
    with pytest.raises(ValueError):
        PointSet(2, frozenset({4}))


def test_affine_functions_counts():
    fs = affine_functions(1)
    assert {f.to_bits() for f in fs} == {"00", "11", "01", "10"}
    assert len(affine_functions(2)) == 8
    assert len({f.table for f in affine_functions(3)}) == 16


def test_affine_identity():
    for l in affine_functions(3):
        for x in range(8):
            for y in range(8):
                assert l(x ^ y) == l(x) ^ l(y) ^ l(0)


def test_affine_guard():
    with pytest.raises(errors.ResourceLimitError, match="limit 3"):
        affine_functions(4, max_n=3)


def test_nonlinearity_examples(AND, bent4):
    assert nonlinearity(AND) == 1
    assert nonlinearity(bent4) == 6
    for l in affine_functions(3):
        assert nonlinearity(l) == 0


def test_nonlinearity_brute_matches_oracle(AND, bent4):
    assert brute_nonlinearity(AND) == 1
    assert brute_nonlinearity(bent4) == 6


@pytest.mark.parametrize("n,count", [(2, None), (3, 1000), (4, 1000)])
def test_nonlinearity_two_routes_agree(n, count):
    fs = all_functions(n) if count is None else random_tables(n, count, seed=n)
    for f in fs:
        assert nonlinearity_brute_force(f) == nonlinearity(f, "walsh")


def test_brute_force_guard():
    f = constant(5)
    with pytest.raises(errors.ResourceLimitError):
        nonlinearity_brute_force(f, max_n=4)


def test_is_bent_examples(AND, bent4):
    assert is_bent(AND)
    assert is_bent(bent4)
    assert not is_bent(affine(4, 0b1010, 1))


def test_is_bent_odd_arity_reason():
    r = is_bent(from_truth_table(3, "00010111"))
    assert not r
    assert r.reason == "arity must be even"


def test_bent_iff_support_size_and_flat_eigenvalues():
    for n in (2, 4):
        funcs = all_functions(2) if n == 2 else random_tables(4, 3000, seed=44)
        lo, hi = (1 << (n - 1)) - (1 << (n // 2 - 1)), (1 << (n - 1)) + (1 << (n // 2 - 1))
        for f in funcs:
            ev = cayley_eigenvalues(f).indexed
            crit = (f.weight in (lo, hi)) and all(abs(e) == 1 << (n // 2 - 1) for e in ev[1:])
            assert bool(is_bent(f)) == crit


def test_complement_of_bent_is_bent(bent4):
    c = bent4.complement()
    assert is_bent(c)
    assert sorted([bent4.weight, c.weight]) == [6, 10]


def test_xor_and_translate(AND):
    x = from_truth_table(2, "0110")
    assert (AND ^ x).to_bits() == "0111"
    assert AND.translate(3).to_bits() == "1000"
    assert build_cayley(AND).degree == 1
