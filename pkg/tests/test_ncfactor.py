import itertools
import random
from fractions import Fraction

import pytest

from splitkit.errors import GenericityFailure
from splitkit.exactlinalg import RATIONALS, DenseMatrix, char_poly
from splitkit.ncfactor import (
    PseudoRootTable,
    RootSystem,
    block_vandermonde,
    check_all_orderings,
    check_diamond,
    expand_factorization,
    genericity_check,
    pseudo_root,
    quasideterminant,
    quasideterminant_ordered,
    random_generic_roots,
    viete_coefficients,
)


def scalars(*vals):
    return RootSystem.from_scalars([Fraction(v) for v in vals])


def test_block_vandermonde_k0_is_identity():
    rs = scalars(7)
    assert block_vandermonde(rs, [1]) == DenseMatrix.identity(1, RATIONALS)


def test_block_vandermonde_scalar_cases():
    rs = scalars(1, 2)
    assert block_vandermonde(rs, [1, 2]).to_lists() == [[1, 2], [1, 1]]
    rs = scalars(1, 2, 3)
    assert block_vandermonde(rs, [1, 2, 3]).to_lists() == [[1, 4, 9], [1, 2, 3], [1, 1, 1]]


def test_block_vandermonde_matrix_blocks():
    rs = RootSystem.from_entries([[[0, 1], [1, 0]], [[1, 0], [0, -1]]])
    w = block_vandermonde(rs, [1, 2])
    assert w.rows == w.cols == 4
    assert w.to_lists()[2:] == [[1, 0, 1, 0], [0, 1, 0, 1]]  # bottom block row of identities


def test_quasideterminant_scalar_values():
    rs = scalars(5, 3)
    assert quasideterminant(rs, {1}, 2).to_lists() == [[-2]]  # x2 - x1 per the Schur formula
    rs = scalars(1, 2, 4)
    assert quasideterminant(rs, {1, 2}, 3).to_lists() == [[6]]  # (4-1)(4-2)


def test_quasideterminant_empty_correction_is_identity():
    rs = scalars(5, 3)
    assert quasideterminant(rs, set(), 1) == DenseMatrix.identity(1, RATIONALS)


def test_quasideterminant_is_order_independent():
    rng = random.Random(11)
    rs = random_generic_roots(3, 2, rng)
    for subset, i in [((1, 2), 3), ((1, 3), 2), ((2, 3), 1)]:
        ws = {quasideterminant_ordered(rs, perm, i) for perm in itertools.permutations(subset)}
        assert len(ws) == 1


def test_quasideterminant_reports_genericity_failure():
    rs = scalars(1, 1, 2)  # equal roots: W(1,2) singular
    with pytest.raises(GenericityFailure) as info:
        quasideterminant(rs, {1, 2}, 3)
    assert info.value.subset == (1, 2)


def test_pseudo_root_base_cases():
    rs = scalars(4, 9)
    assert pseudo_root(rs, set(), 2).to_lists() == [[9]]
    # commuting scalars: conjugation is trivial
    assert pseudo_root(rs, {1}, 2).to_lists() == [[9]]


def test_pseudo_root_conjugation_2x2():
    rs = RootSystem.from_entries([[[0, 1], [1, 0]], [[1, 0], [0, -1]]])
    x = pseudo_root(rs, {1}, 2)
    assert x.trace() == rs.root(2).trace() == 0
    w = quasideterminant(rs, {1}, 2)
    assert x * w == w * rs.root(2)  # x w = w x_2, i.e. x = w x_2 w^-1
    assert char_poly(x) == char_poly(rs.root(2))


def test_genericity_check_flags_equal_roots():
    rep = genericity_check(scalars(1, 1))
    assert not rep.generic
    assert (1, 2) in rep.singular_vandermondes


def test_genericity_check_scalar_distinct():
    assert genericity_check(scalars(1, 2, 3)).generic


def test_genericity_check_randomized_never_crashes():
    rng = random.Random(12)
    generic = 0
    for _ in range(30):
        rs = RootSystem.from_entries(
            [[[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)] for _ in range(3)]
        )
        generic += genericity_check(rs).generic
    assert generic >= 1  # failures are reported, not raised


def test_viete_commutative_cases():
    poly = viete_coefficients(scalars(1, 2), (1, 2))
    assert [c.to_lists() for c in poly.coefficients] == [[[-3]], [[2]]]
    poly = viete_coefficients(scalars(5), (1,))
    assert [c.to_lists() for c in poly.coefficients] == [[[-5]]]


def test_expand_factorization_matches_viete_small():
    rs = scalars(1, 2)
    for ordering in [(1, 2), (2, 1)]:
        assert expand_factorization(rs, ordering) == viete_coefficients(rs, ordering)
        assert [c.to_lists() for c in expand_factorization(rs, ordering).coefficients] == [[[-3]], [[2]]]


def test_all_orderings_scalar_cases():
    chk = check_all_orderings(scalars(1, 2, 3))
    assert chk.passed
    assert [c.to_lists() for c in chk.polynomial.coefficients] == [[[-6]], [[11]], [[-6]]]


def test_scalar_multiple_of_identity_degenerates_to_commutative_viete():
    ident = [[1, 0], [0, 1]]
    rs = RootSystem.from_entries([[[c * e for e in row] for row in ident] for c in (1, 2, 3)])
    table = PseudoRootTable(rs)
    for a, i in [((), 1), ((1,), 2), ((1, 2), 3), ((3,), 2)]:
        assert table.pseudo_root(a, i) == rs.root(i)
    chk = check_all_orderings(rs)
    assert chk.passed
    e1, e2, e3 = 6, 11, 6
    assert chk.polynomial.coefficient(1) == DenseMatrix.identity(2, RATIONALS).scale(-e1)
    assert chk.polynomial.coefficient(2) == DenseMatrix.identity(2, RATIONALS).scale(e2)
    assert chk.polynomial.coefficient(3) == DenseMatrix.identity(2, RATIONALS).scale(-e3)


def test_check_diamond_scalars_and_base_case():
    rs = scalars(2, 7)
    assert check_diamond(rs, set(), 1, 2)
    rs3 = scalars(2, 7, 11)
    assert check_diamond(rs3, {3}, 1, 2)
    with pytest.raises(ValueError):
        check_diamond(rs3, {1}, 1, 2)


def test_random_generic_matrix_systems():
    rng = random.Random(13)
    for _ in range(5):
        rs = random_generic_roots(3, 2, rng)
        chk = check_all_orderings(rs)
        assert chk.passed
        table = PseudoRootTable(rs)
        for ordering in itertools.permutations((1, 2, 3)):
            assert expand_factorization(rs, ordering, table) == viete_coefficients(rs, ordering, table)
        for a in ([], [1], [2], [3]):
            rest = [i for i in (1, 2, 3) if i not in a]
            for i, j in itertools.combinations(rest, 2):
                assert check_diamond(rs, a, i, j, table)


def test_pseudo_roots_preserve_characteristic_polynomial():
    rng = random.Random(14)
    rs = random_generic_roots(3, 2, rng)
    table = PseudoRootTable(rs)
    for size in range(3):
        for a in itertools.combinations((1, 2, 3), size):
            for i in (1, 2, 3):
                if i in a:
                    continue
                assert char_poly(table.pseudo_root(a, i)) == char_poly(rs.root(i))


def test_table_entries_satisfy_conjugation_invariant():
    rng = random.Random(15)
    rs = random_generic_roots(2, 2, rng)
    table = PseudoRootTable(rs)
    table.pseudo_root((1,), 2)
    table.pseudo_root((2,), 1)
    for (a, i), (w, x) in table.entries().items():
        assert x * w == w * rs.root(i)


def test_genericity_failure_is_loud_in_viete():
    rs = scalars(1, 1)
    with pytest.raises(GenericityFailure):
        viete_coefficients(rs, (1, 2))


def _right_eval(poly, x):
    acc = x**poly.n
    for k in range(1, poly.n + 1):
        acc = acc + poly.coefficient(k) * x ** (poly.n - k)
    return acc


def _left_eval(poly, x):
    acc = x**poly.n
    for k in range(1, poly.n + 1):
        acc = acc + x ** (poly.n - k) * poly.coefficient(k)
    return acc


def test_four_roots_all_twenty_four_orderings():
    # deeper recursion: |A| = 3 uses 8x8 block Vandermonde inverses
    rng = random.Random(77)
    rs = random_generic_roots(4, 2, rng, bound=3)
    chk = check_all_orderings(rs)
    assert chk.passed and len(chk.orderings) == 24
    table = PseudoRootTable(rs)
    for ordering in itertools.permutations((1, 2, 3, 4)):
        assert expand_factorization(rs, ordering, table) == viete_coefficients(rs, ordering, table)
    for (a, i), (_, x) in table.entries().items():
        assert char_poly(x) == char_poly(rs.root(i))


def test_factorization_endpoints_are_actual_roots():
    # P(t) = (t - y_n)...(t - y_1): the ordering's first root divides on
    # the right and the last conjugate divides on the left, so the
    # corresponding one-sided evaluations vanish identically
    rng = random.Random(31)
    rs = random_generic_roots(3, 2, rng)
    table = PseudoRootTable(rs)
    for ordering in itertools.permutations((1, 2, 3)):
        poly = viete_coefficients(rs, ordering, table)
        assert _right_eval(poly, rs.root(ordering[0])).is_zero()
        assert _left_eval(poly, table.pseudo_root(ordering[:-1], ordering[-1])).is_zero()
