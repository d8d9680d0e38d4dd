from fractions import Fraction

import pytest

from tracerep.glrep import (RepGL, dimension, koike_tensor, power,
                            traceless_filter, wedge_u)
from tracerep.partitions import pairs_of_partitions
from tracerep.symfunc import GL_SCHUR, SP_SCHUR, SymFunc, L_series
from tracerep.tables import (H3U_LIST, H3UO_LIST, W1_LIST, W2_LIST, W3_LIST,
                             WO3_LIST, W_COMPONENTS_3, as_rep)
from tracerep.walgebra import (gg_identity_checks, torelli_char,
                               traceless_algebra_char,
                               traceless_dim_polynomial, u_i, w_component,
                               w_table, wedge_uo, wi_woi_check, wo_table)


def irr(plus, minus=(), mult=1):
    return RepGL.irreducible(plus, minus, mult)


def test_generator_pieces():
    full, tree, wheel = u_i(1)
    assert tree == irr((1, 1), (1,))
    assert wheel == irr((1,))
    assert full == tree + wheel
    assert u_i(2)[1] == irr((1, 1, 1), (1,))
    assert u_i(2)[2] == irr((1, 1))


def test_w_component_examples():
    assert w_component((1,), ()) == irr((1, 1), (1,))
    assert w_component((1, 1), ()) == \
        irr((1, 1, 1, 1), (1, 1)) + irr((2, 1, 1), (2,)) + \
        irr((2, 2), (1, 1))
    assert w_component((), (2,)) == irr((1, 1))


def test_w_component_degree_three_rows():
    for (mu, nu), triples in W_COMPONENTS_3.items():
        assert w_component(mu, nu) == as_rep(triples), (mu, nu)


def test_w_tables_match_reference_lists():
    assert w_table(1).total == as_rep(W1_LIST)
    assert w_table(2).total == as_rep(W2_LIST)
    assert w_table(3).total == as_rep(W3_LIST)
    assert wo_table(3).total == as_rep(WO3_LIST)


def test_w_table_entry_keys():
    table = w_table(2)
    assert len(table.entries) == len(pairs_of_partitions(2))
    io = wo_table(2)
    assert all(1 not in pair.second for pair in io.entries)


def test_two_construction_orders_agree():
    # assemble the degree-i piece of the plain symmetric algebra on the
    # generators from parity powers and products without intermediate
    # traceless filtering, then filter once at the end
    for i in (1, 2, 3):
        total = RepGL.zero()
        for pair in pairs_of_partitions(i):
            mu, nu = pair
            out = irr(())
            full_size = 0
            for parts, which in ((mu, 1), (nu, 2)):
                for m in sorted(set(parts), reverse=True):
                    k = sum(1 for p in parts if p == m)
                    kind = "alternating" if m % 2 else "symmetric"
                    out = koike_tensor(out, power(u_i(m)[which], k, kind))
                    full_size += k * (m + 2 if which == 1 else m)
            total = total + traceless_filter(out, full_size)
        assert total == w_table(i).total


def test_component_lengths_bounded():
    for i in (1, 2, 3):
        for b, _ in w_table(i).total.sorted_components():
            assert len(b.plus) + len(b.minus) <= 3 * i


def test_wedge_uo_recursion_reassembles():
    for i in (1, 2, 3):
        total = RepGL.zero()
        for b in range(0, i + 1):
            wedge_h = irr((1,) * b) if b else irr(())
            total = total + koike_tensor(wedge_uo(i - b), wedge_h)
        assert total == wedge_u(i)


def test_wedge_uo_matches_reference():
    assert wedge_uo(1) == irr((1, 1), (1,))
    assert wedge_uo(2) == power(irr((1, 1), (1,)), 2, "alternating")
    assert wedge_uo(3) == as_rep(H3UO_LIST)
    assert wedge_u(3) == as_rep(H3U_LIST)


def test_wi_woi_splitting():
    for i in (1, 2, 3):
        assert wi_woi_check(i)


def test_dim_polynomial_degree_and_values():
    for i in (1, 2, 3):
        poly = traceless_dim_polynomial(i)
        assert len(poly) - 1 == 3 * i
        for n in (3 * i, 3 * i + 1, 3 * i + 2):
            pointwise = sum(
                m * dimension(b, n)
                for b, m in traceless_filter(wedge_u(i),
                                             3 * i).sorted_components())
            assert sum(c * n ** k for k, c in enumerate(poly)) == pointwise


def test_dim_polynomial_degree_one_closed_form():
    # n(n+1)(n-2)/2
    poly = traceless_dim_polynomial(1)
    assert poly == [Fraction(0), Fraction(-1), Fraction(-1, 2),
                    Fraction(1, 2)]


def test_w3_dimension_consistency_at_n9():
    from tracerep.partitions import Bipartition
    total = w_table(3).total
    direct = sum(m * dimension(b, 9) for b, m in total.sorted_components())
    frozen = sum(m * dimension(Bipartition.make(p, mi), 9)
                 for p, mi, m in W3_LIST)
    assert direct == frozen


def test_torelli_char_base_families():
    from tracerep.partitions import Partition
    y = torelli_char("Y", 4)
    assert y.flavor == GL_SCHUR
    assert y.coefficient(1) == \
        (SymFunc.e(3) + SymFunc.e(1)) * Fraction(-1)
    x = torelli_char("X", 4)
    # removing the degree-one standard line changes t^1 by omega(-h_1) = h_1
    diff = y - x
    assert diff.pcoefficient(1) == {Partition((1,)): Fraction(-1)}
    assert all(not diff.pcoefficient(q) for q in (0, 2, 3, 4))
    z = torelli_char("Z", 4)
    assert (z - y).pcoefficient(2) == {Partition(()): Fraction(1)}


def test_torelli_char_primed_variants():
    base = torelli_char("X", 6)
    primed = torelli_char("X'", 6)
    doubled = torelli_char("X''", 6)
    d1 = base - primed
    assert d1.trivial_coefficient(2) == 1
    d2 = base - doubled
    assert d2.trivial_coefficient(2) == 1
    assert d2.trivial_coefficient(6) == 1
    assert d2.trivial_coefficient(4) == 0


def test_torelli_char_rejects_unknown_family():
    with pytest.raises(ValueError):
        torelli_char("Q", 4)


def test_traceless_algebra_char_flavor_and_unit():
    s = traceless_algebra_char("Y", 4)
    assert s.flavor == SP_SCHUR
    assert s.trivial_coefficient(0) == 1


def test_gg_identity_checks_pass():
    rep = gg_identity_checks(6)
    assert rep["a"] and rep["b"] and rep["c"]
    assert rep["b_series_rearrangement"]
    assert rep["c_expected"] == [1, 0, 0, 0, 1, 0, 0]
    assert rep["all_passed"]


def test_gg_checks_reject_large_truncation():
    with pytest.raises(ValueError):
        gg_identity_checks(9)
