from fractions import Fraction
from math import factorial

import pytest

from tracerep.tensors import (CONTRA, COV, GroupOp, Signature, TensorElement,
                              UDualVector, UVector, WedgeChain,
                              abelian_cycle_chain, abelian_cycle_generators,
                              apply_f, apply_group, comultiply_check,
                              contract, contraction_plan,
                              free_auto_check_commute, hwv_check,
                              io_contraction_checks, io_embed, iota_expand,
                              kernel_dim, kernel_generator_checks,
                              magnus_image, span_closure_dim,
                              traceless_generator_check)


def test_uvector_canonicalization():
    # e_{a,b}^c is antisymmetric in (a, b)
    v = UVector(4, {(2, 1, 3): Fraction(1)})
    assert v == UVector.basis(1, 2, 3, 4).scale(-1)
    assert UVector(4, {(1, 1, 3): Fraction(1)}).is_zero()


def test_udual_canonicalization():
    v = UDualVector(4, {(1, 3, 2): Fraction(1)})
    assert v == UDualVector.basis(1, 2, 3, 4).scale(-1)


def test_iota_expand_no_normalization():
    chain = WedgeChain([UVector.basis(1, 2, 3, 4)])
    x = iota_expand(chain)
    # phi(e_{1,2}^3) = e_1 (x) e_2 (x) e_3* - e_2 (x) e_1 (x) e_3*
    assert x.coefficient(((1,), (2,), (3,))) == 1
    assert x.coefficient(((2,), (1,), (3,))) == -1


def test_wedge_chain_rejects_mixed_factors():
    with pytest.raises(ValueError):
        WedgeChain([UVector.basis(1, 2, 3, 4),
                    UDualVector.basis(1, 2, 3, 4)])


def test_contract_is_trace():
    n = 3
    sig = Signature.flat((COV, CONTRA), n)
    x = TensorElement(sig, {((j,), (j,)): Fraction(1)
                            for j in range(1, n + 1)})
    from tracerep.tensors import ContractionPlan
    y = contract(ContractionPlan([(0, 1)], []), x)
    assert y.coefficient(()) == n


def test_magnus_images():
    assert magnus_image(("g", 2, 1), 4) == UVector.basis(2, 1, 1, 4)
    h = magnus_image(("h", 3, 1), 4)
    assert h == UVector.basis(3, 1, 1, 4) + UVector.basis(3, 2, 2, 4)
    with pytest.raises(ValueError):
        magnus_image(("h", 1, 3), 4)


def test_abelian_cycle_generators_layout():
    gens = abelian_cycle_generators((1,), (2,))
    assert gens == [("f", 1, 2, 3), ("h", 5, 4), ("h", 6, 4)]


def test_group_action_on_uvector_chain():
    # E(k,l) maps e_l to e_k + e_l, so (E - id) picks out the shifted term
    n = 4
    x = iota_expand(WedgeChain([UVector.basis(1, 3, 2, n)]))
    y = apply_group(GroupOp.E(4, 1) - GroupOp.identity(), x)
    assert y == iota_expand(WedgeChain([UVector.basis(4, 3, 2, n)]))


def test_wheel_contraction_closed_form():
    # full-cycle contraction of the pure-wheel chain: coefficient i!
    for i in (1, 2, 3):
        n = i + 2
        chain = abelian_cycle_chain((), (i,), n)
        y = contract(contraction_plan(i, wheel=True), iota_expand(chain))
        key = (tuple(range(2, i + 2)),)
        assert y.coefficient(key) == factorial(i)


def test_tree_contraction_closed_form():
    for i in (1, 2, 3):
        n = i + 2
        chain = abelian_cycle_chain((), (i,), n)
        y = contract(contraction_plan(i, wheel=False), iota_expand(chain))
        key = (tuple(range(1, i + 2)), (1,))
        assert y.coefficient(key) == (-1) ** i * factorial(i + 1)


def test_io_embed_is_traceless():
    n = 5
    v = io_embed(magnus_image(("h", 3, 1), n))
    # the signed trace of the embedded vector vanishes
    total_b_eq_c = {}
    for (a, b, c), coeff in v.terms.items():
        if b == c:
            total_b_eq_c[a] = total_b_eq_c.get(a, Fraction(0)) + coeff
        if a == c:
            total_b_eq_c[b] = total_b_eq_c.get(b, Fraction(0)) - coeff
    assert all(val == 0 for val in total_b_eq_c.values())


def test_io_contraction_vanishes_for_single_factor():
    rep = io_contraction_checks(1, 4)
    assert rep["exactly_zero"] and rep["statement_holds"]


def test_io_contraction_documented_discrepancy():
    # direct evaluation at i=2, n=4 gives 10/9; the recorded closed form
    # gives 8/9; the nonvanishing statement holds either way
    rep = io_contraction_checks(2, 4)
    assert rep["coefficient"] == Fraction(10, 9)
    assert rep["formula_value"] == Fraction(8, 9)
    assert not rep["formula_match"]
    assert rep["statement_holds"]


def test_apply_f_diagonal_nonzero():
    for mu, nu in (((2,), ()), ((), (2,)), ((1,), (1,))):
        n = 6
        chain = abelian_cycle_chain(mu, nu, n)
        assert not apply_f(mu, nu, chain).is_zero()


def test_traceless_generator_images():
    ok1, s1 = traceless_generator_check(1, 3, with_sign=True)
    ok2, s2 = traceless_generator_check(2, 6, with_sign=True)
    assert ok1 and ok2
    # observed global signs, recorded as data
    assert (s1, s2) == (-1, 1)


def test_free_auto_commutativity():
    assert free_auto_check_commute([("h", 3, 1), ("h", 4, 1)], 4)
    assert free_auto_check_commute([("f", 1, 2, 3), ("h", 4, 1)], 4)
    assert not free_auto_check_commute([("g", 1, 2), ("g", 2, 1)], 3)


def test_kernel_dims_small():
    assert kernel_dim(1, 1, 2) == 3
    assert kernel_dim(2, 1, 3) == 21


def test_span_closure_reaches_kernel():
    n = 3
    sig = Signature.flat((COV, CONTRA), n)
    x = TensorElement(sig, {((1,), (3,)): Fraction(1)})
    assert span_closure_dim(x) == kernel_dim(1, 1, 3)


def test_hwv_small_shapes():
    from tracerep.partitions import Bipartition
    assert hwv_check(Bipartition.make((1, 1), ()), n=2)
    assert hwv_check(Bipartition.make((2,), (1,)), n=3)


def test_kernel_generator_checks_summary():
    rep = kernel_generator_checks(9)
    assert rep["all_passed"]
    # one row is annotated as a known discrepancy and excluded
    assert rep["passed_count"] == len(rep["checks"]) - 1
    flagged = [c for c in rep["checks"]
               if c.get("known_discrepancy") and not c["passed"]]
    assert len(flagged) == 1 and flagged[0]["id"].endswith(":psi3")


def test_comultiply_degree_two():
    chain = abelian_cycle_chain((), (1, 1), 6)
    assert comultiply_check(chain)
