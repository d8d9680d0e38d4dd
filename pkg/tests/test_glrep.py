from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from tracerep.glrep import (RepGL, char_multiply, char_oracle_decompose,
                            char_weights, dimension, dimension_polynomial,
                            koike_tensor, power, traceless_filter, u_rep,
                            wedge_u)
from tracerep.partitions import Bipartition, bipartitions_of


def irr(plus, minus=(), mult=1):
    return RepGL.irreducible(plus, minus, mult)


def test_koike_standard_times_dual():
    # V_(1),() (x) V_(),(1) = V_(1),(1) + trivial
    got = koike_tensor(irr((1,)), irr((), (1,)))
    assert got == irr((1,), (1,)) + irr(())


def test_koike_mixed_example():
    got = koike_tensor(irr((1,), (1,)), irr((1,)))
    assert got == irr((2,), (1,)) + irr((1, 1), (1,)) + irr((1,))


def test_traceless_filter_keeps_full_size():
    rep = koike_tensor(irr((1,), (1,)), irr((1,), (1,)))
    top = traceless_filter(rep, 4)
    assert all(b.size == 4 for b, _ in top.sorted_components())
    assert top.total_mult() < rep.total_mult()


def test_dimension_standard_and_adjoint():
    assert dimension(Bipartition.make((1,), ()), 5) == 5
    # V_(1),(1) is the traceless adjoint, dim n^2 - 1
    assert dimension(Bipartition.make((1,), (1,)), 5) == 24


def test_dimension_polynomial_matches_pointwise():
    b = Bipartition.make((1, 1), (1,))
    poly = dimension_polynomial(b)
    for n in (3, 4, 5, 7):
        val = sum(c * n ** k for k, c in enumerate(poly))
        assert val == dimension(b, n)


def test_tensor_dimension_consistency():
    a = irr((2,), (1,))
    b = irr((1, 1))
    prod = koike_tensor(a, b)
    n = 6
    lhs = dimension(Bipartition.make((2,), (1,)), n) * \
        dimension(Bipartition.make((1, 1), ()), n)
    rhs = sum(m * dimension(bb, n) for bb, m in prod.sorted_components())
    assert lhs == rhs


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([b for s in range(3) for b in bipartitions_of(s)]),
       st.sampled_from([b for s in range(3) for b in bipartitions_of(s)]))
def test_koike_commutative(a, b):
    assert koike_tensor(RepGL({a: 1}), RepGL({b: 1})) == \
        koike_tensor(RepGL({b: 1}), RepGL({a: 1}))


def test_power_vs_character_oracle():
    # n must be at least 6 so no component of the square vanishes
    n = 6
    rep = u_rep()
    for kind in ("alternating", "symmetric"):
        rule = power(rep, 2, kind)
        char = char_weights(Bipartition.make((1, 1), (1,)), n)
        std = char_weights(Bipartition.make((1,), ()), n)
        full = {w: c for w, c in char.items()}
        for w, c in std.items():
            full[w] = full.get(w, 0) + c
        from tracerep.glrep import char_power
        oracle = char_oracle_decompose(char_power(full, 2, kind), n)
        assert rule == oracle


def test_wedge_u_small_degrees():
    assert wedge_u(0) == irr(())
    assert wedge_u(1) == u_rep()
    # wedge^2 must match the lambda-ring alternating square
    assert wedge_u(2) == power(u_rep(), 2, "alternating")


def test_exterior_symmetric_squares_sum_to_tensor_square():
    rep = u_rep()
    sq = koike_tensor(rep, rep)
    assert power(rep, 2, "alternating") + power(rep, 2, "symmetric") == sq


def test_rep_json_roundtrip():
    rep = wedge_u(2)
    assert RepGL.from_json(rep.to_json()) == rep


def test_sorted_components_deterministic():
    rep = wedge_u(2)
    comps = rep.sorted_components()
    assert comps == sorted(comps, key=lambda t: (t[0].plus, t[0].minus))
