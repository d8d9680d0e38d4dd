from tracerep.partitions import Partition, lr_coefficient, partitions_of
from tracerep.sprep import (RepSp, nl_coefficient, nl_product, sp_dimension,
                            wedge_h_sp)


def test_nl_full_size_is_lr():
    lam, mu = Partition((2, 1)), Partition((1, 1))
    for nu in partitions_of(5):
        assert nl_coefficient(lam, mu, nu) == lr_coefficient(lam, mu, nu)


def test_nl_standard_square():
    # <1> (x) <1> = <2> + <1,1> + <0>
    std = RepSp({Partition((1,)): 1})
    prod = nl_product(std, std)
    assert prod == RepSp({Partition((2,)): 1, Partition((1, 1)): 1,
                          Partition(()): 1})


def test_nl_symmetric_in_all_arguments():
    lam, mu, nu = Partition((2,)), Partition((1, 1)), Partition((1,))
    vals = {nl_coefficient(a, b, c)
            for a, b, c in ((lam, mu, nu), (mu, lam, nu), (nu, mu, lam))}
    assert len(vals) == 1


def test_sp_dimensions():
    # standard rep of Sp(2g)
    assert sp_dimension(Partition((1,)), 3) == 6
    assert sp_dimension(Partition(()), 4) == 1
    # wedge^2 of the standard rep splits off a trivial line
    assert sp_dimension(Partition((1, 1)), 3) == 14


def test_wedge_h_decomposition():
    # wedge^2 H = <1,1> + <0> for the symplectic form
    assert wedge_h_sp(2) == RepSp({Partition((1, 1)): 1, Partition(()): 1})


def test_wedge_h_dimension_consistency():
    g = 4
    rep = wedge_h_sp(3, g)
    from math import comb
    assert sum(m * sp_dimension(lam, g)
               for lam, m in rep.sorted_components()) == comb(2 * g, 3)
