"""Exact computational representation theory for GL(n,Q) and Sp(2g,Q).

Partition combinatorics, tensor product rules for rational irreducibles,
symmetric function series, sparse exact tensor contractions, and the
traceless symmetric algebra tables built on top of them.
"""

from .partitions import (Bipartition, PairOfPartitions, Partition,
                         bipartitions_of, lr_coefficient, lr_product,
                         pairs_of_partitions, partitions_of)
from .glrep import (RepGL, dimension, dimension_polynomial, koike_tensor,
                    power, traceless_filter, u_rep, wedge_u)
from .sprep import RepSp, nl_coefficient, nl_product
from .symfunc import (GL_SCHUR, SP_SCHUR, SymFunc, SymSeries, L_series,
                      exp_series, plethysm, sym_series_scalar)
from .walgebra import (WTable, gg_identity_checks, torelli_char,
                       traceless_algebra_char, traceless_dim_polynomial,
                       u_i, w_component, w_table, wedge_uo, wi_woi_check,
                       wo_table)
from .checks import LEMMA_CHECKS, run_check

__version__ = "1.0.0"

__all__ = [
    "Bipartition", "PairOfPartitions", "Partition", "bipartitions_of",
    "lr_coefficient", "lr_product", "pairs_of_partitions", "partitions_of",
    "RepGL", "dimension", "dimension_polynomial", "koike_tensor", "power",
    "traceless_filter", "u_rep", "wedge_u",
    "RepSp", "nl_coefficient", "nl_product",
    "GL_SCHUR", "SP_SCHUR", "SymFunc", "SymSeries", "L_series",
    "exp_series", "plethysm", "sym_series_scalar",
    "WTable", "gg_identity_checks", "torelli_char",
    "traceless_algebra_char", "traceless_dim_polynomial", "u_i",
    "w_component", "w_table", "wedge_uo", "wi_woi_check", "wo_table",
    "LEMMA_CHECKS", "run_check",
]
