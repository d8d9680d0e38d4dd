"""Reference decomposition tables, frozen as data.

Each list enumerates (plus, minus, multiplicity) triples of bipartition
components.  These are the published third-degree decompositions that
the verification suites compare against.
"""

from .glrep import RepGL


def as_rep(triples) -> RepGL:
    out = RepGL.zero()
    for plus, minus, mult in triples:
        out = out + RepGL.irreducible(plus, minus, mult)
    return out


# the eight "generic" components shared by all four degree-three tables
_COMMON8 = [
    ((3, 3), (1, 1, 1), 1),
    ((3, 2, 1), (2, 1), 1),
    ((3, 1, 1, 1), (3,), 1),
    ((2, 2, 2), (3,), 1),
    ((2, 2, 1, 1), (2, 1), 1),
    ((2, 2, 1, 1), (1, 1, 1), 1),
    ((2, 1, 1, 1, 1), (2, 1), 1),
    ((1, 1, 1, 1, 1, 1), (1, 1, 1), 1),
]

# degree-one and degree-two totals
W1_LIST = [((1, 1), (1,), 1), ((1,), (), 1)]

W2_LIST = [
    ((1, 1, 1), (1,), 2),
    ((1, 1), (), 2),
    ((1, 1, 1, 1), (1, 1), 1),
    ((2, 1, 1), (2,), 1),
    ((2, 2), (1, 1), 1),
    ((2, 1), (1,), 1),
]

# degree-three total, 34 components with multiplicity
W3_LIST = _COMMON8 + [
    ((3, 2), (1, 1), 1),
    ((3, 1, 1), (2,), 1),
    ((2, 2, 1), (2,), 2),
    ((2, 2, 1), (1, 1), 2),
    ((2, 1, 1, 1), (2,), 2),
    ((2, 1, 1, 1), (1, 1), 2),
    ((1, 1, 1, 1, 1), (2,), 1),
    ((1, 1, 1, 1, 1), (1, 1), 2),
    ((2, 2), (1,), 2),
    ((2, 1, 1), (1,), 3),
    ((1, 1, 1, 1), (1,), 4),
    ((2, 1), (), 1),
    ((1, 1, 1), (), 3),
]

# degree-three total for the outer variant, 19 components
WO3_LIST = _COMMON8 + [
    ((2, 2, 1), (2,), 1),
    ((2, 2, 1), (1, 1), 1),
    ((2, 1, 1, 1), (2,), 1),
    ((2, 1, 1, 1), (1, 1), 1),
    ((1, 1, 1, 1, 1), (2,), 1),
    ((1, 1, 1, 1, 1), (1, 1), 1),
    ((2, 2), (1,), 1),
    ((2, 1, 1), (1,), 1),
    ((1, 1, 1, 1), (1,), 2),
    ((1, 1, 1), (), 1),
]

# third exterior power of the full generator, 61 components
H3U_LIST = _COMMON8 + [
    ((3, 2), (2,), 1),
    ((3, 2), (1, 1), 2),
    ((3, 1, 1), (2,), 2),
    ((3, 1, 1), (1, 1), 1),
    ((2, 2, 1), (2,), 3),
    ((2, 2, 1), (1, 1), 3),
    ((2, 1, 1, 1), (2,), 3),
    ((2, 1, 1, 1), (1, 1), 3),
    ((1, 1, 1, 1, 1), (2,), 1),
    ((1, 1, 1, 1, 1), (1, 1), 2),
    ((3, 1), (1,), 2),
    ((2, 2), (1,), 6),
    ((2, 1, 1), (1,), 7),
    ((1, 1, 1, 1), (1,), 6),
    ((3,), (), 1),
    ((2, 1), (), 4),
    ((1, 1, 1), (), 6),
]

# third exterior power of the tree generator alone, 36 components
H3UO_LIST = _COMMON8 + [
    ((3, 2), (2,), 1),
    ((3, 2), (1, 1), 1),
    ((3, 1, 1), (2,), 1),
    ((3, 1, 1), (1, 1), 1),
    ((2, 2, 1), (2,), 2),
    ((2, 2, 1), (1, 1), 2),
    ((2, 1, 1, 1), (2,), 2),
    ((2, 1, 1, 1), (1, 1), 2),
    ((1, 1, 1, 1, 1), (2,), 1),
    ((1, 1, 1, 1, 1), (1, 1), 1),
    ((3, 1), (1,), 1),
    ((2, 2), (1,), 3),
    ((2, 1, 1), (1,), 3),
    ((1, 1, 1, 1), (1,), 3),
    ((3,), (), 1),
    ((2, 1), (), 1),
    ((1, 1, 1), (), 2),
]

# individual degree-three bigraded components
W_COMPONENTS_3 = {
    ((3,), ()): [((1, 1, 1, 1), (1,), 1)],
    ((), (3,)): [((1, 1, 1), (), 1)],
    ((2, 1), ()): [
        ((2, 2, 1), (2,), 1), ((2, 2, 1), (1, 1), 1),
        ((2, 1, 1, 1), (2,), 1), ((2, 1, 1, 1), (1, 1), 1),
        ((1, 1, 1, 1, 1), (2,), 1), ((1, 1, 1, 1, 1), (1, 1), 1),
    ],
    ((2,), (1,)): [((2, 1, 1), (1,), 1), ((1, 1, 1, 1), (1,), 1)],
    ((1,), (2,)): [
        ((2, 2), (1,), 1), ((2, 1, 1), (1,), 1), ((1, 1, 1, 1), (1,), 1),
    ],
    ((), (2, 1)): [((2, 1), (), 1), ((1, 1, 1), (), 1)],
    ((1, 1, 1), ()): list(_COMMON8),
    ((1, 1), (1,)): [
        ((3, 2), (1, 1), 1), ((3, 1, 1), (2,), 1),
        ((2, 2, 1), (2,), 1), ((2, 2, 1), (1, 1), 1),
        ((2, 1, 1, 1), (2,), 1), ((2, 1, 1, 1), (1, 1), 1),
        ((1, 1, 1, 1, 1), (1, 1), 1),
    ],
    ((1,), (1, 1)): [
        ((2, 2), (1,), 1), ((2, 1, 1), (1,), 1), ((1, 1, 1, 1), (1,), 1),
    ],
    ((), (1, 1, 1)): [((1, 1, 1), (), 1)],
}
