"""Stable representations of the symplectic groups Sp(2g).

Irreducibles are indexed by single partitions; stable tensor products are
governed by Newell-Littlewood coefficients, which reduce to
Littlewood-Richardson data through Schur coproducts.
"""

from fractions import Fraction
from functools import cache

from .partitions import Partition, lr_product, lr_coefficient, schur_coproduct
from .glrep import _coproduct_by_first


class RepSp:
    """A finite multiset of partition-indexed symplectic irreducibles."""

    def __init__(self, components: dict | None = None, valid_rank: int = 0):
        self.components: dict[Partition, int] = {}
        for lam, m in (components or {}).items():
            if m:
                self.components[Partition(lam)] = m
        self.valid_rank = max(
            [valid_rank] + [len(lam) for lam in self.components]
        )

    @classmethod
    def irreducible(cls, lam, mult: int = 1) -> "RepSp":
        return cls({Partition(lam): mult})

    def __add__(self, other: "RepSp") -> "RepSp":
        comps = dict(self.components)
        for lam, m in other.components.items():
            comps[lam] = comps.get(lam, 0) + m
        return RepSp(comps, max(self.valid_rank, other.valid_rank))

    def __sub__(self, other: "RepSp") -> "RepSp":
        comps = dict(self.components)
        for lam, m in other.components.items():
            comps[lam] = comps.get(lam, 0) - m
        return RepSp(comps, max(self.valid_rank, other.valid_rank))

    def __eq__(self, other) -> bool:
        return isinstance(other, RepSp) and self.components == other.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def mult(self, lam) -> int:
        return self.components.get(Partition(lam), 0)

    def restrict(self, g: int) -> "RepSp":
        """Discard components vanishing on Sp(2g)."""
        return RepSp({lam: m for lam, m in self.components.items()
                      if len(lam) <= g})

    def dimension(self, g: int) -> int:
        return sum(m * sp_dimension(lam, g)
                   for lam, m in self.components.items())

    def sorted_components(self) -> list[tuple[Partition, int]]:
        return sorted(self.components.items())

    def to_json(self) -> dict:
        return {
            "components": [
                {"partition": str(lam), "mult": m}
                for lam, m in self.sorted_components()
            ],
            "minimal_rank": self.valid_rank,
        }

    def __repr__(self) -> str:
        if not self.components:
            return "RepSp(0)"
        return " + ".join(f"{m}*Vsp[{lam}]" for lam, m in self.sorted_components())


@cache
def nl_product_irreducible(lam: Partition, mu: Partition) -> tuple:
    """Newell-Littlewood product of two symplectic irreducibles."""
    out: dict[Partition, int] = {}
    left = _coproduct_by_first(lam)
    right = _coproduct_by_first(mu)
    for zeta, sigmas in left.items():
        taus = right.get(zeta)
        if not taus:
            continue
        for sigma, c1 in sigmas:
            for tau, c2 in taus:
                for nu, c3 in lr_product(sigma, tau).items():
                    out[nu] = out.get(nu, 0) + c1 * c2 * c3
    return tuple(sorted(out.items()))


def nl_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Newell-Littlewood coefficient for V_lam (x) V_mu -> V_nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return dict(nl_product_irreducible(lam, mu)).get(nu, 0)


def nl_product(r1: RepSp, r2: RepSp) -> RepSp:
    comps: dict[Partition, int] = {}
    rank = max(r1.valid_rank, r2.valid_rank)
    for lam, m1 in r1.components.items():
        for mu, m2 in r2.components.items():
            rank = max(rank, len(lam) + len(mu))
            for nu, c in nl_product_irreducible(lam, mu):
                comps[nu] = comps.get(nu, 0) + m1 * m2 * c
    return RepSp(comps, rank)


def wedge_h_sp(k: int, g: int | None = None) -> RepSp:
    """wedge^k H as a symplectic representation: sum over r of V_{1^(k-2r)}."""
    comps: dict[Partition, int] = {}
    j = k
    while j >= 0:
        comps[Partition((1,) * j)] = 1
        j -= 2
    rep = RepSp(comps)
    return rep.restrict(g) if g is not None else rep


def sp_dimension(lam: Partition, g: int) -> int:
    """Weyl dimension formula for Sp(2g)."""
    lam = Partition(lam)
    if len(lam) > g:
        return 0
    l = [lam.part(i) + g - i for i in range(g)]
    rho = [g - i for i in range(g)]
    num, den = 1, 1
    for i in range(g):
        num *= l[i]
        den *= rho[i]
        for j in range(i + 1, g):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    assert num % den == 0
    return num // den
