"""The representation ring of rational GL(n) representations, stably.

Irreducibles are indexed by bipartitions.  Tensor products follow the
stable rule of Koike, computed through Schur coproducts; exterior and
symmetric powers go through the product basis {V_alpha (x) V_(0,beta)},
which is a lambda-ring with Adams operations acting on two alphabets.

An independent cross-check path (charOracleDecompose) decomposes honest
finite-n characters by greedy highest-weight subtraction; it shares no
code with the Littlewood-Richardson route.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations

from .partitions import (
    Bipartition, Partition, _partitions_list, lr_product, schur_coproduct,
)
from .symfunc import SymFunc, power_to_schur, schur_to_power, z_order


class RepGL:
    """A finite multiset of bipartition-indexed irreducibles.

    Multiplicities are integers; virtual (negative) multiplicities are
    allowed internally but public results should be honest.
    valid_rank records the smallest n for which the stable answer is
    known to hold.
    """

    def __init__(self, components: dict | None = None, valid_rank: int = 0):
        self.components: dict[Bipartition, int] = {}
        for b, m in (components or {}).items():
            if m:
                self.components[b] = m
        self.valid_rank = max(
            [valid_rank] + [b.length for b in self.components]
        )

    @classmethod
    def irreducible(cls, plus, minus=(), mult: int = 1) -> "RepGL":
        return cls({Bipartition.make(plus, minus): mult})

    @classmethod
    def zero(cls) -> "RepGL":
        return cls()

    def __add__(self, other: "RepGL") -> "RepGL":
        comps = dict(self.components)
        for b, m in other.components.items():
            comps[b] = comps.get(b, 0) + m
        return RepGL(comps, max(self.valid_rank, other.valid_rank))

    def __sub__(self, other: "RepGL") -> "RepGL":
        comps = dict(self.components)
        for b, m in other.components.items():
            comps[b] = comps.get(b, 0) - m
        return RepGL(comps, max(self.valid_rank, other.valid_rank))

    def __mul__(self, k: int) -> "RepGL":
        return RepGL({b: m * k for b, m in self.components.items()},
                     self.valid_rank)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, RepGL) and self.components == other.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def mult(self, plus, minus=()) -> int:
        return self.components.get(Bipartition.make(plus, minus), 0)

    def total_mult(self) -> int:
        return sum(self.components.values())

    def is_honest(self) -> bool:
        return all(m > 0 for m in self.components.values())

    def sorted_components(self) -> list[tuple[Bipartition, int]]:
        return sorted(self.components.items(),
                      key=lambda it: (tuple(it[0].plus), tuple(it[0].minus)))

    def to_json(self) -> dict:
        return {
            "components": [
                {"plus": str(b.plus), "minus": str(b.minus), "mult": m}
                for b, m in self.sorted_components()
            ],
            "minimal_rank": self.valid_rank,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RepGL":
        comps = {
            Bipartition(Partition.parse(c["plus"]), Partition.parse(c["minus"])):
                c["mult"]
            for c in data["components"]
        }
        return cls(comps, data.get("minimal_rank", 0))

    def dimension(self, n: int) -> int:
        return sum(m * dimension(b, n) for b, m in self.components.items())

    def __repr__(self) -> str:
        if not self.components:
            return "RepGL(0)"
        bits = [f"{m}*V[{b}]" for b, m in self.sorted_components()]
        return " + ".join(bits)


@cache
def _coproduct_by_first(lam: Partition) -> dict:
    """Coproduct terms of s_lam grouped by the first tensor factor."""
    out: dict[Partition, list] = {}
    for kappa, gamma, c in schur_coproduct(lam):
        out.setdefault(kappa, []).append((gamma, c))
    return out


@cache
def koike_irreducible(a: Bipartition, b: Bipartition) -> tuple:
    """Stable tensor product of two irreducibles; ((bipartition, mult), ...)."""
    out: dict[Bipartition, int] = {}
    left_plus = _coproduct_by_first(a.plus)
    left_minus = _coproduct_by_first(a.minus)
    right_plus = _coproduct_by_first(b.plus)
    right_minus = _coproduct_by_first(b.minus)
    for kappa, alphas in left_plus.items():
        betas = right_minus.get(kappa)
        if not betas:
            continue
        for eps, thetas in left_minus.items():
            deltas = right_plus.get(eps)
            if not deltas:
                continue
            for alpha, c1 in alphas:
                for delta, c4 in deltas:
                    plus_terms = lr_product(alpha, delta)
                    for beta, c2 in betas:
                        for theta, c3 in thetas:
                            c = c1 * c2 * c3 * c4
                            minus_terms = lr_product(beta, theta)
                            for nup, c5 in plus_terms.items():
                                for num, c6 in minus_terms.items():
                                    key = Bipartition(nup, num)
                                    out[key] = out.get(key, 0) + c * c5 * c6
    return tuple(sorted(out.items()))


def koike_tensor(r1: RepGL, r2: RepGL) -> RepGL:
    """Stable tensor product of stable representations."""
    comps: dict[Bipartition, int] = {}
    rank = max(r1.valid_rank, r2.valid_rank)
    for a, ma in r1.components.items():
        for b, mb in r2.components.items():
            rank = max(rank, a.length + b.length)
            for nu, c in koike_irreducible(a, b):
                comps[nu] = comps.get(nu, 0) + ma * mb * c
    return RepGL(comps, rank)


def traceless_filter(rep: RepGL, full_size: int) -> RepGL:
    """Keep only the components of full size (the traceless part of a
    tensor product of traceless representations)."""
    return RepGL(
        {b: m for b, m in rep.components.items() if b.size == full_size},
        rep.valid_rank,
    )


def restrict(rep: RepGL, n: int) -> RepGL:
    """Discard components that vanish on GL(n) (length exceeding n)."""
    return RepGL({b: m for b, m in rep.components.items() if b.length <= n})


# ---------------------------------------------------------------------------
# Product basis and lambda-ring powers
# ---------------------------------------------------------------------------
#
# The product basis consists of V_alpha (x) V_(0,beta) for pairs of
# partitions.  Expanding a product-basis element into irreducibles is
# unitriangular with respect to total size, so the change of basis can be
# inverted by descending size.


def expand_product_pair(alpha: Partition, beta: Partition) -> RepGL:
    """Irreducible decomposition of V_alpha (x) V_(0,beta)."""
    return koike_tensor(RepGL.irreducible(alpha), RepGL.irreducible((), beta))


@cache
def _irreducible_to_product(b: Bipartition) -> tuple:
    """Coordinates of the irreducible V_b in the product basis."""
    out: dict[tuple, int] = {(b.plus, b.minus): 1}
    expansion = expand_product_pair(b.plus, b.minus)
    for c, m in expansion.components.items():
        if c == b:
            continue
        for pair, k in _irreducible_to_product(c):
            out[pair] = out.get(pair, 0) - m * k
            if not out[pair]:
                del out[pair]
    return tuple(sorted(out.items()))


def to_product_basis(rep: RepGL) -> dict:
    """Product-basis coordinates {(alpha, beta): mult} of a representation."""
    out: dict[tuple, int] = {}
    for b, m in rep.components.items():
        for pair, k in _irreducible_to_product(b):
            out[pair] = out.get(pair, 0) + m * k
            if not out[pair]:
                del out[pair]
    return out


def from_product_basis(coords: dict, valid_rank: int = 0) -> RepGL:
    """Inverse of to_product_basis."""
    total = RepGL({}, valid_rank)
    for (alpha, beta), m in coords.items():
        total = total + expand_product_pair(Partition(alpha), Partition(beta)) * m
    return total


def _pairs_to_power(coords: dict) -> dict:
    """Two-alphabet power-sum coordinates {(rho, sigma): Fraction}."""
    out: dict[tuple, Fraction] = {}
    for (alpha, beta), m in coords.items():
        for rho, c1 in schur_to_power(Partition(alpha)):
            for sigma, c2 in schur_to_power(Partition(beta)):
                key = (rho, sigma)
                w = out.get(key, Fraction(0)) + m * c1 * c2
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
    return out


def _pairs_from_power(pd: dict) -> dict:
    out: dict[tuple, Fraction] = {}
    for (rho, sigma), c in pd.items():
        for alpha, x1 in power_to_schur(rho):
            for beta, x2 in power_to_schur(sigma):
                key = (alpha, beta)
                w = out.get(key, Fraction(0)) + c * x1 * x2
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
    return out


def _ppair_mul(a: dict, b: dict) -> dict:
    out: dict[tuple, Fraction] = {}
    for (r1, s1), c1 in a.items():
        for (r2, s2), c2 in b.items():
            key = (Partition(sorted(r1 + r2, reverse=True)),
                   Partition(sorted(s1 + s2, reverse=True)))
            w = out.get(key, Fraction(0)) + c1 * c2
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def power(rep: RepGL, k: int, kind: str) -> RepGL:
    """Exterior ("alternating") or symmetric power of a stable representation.

    Computed in the product basis, where Adams operations act on both
    alphabets simultaneously.
    """
    if kind not in ("alternating", "symmetric"):
        raise ValueError("kind must be 'alternating' or 'symmetric'")
    if k == 0:
        return RepGL.irreducible((), ())
    base = _pairs_to_power(to_product_basis(rep))

    def adams(r: int) -> dict:
        return {
            (Partition(tuple(r * x for x in rho)),
             Partition(tuple(r * x for x in sigma))): c
            for (rho, sigma), c in base.items()
        }

    out: dict[tuple, Fraction] = {}
    for rho in _partitions_list(k):
        coef = Fraction(1, z_order(rho))
        if kind == "alternating":
            coef *= (-1) ** (k - len(rho))
        term: dict[tuple, Fraction] = {(Partition(), Partition()): Fraction(1)}
        for r in rho:
            term = _ppair_mul(term, adams(r))
        for key, c in term.items():
            w = out.get(key, Fraction(0)) + coef * c
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    coords: dict[tuple, int] = {}
    for pair, c in _pairs_from_power(out).items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {c} at {pair}")
        if c:
            coords[pair] = int(c)
    max_len = max([0] + [b.length for b in rep.components])
    return from_product_basis(coords, valid_rank=k * max_len)


# ---------------------------------------------------------------------------
# The representation wedge^i(wedge^2 H (x) H*) via plethysm
# ---------------------------------------------------------------------------


def u_rep() -> RepGL:
    """wedge^2 H (x) H* = V_(1,1),(1) + V_(1),(0)."""
    return RepGL.irreducible((1, 1), (1,)) + RepGL.irreducible((1,))


from .symfunc import plethysm as _sf_plethysm


def wedge_u(i: int) -> RepGL:
    """Decomposition of wedge^i (wedge^2 H (x) H*).

    Uses the Cauchy-type expansion: the sum over lam of i of
    S_lam(wedge^2 H) (x) S_{lam'}(H^*).
    """
    total = RepGL.zero()
    for lam in _partitions_list(i):
        poly = _sf_plethysm(SymFunc.schur(lam), SymFunc.schur((1, 1)))
        plus_part = RepGL({Bipartition.make(g, ()): int(c)
                           for g, c in poly.terms.items()})
        minus_part = RepGL.irreducible((), lam.conjugate())
        total = total + koike_tensor(plus_part, minus_part)
    total.valid_rank = max(total.valid_rank, 3 * i)
    return total


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------


def det_twist(b: Bipartition, n: int) -> tuple[Partition, int]:
    """Write V_b on GL(n) as V_mu (x) det^(-k) with mu a partition, k >= 0."""
    if b.length > n:
        raise ValueError(f"bipartition {b} needs rank at least {b.length}")
    k = b.minus[0] if b.minus else 0
    weight = [0] * n
    for i, p in enumerate(b.plus):
        weight[i] = p
    for j, p in enumerate(b.minus):
        weight[n - 1 - j] = -p
    return Partition(tuple(w + k for w in weight)), k


def dimension(b: Bipartition, n: int) -> int:
    """Dimension of the irreducible V_b on GL(n), by hook content."""
    b = Bipartition.make(b.plus, b.minus) if isinstance(b, Bipartition) else b
    if b.length > n:
        return 0
    mu, _ = det_twist(b, n)
    num, den = 1, 1
    for r, c, hook in mu.hooks():
        num *= n + c - r
        den *= hook
    assert num % den == 0
    return num // den


def dimension_polynomial(b: Bipartition) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial n -> dim V_b(n)."""
    d = b.size
    base = b.length
    xs = list(range(base, base + d + 1))
    ys = [Fraction(dimension(b, n)) for n in xs]
    # Newton interpolation
    coeffs = list(ys)
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # expand to monomial coefficients
    poly = [Fraction(0)] * (d + 1)
    acc = [Fraction(1)]  # product (x - x_0)...(x - x_{j-1})
    for j, c in enumerate(coeffs):
        for t, a in enumerate(acc):
            poly[t] += c * a
        new = [Fraction(0)] * (len(acc) + 1)
        for t, a in enumerate(acc):
            new[t] -= a * xs[j]
            new[t + 1] += a
        acc = new
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


# ---------------------------------------------------------------------------
# Character oracle: honest finite-n characters, greedy decomposition
# ---------------------------------------------------------------------------


@cache
def _schur_weights(mu: Partition, n: int) -> dict:
    """Monomial expansion of s_mu(x_1..x_n): {exponent tuple: mult}.

    Recursive branching: strip the last variable.
    """
    mu = Partition(mu)
    if len(mu) > n:
        return {}
    if n == 0:
        return {(): 1}
    out: dict[tuple, int] = {}
    for nu in _interleavings(mu):
        sub = _schur_weights(nu, n - 1)
        k = mu.size - nu.size
        for w, m in sub.items():
            key = w + (k,)
            out[key] = out.get(key, 0) + m
    return out


def _interleavings(mu: Partition):
    """Partitions nu with mu_{i+1} <= nu_i <= mu_i."""
    if not mu:
        yield Partition()
        return

    def go(i: int, acc: tuple):
        if i == len(mu):
            yield Partition(acc)
            return
        lo = mu[i + 1] if i + 1 < len(mu) else 0
        for v in range(mu[i], lo - 1, -1):
            yield from go(i + 1, acc + (v,))

    yield from go(0, ())


def char_weights(b: Bipartition, n: int) -> dict:
    """Weight multiplicities of the irreducible V_b on GL(n)."""
    mu, k = det_twist(b, n)
    return {tuple(x - k for x in w): m for w, m in _schur_weights(mu, n).items()}


def char_multiply(a: dict, b: dict) -> dict:
    out: dict[tuple, int] = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return out


def char_power(a: dict, k: int, kind: str) -> dict:
    """Character of the k-th exterior or symmetric power, from the weight list."""
    weights: list[tuple] = []
    for w, m in a.items():
        if m < 0:
            raise ValueError("character powers need honest characters")
        weights.extend([w] * m)
    out: dict[tuple, int] = {}
    if kind == "alternating":
        pool = combinations(range(len(weights)), k)
    elif kind == "symmetric":
        from itertools import combinations_with_replacement
        pool = combinations_with_replacement(range(len(weights)), k)
    else:
        raise ValueError("kind must be 'alternating' or 'symmetric'")
    for idxs in pool:
        w = tuple(sum(weights[i][j] for i in idxs) for j in range(len(weights[0])))
        out[w] = out.get(w, 0) + 1
    return out


def _dominant_bipartition(w: tuple) -> Bipartition:
    plus = Partition(tuple(x for x in w if x > 0))
    minus = Partition(tuple(-x for x in reversed(w) if x < 0))
    return Bipartition(plus, minus)


def char_oracle_decompose(char: dict, n: int) -> RepGL:
    """Decompose a finite-n character by greedy highest-weight subtraction.

    The input is a weight-multiplicity dict; the output multiplicities are
    exact.  Raises if the input is not a genuine character.
    """
    remaining = {w: m for w, m in char.items() if m}
    comps: dict[Bipartition, int] = {}
    while remaining:
        w = max(remaining)
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ArithmeticError(f"highest remaining weight {w} not dominant")
        m = remaining[w]
        if m < 0:
            raise ArithmeticError(f"negative multiplicity {m} at weight {w}")
        b = _dominant_bipartition(w)
        comps[b] = m
        for w2, m2 in char_weights(b, n).items():
            new = remaining.get(w2, 0) - m * m2
            if new:
                remaining[w2] = new
            else:
                remaining.pop(w2, None)
    return RepGL(comps)
