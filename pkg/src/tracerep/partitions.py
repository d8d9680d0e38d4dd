"""Integer partitions, bipartitions, and Littlewood-Richardson combinatorics.

Partitions are stored as tuples of weakly decreasing positive integers;
the empty tuple is the zero partition.  The text grammar accepts
comma-separated parts ("3,2,1"), repetition sugar ("1^3"), and "0" for
the zero partition.  Bipartitions are rendered "plus|minus", e.g. "2,1|1".
"""

from fractions import Fraction
from functools import cache
from itertools import permutations, product
from typing import Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("0", ""):
            return cls()
        parts: list[int] = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if "^" in chunk:
                base, _, count = chunk.partition("^")
                parts.extend([int(base)] * int(count))
            else:
                parts.append(int(chunk))
        return cls(parts)

    def __str__(self) -> str:
        if not self:
            return "0"
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition('{self}')"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p > i) for i in range(self[0])
        )

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        if len(other) > len(self):
            return False
        return all(self[i] >= other[i] for i in range(len(other)))

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def hooks(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, col, hook length) for every cell, 0-based."""
        conj = self.conjugate()
        for r, row_len in enumerate(self):
            for c in range(row_len):
                yield r, c, (row_len - c) + (conj[c] - r) - 1


class Bipartition(NamedTuple):
    """A pair of partitions indexing a rational irreducible of GL(n)."""

    plus: Partition
    minus: Partition

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        plus, _, minus = text.partition("|")
        return cls(Partition.parse(plus), Partition.parse(minus or "0"))

    @classmethod
    def make(cls, plus, minus=()) -> "Bipartition":
        return cls(Partition(plus), Partition(minus))

    def __str__(self) -> str:
        return f"{self.plus}|{self.minus}"

    @property
    def size(self) -> int:
        return self.plus.size + self.minus.size

    @property
    def length(self) -> int:
        return len(self.plus) + len(self.minus)

    def dual(self) -> "Bipartition":
        return Bipartition(self.minus, self.plus)


class PairOfPartitions(NamedTuple):
    """An ordered pair of partitions, used to index contraction targets."""

    first: Partition
    second: Partition

    @classmethod
    def make(cls, first, second=()) -> "PairOfPartitions":
        return cls(Partition(first), Partition(second))

    def __str__(self) -> str:
        return f"({self.first};{self.second})"

    @property
    def size(self) -> int:
        return self.first.size + self.second.size


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts at most max_part, lexicographically descending."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


@cache
def _partitions_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    for k in range(n + 1):
        for plus in _partitions_list(k):
            for minus in _partitions_list(n - k):
                yield Bipartition(plus, minus)


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule
# ---------------------------------------------------------------------------
#
# lr_product enumerates Littlewood-Richardson tableaux as sequences of
# horizontal strips with the lattice-word condition: after placing the
# strips of entry <= v, the number of v's in rows 1..r never exceeds the
# number of (v-1)'s in rows 1..r-1.


def _horizontal_strips(shape: tuple[int, ...], size: int,
                       bound: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ways to add a horizontal strip of the given size to shape.

    bound caps row lengths (strip cells in row r must not exceed the
    previous shape's row r-1, which keeps columns strict).  Yields
    (new shape, per-row cell counts).
    """
    rows = len(shape) + 1

    def go(r: int, remaining: int, acc: list[int]) -> Iterator[list[int]]:
        if r == rows:
            if remaining == 0:
                yield acc
            return
        cur = shape[r] if r < len(shape) else 0
        # strip cells in row r live in columns cur..cap-1
        cap = bound[r - 1] if 0 < r <= len(bound) else (cur + remaining if r == 0 else 0)
        cap = max(cap, cur)
        hi = min(remaining, cap - cur)
        # row r must stay <= row r-1 after the addition
        if r > 0:
            prev = acc[r - 1] + (shape[r - 1] if r - 1 < len(shape) else 0)
            hi = min(hi, prev - cur)
        for add in range(hi, -1, -1):
            yield from go(r + 1, remaining - add, acc + [add])

    for counts in go(0, size, []):
        new_shape = tuple(
            (shape[r] if r < len(shape) else 0) + counts[r] for r in range(rows)
        )
        while new_shape and new_shape[-1] == 0:
            new_shape = new_shape[:-1]
        yield new_shape, tuple(counts)


@cache
def lr_product(lam: Partition, mu: Partition) -> dict:
    """Decompose the product of Schur functions s_lam * s_mu.

    Returns a dict mapping Partition nu to the coefficient N_{lam,mu}^nu.
    """
    lam, mu = Partition(lam), Partition(mu)
    result: dict[Partition, int] = {}

    # state: current shape, cumulative per-row counts of each entry so far
    def place(v: int, shape: tuple[int, ...], prev_counts: tuple[int, ...]):
        if v == len(mu):
            nu = Partition(shape)
            result[nu] = result.get(nu, 0) + 1
            return
        # cap: in row r (0-based), new strip cells cannot exceed the count of
        # entry v-1 (given by prev_counts) accumulated through row r-1
        for new_shape, counts in _horizontal_strips(shape, mu[v], shape):
            if v == 0:
                # entry 1 may only sit on top of lam, within lam's first row bound
                if len(new_shape) > len(lam) + 1:
                    continue
                ok = all(
                    counts[r] == 0 or r == 0 or
                    (new_shape[r] <= (lam[r - 1] if r - 1 < len(lam) else 0))
                    for r in range(len(counts))
                )
                if not ok:
                    continue
                place(1, new_shape, counts)
            else:
                run_v = 0
                run_prev = 0
                ok = True
                for r in range(len(counts)):
                    run_v += counts[r]
                    if run_v > run_prev:
                        ok = False
                        break
                    run_prev += prev_counts[r] if r < len(prev_counts) else 0
                if ok:
                    place(v + 1, new_shape, counts)

    if not mu:
        return {lam: 1}
    place(0, tuple(lam), ())
    return result


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient N_{lam,mu}^nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size:
        return 0
    return lr_product(lam, mu).get(nu, 0)


def _subshapes(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam."""
    if not lam:
        yield Partition()
        return
    def go(r: int, prev: int, acc: tuple[int, ...]):
        if r == len(lam):
            yield Partition(acc)
            return
        for p in range(min(lam[r], prev), -1, -1):
            yield from go(r + 1, p, acc + (p,))
    yield from go(0, lam[0], ())


@cache
def skew_schur(lam: Partition, kappa: Partition) -> dict:
    """Schur expansion of the skew Schur function s_{lam/kappa}.

    Returns a dict mapping Partition gamma to N_{kappa,gamma}^lam.
    """
    lam, kappa = Partition(lam), Partition(kappa)
    if not lam.contains(kappa):
        return {}
    out: dict[Partition, int] = {}
    for gamma in _partitions_list(lam.size - kappa.size):
        c = lr_coefficient(kappa, gamma, lam)
        if c:
            out[gamma] = c
    return out


@cache
def schur_coproduct(lam: Partition) -> tuple:
    """Splittings of s_lam: tuples (kappa, gamma, N_{kappa,gamma}^lam)."""
    lam = Partition(lam)
    out = []
    for kappa in _subshapes(lam):
        for gamma, c in skew_schur(lam, kappa).items():
            out.append((kappa, gamma, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# Symmetric group algebra and Young symmetrizers
# ---------------------------------------------------------------------------


class GroupAlgebraElement:
    """Sparse rational element of the group algebra of S_m.

    Permutations are tuples p of length m with p[i] = image of i (0-based).
    Multiplication is composition: (p*q)[i] = p[q[i]].
    """

    def __init__(self, m: int, terms: dict | None = None):
        self.m = m
        self.terms: dict[tuple, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                self.terms[tuple(perm)] = coeff

    @classmethod
    def identity(cls, m: int) -> "GroupAlgebraElement":
        return cls(m, {tuple(range(m)): 1})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        terms = dict(self.terms)
        for perm, c in other.terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + c
        return GroupAlgebraElement(self.m, terms)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            terms: dict[tuple, Fraction] = {}
            for p, cp in self.terms.items():
                for q, cq in other.terms.items():
                    r = tuple(p[q[i]] for i in range(self.m))
                    terms[r] = terms.get(r, Fraction(0)) + cp * cq
            return GroupAlgebraElement(self.m, terms)
        terms = {p: c * Fraction(other) for p, c in self.terms.items()}
        return GroupAlgebraElement(self.m, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and \
            self.m == other.m and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(m={self.m}, {len(self.terms)} terms)"


def _perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _subgroup_sum(m: int, blocks: list[list[int]], signed: bool) -> GroupAlgebraElement:
    """Sum over permutations preserving each block, optionally signed."""
    terms: dict[tuple, Fraction] = {}
    choices = [list(permutations(b)) for b in blocks]
    for combo in product(*choices):
        perm = list(range(m))
        for block, images in zip(blocks, combo):
            for src, dst in zip(block, images):
                perm[src] = dst
        perm = tuple(perm)
        terms[perm] = Fraction(_perm_sign(perm) if signed else 1)
    return GroupAlgebraElement(m, terms)


def young_symmetrizer(lam: Partition) -> GroupAlgebraElement:
    """The Young symmetrizer c_T = b_T * a_T for the row-filling tableau T.

    T fills 0..m-1 row by row; a_T symmetrizes rows, b_T antisymmetrizes
    columns, and the product is taken with b_T on the left.
    """
    lam = Partition(lam)
    m = lam.size
    rows: list[list[int]] = []
    k = 0
    for p in lam:
        rows.append(list(range(k, k + p)))
        k += p
    cols: list[list[int]] = []
    for c in range(lam[0] if lam else 0):
        col = [rows[r][c] for r in range(len(lam)) if c < lam[r]]
        cols.append(col)
    a = _subgroup_sum(m, rows, signed=False)
    b = _subgroup_sum(m, cols, signed=True)
    return b * a


# ---------------------------------------------------------------------------
# Partial order on pairs of partitions with fixed first length
# ---------------------------------------------------------------------------


def pair_partition_leq(small: PairOfPartitions, big: PairOfPartitions) -> bool:
    """Whether small <= big in the contraction order.

    Both pairs must have the same total size and the same length of the
    first partition.  big = (xi, eta) dominates small = (mu, nu) when
    xi_j >= mu_j for all j and there are sigma in S_l and a decomposition
    L_1 | ... | L_{l + len(eta)} of the parts of nu with
    xi_j - mu_{sigma(j)} = sum(nu_k, k in L_j) and
    eta_j = sum(nu_k, k in L_{l+j}).
    """
    mu, nu = Partition(small.first), Partition(small.second)
    xi, eta = Partition(big.first), Partition(big.second)
    if mu.size + nu.size != xi.size + eta.size or len(mu) != len(xi):
        raise ValueError("pairs must have equal total size and first length")
    l = len(mu)
    if any(xi[j] < mu[j] for j in range(l)):
        return False
    bins = l + len(eta)
    targets_eta = list(eta)
    for sigma in permutations(range(l)):
        deficits = [xi[j] - mu[sigma[j]] for j in range(l)]
        if any(d < 0 for d in deficits):
            continue
        targets = deficits + targets_eta

        def assign(k: int, remaining: list[int]) -> bool:
            if k == len(nu):
                return all(r == 0 for r in remaining)
            for b in range(bins):
                if remaining[b] >= nu[k]:
                    remaining[b] -= nu[k]
                    if assign(k + 1, remaining):
                        remaining[b] += nu[k]
                        return True
                    remaining[b] += nu[k]
            return False

        if assign(0, list(targets)):
            return True
    return False


def pairs_of_partitions(i: int, first_length: int | None = None) -> list[PairOfPartitions]:
    """All pairs of partitions of total size i, optionally with fixed l(first)."""
    out = []
    for k in range(i + 1):
        for first in _partitions_list(k):
            if first_length is not None and len(first) != first_length:
                continue
            for second in _partitions_list(i - k):
                out.append(PairOfPartitions(first, second))
    return out
