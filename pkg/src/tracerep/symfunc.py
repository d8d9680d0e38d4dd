"""Symmetric functions in the Schur and power-sum bases, and truncated series.

All coefficients are exact rationals.  Heavy series arithmetic (products,
plethystic exponentials) runs in the power-sum basis, where multiplication
is concatenation of partitions; Schur expansions are produced on demand
through symmetric group characters.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import Partition, lr_product, _partitions_list

PDict = dict  # Partition -> Fraction, power-sum coordinates


@cache
def _beta_numbers(lam: Partition) -> tuple[int, ...]:
    m = len(lam)
    return tuple(lam[i] + (m - 1 - i) for i in range(m))


@cache
def sym_character(lam: Partition, rho: Partition) -> int:
    """The symmetric group character chi^lam(rho), by Murnaghan-Nakayama.

    Border strips are removed through the beta-number model: removing a
    strip of size r replaces a beta number b by b - r.
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("partition sizes must agree")
    if not rho:
        return 1
    r, rest = rho[0], Partition(rho[1:])
    betas = list(_beta_numbers(lam))
    bset = set(betas)
    total = 0
    for idx, b in enumerate(betas):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new = sorted(betas, reverse=True)
        new.remove(b)
        new.append(nb)
        new.sort(reverse=True)
        m = len(new)
        parts = [new[i] - (m - 1 - i) for i in range(m)]
        total += (-1) ** height * sym_character(Partition(parts), rest)
    return total


@cache
def z_order(rho: Partition) -> int:
    """The centralizer order z_rho."""
    out = 1
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for k, m in mult.items():
        out *= factorial(m) * k ** m
    return out


@cache
def schur_to_power(lam: Partition) -> tuple:
    """Power-sum coordinates of s_lam as ((rho, Fraction), ...)."""
    lam = Partition(lam)
    out = []
    for rho in _partitions_list(lam.size):
        chi = sym_character(lam, rho)
        if chi:
            out.append((rho, Fraction(chi, z_order(rho))))
    return tuple(out)


@cache
def power_to_schur(rho: Partition) -> tuple:
    """Schur coordinates of p_rho as ((lam, int), ...)."""
    rho = Partition(rho)
    out = []
    for lam in _partitions_list(rho.size):
        chi = sym_character(lam, rho)
        if chi:
            out.append((lam, chi))
    return tuple(out)


def _pd_add(a: PDict, b: PDict, scale: Fraction = Fraction(1)) -> PDict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, Fraction(0)) + v * scale
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _pd_mul(a: PDict, b: PDict) -> PDict:
    out: PDict = {}
    for p, cp in a.items():
        for q, cq in b.items():
            r = Partition(sorted(p + q, reverse=True))
            w = out.get(r, Fraction(0)) + cp * cq
            if w:
                out[r] = w
            elif r in out:
                del out[r]
    return out


def _pd_adams(a: PDict, r: int) -> PDict:
    """p_r plethysm: every variable to the r-th power."""
    return {Partition(tuple(r * x for x in p)): c for p, c in a.items()}


class SymFunc:
    """A symmetric function with rational coefficients, Schur coordinates."""

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[Partition(lam)] = c

    @classmethod
    def schur(cls, lam) -> "SymFunc":
        return cls({Partition(lam): 1})

    @classmethod
    def h(cls, n: int) -> "SymFunc":
        """Complete homogeneous h_n."""
        if n < 0:
            return cls()
        return cls.schur((n,) if n else ())

    @classmethod
    def e(cls, n: int) -> "SymFunc":
        """Elementary e_n."""
        if n < 0:
            return cls()
        return cls.schur((1,) * n)

    @classmethod
    def one(cls) -> "SymFunc":
        return cls.schur(())

    @classmethod
    def from_power(cls, pd: PDict) -> "SymFunc":
        terms: dict[Partition, Fraction] = {}
        for rho, c in pd.items():
            for lam, chi in power_to_schur(rho):
                w = terms.get(lam, Fraction(0)) + c * chi
                if w:
                    terms[lam] = w
                elif lam in terms:
                    del terms[lam]
        return cls(terms)

    def to_power(self) -> PDict:
        pd: PDict = {}
        for lam, c in self.terms.items():
            for rho, coef in schur_to_power(lam):
                w = pd.get(rho, Fraction(0)) + c * coef
                if w:
                    pd[rho] = w
                elif rho in pd:
                    del pd[rho]
        return pd

    def __add__(self, other: "SymFunc") -> "SymFunc":
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymFunc(terms)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return schur_multiply(self, other)
        return SymFunc({lam: c * Fraction(other) for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        bits = [f"{c}*s[{lam}]" for lam, c in sorted(self.terms.items())]
        return " + ".join(bits)


def schur_multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of symmetric functions via Littlewood-Richardson."""
    terms: dict[Partition, Fraction] = {}
    for lam, cf in f.terms.items():
        for mu, cg in g.terms.items():
            for nu, n in lr_product(lam, mu).items():
                w = terms.get(nu, Fraction(0)) + cf * cg * n
                if w:
                    terms[nu] = w
                elif nu in terms:
                    del terms[nu]
    return SymFunc(terms)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """The plethysm f[g], computed through power sums."""
    gp = g.to_power()
    adams_cache: dict[int, PDict] = {}

    def adams(r: int) -> PDict:
        if r not in adams_cache:
            adams_cache[r] = _pd_adams(gp, r)
        return adams_cache[r]

    out: PDict = {}
    for rho, c in f.to_power().items():
        term: PDict = {Partition(): Fraction(1)}
        for r in rho:
            term = _pd_mul(term, adams(r))
        out = _pd_add(out, term, c)
    return SymFunc.from_power(out)


def omega_sign(f: SymFunc) -> SymFunc:
    """The involution sending p_n to -p_n; on Schur terms s_lam maps
    to (-1)^|lam| times s_{lam'}."""
    return SymFunc({
        lam.conjugate(): c * (-1) ** lam.size for lam, c in f.terms.items()
    })


def omega_classical(f: SymFunc) -> SymFunc:
    """The standard involution s_lam -> s_{lam'} (h_n -> e_n)."""
    return SymFunc({lam.conjugate(): c for lam, c in f.terms.items()})


# ---------------------------------------------------------------------------
# Truncated series with symmetric function coefficients
# ---------------------------------------------------------------------------

GL_SCHUR = "gl-schur"
SP_SCHUR = "sp-schur"

DEFAULT_TRUNCATION = 8


class SymSeries:
    """A power series in t with symmetric function coefficients, truncated.

    Coefficients live in the power-sum basis internally.  The flavor tag
    records whether Schur coordinates should be read as GL or (relabeled)
    Sp highest weights; relabeling is pure bookkeeping and all arithmetic
    is flavor-agnostic.
    """

    def __init__(self, coeffs: dict | None = None, maxdeg: int = DEFAULT_TRUNCATION,
                 flavor: str = GL_SCHUR):
        self.maxdeg = maxdeg
        self.flavor = flavor
        self.pcoeffs: dict[int, PDict] = {}
        for q, val in (coeffs or {}).items():
            if q > maxdeg:
                continue
            pd = val.to_power() if isinstance(val, SymFunc) else dict(val)
            if pd:
                self.pcoeffs[q] = pd

    @classmethod
    def _raw(cls, pcoeffs: dict, maxdeg: int, flavor: str) -> "SymSeries":
        s = cls(maxdeg=maxdeg, flavor=flavor)
        s.pcoeffs = {q: pd for q, pd in pcoeffs.items() if pd and q <= maxdeg}
        return s

    def coefficient(self, q: int) -> SymFunc:
        return SymFunc.from_power(self.pcoeffs.get(q, {}))

    def pcoefficient(self, q: int) -> PDict:
        return dict(self.pcoeffs.get(q, {}))

    def trivial_coefficient(self, q: int) -> Fraction:
        """Coefficient of the trivial (empty) partition in degree q."""
        return self.pcoeffs.get(q, {}).get(Partition(), Fraction(0))

    def __add__(self, other: "SymSeries") -> "SymSeries":
        maxdeg = min(self.maxdeg, other.maxdeg)
        out = {q: dict(pd) for q, pd in self.pcoeffs.items() if q <= maxdeg}
        for q, pd in other.pcoeffs.items():
            if q <= maxdeg:
                out[q] = _pd_add(out.get(q, {}), pd)
        return SymSeries._raw(out, maxdeg, self.flavor)

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            maxdeg = min(self.maxdeg, other.maxdeg)
            out: dict[int, PDict] = {}
            for qa, pa in self.pcoeffs.items():
                for qb, pb in other.pcoeffs.items():
                    q = qa + qb
                    if q > maxdeg:
                        continue
                    out[q] = _pd_add(out.get(q, {}), _pd_mul(pa, pb))
            return SymSeries._raw(out, maxdeg, self.flavor)
        c = Fraction(other)
        out = {q: {p: v * c for p, v in pd.items()} for q, pd in self.pcoeffs.items()}
        return SymSeries._raw(out, self.maxdeg, self.flavor) if c else \
            SymSeries(maxdeg=self.maxdeg, flavor=self.flavor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        maxdeg = min(self.maxdeg, other.maxdeg)
        for q in range(maxdeg + 1):
            if self.pcoeffs.get(q, {}) != other.pcoeffs.get(q, {}):
                return False
        return True

    def omega(self) -> "SymSeries":
        out = {
            q: {p: c * (-1) ** len(p) for p, c in pd.items()}
            for q, pd in self.pcoeffs.items()
        }
        return SymSeries._raw(out, self.maxdeg, self.flavor)

    def adams(self, r: int) -> "SymSeries":
        out: dict[int, PDict] = {}
        for q, pd in self.pcoeffs.items():
            if q * r <= self.maxdeg:
                out[q * r] = _pd_adams(pd, r)
        return SymSeries._raw(out, self.maxdeg, self.flavor)

    def d_relabel(self) -> "SymSeries":
        """Flip the flavor tag between GL and Sp Schur labels."""
        flavor = SP_SCHUR if self.flavor == GL_SCHUR else GL_SCHUR
        return SymSeries._raw({q: dict(pd) for q, pd in self.pcoeffs.items()},
                              self.maxdeg, flavor)

    def skew_by_p1(self) -> "SymSeries":
        """Apply the skewing operator p_1-perp (d/dp_1) coefficient-wise."""
        out: dict[int, PDict] = {}
        for q, pd in self.pcoeffs.items():
            npd: PDict = {}
            for rho, c in pd.items():
                ones = sum(1 for x in rho if x == 1)
                if ones:
                    lst = list(rho)
                    lst.remove(1)
                    smaller = Partition(lst)
                    npd[smaller] = npd.get(smaller, Fraction(0)) + c * ones
            if npd:
                out[q] = npd
        return SymSeries._raw(out, self.maxdeg, self.flavor)

    def to_json(self) -> dict:
        series = []
        for q in sorted(self.pcoeffs):
            f = self.coefficient(q)
            terms = [
                {"partition": str(lam), "coeff_num": c.numerator,
                 "coeff_den": c.denominator}
                for lam, c in sorted(f.terms.items())
            ]
            if terms:
                series.append({"degree": q, "terms": terms})
        return {"flavor": self.flavor, "max_degree": self.maxdeg, "series": series}

    def __repr__(self) -> str:
        degs = sorted(self.pcoeffs)
        return f"SymSeries(flavor={self.flavor}, maxdeg={self.maxdeg}, degrees={degs})"


def sym_series_scalar(values: dict[int, Fraction], maxdeg: int,
                      flavor: str = GL_SCHUR) -> SymSeries:
    """Series with scalar coefficients (multiples of the empty partition)."""
    out = {q: {Partition(): Fraction(v)} for q, v in values.items() if v and q <= maxdeg}
    return SymSeries._raw(out, maxdeg, flavor)


def exp_series(f: SymSeries) -> SymSeries:
    """The plethystic exponential Exp(f) = sum_q h_q[f].

    Requires f to have no constant term in t.
    """
    if 0 in f.pcoeffs:
        raise ValueError("Exp needs a series with zero constant term")
    maxdeg = f.maxdeg
    # log form: Exp(f) = exp(sum_r p_r[f]/r)
    g = SymSeries(maxdeg=maxdeg, flavor=f.flavor)
    for r in range(1, maxdeg + 1):
        g = g + f.adams(r) * Fraction(1, r)
    out = sym_series_scalar({0: Fraction(1)}, maxdeg, f.flavor)
    term = sym_series_scalar({0: Fraction(1)}, maxdeg, f.flavor)
    for k in range(1, maxdeg + 1):
        term = term * g * Fraction(1, k)
        out = out + term
    return out


def L_series(maxdeg: int = DEFAULT_TRUNCATION) -> SymSeries:
    """L(t) = sum_{q>=1} (sum_{r>=0} h_{q+2-2r}) t^q, including h_0 terms."""
    coeffs: dict[int, SymFunc] = {}
    for q in range(1, maxdeg + 1):
        f = SymFunc()
        k = q + 2
        while k >= 0:
            f = f + SymFunc.h(k)
            k -= 2
        coeffs[q] = f
    return SymSeries(coeffs, maxdeg=maxdeg, flavor=GL_SCHUR)


def ch_graded(pieces: dict[int, SymFunc], maxdeg: int = DEFAULT_TRUNCATION,
              flavor: str = GL_SCHUR) -> SymSeries:
    """Alternating character series sum_q (-t)^q ch(M_q)."""
    coeffs = {q: f * Fraction((-1) ** q) for q, f in pieces.items()}
    return SymSeries(coeffs, maxdeg=maxdeg, flavor=flavor)
