"""Exact Laurent-polynomial arithmetic in one variable v, quantum integers,
factorials and binomials, and cyclotomic specialization at a primitive
ell-th root of unity.

Quantum integers follow the balanced convention

    [n]_d = (v^{nd} - v^{-nd}) / (v^d - v^{-d}),

with [n]_d! the product of [s]_d for s = 1..n, and the binomial

    [n over t]_d = prod_{s=1}^{t} (v^{d(n-s+1)} - v^{-d(n-s+1)}) / (v^{ds} - v^{-ds})

defined for any integer n and natural t.  All divisions are exact in
Z[v, v^-1] and are verified at runtime.

Specialization sends v to a primitive ell-th root of unity exactly, by
reducing modulo the ell-th cyclotomic polynomial; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class LaurentPoly:
    """Integer Laurent polynomial in v, stored as {exponent: coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean = {e: c for e, c in (coeffs or {}).items() if c}
        object.__setattr__(self, "coeffs", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: other * c for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- queries -----------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(str(c))
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _dense(p: LaurentPoly) -> tuple[list[int], int]:
    """Coefficient list and shift so that p = v^shift * sum coeffs[i] v^i."""
    if not p.coeffs:
        return [0], 0
    lo, hi = p.min_exp(), p.max_exp()
    out = [0] * (hi - lo + 1)
    for e, c in p.coeffs.items():
        out[e - lo] = c
    return out, lo


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient in Z[v, v^-1]; raises if the division leaves a remainder."""
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num:
        return LaurentPoly.zero()
    ncoeffs, nshift = _dense(num)
    dcoeffs, dshift = _dense(den)
    lead = dcoeffs[-1]
    quot = [0] * (len(ncoeffs) - len(dcoeffs) + 1)
    rem = list(ncoeffs)
    for i in range(len(quot) - 1, -1, -1):
        q, r = divmod(rem[i + len(dcoeffs) - 1], lead)
        if r:
            raise ArithmeticError("Laurent division is not exact")
        quot[i] = q
        if q:
            for j, dc in enumerate(dcoeffs):
                rem[i + j] -= q * dc
    if any(rem):
        raise ArithmeticError("Laurent division is not exact")
    shift = nshift - dshift
    return LaurentPoly({i + shift: c for i, c in enumerate(quot) if c})


def qint(n: int, d: int = 1) -> LaurentPoly:
    """The quantum integer [n]_d; [-n]_d = -[n]_d and [0]_d = 0."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -qint(-n, d)
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


def qfact(n: int, d: int = 1) -> LaurentPoly:
    """The quantum factorial [n]_d! for n >= 0."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    out = LaurentPoly.one()
    for s in range(1, n + 1):
        out = out * qint(s, d)
    return out


def qbinom(n: int, t: int, d: int = 1) -> LaurentPoly:
    """The quantum binomial [n over t]_d for any integer n and natural t.

    Computed from the product formula: the numerator is the product of
    [n - s + 1]_d over s = 1..t and the denominator is [t]_d!; the division
    is exact and checked.
    """
    if t < 0:
        raise ValueError("t must be a natural number")
    if d < 1:
        raise ValueError("d must be a positive integer")
    if t == 0:
        return LaurentPoly.one()
    num = LaurentPoly.one()
    for s in range(1, t + 1):
        factor = qint(n - s + 1, d)
        if not factor:
            return LaurentPoly.zero()
        num = num * factor
    return exact_div(num, qfact(t, d))


# -- cyclotomic specialization ----------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(ell: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the ell-th cyclotomic polynomial.

    Computed by exact division of v^ell - 1 by the cyclotomic polynomials of
    the proper divisors of ell.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    num = [-1] + [0] * (ell - 1) + [1]
    for dvs in range(1, ell):
        if ell % dvs == 0:
            num = _poly_div_exact(num, list(cyclotomic(dvs)))
    return tuple(num)


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        q, r = divmod(rem[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("polynomial division not exact")
        quot[i] = q
        for j, dc in enumerate(den):
            rem[i + j] -= q * dc
    if any(rem):
        raise ArithmeticError("polynomial division not exact")
    return quot


@dataclass(frozen=True)
class CycNumber:
    """Residue modulo the ell-th cyclotomic polynomial.

    coeffs holds the unique representative of degree < phi(ell), ascending.
    v is invertible in this ring (v^{ell-1} represents its inverse).
    """

    ell: int
    coeffs: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return f"CycNumber(0 mod Phi_{self.ell})"
        terms = [f"{c}*v^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"CycNumber({' + '.join(terms)} mod Phi_{self.ell})"


def specialize(p: LaurentPoly, ell: int) -> CycNumber:
    """Image of p under v -> q with q a primitive ell-th root of unity.

    Negative exponents are cleared via v^ell = 1, then the result is reduced
    modulo the ell-th cyclotomic polynomial.
    """
    if ell < 2:
        raise ValueError("specialization needs ell >= 2")
    folded = [0] * ell
    for e, c in p.coeffs.items():
        folded[e % ell] += c
    phi = list(cyclotomic(ell))
    deg = len(phi) - 1
    for i in range(ell - 1, deg - 1, -1):
        c = folded[i]
        if c:
            folded[i] = 0
            for j in range(deg + 1):
                folded[i - deg + j] -= c * phi[j]
    return CycNumber(ell, tuple(folded[:deg]))


def chi_values(rs, ell: int, lam, i: int, c: int, t: int) -> tuple[CycNumber, CycNumber]:
    """Scalars through which the weight lam acts on the torus generators.

    Returns the pair (image of K_i, image of the divided-power bracket
    generator with parameters c and t): (q^{d_i * lam_i}, [lam_i + c over t]
    at scale d_i), both as cyclotomic residues.
    """
    if not 1 <= i <= rs.n:
        raise ValueError(f"index i must lie in 1..{rs.n}")
    di = rs.d[i - 1]
    li = lam[i - 1]
    k_val = specialize(LaurentPoly.monomial(di * li), ell)
    bracket = specialize(qbinom(li + c, t, di), ell)
    return k_val, bracket
