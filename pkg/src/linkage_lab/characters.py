"""Exact formal characters and weight-multiplicity computations.

Contents: full characters of the finite-dimensional highest-weight modules
(Freudenthal's recursion, cross-checked against the product dimension
formula), Kostant partition counts with and without a fixed number of
parts, universal-vs-finite weight multiplicity comparison with stabilization
certificates, signed Euler characteristics driven by the dominant-conjugate
degree bookkeeping, character tensor products and duals, height-truncated
characters of the torus-to-Borel induced module, and the even-degree
extension-dimension predictions for one-dimensional twisted weight modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import weyl
from .roots import RootSystem, RootVector, Weight


class Character:
    """Finite weight -> multiplicity map; multiplicities may be negative."""

    __slots__ = ("_m",)

    def __init__(self, mapping: dict[Weight, int] | None = None):
        self._m = {w: int(m) for w, m in (mapping or {}).items() if m}

    @property
    def support(self) -> frozenset[Weight]:
        return frozenset(self._m)

    @property
    def signed(self) -> bool:
        return any(m < 0 for m in self._m.values())

    def mult(self, w: Weight) -> int:
        return self._m.get(tuple(w), 0)

    def dim(self) -> int:
        return sum(self._m.values())

    def items(self):
        return sorted(self._m.items())

    def as_dict(self) -> dict[Weight, int]:
        return dict(self._m)

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._m)
        for w, m in other._m.items():
            out[w] = out.get(w, 0) + m
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({w: -m for w, m in self._m.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, k: int) -> "Character":
        return Character({w: k * m for w, m in self._m.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self._m == other._m

    def __bool__(self) -> bool:
        return bool(self._m)

    def __repr__(self):
        if not self._m:
            return "Character(0)"
        return f"Character({len(self._m)} weights, dim {self.dim()})"


def tensor(ch1: Character, ch2: Character) -> Character:
    """Convolution of multiplicity maps (character of a tensor product)."""
    out: dict[Weight, int] = {}
    for w1, m1 in ch1.as_dict().items():
        for w2, m2 in ch2.as_dict().items():
            w = tuple(a + b for a, b in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return Character(out)


def dual(rs: RootSystem, ch: Character) -> Character:
    """Negate every weight; on irreducible characters this is the -w0 twist."""
    return Character({tuple(-x for x in w): m for w, m in ch.as_dict().items()})


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Product formula dimension of the highest-weight module lam."""
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= Fraction(rs.pairing(shifted, beta), rs.height(beta))
    assert num.denominator == 1
    return int(num)


def _dominant_below(rs: RootSystem, lam: Weight) -> list[tuple[Weight, int]]:
    """Dominant weights mu <= lam, paired with the height of lam - mu."""
    n = rs.n
    bound = sum(rs.pairing(lam, beta) for beta in rs.positive_roots) // 2
    out: list[tuple[Weight, int]] = []

    def rec(idx: int, remaining: int, acc: list[int]):
        if idx == n:
            mu = tuple(
                lam[r] - sum(rs.cartan[r][j] * acc[j] for j in range(n))
                for r in range(n)
            )
            if all(x >= 0 for x in mu):
                out.append((mu, sum(acc)))
            return
        for c in range(remaining + 1):
            acc.append(c)
            rec(idx + 1, remaining - c, acc)
            acc.pop()

    rec(0, bound, [])
    out.sort(key=lambda pair: (pair[1], pair[0]))
    return out


@lru_cache(maxsize=None)
def weyl_character(rs: RootSystem, lam: Weight) -> Character:
    """Full character of the finite-dimensional module with highest weight lam.

    Multiplicities come from Freudenthal's recursion over the dominant
    weights below lam, expanded over Weyl orbits; the total dimension is
    checked against the product formula before returning.
    """
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    shifted_top = tuple(x + 1 for x in lam)
    top_norm = rs.bilinear(shifted_top, shifted_top)

    dominants = _dominant_below(rs, lam)
    mult: dict[Weight, int] = {}
    for mu, depth in dominants:
        if depth == 0:
            mult[mu] = 1
            continue
        acc = 0
        for beta in rs.positive_roots:
            bw = rs.weight_coords(beta)
            db = rs.d_of_root(beta)
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, bw))
                rep, _, _ = weyl.dominant_rep_linear(rs, nu)
                mnu = mult.get(rep, 0)
                if mnu == 0:
                    break
                acc += mnu * db * rs.pairing(nu, beta)
                k += 1
        shifted = tuple(x + 1 for x in mu)
        denom = top_norm - rs.bilinear(shifted, shifted)
        value = Fraction(2 * acc) / denom
        assert value.denominator == 1 and value > 0
        mult[mu] = int(value)

    full: dict[Weight, int] = {}
    for mu, m in mult.items():
        for w in weyl.orbit(rs, mu):
            full[w] = m
    ch = Character(full)
    assert ch.dim() == weyl_dimension(rs, lam), "dimension cross-check failed"
    return ch


# -- Kostant partitions ------------------------------------------------------


@lru_cache(maxsize=None)
def _kostant_rec(rs: RootSystem, idx: int, remaining: RootVector) -> int:
    if all(x == 0 for x in remaining):
        return 1
    if idx == rs.num_positive:
        return 0
    beta = rs.positive_roots[idx]
    total = 0
    cur = remaining
    while all(x >= 0 for x in cur):
        total += _kostant_rec(rs, idx + 1, cur)
        cur = tuple(c - b for c, b in zip(cur, beta))
    return total


def kostant_partition(rs: RootSystem, sigma: RootVector) -> int:
    """Number of multisets of positive roots summing to sigma."""
    sigma = tuple(sigma)
    if any(x < 0 for x in sigma):
        return 0
    return _kostant_rec(rs, 0, sigma)


@lru_cache(maxsize=None)
def _kostant_parts_rec(rs: RootSystem, idx: int, remaining: RootVector, parts: int) -> int:
    if all(x == 0 for x in remaining):
        return 1 if parts == 0 else 0
    if idx == rs.num_positive or parts == 0:
        return 0
    beta = rs.positive_roots[idx]
    total = 0
    cur = remaining
    used = 0
    while all(x >= 0 for x in cur) and used <= parts:
        total += _kostant_parts_rec(rs, idx + 1, cur, parts - used)
        cur = tuple(c - b for c, b in zip(cur, beta))
        used += 1
    return total


def kostant_partition_with_parts(rs: RootSystem, sigma: RootVector, parts: int) -> int:
    """Multisets of exactly `parts` positive roots summing to sigma."""
    sigma = tuple(sigma)
    if parts < 0 or any(x < 0 for x in sigma):
        return 0
    return _kostant_parts_rec(rs, 0, sigma, parts)


# -- universal vs finite weight multiplicities --------------------------------


def verma_weight_mult(rs: RootSystem, nu: Weight, tau: Weight) -> int:
    """Weight multiplicity of tau in the universal highest-weight module nu."""
    diff = tuple(a - b for a, b in zip(nu, tau))
    sigma = rs.in_root_lattice(diff)
    if sigma is None or any(x < 0 for x in sigma):
        return 0
    return kostant_partition(rs, sigma)


def weyl_weight_mult(rs: RootSystem, nu: Weight, tau: Weight) -> int:
    """Weight multiplicity of tau in the finite-dimensional module nu."""
    if not rs.is_dominant(tuple(nu)):
        raise ValueError(f"{nu} is not dominant")
    return weyl_character(rs, tuple(nu)).mult(tuple(tau))


@dataclass(frozen=True)
class StabilizationCertificate:
    """Witness that the two multiplicities agree at nu = N * rho.

    prev_verma/prev_weyl record the (still unequal) multiplicities at N - 1
    when N > 0, so minimality can be re-verified.
    """

    N: int
    nu: Weight
    target: Weight
    verma_mult: int
    weyl_mult: int
    prev_verma: int | None = None
    prev_weyl: int | None = None


def stabilization_nu(rs: RootSystem, mu: Weight, tau: Weight) -> StabilizationCertificate:
    """Smallest N with equal depth-(mu - tau) multiplicities at nu = N * rho.

    For tau a weight of the induced module under mu (so mu - tau is an
    N-combination of simple roots, sigma say), the universal module has
    multiplicity P(sigma) at depth sigma below any highest weight, while the
    finite-dimensional module with highest weight N*rho eventually catches
    up; the certificate records the first N where they agree.
    """
    mu, tau = tuple(mu), tuple(tau)
    diff = tuple(a - b for a, b in zip(mu, tau))
    sigma = rs.in_root_lattice(diff)
    if sigma is None or any(x < 0 for x in sigma):
        raise ValueError(
            "mu - tau must be a non-negative integer combination of simple roots"
        )
    want = kostant_partition(rs, sigma)
    sigma_w = rs.weight_coords(sigma)
    prev: tuple[int, int] | None = None
    limit = max(sigma) if any(sigma) else 0
    for N in range(limit + 1):
        nu = tuple(N for _ in range(rs.n))
        target = tuple(a - b for a, b in zip(nu, sigma_w))
        got = weyl_character(rs, nu).mult(target)
        if got == want:
            return StabilizationCertificate(
                N=N, nu=nu, target=target, verma_mult=want, weyl_mult=got,
                prev_verma=None if prev is None else prev[0],
                prev_weyl=None if prev is None else prev[1],
            )
        prev = (want, got)
    raise AssertionError("stabilization must occur once every coefficient is covered")


# -- Euler characteristics ----------------------------------------------------


def euler_characteristic(rs: RootSystem, mu: Weight) -> Character:
    """Signed character of the alternating cohomology sum for the weight mu.

    Zero when mu + rho lies on a reflection hyperplane; otherwise the full
    character of the dominant conjugate, signed by the parity of the unique
    Weyl element that moves mu there under the shifted action.
    """
    analysis = weyl.bwb_analysis(rs, tuple(mu))
    if analysis.singular:
        return Character({})
    ch = weyl_character(rs, analysis.lam)
    return ch if analysis.degree % 2 == 0 else -ch


# -- induced-module characters and extension dimensions -----------------------


@dataclass(frozen=True)
class TruncatedBCharacter:
    """Character of the torus-to-Borel induced module, cut at a height bound.

    The support lies in mu - (N-span of simple roots); the multiplicity at
    mu - sigma is the Kostant partition count of sigma, so the base weight
    mu itself always carries multiplicity 1.
    """

    mu: Weight
    height_bound: int
    character: Character


def b_induced_character(rs: RootSystem, mu: Weight, height_bound: int) -> TruncatedBCharacter:
    if height_bound < 0:
        raise ValueError("height_bound must be >= 0")
    mu = tuple(mu)
    out: dict[Weight, int] = {}
    for sigma in _nonneg_vectors(rs.n, height_bound):
        p = kostant_partition(rs, sigma)
        if p:
            sw = rs.weight_coords(sigma)
            out[tuple(a - b for a, b in zip(mu, sw))] = p
    return TruncatedBCharacter(mu=mu, height_bound=height_bound, character=Character(out))


def _nonneg_vectors(n: int, total_max: int):
    def rec(idx, remaining, acc):
        if idx == n:
            yield tuple(acc)
            return
        for c in range(remaining + 1):
            acc.append(c)
            yield from rec(idx + 1, remaining - c, acc)
            acc.pop()

    yield from rec(0, total_max, [])


def ext_b_dimension(rs: RootSystem, zeta: Weight, eta: Weight, n: int,
                    ell: int | None = None) -> int:
    """Predicted dimension of the degree-n extension space between the
    one-dimensional twisted weight modules attached to zeta and eta.

    Zero in odd degrees; in degree 2m it is the number of multisets of
    exactly m positive roots summing to zeta - eta (zero unless zeta - eta
    is a non-negative root combination, so nothing survives when eta has
    larger height).  The twist scale ell does not enter the count.
    """
    if n < 0:
        raise ValueError("cohomological degree must be >= 0")
    if n % 2 == 1:
        return 0
    diff = tuple(a - b for a, b in zip(zeta, eta))
    sigma = rs.in_root_lattice(diff)
    if sigma is None or any(x < 0 for x in sigma):
        return 0
    return kostant_partition_with_parts(rs, sigma, n // 2)


def vanishing_threshold(rs: RootSystem, max_height: int, mu: Weight) -> int:
    """Smallest N such that, up to the given depth, the finite-dimensional
    module with highest weight N*rho accounts for every weight of the
    induced module under mu.

    Concretely: for every sigma with height(sigma) <= max_height, the
    multiplicity of N*rho - sigma in the character of N*rho must equal the
    Kostant count P(sigma); the quotient character then has no weights at
    depth <= max_height.
    """
    if max_height < 0:
        return 0
    sigmas = [s for s in _nonneg_vectors(rs.n, max_height) if kostant_partition(rs, s)]
    limit = max((max(s) for s in sigmas), default=0)
    for N in range(limit + 1):
        nu = tuple(N for _ in range(rs.n))
        ch = weyl_character(rs, nu)
        ok = True
        for sigma in sigmas:
            sw = rs.weight_coords(sigma)
            target = tuple(a - b for a, b in zip(nu, sw))
            if ch.mult(target) != kostant_partition(rs, sigma):
                ok = False
                break
        if ok:
            return N
    raise AssertionError("threshold must be reached once coefficients are covered")
