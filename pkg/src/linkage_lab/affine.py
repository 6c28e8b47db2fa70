"""Affine reflection groups at a scale parameter ell: translation lattices,
linkage and strong linkage, alcove geometry, lengths and reduced words.

Three reflection groups act on weights through the rho-shifted dot action:
reflections s_{beta, m*ell} in all roots (variant "Wl"), reflections
s_{beta, m*ell_beta} with the root-dependent spacing ell_beta =
ell / gcd(ell, d_beta) (variant "WDl", the default), and the coroot variant
("WlVee") whose translations are the ell-multiples of the coroots.  Their
translation subgroups are compared exactly through Hermite normal forms.

An affine element is a pair (tau, w): a root-lattice vector tau meaning
translation by ell*tau, and a finite Weyl part w; it moves lam to
w.(lam + rho) - rho + ell*tau.  The fundamental alcove has the n linear
walls <x + rho, alpha_i^vee> = 0 together with the single affine wall
<x + rho, btilde^vee> = ell_btilde for btilde the highest short root; this
convention is validated (no reflection hyperplane meets the declared
interior), not assumed.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd

from . import weyl
from .exact import hnf_contains, hnf_rows, mat_vec
from .roots import RootSystem, RootVector, Weight

VARIANTS = ("Wl", "WDl", "WlVee")
_DESCENT_CAP = 100000


def ell_beta(rs: RootSystem, beta: RootVector, ell: int) -> int:
    """Wall spacing ell / gcd(ell, d_beta); constant on Weyl orbits of roots."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return ell // gcd(ell, rs.d_of_root(beta))


# -- affine elements ---------------------------------------------------------


@dataclass(frozen=True)
class AffineWeylElement:
    """Pair (tau, w); acts by the dot action of w followed by translation
    by ell * tau."""

    tau: RootVector
    w: weyl.WeylElement


def identity_affine(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement((0,) * rs.n, weyl.identity(rs))


def compose_affine(rs: RootSystem, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    moved = weyl.act_root(rs, a.w, b.tau)
    tau = tuple(x + y for x, y in zip(a.tau, moved))
    return AffineWeylElement(tau, weyl.compose(a.w, b.w))


def inverse_affine(rs: RootSystem, a: AffineWeylElement) -> AffineWeylElement:
    w_inv = weyl.inverse(rs, a.w)
    tau = tuple(-x for x in weyl.act_root(rs, w_inv, a.tau))
    return AffineWeylElement(tau, w_inv)


def dot_affine(rs: RootSystem, ell: int, a: AffineWeylElement, lam: Weight) -> Weight:
    base = weyl.dot(rs, a.w, lam)
    shift = rs.weight_coords(a.tau)
    return tuple(x + ell * s for x, s in zip(base, shift))


def apply_affine_reflection(rs: RootSystem, ell: int, beta: RootVector, m: int,
                            lam: Weight) -> Weight:
    """Dot action of s_{beta, m*ell_beta} on lam."""
    beta = tuple(beta)
    lb = ell_beta(rs, beta, ell)
    base = weyl.dot(rs, weyl.reflection_in_root(rs, beta), lam)
    shift = rs.weight_coords(beta)
    return tuple(x + m * lb * s for x, s in zip(base, shift))


@lru_cache(maxsize=None)
def affine_generators(rs: RootSystem) -> tuple[AffineWeylElement, ...]:
    """Simple generators indexed 0..n: index 0 is the affine-wall reflection
    (through the highest short root at level one), index i >= 1 is s_i."""
    btilde = rs.highest_short_root
    zero = (0,) * rs.n
    gens = [AffineWeylElement(btilde, weyl.reflection_in_root(rs, btilde))]
    for i in range(rs.n):
        gens.append(AffineWeylElement(zero, weyl.simple_reflection(rs, i)))
    return tuple(gens)


def element_from_word(rs: RootSystem, word) -> AffineWeylElement:
    gens = affine_generators(rs)
    out = identity_affine(rs)
    for i in word:
        out = compose_affine(rs, out, gens[i])
    return out


def translation_element(rs: RootSystem, nu: RootVector) -> AffineWeylElement:
    """The element translating by ell * nu."""
    return AffineWeylElement(tuple(nu), weyl.identity(rs))


# -- translation lattices ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TranslationLattice:
    """Translation subgroup of one of the three reflection groups.

    Vectors live in the root lattice tensored with Q; they are stored scaled
    by `scale` (the lcm of the symmetrizers) so the Hermite normal form is
    integral even for the coroot variant.  Equality is equality of lattices:
    same scale, same canonical Hermite rows (the variant label is not part
    of the comparison).
    """

    variant: str
    ell: int
    scale: int
    rows: tuple[tuple[int, ...], ...]

    def __eq__(self, other):
        return (isinstance(other, TranslationLattice)
                and self.scale == other.scale and self.rows == other.rows)

    def __hash__(self):
        return hash((self.scale, self.rows))

    @property
    def basis_columns(self) -> tuple[tuple[int, ...], ...]:
        """Basis as columns (transposed HNF rows), in units of 1/scale."""
        n = len(self.rows[0])
        return tuple(tuple(self.rows[r][c] for r in range(len(self.rows)))
                     for c in range(n))

    def contains(self, coords) -> bool:
        """Membership of a vector given by exact rational root coordinates."""
        scaled = []
        for c in coords:
            v = Fraction(c) * self.scale
            if v.denominator != 1:
                return False
            scaled.append(int(v))
        return hnf_contains(self.rows, tuple(scaled))


def _lattice_scale(rs: RootSystem) -> int:
    out = 1
    for d in rs.d:
        out = out * d // gcd(out, d)
    return out


def _lattice_generators(rs: RootSystem, ell: int, variant: str, scale: int):
    gens = []
    for beta in rs.positive_roots:
        if variant == "Wl":
            factor = scale * ell
        elif variant == "WDl":
            factor = scale * ell_beta(rs, beta, ell)
        elif variant == "WlVee":
            factor = (scale // rs.d_of_root(beta)) * ell
        else:
            raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
        gens.append(tuple(factor * b for b in beta))
    return gens


@lru_cache(maxsize=None)
def _translation_lattice_any(rs: RootSystem, ell: int, variant: str) -> TranslationLattice:
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    scale = _lattice_scale(rs)
    rows = hnf_rows(_lattice_generators(rs, ell, variant, scale), rs.n)
    return TranslationLattice(variant=variant, ell=ell, scale=scale, rows=rows)


def translation_lattice(rs: RootSystem, ell: int, variant: str = "WDl") -> TranslationLattice:
    if not rs.indecomposable:
        raise ValueError(
            "translation lattices are compared per indecomposable component; "
            "apply to each component separately"
        )
    return _translation_lattice_any(rs, ell, variant)


# -- linkage -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _linked_cached(rs: RootSystem, ell: int, lam: Weight, mu: Weight, variant: str) -> bool:
    lat = _translation_lattice_any(rs, ell, variant)
    target = tuple(x + 1 for x in mu)
    shifted = tuple(x + 1 for x in lam)
    for w in weyl.weyl_group(rs):
        moved = mat_vec(w.wm, shifted)
        diff = tuple(t - m for t, m in zip(target, moved))
        if lat.contains(rs.root_coords(diff)):
            return True
    return False


def linked(rs: RootSystem, ell: int, lam: Weight, mu: Weight, variant: str = "WDl") -> bool:
    """Whether mu lies in the dot orbit of lam under the chosen group."""
    return _linked_cached(rs, ell, tuple(lam), tuple(mu), variant)


def in_principal_block(rs: RootSystem, ell: int, lam: Weight) -> bool:
    return linked(rs, ell, tuple(lam), (0,) * rs.n)


def enumerate_block(rs: RootSystem, ell: int, lam0: Weight, box_bound: int) -> tuple[Weight, ...]:
    """All weights with coordinates bounded by box_bound linked to lam0."""

    def grid(idx, acc):
        if idx == rs.n:
            yield tuple(acc)
            return
        for c in range(-box_bound, box_bound + 1):
            acc.append(c)
            yield from grid(idx + 1, acc)
            acc.pop()

    lam0 = tuple(lam0)
    return tuple(sorted(w for w in grid(0, []) if linked(rs, ell, w, lam0)))


# -- strong linkage ------------------------------------------------------------


@dataclass(frozen=True)
class StrongLinkageChain:
    """Descending reflection chain weights[0] >= ... >= weights[-1].

    steps[i] = (beta, m) with s_{beta, m*ell_beta} sending weights[i] to
    weights[i+1]; every step decreases in the dominance order.
    """

    weights: tuple[Weight, ...]
    steps: tuple[tuple[RootVector, int], ...]


@lru_cache(maxsize=None)
def _strong_state(rs: RootSystem, ell: int, mu: Weight):
    # shared memo per target weight: nu -> False (dead) or (beta, m, next_nu)
    return {}, threading.Lock()


@lru_cache(maxsize=None)
def _strong_betas(rs: RootSystem, ell: int):
    den, _ = _scaled_inverse(rs)
    out = []
    for beta in rs.positive_roots:
        pair_row = tuple(beta[j] * rs.d[j] for j in range(rs.n))
        out.append((beta, rs.weight_coords(beta), ell_beta(rs, beta, ell),
                    tuple(den * b for b in beta), pair_row, rs.d_of_root(beta)))
    return tuple(out)


def strongly_linked(rs: RootSystem, ell: int, mu: Weight, lam: Weight) -> StrongLinkageChain | None:
    """A witnessing chain from lam down to mu, or None when there is none.

    Depth-first descent from lam over all reflections s_{beta, m*ell_beta}
    whose image stays below the current weight and above mu in the rational
    dominance cone; memoized per target mu.
    """
    mu, lam = tuple(mu), tuple(lam)
    if lam == mu:
        return StrongLinkageChain(weights=(lam,), steps=())
    den, cinv_scaled = _scaled_inverse(rs)
    diff = tuple(a - b for a, b in zip(lam, mu))
    start = tuple(sum(row[j] * diff[j] for j in range(len(diff))) for row in cinv_scaled)
    # chains only descend, so lam outside the rational cone over mu is hopeless
    if any(r < 0 for r in start):
        return None
    memo, lock = _strong_state(rs, ell, mu)
    betas = _strong_betas(rs, ell)
    n = rs.n

    def successors(nu: Weight, rcoords: tuple[int, ...]):
        for beta, bw, lb, bscaled, pair_row, d_beta in betas:
            p = sum(pair_row[j] * (nu[j] + 1) for j in range(n)) // d_beta
            cmax = min(rcoords[i] // bscaled[i] for i in range(n) if bscaled[i])
            c = p % lb or lb
            while c <= cmax:
                nu2 = tuple(x - c * b for x, b in zip(nu, bw))
                r2 = tuple(r - c * b for r, b in zip(rcoords, bscaled))
                yield beta, (p - c) // lb, nu2, r2
                c += lb

    def search(nu: Weight, rcoords: tuple[int, ...]) -> bool:
        cached = memo.get(nu, "?")
        if cached != "?":
            return cached is not False
        for beta, m, nu2, r2 in successors(nu, rcoords):
            if nu2 == mu or search(nu2, r2):
                memo[nu] = (beta, m, nu2)
                return True
        memo[nu] = False
        return False

    with lock:
        if not search(lam, start):
            return None
        weights = [lam]
        steps = []
        nu = lam
        while nu != mu:
            beta, m, nu2 = memo[nu]
            steps.append((beta, m))
            weights.append(nu2)
            nu = nu2
        return StrongLinkageChain(weights=tuple(weights), steps=tuple(steps))


def _scaled_inverse(rs: RootSystem):
    return rs._cinv_den, rs._cinv_scaled


# -- alcove geometry -----------------------------------------------------------


@dataclass(frozen=True)
class AlcovePosition:
    """Interior / Wall / Outside relative to the reflection hyperplanes.

    kind == "wall" lists every (beta, m) with <lam + rho, beta^vee> equal to
    m * ell_beta; "interior" means strictly inside the fundamental alcove.
    """

    kind: str
    walls: tuple[tuple[RootVector, int], ...] = ()


def fundamental_alcove_position(rs: RootSystem, ell: int, lam: Weight) -> AlcovePosition:
    shifted = tuple(x + 1 for x in lam)
    walls = []
    interior = True
    for beta in rs.positive_roots:
        p = rs.pairing(shifted, beta)
        lb = ell_beta(rs, beta, ell)
        if p % lb == 0:
            walls.append((beta, p // lb))
        if not 0 < p < lb:
            interior = False
    if walls:
        return AlcovePosition(kind="wall", walls=tuple(walls))
    return AlcovePosition(kind="interior" if interior else "outside")


def in_closed_alcove(rs: RootSystem, ell: int, lam: Weight) -> bool:
    shifted = tuple(x + 1 for x in lam)
    return all(0 <= rs.pairing(shifted, beta) <= ell_beta(rs, beta, ell)
               for beta in rs.positive_roots)


def single_wall_weights(rs: RootSystem, ell: int) -> tuple[tuple[Weight, tuple[RootVector, int]], ...]:
    """Integral weights on exactly one wall of the closed fundamental alcove."""

    def grid(idx, acc):
        if idx == rs.n:
            yield tuple(acc)
            return
        for c in range(-1, ell + 1):
            acc.append(c)
            yield from grid(idx + 1, acc)
            acc.pop()

    out = []
    for mu in grid(0, []):
        if not in_closed_alcove(rs, ell, mu):
            continue
        pos = fundamental_alcove_position(rs, ell, mu)
        if pos.kind == "wall" and len(pos.walls) == 1:
            out.append((mu, pos.walls[0]))
    return tuple(out)


@dataclass(frozen=True)
class LocatedAlcove:
    element: AffineWeylElement
    rep: Weight
    word: tuple[int, ...]


def _violated_generator(rs: RootSystem, ell: int, lam: Weight) -> int | None:
    """First violated wall of the fundamental alcove: linear walls by index,
    the affine wall last.  Returns a generator index or None."""
    shifted = tuple(x + 1 for x in lam)
    for i in range(rs.n):
        if shifted[i] < 0:
            return i + 1
    btilde = rs.highest_short_root
    if rs.pairing(shifted, btilde) > ell_beta(rs, btilde, ell):
        return 0
    return None


def locate_alcove(rs: RootSystem, ell: int, lam: Weight) -> LocatedAlcove:
    """Express a regular weight as the image of a fundamental-alcove weight.

    Returns (w_a, lam0, word) with dot(w_a, lam0) == lam, computed by
    reflecting back across violated walls in a fixed deterministic order.
    The recorded word is reduced.
    """
    lam = tuple(lam)
    if fundamental_alcove_position(rs, ell, lam).kind == "wall":
        raise ValueError(f"{lam} lies on a reflection hyperplane")
    gens = affine_generators(rs)
    cur = lam
    word: list[int] = []
    for _ in range(_DESCENT_CAP):
        g = _violated_generator(rs, ell, cur)
        if g is None:
            elem = element_from_word(rs, word)
            assert dot_affine(rs, ell, elem, cur) == lam
            return LocatedAlcove(element=elem, rep=cur, word=tuple(word))
        cur = dot_affine(rs, ell, gens[g], cur)
        word.append(g)
    raise RuntimeError("alcove descent did not terminate; is ell valid for this type?")


def _interior_point(rs: RootSystem, ell: int):
    """A rational point of the open fundamental alcove, in shifted coordinates."""
    c = Fraction(1)
    for beta in rs.positive_roots:
        bound = Fraction(ell_beta(rs, beta, ell), rs.height(beta))
        if bound <= c:
            c = bound / 2
    return tuple(c for _ in range(rs.n))


def _pair_fraction(rs: RootSystem, xi, beta) -> Fraction:
    num = sum(Fraction(beta[j] * rs.d[j]) * xi[j] for j in range(rs.n))
    return num / rs.d_of_root(beta)


def _apply_shifted(rs: RootSystem, ell: int, a: AffineWeylElement, xi):
    moved = mat_vec(a.w.wm, xi)
    shift = rs.weight_coords(a.tau)
    return tuple(x + ell * s for x, s in zip(moved, shift))


def length_affine(rs: RootSystem, ell: int, a: AffineWeylElement) -> int:
    """Number of hyperplanes strictly separating the fundamental alcove from
    its image under a."""
    xi = _interior_point(rs, ell)
    eta = _apply_shifted(rs, ell, a, xi)
    count = 0
    for beta in rs.positive_roots:
        lb = ell_beta(rs, beta, ell)
        lo = _pair_fraction(rs, xi, beta)
        hi = _pair_fraction(rs, eta, beta)
        if lo > hi:
            lo, hi = hi, lo
        mlo = floor(lo / lb) + 1
        mhi = ceil(hi / lb) - 1
        count += max(0, mhi - mlo + 1)
    return count


def reduced_word(rs: RootSystem, ell: int, a: AffineWeylElement) -> tuple[int, ...]:
    """Reduced word for a in the simple affine generators (0 = affine wall).

    Greedy descent of an interior point of the image alcove; letters are
    recorded in composition order, so a == s_{word[0]} o ... o s_{word[-1]}.
    """
    gens = affine_generators(rs)
    xi = _apply_shifted(rs, ell, a, _interior_point(rs, ell))
    word: list[int] = []
    for _ in range(_DESCENT_CAP):
        g = None
        for i in range(rs.n):
            if xi[i] < 0:
                g = i + 1
                break
        if g is None:
            btilde = rs.highest_short_root
            if _pair_fraction(rs, xi, btilde) > ell_beta(rs, btilde, ell):
                g = 0
        if g is None:
            rebuilt = element_from_word(rs, word)
            assert rebuilt == a, "descent word does not rebuild the element"
            return tuple(word)
        xi = _apply_shifted(rs, ell, gens[g], xi)
        word.append(g)
    raise RuntimeError("alcove descent did not terminate; is ell valid for this type?")


@lru_cache(maxsize=None)
def elements_up_to_length(rs: RootSystem, max_length: int) -> tuple[tuple[AffineWeylElement, int], ...]:
    """All affine elements of word length <= max_length with their lengths,
    breadth-first (deterministic order)."""
    gens = affine_generators(rs)
    start = identity_affine(rs)
    seen = {(start.tau, start.w.wm): 0}
    order = [(start, 0)]
    frontier = [start]
    depth = 0
    while frontier and depth < max_length:
        depth += 1
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose_affine(rs, a, g)
                key = (b.tau, b.w.wm)
                if key not in seen:
                    seen[key] = depth
                    order.append((b, depth))
                    nxt.append(b)
        frontier = nxt
    return tuple(order)


def weight_up(rs: RootSystem, ell: int, lam: Weight, generator: int) -> tuple[Weight, bool]:
    """Image of lam under right multiplication of its alcove element by a
    simple affine generator, flagged True when the image is dominance-larger.

    The pair {lam, image} is swapped by a single affine reflection, so the
    two weights always differ by an integer multiple of one root and the
    flag is well defined; the operation is an involution on the pair.
    """
    gens = affine_generators(rs)
    if not 0 <= generator < len(gens):
        raise ValueError(f"generator index {generator} out of range")
    loc = locate_alcove(rs, ell, lam)
    elem = compose_affine(rs, loc.element, gens[generator])
    cand = dot_affine(rs, ell, elem, loc.rep)
    if cand == tuple(lam):
        raise AssertionError("regular weight fixed by a wall crossing")
    up = rs.dominance_leq(tuple(lam), cand)
    return cand, up
