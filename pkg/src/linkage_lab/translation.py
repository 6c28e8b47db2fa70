"""Wall-crossing weight combinatorics for translation between a regular
weight and a weight on a single wall of the fundamental alcove.

For a wall datum (lam interior, mu on one wall with reflection s) and an
affine element w, the machinery locates: the unique weight of the relevant
finite-dimensional character that carries w.lam into the block of mu (the
"to wall" weight), the exactly-two weights of the dual character that carry
w.mu back into the block of lam, whose shifts recover {w.lam, ws.lam}, the
up/down classification of the crossing, and the Euler-characteristic check
for the associated two-out-of-three character identity.

Multiplicity-pattern failures raise WeightPatternViolation with the full
instance attached; a failure would falsify the expected pattern at that
instance rather than indicate bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine, characters, weyl
from .characters import Character
from .roots import RootSystem, RootVector, Weight


class WeightPatternViolation(AssertionError):
    """An expected weight-multiplicity pattern failed at a concrete instance."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


@dataclass(frozen=True)
class WallDatum:
    """A regular interior weight and a weight on exactly one alcove wall."""

    lam: Weight
    mu: Weight
    wall: tuple[RootVector, int]  # (beta, m): the reflection fixing mu


def wall_datum(rs: RootSystem, ell: int, lam: Weight, mu: Weight) -> WallDatum:
    lam, mu = tuple(lam), tuple(mu)
    if affine.fundamental_alcove_position(rs, ell, lam).kind != "interior":
        raise ValueError(f"{lam} is not interior to the fundamental alcove")
    pos = affine.fundamental_alcove_position(rs, ell, mu)
    if pos.kind != "wall" or len(pos.walls) != 1 or not affine.in_closed_alcove(rs, ell, mu):
        raise ValueError(
            f"{mu} must lie on exactly one wall of the closed fundamental alcove"
        )
    return WallDatum(lam=lam, mu=mu, wall=pos.walls[0])


def _cross_wall(rs: RootSystem, ell: int, datum: WallDatum, lam: Weight) -> Weight:
    beta, m = datum.wall
    return affine.apply_affine_reflection(rs, ell, beta, m, lam)


def nu1(rs: RootSystem, lam: Weight, mu: Weight) -> Weight:
    """Dominant Weyl conjugate of mu - lam (the translating character's
    highest weight)."""
    diff = tuple(a - b for a, b in zip(mu, lam))
    if all(x == 0 for x in diff):
        raise ValueError("mu and lam coincide; there is no wall motion")
    dom, _, _ = weyl.dominant_rep_linear(rs, diff)
    return dom


def _qualifying(rs, ell, ch: Character, shift: Weight, target: Weight):
    """Weights gamma of ch with gamma + shift linked to target."""
    out = []
    for gamma, mult in ch.items():
        moved = tuple(g + s for g, s in zip(gamma, shift))
        if affine.linked(rs, ell, moved, target):
            out.append((gamma, mult))
    return out


def to_wall_weight(rs: RootSystem, ell: int, datum: WallDatum,
                   w_a: affine.AffineWeylElement) -> Weight:
    """The unique character weight carrying w.lam into the block of mu.

    Scans the character with highest weight nu1(lam, mu): exactly one weight
    gamma, of multiplicity one, has gamma + w.lam linked to mu, and it equals
    w.mu - w.lam.  Any other outcome raises WeightPatternViolation.
    """
    lam, mu = datum.lam, datum.mu
    ch = characters.weyl_character(rs, nu1(rs, lam, mu))
    wl = affine.dot_affine(rs, ell, w_a, lam)
    wm = affine.dot_affine(rs, ell, w_a, mu)
    hits = _qualifying(rs, ell, ch, wl, mu)
    detail = dict(lam=lam, mu=mu, w_tau=w_a.tau, hits=hits)
    if len(hits) != 1 or hits[0][1] != 1:
        raise WeightPatternViolation(
            f"expected exactly one multiplicity-one weight, found {hits}", **detail
        )
    gamma = hits[0][0]
    expected = tuple(a - b for a, b in zip(wm, wl))
    if gamma != expected:
        raise WeightPatternViolation(
            f"unique weight {gamma} differs from w.mu - w.lam = {expected}", **detail
        )
    if gamma not in weyl.orbit(rs, nu1(rs, lam, mu)):
        raise WeightPatternViolation(f"{gamma} is not extremal", **detail)
    return gamma


def out_of_wall_weights(rs: RootSystem, ell: int, datum: WallDatum,
                        w_a: affine.AffineWeylElement) -> tuple[Weight, Weight]:
    """The two dual-character weights carrying w.mu into the block of lam.

    Exactly two weights qualify, each with multiplicity one, and their
    shifts by w.mu form the set {w.lam, ws.lam}.  Returned in that order:
    first the one reaching w.lam, then the one reaching ws.lam.
    """
    lam, mu = datum.lam, datum.mu
    chd = characters.dual(rs, characters.weyl_character(rs, nu1(rs, lam, mu)))
    wl = affine.dot_affine(rs, ell, w_a, lam)
    wm = affine.dot_affine(rs, ell, w_a, mu)
    wsl = affine.dot_affine(rs, ell, w_a, _cross_wall(rs, ell, datum, lam))
    hits = _qualifying(rs, ell, chd, wm, lam)
    detail = dict(lam=lam, mu=mu, w_tau=w_a.tau, hits=hits)
    if len(hits) != 2 or any(m != 1 for _, m in hits):
        raise WeightPatternViolation(
            f"expected exactly two multiplicity-one weights, found {hits}", **detail
        )
    targets = {tuple(g + s for g, s in zip(gamma, wm)): gamma for gamma, _ in hits}
    if set(targets) != {wl, wsl}:
        raise WeightPatternViolation(
            f"shifted weights {sorted(targets)} differ from {{w.lam, ws.lam}} = "
            f"{sorted({wl, wsl})}", **detail
        )
    orbit = weyl.orbit(rs, nu1(rs, lam, mu))
    for gamma, _ in hits:
        if tuple(-x for x in gamma) not in orbit:
            raise WeightPatternViolation(f"{gamma} is not extremal", **detail)
    return targets[wl], targets[wsl]


def classify_case(rs: RootSystem, ell: int, datum: WallDatum,
                  w_a: affine.AffineWeylElement) -> str:
    """"up" when ws.lam strictly dominates w.lam, "down" when the reverse.

    The two weights differ by an integer multiple of the wall's root, so
    they are always comparable; an incomparable pair raises.
    """
    wl = affine.dot_affine(rs, ell, w_a, datum.lam)
    wsl = affine.dot_affine(rs, ell, w_a, _cross_wall(rs, ell, datum, datum.lam))
    if wl == wsl:
        raise WeightPatternViolation("wall crossing fixed a regular weight",
                                     lam=datum.lam, mu=datum.mu, w_tau=w_a.tau)
    if rs.dominance_leq(wl, wsl):
        return "up"
    if rs.dominance_leq(wsl, wl):
        return "down"
    raise WeightPatternViolation(
        f"w.lam = {wl} and ws.lam = {wsl} are dominance-incomparable",
        lam=datum.lam, mu=datum.mu, w_tau=w_a.tau,
    )


@dataclass(frozen=True)
class TriangleReport:
    """Both sides of the Euler-characteristic identity for one instance."""

    ok: bool
    lhs: Character
    rhs: Character
    terms: tuple  # (gamma, mult, shifted weight) per qualifying dual weight


def triangle_euler_check(rs: RootSystem, ell: int, datum: WallDatum,
                         w_a: affine.AffineWeylElement) -> TriangleReport:
    """Check euler(w.lam) + euler(ws.lam) against the dual-character sum.

    The right-hand side runs over the dual-character weights gamma linked
    into the block of lam, weighted by multiplicity: sum of
    mult(gamma) * euler(gamma + w.mu).
    """
    lam, mu = datum.lam, datum.mu
    wl = affine.dot_affine(rs, ell, w_a, lam)
    wsl = affine.dot_affine(rs, ell, w_a, _cross_wall(rs, ell, datum, lam))
    wm = affine.dot_affine(rs, ell, w_a, mu)
    lhs = characters.euler_characteristic(rs, wl) + characters.euler_characteristic(rs, wsl)
    chd = characters.dual(rs, characters.weyl_character(rs, nu1(rs, lam, mu)))
    rhs = Character({})
    terms = []
    for gamma, mult in _qualifying(rs, ell, chd, wm, lam):
        shifted = tuple(g + s for g, s in zip(gamma, wm))
        rhs = rhs + characters.euler_characteristic(rs, shifted).scale(mult)
        terms.append((gamma, mult, shifted))
    return TriangleReport(ok=lhs == rhs, lhs=lhs, rhs=rhs, terms=tuple(terms))


@dataclass(frozen=True)
class TranslationAnalysis:
    """Bundle of the wall-crossing data for one (datum, element) instance."""

    nu1: Weight
    to_wall: Weight
    out_weights: tuple[Weight, Weight]
    case: str
    triangle: TriangleReport


def analyze(rs: RootSystem, ell: int, datum: WallDatum,
            w_a: affine.AffineWeylElement) -> TranslationAnalysis:
    return TranslationAnalysis(
        nu1=nu1(rs, datum.lam, datum.mu),
        to_wall=to_wall_weight(rs, ell, datum, w_a),
        out_weights=out_of_wall_weights(rs, ell, datum, w_a),
        case=classify_case(rs, ell, datum, w_a),
        triangle=triangle_euler_check(rs, ell, datum, w_a),
    )


def translation_reduced_word(rs: RootSystem, ell: int, nu: RootVector) -> tuple[int, ...]:
    """Reduced word for the translation by ell * nu, nu dominant, whose
    prefix images of 0 strictly increase in the dominance order.

    Depth-first search over reduced prefixes, extending only by letters that
    move the image of 0 strictly up; the full word reaches the translation
    element, whose image of 0 is ell * nu in weight coordinates.
    """
    nu = tuple(nu)
    if not rs.is_dominant(rs.weight_coords(nu)):
        raise ValueError(f"{nu} is not dominant as a weight")
    target = affine.translation_element(rs, nu)
    total = affine.length_affine(rs, ell, target)
    if total == 0:
        return ()
    gens = affine.affine_generators(rs)
    zero = (0,) * rs.n
    goal = affine.dot_affine(rs, ell, target, zero)
    assert goal == tuple(ell * x for x in rs.weight_coords(nu))

    def dfs(prefix, elem, image, depth):
        if depth == total:
            return prefix if elem == target else None
        for i in range(len(gens)):
            nxt = affine.compose_affine(rs, elem, gens[i])
            image2 = affine.dot_affine(rs, ell, nxt, zero)
            if image2 == image or not rs.dominance_leq(image, image2):
                continue
            if affine.length_affine(rs, ell, nxt) != depth + 1:
                continue
            remainder = affine.compose_affine(rs, affine.inverse_affine(rs, nxt), target)
            if affine.length_affine(rs, ell, remainder) != total - depth - 1:
                continue
            found = dfs(prefix + [i], nxt, image2, depth + 1)
            if found is not None:
                return found
        return None

    word = dfs([], affine.identity_affine(rs), zero, 0)
    if word is None:
        raise WeightPatternViolation(
            "no reduced word with dominance-increasing prefixes exists",
            nu=nu, ell=ell,
        )
    return tuple(word)


def prefix_images(rs: RootSystem, ell: int, word) -> tuple[Weight, ...]:
    """Images of 0 under the successive prefixes of a word (identity first)."""
    zero = (0,) * rs.n
    out = [zero]
    elem = affine.identity_affine(rs)
    gens = affine.affine_generators(rs)
    for i in word:
        elem = affine.compose_affine(rs, elem, gens[i])
        out.append(affine.dot_affine(rs, ell, elem, zero))
    return tuple(out)
