"""Finite Weyl group elements, linear and rho-shifted actions, and the
degree bookkeeping for dominant conjugates of shifted weights.

An element is canonically its action matrix on fundamental-weight
coordinates; two elements are equal iff those matrices agree.  Words are
kept only for display and need not be reduced on input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import identity_matrix, mat_inv, mat_mul, mat_vec
from .roots import RootSystem, RootVector, Weight


@dataclass(frozen=True)
class WeylElement:
    wm: tuple[tuple[int, ...], ...]  # action on weight coordinates
    rm: tuple[tuple[int, ...], ...]  # action on root coordinates

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.wm == other.wm

    def __hash__(self):
        return hash(self.wm)


def identity(rs: RootSystem) -> WeylElement:
    eye = identity_matrix(rs.n)
    return WeylElement(eye, eye)


@lru_cache(maxsize=None)
def _simple_matrices(rs: RootSystem, i: int):
    n = rs.n
    # weight coords: s_i(lam) = lam - lam_i * C[:,i]
    wm = tuple(
        tuple((1 if r == c else 0) - (rs.cartan[r][i] if c == i else 0) for c in range(n))
        for r in range(n)
    )
    # root coords: s_i(beta) = beta - (C beta)_i * e_i
    rm = tuple(
        tuple((1 if r == c else 0) - (rs.cartan[i][c] if r == i else 0) for c in range(n))
        for r in range(n)
    )
    return wm, rm


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 0 <= i < rs.n:
        raise ValueError(f"simple reflection index {i} out of range")
    wm, rm = _simple_matrices(rs, i)
    return WeylElement(wm, rm)


@lru_cache(maxsize=None)
def reflection_in_root(rs: RootSystem, beta: RootVector) -> WeylElement:
    """The reflection s_beta for an arbitrary root beta."""
    if not rs.is_root(beta):
        raise ValueError(f"{beta} is not a root")
    n = rs.n
    bw = rs.weight_coords(beta)
    # <omega_c, beta^vee> for the fundamental weights omega_c
    fw_pair = [rs.pairing(tuple(int(k == c) for k in range(n)), beta) for c in range(n)]
    # <alpha_c, beta^vee> for the simple roots alpha_c
    sr_pair = [rs.pairing(rs.weight_coords(tuple(int(k == c) for k in range(n))), beta)
               for c in range(n)]
    wm = tuple(
        tuple((1 if r == c else 0) - fw_pair[c] * bw[r] for c in range(n))
        for r in range(n)
    )
    rm = tuple(
        tuple((1 if r == c else 0) - sr_pair[c] * beta[r] for c in range(n))
        for r in range(n)
    )
    return WeylElement(wm, rm)


def compose(*elems: WeylElement) -> WeylElement:
    """Left-to-right composition: compose(a, b) acts as a after b."""
    out = elems[0]
    for e in elems[1:]:
        out = WeylElement(mat_mul(out.wm, e.wm), mat_mul(out.rm, e.rm))
    return out


def from_word(rs: RootSystem, word) -> WeylElement:
    """Element spelled by simple-reflection indices, leftmost applied last."""
    out = identity(rs)
    for i in word:
        out = compose(out, simple_reflection(rs, i))
    return out


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    wi = tuple(tuple(int(x) for x in row) for row in mat_inv(w.wm))
    ri = tuple(tuple(int(x) for x in row) for row in mat_inv(w.rm))
    return WeylElement(wi, ri)


def act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Linear action on weight coordinates."""
    return mat_vec(w.wm, lam)


def act_root(rs: RootSystem, w: WeylElement, beta: RootVector) -> RootVector:
    return mat_vec(w.rm, beta)


def dot(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Rho-shifted action w.(lam + rho) - rho."""
    shifted = tuple(x + 1 for x in lam)
    moved = mat_vec(w.wm, shifted)
    return tuple(x - 1 for x in moved)


def length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    count = 0
    for beta in rs.positive_roots:
        img = mat_vec(w.rm, beta)
        if any(x < 0 for x in img):
            count += 1
    return count


def dominant_rep_linear(rs: RootSystem, x: Weight):
    """Dominant representative of x under the linear action.

    Returns (dom, w, word) with act(w, x) == dom.  The word lists simple
    reflection indices in composition order (leftmost applied last).
    """
    cur = tuple(x)
    applied: list[int] = []
    while True:
        i = next((j for j in range(rs.n) if cur[j] < 0), None)
        if i is None:
            break
        cur = mat_vec(_simple_matrices(rs, i)[0], cur)
        applied.append(i)
    word = tuple(reversed(applied))
    return cur, from_word(rs, word), word


def longest_element(rs: RootSystem) -> WeylElement:
    """The element of maximal length; sends rho to -rho."""
    neg_rho = tuple(-x for x in rs.rho)
    _, w, _ = dominant_rep_linear(rs, neg_rho)
    return w


def orbit(rs: RootSystem, lam: Weight) -> frozenset[Weight]:
    """Orbit of a weight under the linear action."""
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(rs.n):
                img = mat_vec(_simple_matrices(rs, i)[0], mu)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    """All elements, breadth-first from the identity (deterministic order)."""
    gens = [simple_reflection(rs, i) for i in range(rs.n)]
    start = identity(rs)
    seen = {start.wm: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = compose(w, g)
                if cand.wm not in seen:
                    seen[cand.wm] = cand
                    nxt.append(cand)
        frontier = nxt
    return tuple(seen.values())


@dataclass(frozen=True)
class BwbAnalysis:
    """Where a shifted weight sits relative to the dominant chamber.

    For regular mu + rho this records the unique dominant weight lam with
    dot(w, mu) == lam, and the degree length(w): the only cohomological
    degree in which the simple with highest weight lam can appear, where it
    appears exactly once.
    """

    singular: bool
    lam: Weight | None = None
    w: WeylElement | None = None
    degree: int | None = None
    word: tuple[int, ...] | None = None

    @property
    def regular(self) -> bool:
        return not self.singular


def bwb_analysis(rs: RootSystem, mu: Weight) -> BwbAnalysis:
    shifted = tuple(x + 1 for x in mu)
    for beta in rs.positive_roots:
        if rs.pairing(shifted, beta) == 0:
            return BwbAnalysis(singular=True)
    dom, w, word = dominant_rep_linear(rs, shifted)
    lam = tuple(x - 1 for x in dom)
    return BwbAnalysis(singular=False, lam=lam, w=w, degree=length(rs, w), word=word)
