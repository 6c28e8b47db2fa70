"""Property-based checks across the exact-arithmetic core."""

from hypothesis import given, settings, strategies as st

from linkage_lab import affine, quantum as q, weyl
from linkage_lab.characters import weyl_character
from linkage_lab.exact import hnf_contains, hnf_rows
from linkage_lab.roots import root_system

TYPES = ["A1", "A2", "B2", "G2"]
st_type = st.sampled_from(TYPES)
st_small = st.integers(min_value=-6, max_value=6)


def weight_for(rs, draw_ints):
    return tuple(draw_ints[: rs.n])


@settings(max_examples=60, deadline=None)
@given(st_type, st.lists(st.integers(0, 2), min_size=0, max_size=6),
       st.lists(st.integers(0, 2), min_size=0, max_size=6),
       st.lists(st_small, min_size=2, max_size=2))
def test_dot_action_composes(name, word1, word2, coords):
    rs = root_system(name)
    w1 = weyl.from_word(rs, [i % rs.n for i in word1])
    w2 = weyl.from_word(rs, [i % rs.n for i in word2])
    lam = tuple(coords[: rs.n])
    assert weyl.dot(rs, weyl.compose(w1, w2), lam) == \
        weyl.dot(rs, w1, weyl.dot(rs, w2, lam))


@settings(max_examples=60, deadline=None)
@given(st_type, st.lists(st_small, min_size=2, max_size=2))
def test_orbit_size_divides_group_order(name, coords):
    rs = root_system(name)
    lam = tuple(coords[: rs.n])
    size = len(weyl.orbit(rs, lam))
    assert len(weyl.weyl_group(rs)) % size == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(-10, 10), st.integers(0, 8), st.integers(1, 3))
def test_qbinom_is_integral(n, t, d):
    q.qbinom(n, t, d)  # exact division raises otherwise


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.integers(1, 3))
def test_qbinom_pascal(n, t, d):
    if t > n:
        return
    v = q.LaurentPoly.monomial
    lhs = q.qbinom(n, t, d)
    rhs = v(d * t) * q.qbinom(n - 1, t, d) + v(-d * (n - t)) * q.qbinom(n - 1, t - 1, d)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10), st.integers(1, 3))
def test_qbinom_bar_symmetric(n, t, d):
    b = q.qbinom(n, t, d)
    assert b == b.bar()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)), max_size=5),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)), max_size=5),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-4, 4)), max_size=5))
def test_laurent_ring_axioms(ta, tb, tc):
    mk = lambda terms: q.LaurentPoly({e: c for e, c in terms})
    a, b, c = mk(ta), mk(tb), mk(tc)
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a * (b * c) == (a * b) * c
    assert a + (-a) == q.LaurentPoly.zero()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_hnf_membership(gens, combo):
    rows = hnf_rows([tuple(g) for g in gens], 3)
    if not rows:
        return
    vec = [0, 0, 0]
    for coeff, g in zip(combo, gens):
        for j in range(3):
            vec[j] += coeff * g[j]
    assert hnf_contains(rows, tuple(vec))
    for row in rows:
        assert hnf_contains(rows, row)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=4),
       st.randoms(use_true_random=False))
def test_hnf_is_canonical(gens, rng):
    # the form must not depend on generator order or on redundant sums
    gens = [tuple(g) for g in gens]
    rows = hnf_rows(gens, 3)
    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert hnf_rows(shuffled, 3) == rows
    padded = gens + [tuple(sum(c) for c in zip(*gens))]
    assert hnf_rows(padded, 3) == rows


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A1", "A2"]), st.lists(st_small, min_size=2, max_size=2))
def test_weight_up_flips(name, coords):
    rs = root_system(name)
    ell = 5
    lam = tuple(coords[: rs.n])
    if affine.fundamental_alcove_position(rs, ell, lam).kind == "wall":
        return
    for g in range(rs.n + 1):
        other, up = affine.weight_up(rs, ell, lam, g)
        back, down = affine.weight_up(rs, ell, other, g)
        assert back == lam and up != down


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A1", "A2"]),
       st.lists(st.integers(-8, 8), min_size=2, max_size=2),
       st.lists(st.integers(-8, 8), min_size=2, max_size=2))
def test_strong_linkage_soundness_sampled(name, mc, lc):
    rs = root_system(name)
    ell = 5
    mu, lam = tuple(mc[: rs.n]), tuple(lc[: rs.n])
    chain = affine.strongly_linked(rs, ell, mu, lam)
    if chain is None:
        return
    assert rs.dominance_leq(mu, lam)
    assert affine.linked(rs, ell, lam, mu)
    for i, (beta, m) in enumerate(chain.steps):
        assert affine.apply_affine_reflection(rs, ell, beta, m, chain.weights[i]) \
            == chain.weights[i + 1]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["A1", "A2", "B2"]),
       st.lists(st.integers(0, 3), min_size=2, max_size=2))
def test_character_orbit_constancy(name, coords):
    rs = root_system(name)
    lam = tuple(coords[: rs.n])
    char = weyl_character(rs, lam)
    for mu, m in char.items():
        for w in weyl.orbit(rs, mu):
            assert char.mult(w) == m
