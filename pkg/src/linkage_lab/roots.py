"""Root systems from Cartan data, with exact pairings and order relations.

Conventions
-----------
* Weights are integer tuples in the fundamental-weight basis: the i-th
  coordinate of lam is <lam, alpha_i^vee>.
* Root-lattice elements ("root vectors") are integer tuples in the
  simple-root basis.
* The Cartan matrix satisfies c[i][j] = <alpha_j, alpha_i^vee>, so the
  weight coordinates of a root vector beta are the matrix product C.beta.
* Root lengths are normalized so short roots have squared length 2, hence
  the symmetrizers d_i lie in {1, 2, 3}.

All arithmetic is exact (ints and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import hnf_rows, is_positive_definite, mat_inv, mat_vec

Weight = tuple[int, ...]
RootVector = tuple[int, ...]

_SERIES = "ABCDEFG"


class CartanMatrixError(ValueError):
    """Raised when Cartan input is not a valid finite-type datum."""


@dataclass(frozen=True)
class CartanSpec:
    """Either a (series, rank) pair or an explicit Cartan matrix."""

    series: str | None = None
    rank: int | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None

    @staticmethod
    def from_name(name: str) -> "CartanSpec":
        name = name.strip()
        if len(name) < 2 or name[0].upper() not in _SERIES:
            raise CartanMatrixError(f"unrecognized type name {name!r}")
        try:
            rank = int(name[1:])
        except ValueError:
            raise CartanMatrixError(f"unrecognized type name {name!r}") from None
        return CartanSpec(series=name[0].upper(), rank=rank)

    @staticmethod
    def from_matrix(rows) -> "CartanSpec":
        return CartanSpec(matrix=tuple(tuple(int(x) for x in row) for row in rows))


def _chain_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def _series_gram(series: str, n: int):
    """Gram matrix (alpha_i, alpha_j) of the simple roots, short length^2 = 2."""
    if n < 1:
        raise CartanMatrixError("rank must be a positive integer")
    if series == "A":
        diag = [2] * n
        edges = {e: -1 for e in _chain_edges(n)}
    elif series == "B":
        if n < 2:
            raise CartanMatrixError("type B needs rank >= 2")
        diag = [4] * (n - 1) + [2]
        edges = {e: -2 for e in _chain_edges(n)}
    elif series == "C":
        if n < 2:
            raise CartanMatrixError("type C needs rank >= 2")
        diag = [2] * (n - 1) + [4]
        edges = {e: -1 for e in _chain_edges(n)}
        edges[(n - 2, n - 1)] = -2
    elif series == "D":
        if n < 2:
            raise CartanMatrixError("type D needs rank >= 2")
        diag = [2] * n
        edges = {e: -1 for e in _chain_edges(n - 1)}
        if n >= 3:
            edges[(n - 3, n - 1)] = -1
    elif series == "E":
        if n not in (6, 7, 8):
            raise CartanMatrixError("type E needs rank 6, 7 or 8")
        diag = [2] * n
        # node 2 hangs off node 4 on the chain 1-3-4-5-...-n
        chain = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        edges = {e: -1 for e in chain}
        edges[(1, 3)] = -1
    elif series == "F":
        if n != 4:
            raise CartanMatrixError("type F needs rank 4")
        diag = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif series == "G":
        if n != 2:
            raise CartanMatrixError("type G needs rank 2")
        diag = [2, 6]
        edges = {(0, 1): -3}
    else:
        raise CartanMatrixError(f"unknown series {series!r}")
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = diag[i]
    for (i, j), v in edges.items():
        gram[i][j] = v
        gram[j][i] = v
    return tuple(tuple(r) for r in gram)


def _components(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], []
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            comp.append(i)
            stack.extend(j for j in range(n) if j != i and cartan[i][j] != 0)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _symmetrizer(cartan, components) -> tuple[int, ...]:
    """Positive integer d with diag(d).C symmetric, minimized per component."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for comp in components:
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                if cartan[j][i] == 0:
                    raise CartanMatrixError(
                        f"entry ({j},{i}) is zero but ({i},{j}) is not: not symmetrizable"
                    )
                ratio = Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = d[i] * ratio
                    stack.append(j)
                elif d[j] != d[i] * ratio:
                    raise CartanMatrixError("no consistent symmetrizer exists")
        denom = 1
        for i in comp:
            denom = denom * d[i].denominator // _gcd(denom, d[i].denominator)
        vals = [int(d[i] * denom) for i in comp]
        g = 0
        for v in vals:
            g = _gcd(g, v)
        for i, v in zip(comp, vals):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class RootSystem:
    """Immutable root-system data derived from a valid Cartan matrix.

    Attributes
    ----------
    n : rank
    cartan : Cartan matrix rows, c[i][j] = <alpha_j, alpha_i^vee>
    d : symmetrizers, d[i] = (alpha_i, alpha_i) / 2
    positive_roots : all positive roots in simple-root coordinates
    rho : the all-ones weight
    h : Coxeter number, 1 + height of the highest root (max over components)
    num_positive : number of positive roots
    """

    def __init__(self, cartan, name: str | None = None):
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        n = len(cartan)
        if n == 0 or any(len(row) != n for row in cartan):
            raise CartanMatrixError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if cartan[i][i] != 2:
                raise CartanMatrixError(f"diagonal entry ({i},{i}) must be 2")
            for j in range(n):
                if i != j and cartan[i][j] > 0:
                    raise CartanMatrixError(
                        f"off-diagonal entry ({i},{j}) must be non-positive"
                    )
        components = _components(cartan)
        d = _symmetrizer(cartan, components)
        sym = tuple(tuple(d[i] * cartan[i][j] for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if sym[i][j] != sym[j][i]:
                    raise CartanMatrixError("symmetrized matrix DC is not symmetric")
        if not is_positive_definite(sym):
            raise CartanMatrixError("DC is not positive definite: not finite type")

        self.name = name
        self.n = n
        self.cartan = cartan
        self.d = d
        self.sym = sym
        self.components = components
        self.rho: Weight = (1,) * n
        self._cartan_inv = mat_inv(cartan)
        den = 1
        for row in self._cartan_inv:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        self._cinv_den = den
        self._cinv_scaled = tuple(
            tuple(int(x * den) for x in row) for row in self._cartan_inv
        )

        self.positive_roots = self._close_roots()
        self.num_positive = len(self.positive_roots)
        self._root_set = frozenset(self.positive_roots) | frozenset(
            tuple(-x for x in b) for b in self.positive_roots
        )
        self._d_beta = {b: self._length_half(b) for b in self.positive_roots}
        if any(db not in (1, 2, 3) for db in self._d_beta.values()):
            raise CartanMatrixError("root half-lengths leave {1,2,3}: bad normalization")

        self._highest_by_comp = tuple(
            max((b for b in self.positive_roots if set(self._support(b)) <= set(c)),
                key=lambda b: (sum(b), b))
            for c in components
        )
        self._highest_short_by_comp = tuple(
            max((b for b in self.positive_roots
                 if set(self._support(b)) <= set(c) and self._d_beta[b] == 1),
                key=lambda b: (sum(b), b))
            for c in components
        )
        self.h = 1 + max(sum(b) for b in self._highest_by_comp)

    # -- construction ------------------------------------------------------

    def _close_roots(self) -> tuple[RootVector, ...]:
        n = self.n
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple) | {tuple(-x for x in b) for b in simple}
        frontier = set(roots)
        # |R| <= n * h <= n * 30 for the finite types we accept; the cap only
        # guards against a non-finite matrix slipping past the minor test
        cap = 16 * n * n + 260
        while frontier:
            new = set()
            for b in frontier:
                wc = self.weight_coords(b)
                for i in range(n):
                    img = list(b)
                    img[i] -= wc[i]
                    img_t = tuple(img)
                    if img_t not in roots:
                        new.add(img_t)
            roots |= new
            frontier = new
            if len(roots) > 2 * cap:
                raise CartanMatrixError("root closure did not terminate: not finite type")
        pos = sorted((b for b in roots if all(x >= 0 for x in b)),
                     key=lambda b: (sum(b), b))
        return tuple(pos)

    def _support(self, beta: RootVector):
        return [i for i, x in enumerate(beta) if x]

    def _length_half(self, beta: RootVector) -> int:
        num = sum(beta[i] * self.sym[i][j] * beta[j]
                  for i in range(self.n) for j in range(self.n))
        return num // 2

    # -- basic queries -----------------------------------------------------

    @property
    def highest_root(self) -> RootVector:
        if len(self.components) != 1:
            raise ValueError("highest root is defined per indecomposable component")
        return self._highest_by_comp[0]

    @property
    def highest_short_root(self) -> RootVector:
        if len(self.components) != 1:
            raise ValueError("highest short root is defined per indecomposable component")
        return self._highest_short_by_comp[0]

    @property
    def indecomposable(self) -> bool:
        return len(self.components) == 1

    def is_root(self, beta: RootVector) -> bool:
        return tuple(beta) in self._root_set

    def d_of_root(self, beta: RootVector) -> int:
        """Half squared length of a root, in {1, 2, 3}."""
        b = tuple(beta)
        pos = b if all(x >= 0 for x in b) else tuple(-x for x in b)
        try:
            return self._d_beta[pos]
        except KeyError:
            raise ValueError(f"{beta} is not a root") from None

    def weight_coords(self, beta) -> Weight:
        """Weight coordinates C.beta of a root-lattice element."""
        return mat_vec(self.cartan, tuple(beta))

    def pairing(self, lam: Weight, beta: RootVector) -> int:
        """<lam, beta^vee> for a root beta; exact integer."""
        b = tuple(beta)
        if not self.is_root(b):
            raise ValueError(f"{beta} is not a root (or is zero)")
        num = sum(b[j] * self.d[j] * lam[j] for j in range(self.n))
        db = self.d_of_root(b)
        q, r = divmod(num, db)
        if r:
            raise ArithmeticError("pairing is not integral; inconsistent input")
        return q

    def height(self, beta: RootVector) -> int:
        return sum(beta)

    def root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Rational simple-root coordinates of a weight."""
        return mat_vec(self._cartan_inv, tuple(Fraction(x) for x in lam))

    def in_root_lattice(self, lam: Weight) -> RootVector | None:
        """Integer simple-root coordinates of lam, or None if lam is not in Y."""
        coords = self.root_coords(lam)
        if all(c.denominator == 1 for c in coords):
            return tuple(int(c) for c in coords)
        return None

    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """mu <= lam iff lam - mu is an N-combination of simple roots."""
        diff = tuple(a - b for a, b in zip(lam, mu))
        den = self._cinv_den
        for row in self._cinv_scaled:
            c = sum(row[j] * diff[j] for j in range(self.n))
            if c < 0 or c % den:
                return False
        return True

    def is_dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    def bilinear(self, lam: Weight, mu: Weight) -> Fraction:
        """The W-invariant form (lam, mu) on the weight space."""
        coords = self.root_coords(mu)
        return sum((Fraction(self.d[j]) * lam[j] * coords[j] for j in range(self.n)),
                   Fraction(0))

    def has_g2_component(self) -> bool:
        return any(di == 3 for di in self.d)

    def validate_ell(self, ell: int) -> "EllReport":
        if ell < 1:
            raise ValueError("ell must be a positive integer")
        return EllReport(
            ell=ell,
            odd=ell % 2 == 1,
            coprime_to_three_if_g2=(not self.has_g2_component()) or ell % 3 != 0,
            greater_than_coxeter=ell > self.h,
        )

    # -- misc --------------------------------------------------------------

    def __repr__(self):
        tag = self.name or f"rank {self.n}"
        return f"RootSystem({tag}, {self.num_positive} positive roots)"

    # identity semantics; instances are de-duplicated by the factory below
    __hash__ = object.__hash__


@dataclass(frozen=True)
class EllReport:
    """Independent validity flags for the scale parameter ell."""

    ell: int
    odd: bool
    coprime_to_three_if_g2: bool
    greater_than_coxeter: bool

    @property
    def all_ok(self) -> bool:
        return self.odd and self.coprime_to_three_if_g2 and self.greater_than_coxeter

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "odd": self.odd,
            "coprime_to_three_if_g2": self.coprime_to_three_if_g2,
            "greater_than_coxeter": self.greater_than_coxeter,
            "all_ok": self.all_ok,
        }


def build(spec: CartanSpec) -> RootSystem:
    """Construct a RootSystem from a CartanSpec, validating the input."""
    if spec.matrix is not None:
        return RootSystem(spec.matrix)
    if spec.series is None or spec.rank is None:
        raise CartanMatrixError("spec needs either a series and rank or a matrix")
    gram = _series_gram(spec.series.upper(), spec.rank)
    d = [gram[i][i] // 2 for i in range(spec.rank)]
    cartan = tuple(
        tuple(gram[i][j] // d[i] for j in range(spec.rank)) for i in range(spec.rank)
    )
    return RootSystem(cartan, name=f"{spec.series.upper()}{spec.rank}")


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    """Cached factory for named systems such as "A2" or "G2"."""
    return build(CartanSpec.from_name(name))


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse a weight literal "[a1,...,an]". Raises ValueError with position info."""
    return _parse_bracketed(text, text, rank)


def parse_root(text: str, rank: int | None = None) -> RootVector:
    """Parse a root-lattice literal "r[m1,...,mn]"."""
    stripped = text.strip()
    if not stripped.startswith("r"):
        raise ValueError(f"root literal must start with 'r' (got {text!r} at position 0)")
    return _parse_bracketed(stripped[1:], text, rank)


def _parse_bracketed(body: str, original: str, rank: int | None) -> tuple[int, ...]:
    body = body.strip()
    offset = original.find(body) if body else len(original)
    if not body.startswith("["):
        raise ValueError(f"expected '[' at position {offset} in {original!r}")
    if not body.endswith("]"):
        raise ValueError(f"expected ']' at position {len(original) - 1} in {original!r}")
    inner = body[1:-1].strip()
    entries = [] if inner == "" else inner.split(",")
    out = []
    pos = offset + 1
    for entry in entries:
        stripped = entry.strip()
        try:
            out.append(int(stripped))
        except ValueError:
            raise ValueError(
                f"expected an integer at position {pos} in {original!r} (got {stripped!r})"
            ) from None
        pos += len(entry) + 1
    if rank is not None and len(out) != rank:
        raise ValueError(
            f"expected {rank} coordinates in {original!r}, got {len(out)}"
        )
    return tuple(out)


def format_weight(lam) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def format_root(beta) -> str:
    return "r[" + ",".join(str(x) for x in beta) + "]"


def root_lattice_hnf(rs: RootSystem, vectors) -> tuple:
    """Row HNF of the sublattice of Y spanned by integer root vectors."""
    return hnf_rows(vectors, rs.n)
