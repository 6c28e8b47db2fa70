"""Exact linear algebra helpers: integer/Fraction matrices and Hermite normal forms.

Vectors are tuples, matrices are tuples of row tuples.  No floats anywhere;
rational computations use fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

IntVec = tuple[int, ...]
IntMat = tuple[tuple[int, ...], ...]


def identity_matrix(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a, b):
    n = len(b[0])
    return tuple(
        tuple(sum(arow[k] * b[k][j] for k in range(len(b))) for j in range(n))
        for arow in a
    )


def mat_inv(m) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square matrix over the rationals."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def is_positive_definite(m) -> bool:
    """Leading-principal-minor test, exact over the rationals."""
    n = len(m)
    work = [[Fraction(m[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        if work[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            factor = work[r][k] / work[k][k]
            work[r] = [x - factor * y for x, y in zip(work[r], work[k])]
    return True


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with x*a + y*b == g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def hnf_rows(vectors, n: int) -> IntMat:
    """Canonical row Hermite normal form of the lattice spanned by `vectors`.

    Rows come out in echelon order with positive pivots and entries above a
    pivot reduced into [0, pivot).  Two sublattices of Z^n are equal iff their
    forms compare equal.
    """
    basis: list[list[int]] = []  # echelon rows ordered by pivot column
    pivots: list[int] = []

    def insert(vec: list[int]) -> None:
        for col in range(n):
            if vec[col] == 0:
                continue
            if col in pivots:
                p = pivots.index(col)
                row = basis[p]
                a, b = row[col], vec[col]
                if b % a == 0:
                    q = b // a
                    for j in range(col, n):
                        vec[j] -= q * row[j]
                else:
                    g, x, y = _xgcd(a, b)
                    ag, bg = a // g, b // g
                    for j in range(col, n):
                        rj, vj = row[j], vec[j]
                        row[j] = x * rj + y * vj
                        vec[j] = -bg * rj + ag * vj
            else:
                where = sum(1 for p in pivots if p < col)
                basis.insert(where, vec)
                pivots.insert(where, col)
                return

    for v in vectors:
        insert(list(v))

    # canonicalize: positive pivots, then entries above each pivot reduced
    # into [0, pivot); lower rows are processed left to right within a row so
    # a subtraction can only disturb columns that are still to be reduced
    for i, row in enumerate(basis):
        if row[pivots[i]] < 0:
            basis[i] = [-x for x in row]
    for r in range(len(basis)):
        for j in range(r + 1, len(basis)):
            p = pivots[j]
            q = basis[r][p] // basis[j][p]
            if q:
                basis[r] = [x - q * y for x, y in zip(basis[r], basis[j])]
    return tuple(tuple(r) for r in basis)


def hnf_contains(hnf: IntMat, vec) -> bool:
    """Membership of an integer vector in the lattice given by its row HNF."""
    n = len(vec)
    v = list(vec)
    rows = {next(j for j in range(n) if row[j]): row for row in hnf}
    for col in range(n):
        if v[col] == 0:
            continue
        row = rows.get(col)
        if row is None or v[col] % row[col] != 0:
            return False
        q = v[col] // row[col]
        for j in range(col, n):
            v[j] -= q * row[j]
    return True
