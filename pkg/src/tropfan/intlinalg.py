"""Exact linear algebra over the integers and rationals.

Everything here runs on plain Python ints and ``fractions.Fraction``; no
floating point.  The integer side provides row Hermite forms with transform
matrices, kernels, lattice saturations and membership tests, which is what
the primitive-normal-vector computation needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vec = Sequence[int]
Mat = Sequence[Sequence[int]]


def hnf_transform(rows: Mat) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form with transform: returns (H, U) with U*M = H.

    U is unimodular; H is in row echelon form with positive pivots and entries
    above each pivot reduced into [0, pivot).  Zero rows of H sink to the
    bottom.
    """
    h = [list(r) for r in rows]
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    pivot_row = 0
    for col in range(ncols):
        # clear the column below pivot_row by gcd steps
        while True:
            nonzero = [i for i in range(pivot_row, nrows) if h[i][col] != 0]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: abs(h[i][col]))
            if i0 != pivot_row:
                h[i0], h[pivot_row] = h[pivot_row], h[i0]
                u[i0], u[pivot_row] = u[pivot_row], u[i0]
            a = h[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, nrows):
                q = h[i][col] // a
                if q:
                    _row_sub(h[i], h[pivot_row], q)
                    _row_sub(u[i], u[pivot_row], q)
                if h[i][col]:
                    done = False
            if done:
                break
        if pivot_row < nrows and h[pivot_row][col] != 0:
            if h[pivot_row][col] < 0:
                h[pivot_row] = [-x for x in h[pivot_row]]
                u[pivot_row] = [-x for x in u[pivot_row]]
            a = h[pivot_row][col]
            for i in range(pivot_row):
                q = h[i][col] // a
                if q:
                    _row_sub(h[i], h[pivot_row], q)
                    _row_sub(u[i], u[pivot_row], q)
            pivot_row += 1
            if pivot_row == nrows:
                break
    return h, u


def _row_sub(target: list[int], source: list[int], q: int):
    for j, s in enumerate(source):
        if s:
            target[j] -= q * s


def hnf(rows: Mat) -> list[list[int]]:
    """Nonzero rows of the row Hermite normal form."""
    h, _ = hnf_transform(rows)
    return [r for r in h if any(r)]


def left_kernel(rows: Mat) -> list[list[int]]:
    """Basis of {x integer : x * M = 0}, as rows."""
    h, u = hnf_transform(rows)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def transpose(rows: Mat) -> list[list[int]]:
    return [list(col) for col in zip(*rows)] if rows else []


def orthogonal_complement(rows: Mat, ncols: int) -> list[list[int]]:
    """Basis of the lattice of integer vectors orthogonal to all given rows."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    return left_kernel(transpose(rows))


def saturation(rows: Mat, ncols: int) -> list[list[int]]:
    """Basis of (rational row span of M) intersected with Z^ncols.

    Computed as the double orthogonal complement; integer kernels are always
    saturated.
    """
    comp = orthogonal_complement(rows, ncols)
    return orthogonal_complement(comp, ncols)


def hnf_reduce(basis_hnf: Mat, vec: Vec) -> list[int]:
    """Reduce ``vec`` modulo the lattice spanned by HNF ``basis_hnf`` rows.

    Subtracts integer multiples of the basis rows so that each pivot
    coordinate of the result lies in [0, pivot).  The result is the canonical
    coset representative; it is zero exactly when ``vec`` is in the lattice.
    """
    v = list(vec)
    for row in basis_hnf:
        col = next((j for j, x in enumerate(row) if x), None)
        if col is None:
            continue
        q = v[col] // row[col]
        if q:
            _row_sub(v, row, q)
    return v


def in_lattice(basis_hnf: Mat, vec: Vec) -> bool:
    return not any(hnf_reduce(basis_hnf, vec))


def det_int(rows: Mat) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def primitive_vector(vec: Vec) -> list[int]:
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    g = 0
    for x in vec:
        g = _gcd(g, abs(x))
    if g == 0:
        return list(vec)
    return [x // g for x in vec]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def solve_coeffs_one(g: Sequence[int]) -> Optional[list[int]]:
    """Integer coefficients c with sum(c_i * g_i) == 1, or None if gcd(g) != 1."""
    acc = 0
    acc_coeffs = [0] * len(g)
    for i, x in enumerate(g):
        if x == 0:
            continue
        r, s, d = _xgcd(acc, x)  # r*acc + s*x == d
        acc_coeffs = [r * c for c in acc_coeffs]
        acc_coeffs[i] = s
        acc = d
    return acc_coeffs if acc == 1 else None


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
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
    return x, y, g


# ---------------------------------------------------------------------------
# Rational elimination


def rational_rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_in_span(rows: Sequence[Sequence], target: Sequence) -> Optional[list[Fraction]]:
    """Coefficients c with sum(c_i * rows_i) == target, or None.

    When the rows are linearly independent the solution is unique.
    """
    nrows = len(rows)
    if nrows == 0:
        return [] if not any(target) else None
    ncols = len(rows[0])
    # columns of the system are the given rows; eliminate on the transpose
    aug = [[Fraction(rows[i][j]) for i in range(nrows)] + [Fraction(target[j])]
           for j in range(ncols)]
    pivots: list[tuple[int, int]] = []
    rank = 0
    for col in range(nrows):
        pivot = next((i for i in range(rank, ncols) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for i in range(ncols):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append((rank, col))
        rank += 1
    for i in range(rank, ncols):
        if aug[i][nrows] != 0:
            return None
    coeffs = [Fraction(0)] * nrows
    for row, col in pivots:
        coeffs[col] = aug[row][nrows]
    return coeffs


def in_rational_span(rows: Sequence[Sequence], target: Sequence) -> bool:
    return solve_in_span(rows, target) is not None


def invert_rational(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square matrix by Gauss-Jordan over the rationals."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]
