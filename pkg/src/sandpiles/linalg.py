"""Exact integer/rational linear algebra for graph Laplacians.

All arithmetic is arbitrary precision: matrices are plain lists of lists of
Python ints or fractions.Fraction (always in lowest terms with positive
denominator, so equality is structural).  No floating point anywhere.
Determinants use fraction-free Bareiss elimination; inverses solve one
column at a time.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IndexOutOfRangeError, NotSquareError, SingularMatrixError
from .graph import Multigraph


def laplacian(g: Multigraph) -> list[list[int]]:
    """Full (n+1)x(n+1) Laplacian: degree on the diagonal, minus the edge
    multiplicity off it.  Rows and columns sum to zero."""
    n = g.n_vertices
    return [
        [g.degree(v) if v == w else -g.multiplicity(v, w) for w in range(n)]
        for v in range(n)
    ]


def reduced_laplacian(g: Multigraph) -> list[list[int]]:
    """Laplacian with the sink row and column deleted.

    Row/column i corresponds to g.non_sink[i], matching sandpile vectors.
    """
    return [
        [g.degree(v) if v == w else -g.multiplicity(v, w) for w in g.non_sink]
        for v in g.non_sink
    ]


def minor_matrix(M, delete_rows, delete_cols) -> list[list]:
    """Delete the given row and column index sets (0-based)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    dr = set(delete_rows)
    dc = set(delete_cols)
    if any(not 0 <= i < rows for i in dr) or any(not 0 <= j < cols for j in dc):
        raise IndexOutOfRangeError("deletion index out of range")
    return [
        [M[i][j] for j in range(cols) if j not in dc]
        for i in range(rows)
        if i not in dr
    ]


def _require_square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquareError("matrix must be square")
    return n


def det_exact(M) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Fraction-free: every intermediate entry stays an integer.
    """
    n = _require_square(M)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(M) -> int:
    """Determinant by first-row cofactor expansion; the slow cross-check."""
    n = _require_square(M)

    def rec(rows, cols):
        if not cols:
            return 1
        i = rows[0]
        rest = rows[1:]
        total = 0
        for t, j in enumerate(cols):
            entry = M[i][j]
            if entry:
                sub = cols[:t] + cols[t + 1 :]
                term = entry * rec(rest, sub)
                total += term if t % 2 == 0 else -term
        return total

    return rec(tuple(range(n)), tuple(range(n)))


def solve_exact(M, b) -> list[Fraction]:
    """Exact rational solve of Mx = b by Gaussian elimination."""
    n = _require_square(M)
    if len(b) != n:
        raise IndexOutOfRangeError("right-hand side has wrong length")
    a = [[Fraction(x) for x in row] for row in M]
    x = [Fraction(v) for v in b]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            x[k], x[pivot_row] = x[pivot_row], x[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                row_i, row_k = a[i], a[k]
                for j in range(k, n):
                    row_i[j] -= factor * row_k[j]
                x[i] -= factor * x[k]
    for k in range(n - 1, -1, -1):
        s = x[k]
        row = a[k]
        for j in range(k + 1, n):
            s -= row[j] * x[j]
        x[k] = s / row[k]
    return x


def inverse_exact(M) -> list[list[Fraction]]:
    """Exact rational inverse, one solve per column."""
    n = _require_square(M)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve_exact(M, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def incidence(g: Multigraph, edge_order=None, orientations=None) -> list[list[int]]:
    """|E| x |V| incidence matrix, one row per parallel edge copy.

    Default edge order is g.edges(); the default orientation directs each
    edge from its lower-indexed endpoint to the higher (-1 at the tail, +1
    at the head).  ``orientations`` flips individual rows with -1 entries.
    The product (transpose B) B equals the Laplacian for every choice.
    """
    edges = list(edge_order) if edge_order is not None else list(g.edges())
    if orientations is None:
        orientations = [1] * len(edges)
    if len(orientations) != len(edges):
        raise IndexOutOfRangeError("one orientation per edge is required")
    B = []
    for (v, w), s in zip(edges, orientations):
        row = [0] * g.n_vertices
        row[v] = -s
        row[w] = s
        B.append(row)
    return B


# --- small matrix/vector helpers --------------------------------------------

def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M) -> list[list]:
    return [list(col) for col in zip(*M)]


def mat_mul(A, B) -> list[list]:
    bt = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in A]


def mat_vec(M, x) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in M]


def is_identity(M) -> bool:
    n = len(M)
    return all(
        len(row) == n and all(row[j] == (1 if i == j else 0) for j in range(n))
        for i, row in enumerate(M)
    )


def matrix_to_json(M) -> list[list[str]]:
    """Arrays-of-arrays of exact decimal strings ("p/q" for non-integers)."""
    return [[str(x) for x in row] for row in M]


def matrix_from_json(data) -> list[list[Fraction]]:
    return [[Fraction(s) for s in row] for row in data]
