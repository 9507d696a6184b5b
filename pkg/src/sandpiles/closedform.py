"""Fibonacci/Lucas arithmetic and explicit inverse-Laplacian formulas.

Conventions: F_1 = F_2 = 1 (so F_0 = 0) and A_0 = 2, A_1 = 1 for the Lucas
numbers.  Negative indices use the reflections F_{-a} = (-1)^(a+1) F_a and
A_{-a} = (-1)^a A_a.  Sequences are memoized and computed iteratively; no
floating-point closed forms.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SizeTooSmallError

_fib_cache = [0, 1]
_lucas_cache = [2, 1]


def _extend(cache, k):
    while len(cache) <= k:
        cache.append(cache[-1] + cache[-2])


def fib(k: int) -> int:
    """k-th Fibonacci number, any integer k."""
    if k < 0:
        a = -k
        return fib(a) if a % 2 == 1 else -fib(a)
    _extend(_fib_cache, k)
    return _fib_cache[k]


def lucas(k: int) -> int:
    """k-th Lucas number, any integer k."""
    if k < 0:
        a = -k
        return lucas(a) if a % 2 == 0 else -lucas(a)
    _extend(_lucas_cache, k)
    return _lucas_cache[k]


# --- closed-form inverse reduced Laplacians ---------------------------------

def path_inverse(n: int) -> list[list[Fraction]]:
    """Inverse reduced Laplacian of the path on n+1 vertices (sink at the
    end): entry (i, j) is min(i, j) with 1-based indices."""
    if n < 1:
        raise SizeTooSmallError("path_inverse needs n >= 1")
    return [
        [Fraction(min(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)
    ]


def complete_inverse(n: int) -> list[list[Fraction]]:
    """Inverse reduced Laplacian of the complete graph on n+1 vertices:
    (ones + identity) / (n+1)."""
    if n < 2:
        raise SizeTooSmallError("complete_inverse needs n >= 2")
    den = n + 1
    return [
        [Fraction(2 if i == j else 1, den) for j in range(n)] for i in range(n)
    ]


def wheel_inverse(n: int) -> list[list[Fraction]]:
    """Inverse reduced Laplacian of the wheel with n rim vertices.

    A circulant driven by its first row.  At cyclic offset m the entry is
    A_|n-2m| / (5 F_n) for even n and F_|n-2m| / A_n for odd n; the row is
    symmetric about offset n/2, where the central value is A_0 (even) or
    the doubled F_1 pair (odd).
    """
    if n < 3:
        raise SizeTooSmallError("wheel_inverse needs n >= 3")
    if n % 2 == 0:
        den = 5 * fib(n)
        first = [Fraction(lucas(abs(n - 2 * m)), den) for m in range(n)]
    else:
        den = lucas(n)
        first = [Fraction(fib(abs(n - 2 * m)), den) for m in range(n)]
    return [[first[(j - i) % n] for j in range(n)] for i in range(n)]


# --- spanning tree counts ----------------------------------------------------

def wheel_tree_count(n: int) -> int:
    """Spanning trees of the wheel with n rim vertices: A_(2n) - 2."""
    if n < 3:
        raise SizeTooSmallError("wheel_tree_count needs n >= 3")
    return lucas(2 * n) - 2


def cone_path_tree_count(k: int) -> int:
    """Spanning trees of the cone over a k-vertex path: F_(2k)."""
    if k < 1:
        raise SizeTooSmallError("cone_path_tree_count needs k >= 1")
    return fib(2 * k)


def cayley_count(n: int) -> int:
    """Spanning trees of the complete graph on n+1 vertices: (n+1)^(n-1)."""
    if n < 1:
        raise SizeTooSmallError("cayley_count needs n >= 1")
    return (n + 1) ** (n - 1)


# --- identity checks ----------------------------------------------------------

def lucas_congruences_check(j: int, ell: int, c: int) -> bool:
    """Check A_(2j) == (-1)^j A_0 mod 5 and
    A_(2(j + c*2^ell)) == (-1)^c A_(2j) mod A_(2^ell)."""
    if ell < 1:
        raise SizeTooSmallError("lucas_congruences_check needs ell >= 1")
    sj = -1 if j % 2 else 1
    sc = -1 if c % 2 else 1
    mod5_ok = (lucas(2 * j) - sj * lucas(0)) % 5 == 0
    m = lucas(2**ell)
    shift_ok = (lucas(2 * (j + c * 2**ell)) - sc * lucas(2 * j)) % m == 0
    return mod5_ok and shift_ok


def fib_lucas_identity_check(a: int, b: int) -> bool:
    """Check all four addition/subtraction identities exactly:
    2 F_(a+b) = F_a A_b + A_a F_b,   2 A_(a+b) = 5 F_a F_b + A_a A_b,
    2 F_(a-b) = (-1)^b (F_a A_b - A_a F_b),
    2 A_(a-b) = (-1)^(b+1) (5 F_a F_b - A_a A_b)."""
    fa, fb = fib(a), fib(b)
    la, lb = lucas(a), lucas(b)
    sb = -1 if b % 2 else 1
    return (
        2 * fib(a + b) == fa * lb + la * fb
        and 2 * lucas(a + b) == 5 * fa * fb + la * lb
        and 2 * fib(a - b) == sb * (fa * lb - la * fb)
        and 2 * lucas(a - b) == -sb * (5 * fa * fb - la * lb)
    )
