"""Exact linear algebra over the rationals.

Matrices are 2-d numpy arrays of ``dtype=object`` holding
:class:`fractions.Fraction` entries.  Rank, null spaces and linear solves go
through a fraction-free (Bareiss) echelon form over the integers, so no
floating point value is ever produced.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "contract",
    "Fraction",
    "LambdaPoly",
    "as_matrix",
    "as_vector",
    "format_rational",
    "identity",
    "inverse",
    "is_zero",
    "kernel_basis",
    "matmul",
    "nullspace",
    "parse_rational",
    "quotient_dim",
    "rank",
    "solve",
    "zeros",
]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction. Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def as_matrix(data, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Coerce nested sequences / arrays into an object array of Fractions."""
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        r = rows if rows is not None else (arr.shape[0] if arr.ndim >= 1 else 0)
        c = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return zeros(r, c)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = parse_rational(v)
    if rows is not None and out.shape[0] != rows or cols is not None and out.shape[1] != cols:
        raise ValueError(f"matrix shape {out.shape} != ({rows}, {cols})")
    return out


def as_vector(data) -> np.ndarray:
    arr = np.array(list(data), dtype=object)
    out = np.empty(len(arr), dtype=object)
    for i, v in enumerate(arr):
        out[i] = parse_rational(v)
    return out


def is_zero(arr) -> bool:
    return all(v == 0 for v in np.asarray(arr, dtype=object).flat)


def contract(subscripts: str, *operands) -> np.ndarray:
    """``einsum`` evaluated pairwise; exact on object arrays and much faster than one nested loop."""
    return np.einsum(subscripts, *operands, optimize="greedy")


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product that skips zero entries; D-matrices are very sparse."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = zeros(a.shape[0], b.shape[1])
    b_rows = [[(j, v) for j, v in enumerate(row) if v != 0] for row in b]
    for i, row in enumerate(a):
        acc = out[i]
        for k, v in enumerate(row):
            if v == 0:
                continue
            for j, w in b_rows[k]:
                acc[j] += v * w
    return out


# -- fraction-free elimination ------------------------------------------------


def _integer_rows(m: np.ndarray) -> list[list[int]]:
    """Scale every row by the lcm of its denominators."""
    rows = []
    for row in m:
        fr = [Fraction(v) for v in row]
        scale = lcm(*(f.denominator for f in fr)) if fr else 1
        rows.append([int(f * scale) for f in fr])
    return rows


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by Bareiss elimination.

    Pivot choice is the first nonzero entry in the column (deterministic).
    Returns the echelon rows (only the first ``len(pivots)`` are meaningful)
    and the pivot column indices.
    """
    a = [r[:] for r in rows]
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[c]
            if f == 0:
                if p != prev:
                    # keep the Bareiss invariant: every later row is scaled too
                    for j in range(c + 1, ncols):
                        row_i[j] = row_i[j] * p // prev
                continue
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    _, pivots = _bareiss(_integer_rows(m), m.shape[1])
    return len(pivots)


def _back_substitute(ech: list[list[int]], pivots: list[int], ncols: int,
                     free_values: dict[int, Fraction], rhs: list[int] | None = None) -> list[Fraction]:
    x = [Fraction(0)] * ncols
    for c, v in free_values.items():
        x[c] = v
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = ech[r]
        acc = Fraction(rhs[r]) if rhs is not None else Fraction(0)
        for j in range(c + 1, ncols):
            if row[j] != 0 and x[j] != 0:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def nullspace(m) -> tuple[list[np.ndarray], list[int]]:
    """Null space basis together with the free column of each basis vector.

    Free columns are taken in increasing order and each basis vector has a 1
    in its own free column and 0 in the others, so the coordinates of a
    kernel element in this basis are its entries at the free columns.
    """
    m = np.asarray(m, dtype=object)
    ncols = m.shape[1] if m.ndim == 2 else 0
    if m.shape[0] == 0:
        pivots, ech = [], []
    else:
        ech, pivots = _bareiss(_integer_rows(m), ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = [np.array(_back_substitute(ech, pivots, ncols, {f: Fraction(1)}), dtype=object)
             for f in free]
    return basis, free


def kernel_basis(m) -> list[np.ndarray]:
    """A basis of the right null space, one vector per free column (see :func:`nullspace`)."""
    return nullspace(m)[0]


def solve(m, b) -> np.ndarray | None:
    """Some exact solution of ``m @ x == b`` or None when inconsistent."""
    m = np.asarray(m, dtype=object)
    b = [parse_rational(v) for v in b]
    if m.ndim != 2 or m.shape[0] != len(b):
        raise ValueError(f"dimension mismatch: matrix {m.shape}, rhs length {len(b)}")
    nrows, ncols = m.shape
    if nrows == 0:
        return np.array([Fraction(0)] * ncols, dtype=object)
    aug = np.empty((nrows, ncols + 1), dtype=object)
    aug[:, :ncols] = m
    aug[:, ncols] = b
    ech, pivots = _bareiss(_integer_rows(aug), ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    rhs = [ech[r][ncols] for r in range(len(pivots))]
    x = _back_substitute([row[:ncols] for row in ech], pivots, ncols, {}, rhs)
    return np.array(x, dtype=object)


def inverse(m) -> np.ndarray:
    m = np.asarray(m, dtype=object)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError(f"not square: {m.shape}")
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        x = solve(m, e)
        if x is None:
            raise np.linalg.LinAlgError("matrix is singular")
        cols.append(x)
    out = zeros(n, n)
    for j, x in enumerate(cols):
        out[:, j] = x
    return out


def _span_rank(vectors: Sequence) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return rank(np.array([list(v) for v in vectors], dtype=object))


class BrokenComplexError(ArithmeticError):
    """Image generators are not contained in the kernel span (D∘D ≠ 0)."""


def quotient_dim(ker_gens: Iterable, im_gens: Iterable) -> int:
    """``dim span(ker_gens) - dim span(im_gens)`` after checking containment."""
    ker_gens = [list(v) for v in ker_gens]
    im_gens = [list(v) for v in im_gens]
    k = _span_rank(ker_gens)
    i = _span_rank(im_gens)
    if im_gens and _span_rank(ker_gens + im_gens) != k:
        raise BrokenComplexError("image is not contained in the kernel")
    return k - i


# -- polynomials in the deformation parameter ---------------------------------


class LambdaPoly:
    """Univariate polynomial in λ with rational coefficients.

    ``coeffs[k]`` is the coefficient of λ**k; trailing zeros are trimmed so the
    zero polynomial has no coefficients.  Instances mix freely with ints and
    Fractions, which lets numpy object arrays of them be contracted with
    ``np.einsum`` like ordinary scalars.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def lam(cls) -> "LambdaPoly":
        return cls([0, 1])

    @staticmethod
    def _lift(other) -> "LambdaPoly":
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, lam) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return LambdaPoly(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            terms.append(f"{format_rational(c)}{'*' if mono else ''}{mono}")
        return " + ".join(terms)
