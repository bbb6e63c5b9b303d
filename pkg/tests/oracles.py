"""Independent reference computations used as test oracles.

Nothing here calls the einsum-based kernels of the package: brackets are
evaluated by explicit loops and ranks come from sympy.
"""

from __future__ import annotations

from itertools import combinations, product

import sympy
import sympy.combinatorics


def _vec(n):
    return [0] * n


def _add(u, v, c=1):
    return [a + c * b for a, b in zip(u, v)]


class Loops:
    """Structure maps of a Lie 2-algebra evaluated on coordinate vectors."""

    def __init__(self, L):
        self.m, self.n = L.dim0, L.dim1
        self.d, self.b00, self.b01, self.l3 = L.d, L.br00, L.br01, L.l3

    def dv(self, a):
        return [sum(self.d[k, j] * a[j] for j in range(self.n)) for k in range(self.m)]

    def br00(self, x, y):
        out = _vec(self.m)
        for i, j in product(range(self.m), repeat=2):
            if x[i] and y[j]:
                for k in range(self.m):
                    out[k] += x[i] * y[j] * self.b00[i, j, k]
        return out

    def br01(self, x, a):
        out = _vec(self.n)
        for i, j in product(range(self.m), range(self.n)):
            if x[i] and a[j]:
                for k in range(self.n):
                    out[k] += x[i] * a[j] * self.b01[i, j, k]
        return out

    def br11(self, a, b):
        # [a, b] = 0 for two degree -1 elements; [da, b] means [x, b] with x = da
        return _vec(self.n)

    def l3v(self, x, y, z):
        out = _vec(self.n)
        for i, j, k in product(range(self.m), repeat=3):
            c = x[i] * y[j] * z[k]
            if c:
                for r in range(self.n):
                    out[r] += c * self.l3[i, j, k, r]
        return out

    def e(self, i):
        v = _vec(self.m)
        v[i] = 1
        return v

    def f(self, j):
        v = _vec(self.n)
        v[j] = 1
        return v


def axioms_oracle(L) -> dict[str, bool]:
    """Which of the five axioms hold, by direct evaluation on basis tuples.

    (v) is evaluated in the Baez-Crans form of the 2-term L∞ relation.
    """
    o = Loops(L)
    m, n = o.m, o.n
    E, F = [o.e(i) for i in range(m)], [o.f(j) for j in range(n)]
    ok = {k: True for k in ("i", "ii", "iii", "iv", "v")}
    for x, a in product(E, F):
        if o.dv(o.br01(x, a)) != o.br00(x, o.dv(a)):
            ok["i"] = False
    for a, b in product(F, F):
        # [da, b] - [a, db] with [a, x] = -[x, a]
        if _add(o.br01(o.dv(a), b), o.br01(o.dv(b), a)) != _vec(n):
            ok["ii"] = False
    for x, y, z in product(E, repeat=3):
        s = _add(_add(o.br00(o.br00(x, y), z), o.br00(o.br00(y, z), x)), o.br00(o.br00(z, x), y))
        if _add(s, o.dv(o.l3v(x, y, z))) != _vec(m):
            ok["iii"] = False
    for x, y, a in product(E, E, F):
        # [[y,a],x] = -[x,[y,a]] and [[a,x],y] = [y,[x,a]]
        s = _add(o.br01(o.br00(x, y), a), o.br01(x, o.br01(y, a)), -1)
        s = _add(s, o.br01(y, o.br01(x, a)))
        if _add(s, o.l3v(x, y, o.dv(a))) != _vec(n):
            ok["iv"] = False
    for x, y, z, t in product(E, repeat=4):
        lhs = _vec(n)
        for sign, p, rest in ((1, x, (y, z, t)), (-1, y, (x, z, t)), (1, z, (x, y, t)), (-1, t, (x, y, z))):
            lhs = _add(lhs, o.br01(p, o.l3v(*rest)), sign)
        rhs = _vec(n)
        for sign, (u, v), (p, q) in ((1, (x, y), (z, t)), (-1, (x, z), (y, t)), (1, (x, t), (y, z)),
                                     (1, (y, z), (x, t)), (-1, (y, t), (x, z)), (1, (z, t), (x, y))):
            rhs = _add(rhs, o.l3v(o.br00(u, v), p, q), sign)
        if lhs != rhs:
            ok["v"] = False
    return ok


# -- linear algebra oracles -------------------------------------------------------


def to_sympy(M):
    return sympy.Matrix(M.shape[0], M.shape[1],
                        lambda i, j: sympy.Rational(M[i, j].numerator, M[i, j].denominator))


def in_column_span(M, v) -> bool:
    """Whether ``v`` lies in the column space of ``M``, via two sympy ranks."""
    A = to_sympy(M)
    b = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in v])
    return A.rank() == A.row_join(b).rank()


def lie_adjoint_cohomology(bracket, n: int) -> int:
    """``dim H^n(g; g)`` of a Lie algebra from the textbook CE differential, in sympy."""
    k = bracket.shape[0]

    def br(i, j):
        return [sympy.Rational(bracket[i, j, r].numerator, bracket[i, j, r].denominator) for r in range(k)]

    def basis(p):
        return [(I, v) for I in combinations(range(k), p) for v in range(k)]

    def dmat(p):
        src, tgt = basis(p), basis(p + 1)
        col = {b: c for c, b in enumerate(src)}
        M = sympy.zeros(len(tgt), len(src))

        def f_index(I):
            s = sorted(I)
            if len(set(s)) < len(s):
                return None, 0
            perm = [I.index(v) for v in s]
            sign = sympy.combinatorics.Permutation(perm).signature()
            return tuple(s), sign

        for row, (J, v) in enumerate(tgt):
            xs = list(J)
            # (df)(x0..xp) = Σ (-1)^i [x_i, f(..x̂_i..)] + Σ_{i<j} (-1)^{i+j} f([x_i,x_j], ..)
            for i in range(p + 1):
                rest = tuple(xs[:i] + xs[i + 1:])
                for w in range(k):
                    coeff = br(xs[i], w)[v]
                    if coeff and (rest, w) in col:
                        M[row, col[(rest, w)]] += (-1) ** i * coeff
            for i, j in combinations(range(p + 1), 2):
                rest = xs[:i] + xs[i + 1:j] + xs[j + 1:]
                for u, c in enumerate(br(xs[i], xs[j])):
                    if not c:
                        continue
                    I, sign = f_index(tuple([u] + rest))
                    if I is not None and (I, v) in col:
                        M[row, col[(I, v)]] += (-1) ** (i + j) * c * sign
        return M

    dim_n = len(basis(n))
    rank_out = dmat(n).rank() if n < k else 0
    rank_in = dmat(n - 1).rank() if n >= 1 else 0
    return dim_n - rank_out - rank_in


def h_minus1_oracle(L) -> int:
    """``{a ∈ g-1 : da = 0, [x, a] = 0 for all x}`` for the adjoint representation."""
    m, n = L.dim0, L.dim1
    rows = []
    for k in range(m):
        rows.append([L.d[k, a] for a in range(n)])
    for x in range(m):
        for k in range(n):
            rows.append([L.br01[x, a, k] for a in range(n)])
    M = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])
    return n - M.rank()
