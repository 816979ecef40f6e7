"""Dense exact linear algebra over a field object from :mod:`.fields`.

Matrices are lists of row lists of scalars.  Pivoting is deterministic
(first nonzero entry, columns left to right, rows top down), so all
outputs are reproducible.
"""

from __future__ import annotations

from .errors import NotSquare


class Matrix:
    def __init__(self, field, entries):
        self.field = field
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, [[field.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zero(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one
        return m

    def copy(self):
        return Matrix(self.field, self.entries)

    def transpose(self):
        return Matrix(self.field, [[self.entries[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    def mul(self, other: "Matrix") -> "Matrix":
        F = self.field
        out = Matrix.zero(F, self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                a = row[k]
                if a == F.zero:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    orow[j] = F.add(orow[j], F.mul(a, brow[j]))
        return out

    def mul_vec(self, v):
        F = self.field
        return [
            _dot(F, self.entries[i], v) for i in range(self.rows)
        ]

    def sub(self, other: "Matrix") -> "Matrix":
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, c):
        F = self.field
        return Matrix(F, [[F.mul(c, a) for a in row] for row in self.entries])

    def trace(self):
        if self.rows != self.cols:
            raise NotSquare("trace needs a square matrix")
        F = self.field
        t = F.zero
        for i in range(self.rows):
            t = F.add(t, self.entries[i][i])
        return t

    def is_zero(self):
        z = self.field.zero
        return all(a == z for row in self.entries for a in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.entries!r})"


def _dot(F, row, v):
    s = F.zero
    for a, b in zip(row, v):
        if a != F.zero and b != F.zero:
            s = F.add(s, F.mul(a, b))
    return s


def rref(m: Matrix):
    """Reduced row-echelon form; returns (R, rank, pivot_columns)."""
    F = m.field
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c] != F.zero:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, e) for e in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != F.zero:
                f = a[i][c]
                a[i] = [F.sub(e, F.mul(f, pe)) for e, pe in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return Matrix(F, a), r, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel(m: Matrix):
    """Basis of the right null space, echelon-normalized, deterministic."""
    F = m.field
    R, rk, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * m.cols
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.entries[i][fc])
        basis.append(v)
    return basis


def det(m: Matrix):
    """Determinant by ordinary Gaussian elimination."""
    if m.rows != m.cols:
        raise NotSquare("determinant needs a square matrix")
    F = m.field
    a = [list(row) for row in m.entries]
    n = m.rows
    d = F.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if a[i][c] != F.zero:
                pr = i
                break
        if pr is None:
            return F.zero
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            d = F.neg(d)
        d = F.mul(d, a[c][c])
        inv = F.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != F.zero:
                f = F.mul(a[i][c], inv)
                a[i] = [F.sub(e, F.mul(f, pe)) for e, pe in zip(a[i], a[c])]
    return d


def solve(m: Matrix, rhs):
    """One solution of M x = rhs, or None if inconsistent."""
    F = m.field
    aug = Matrix(F, [row + [b] for row, b in zip(m.entries, rhs)])
    R, rk, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [F.zero] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = R.entries[i][m.cols]
    return x
