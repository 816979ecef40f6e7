"""Structure theory of the finite-dimensional quotients: trace forms,
Jacobson radical, Wedderburn block decomposition, and the brute-force
representation searches in dimensions one and two.

The trace used throughout is the regular trace.  On a 9-dimensional
Azumaya quotient it is 3 times the reduced trace; since the
characteristic is never 3, every vanishing or rank statement is
unaffected by the factor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from .commgeo import CentralPoint
from .errors import CharacteristicTooSmall, FieldTooLarge, SplitFailure
from .findim import FinDimAlgebra
from .linalg import Matrix, kernel, rank, rref


@dataclass
class BlockStructure:
    """Wedderburn data: blocks (n, k) mean an n x n matrix block over the
    degree-k extension of the prime field; over the algebraic closure the
    block contributes k irreducibles of dimension n."""
    blocks: list
    radical_dim: int

    def irrep_dims(self):
        dims = []
        for n, k in self.blocks:
            dims.extend([n] * k)
        return sorted(dims)

    def sum_squares(self):
        return sum(n * n for n in self.irrep_dims())


def trace_vector(alg: FinDimAlgebra):
    """trace of left multiplication by each basis element."""
    F = alg.field
    out = []
    for i in range(alg.dim):
        t = F.zero
        for j in range(alg.dim):
            t = F.add(t, alg.table[i][j][j])
        out.append(t)
    return out


def trace(alg: FinDimAlgebra, v):
    """Regular trace of the element with coordinate vector v."""
    F = alg.field
    tv = trace_vector(alg)
    t = F.zero
    for c, tb in zip(v, tv):
        if c != F.zero:
            t = F.add(t, F.mul(c, tb))
    return t


def gram_matrix(alg: FinDimAlgebra, elements) -> Matrix:
    """[tr(y_i y_j)] for coordinate vectors y_i."""
    F = alg.field
    tv = trace_vector(alg)
    rows = []
    for u in elements:
        row = []
        for v in elements:
            prod = alg.mul_vec(u, v)
            t = F.zero
            for c, tb in zip(prod, tv):
                if c != F.zero:
                    t = F.add(t, F.mul(c, tb))
            row.append(t)
        rows.append(row)
    return Matrix(F, rows)


def full_gram(alg: FinDimAlgebra) -> Matrix:
    F = alg.field
    basis = []
    for i in range(alg.dim):
        v = [F.zero] * alg.dim
        v[i] = F.one
        basis.append(v)
    return gram_matrix(alg, basis)


def radical(alg: FinDimAlgebra):
    """Basis of the Jacobson radical via the trace-form kernel.

    The kernel always contains the radical (nilpotents have zero trace).
    When p > dim the converse is automatic; otherwise the kernel is
    certified to be a nilpotent two-sided ideal, which forces equality.
    A failed certificate raises CharacteristicTooSmall.
    """
    F = alg.field
    K = kernel(full_gram(alg))
    if F.kind == "prime" and F.p <= alg.dim and K:
        if not _is_nilpotent_ideal(alg, K):
            raise CharacteristicTooSmall(
                f"trace kernel is not certified nilpotent at p = {F.p}, "
                f"dim = {alg.dim}")
    return K


def _span_rank(F, vectors):
    return rank(Matrix(F, vectors)) if vectors else 0


def _in_span(F, rows, v):
    if not rows:
        return all(c == F.zero for c in v)
    return _span_rank(F, rows) == _span_rank(F, rows + [v])


def _is_nilpotent_ideal(alg: FinDimAlgebra, K):
    F = alg.field
    basis_vecs = []
    for i in range(alg.dim):
        e = [F.zero] * alg.dim
        e[i] = F.one
        basis_vecs.append(e)
    for k in K:
        for e in basis_vecs:
            if not _in_span(F, K, alg.mul_vec(e, k)):
                return False
            if not _in_span(F, K, alg.mul_vec(k, e)):
                return False
    # nilpotency: successive powers K, K^2, ... must reach zero
    current = list(K)
    prev_rank = _span_rank(F, current)
    for _ in range(alg.dim + 1):
        products = [alg.mul_vec(u, v) for u in current for v in K]
        R, rk, _ = rref(Matrix(F, products))
        if rk == 0:
            return True
        if rk == prev_rank:
            return False  # stabilized at a nonzero power
        current = R.entries[:rk]
        prev_rank = rk
    return False


class _Quotient:
    """A/rad as an algebra on the complement of the radical."""

    def __init__(self, alg: FinDimAlgebra, rad_basis):
        F = alg.field
        self.field = F
        self.alg = alg
        if rad_basis:
            R, _, pivots = rref(Matrix(F, rad_basis))
            self.rad_rows = R.entries[: len(pivots)]
            self.pivots = pivots
        else:
            self.rad_rows = []
            self.pivots = []
        self.free = [i for i in range(alg.dim) if i not in self.pivots]
        self.dim = len(self.free)

    def project(self, v):
        """Reduce v modulo the radical; returns coords on free columns."""
        F = self.field
        v = list(v)
        for row, pc in zip(self.rad_rows, self.pivots):
            c = v[pc]
            if c != F.zero:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return [v[i] for i in self.free]

    def lift(self, u):
        F = self.field
        v = [F.zero] * self.alg.dim
        for c, i in zip(u, self.free):
            v[i] = c
        return v

    def mul(self, u, v):
        return self.project(self.alg.mul_vec(self.lift(u), self.lift(v)))

    def unit(self):
        return self.project(self.alg.unit_vector())

    def basis_vectors(self):
        F = self.field
        out = []
        for i in range(self.dim):
            v = [F.zero] * self.dim
            v[i] = F.one
            out.append(v)
        return out

    def left_mult_matrix(self, u):
        cols = [self.mul(u, e) for e in self.basis_vectors()]
        return Matrix(self.field,
                      [[cols[j][i] for j in range(self.dim)]
                       for i in range(self.dim)])

    def center_basis(self):
        """Kernel of the commutator maps v -> v e_k - e_k v, all k."""
        F = self.field
        big = []
        for k, e in enumerate(self.basis_vectors()):
            M = []
            for j in range(self.dim):
                ej = self.basis_vectors()[j]
                col = [F.sub(a, b) for a, b in zip(self.mul(ej, e),
                                                  self.mul(e, ej))]
                M.append(col)
            for i in range(self.dim):
                big.append([M[j][i] for j in range(self.dim)])
        return kernel(Matrix(F, big))


# -- polynomial helpers over F_p (dense coefficient lists, low to high) ---

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, p - 2, p)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        c = a[-1] * inv % p
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        _ptrim(a)
    return a


def _pdivmod(a, b, p):
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, p - 2, p)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        c = a[-1] * inv % p
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        _ptrim(a)
    return _ptrim(q), a


def _pextgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _ptrim([(x - y) % p for x, y in
                             _zip_pad(s0, _pmul(q, s1, p))])
        t0, t1 = t1, _ptrim([(x - y) % p for x, y in
                             _zip_pad(t0, _pmul(q, t1, p))])
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _factor_modp(coeffs, p):
    """Irreducible factors (as low-to-high coefficient lists) of a monic
    polynomial over F_p, via sympy's finite-field factorizer."""
    high_to_low = [int(c) % p for c in reversed(coeffs)]
    _, factors = gf_factor(high_to_low, p, ZZ)
    out = []
    for f, mult in factors:
        fc = [int(c) % p for c in reversed(f)]
        for _ in range(mult):
            out.append(fc)
    return out


def _min_poly(quot: _Quotient, v):
    """Minimal polynomial of v in A/rad, low-to-high coefficient list."""
    F = quot.field
    powers = [quot.unit()]
    cur = quot.unit()
    rows = [list(cur)]
    while True:
        cur = quot.mul(cur, v)
        rows.append(list(cur))
        M = Matrix(F, rows)
        if rank(M) < len(rows):
            break
        powers.append(cur)
    # solve c_0 p_0 + ... + c_{d-1} p_{d-1} = p_d
    A = Matrix(F, [[rows[i][j] for i in range(len(rows) - 1)]
                   for j in range(quot.dim)])
    from .linalg import solve
    sol = solve(A, rows[-1])
    coeffs = [F.neg(c) for c in sol] + [F.one]
    return [int(c) for c in coeffs]


def wedderburn_blocks(alg: FinDimAlgebra, seed: int = 0,
                      retries: int = 40) -> BlockStructure:
    """Radical, then split A/rad by the primitive idempotents of its
    center, found from a seeded random generating central element."""
    F = alg.field
    p = F.p
    rad = radical(alg)
    quot = _Quotient(alg, rad)
    zbasis = quot.center_basis()
    zdim = len(zbasis)
    rng = random.Random(seed)
    for _ in range(retries):
        v = [F.zero] * quot.dim
        for zb in zbasis:
            c = rng.randrange(p)
            v = [F.add(a, F.mul(F.of(c), b)) for a, b in zip(v, zb)]
        m = _min_poly(quot, v)
        if len(m) - 1 != zdim:
            continue
        factors = _factor_modp(m, p)
        if len(set(map(tuple, factors))) != len(factors):
            continue  # not squarefree: not a generator, reseed
        blocks = []
        for mi in factors:
            hi, _ = _pdivmod(m, mi, p)
            g, s, _ = _pextgcd(hi, mi, p)
            if len(g) != 1:
                break
            ui = _pmod(_pmul(hi, s, p), m, p)
            e = _poly_eval_alg(quot, ui, v)
            # block = (A/rad) e: span of b_k e
            span = [quot.mul(b, e) for b in quot.basis_vectors()]
            bdim = rank(Matrix(F, span))
            k = len(mi) - 1
            n2 = bdim // k
            n = _isqrt(n2)
            if n * n * k != bdim:
                raise SplitFailure(
                    f"block of dim {bdim} incompatible with center degree {k}")
            blocks.append((n, k))
        else:
            blocks.sort()
            return BlockStructure(blocks=blocks, radical_dim=len(rad))
    raise SplitFailure("no generating central element found within budget")


def _poly_eval_alg(quot: _Quotient, coeffs, v):
    F = quot.field
    out = [F.zero] * quot.dim
    power = quot.unit()
    for c in coeffs:
        if c:
            out = [F.add(a, F.mul(F.of(c), b)) for a, b in zip(out, power)]
        power = quot.mul(power, v)
    return out


def _isqrt(n):
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


# -- brute-force representation searches ---------------------------------


def _m2_mul(A, B, p):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % p,
            (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % p,
            (A[1][0] * B[0][0] + A[1][1] * B[1][0]) % p,
            (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % p)


def search_irreps_dim2(field, max_p: int = 31):
    """Exhaustive search for 2-dimensional irreducible representations.

    x-images are taken in canonical form up to conjugacy and rescaling:
    diag(alpha, alpha*omega) for alpha in F_p^* (x^3 a nonzero scalar)
    and the nilpotent Jordan block (x^3 = 0); scalar images force
    reducibility and are excluded.  For each canonical X all p^4 matrices
    Y are tested against the three defining relations, then filtered for
    irreducibility (the pair must generate all of M_2).  Also counts the
    reducible solutions seen, as a diagnostic.
    """
    p = field.p
    if p > max_p:
        raise FieldTooLarge(f"p^4 sweep capped at p <= {max_p}")
    w = field.omega()

    xforms = [((a % p, 0), (0, a * w % p)) for a in range(1, p)]
    xforms.append(((0, 1), (0, 0)))  # nilpotent canonical form

    irreducible = []
    reducible_count = 0
    for X in xforms:
        Xm = ((X[0][0], X[0][1]), (X[1][0], X[1][1]))
        for a in range(p):
            for b in range(p):
                for c in range(p):
                    for d in range(p):
                        Y = ((a, b), (c, d))
                        if not _satisfies_relations(Xm, Y, p):
                            continue
                        if _pair_irreducible(Xm, Y, p):
                            irreducible.append((Xm, Y))
                        else:
                            reducible_count += 1
    return {"irreducible_pairs": irreducible,
            "reducible_solutions": reducible_count,
            "x_forms_tested": len(xforms)}


def _satisfies_relations(X, Y, p):
    def mul(A, B):
        e = _m2_mul(A, B, p)
        return ((e[0], e[1]), (e[2], e[3]))

    def sub(A, B):
        return tuple(tuple((x - y) % p for x, y in zip(r1, r2))
                     for r1, r2 in zip(A, B))

    def is0(A):
        return all(v == 0 for r in A for v in r)

    X2 = mul(X, X)
    X3 = mul(X2, X)
    Y2 = mul(Y, Y)
    Y3 = mul(Y2, Y)
    # x^3 y = y x^3
    if not is0(sub(mul(X3, Y), mul(Y, X3))):
        return False
    # x^2y^2 + xyxy - yxyx - y^2x^2 = 0
    XY = mul(X, Y)
    YX = mul(Y, X)
    t = sub(mul(X2, Y2), mul(Y2, X2))
    t = tuple(tuple((v + w_) % p for v, w_ in zip(r1, r2))
              for r1, r2 in zip(t, sub(mul(XY, XY), mul(YX, YX))))
    if not is0(t):
        return False
    # x y^3 = y^3 x
    if not is0(sub(mul(X, Y3), mul(Y3, X))):
        return False
    return True


def _pair_irreducible(X, Y, p):
    """Burnside at size 2: the pair acts irreducibly iff it generates the
    full 4-dimensional matrix algebra."""
    gens = [((1, 0), (0, 1)), X, Y]
    span = []  # rref rows over F_p of flattened matrices
    basis = []

    def insert(M):
        v = [M[0][0], M[0][1], M[1][0], M[1][1]]
        for row in span:
            lead = next(i for i, c in enumerate(row) if c)
            if v[lead]:
                f = v[lead]
                v = [(a - f * b) % p for a, b in zip(v, row)]
        if any(v):
            lead = next(i for i, c in enumerate(v) if c)
            inv = pow(v[lead], p - 2, p)
            span.append([c * inv % p for c in v])
            basis.append(M)
            return True
        return False

    frontier = []
    for g in gens:
        if insert(g):
            frontier.append(g)
    while frontier and len(span) < 4:
        nxt = []
        for M in frontier:
            for G in (X, Y):
                e = _m2_mul(M, G, p)
                P = ((e[0], e[1]), (e[2], e[3]))
                if insert(P):
                    nxt.append(P)
        frontier = nxt
    return len(span) == 4


def search_irreps_dim1(field, point: CentralPoint):
    """All (a, b) in F_p^2 whose central character matches the point:
    (a^3, a^2 b, a b^2, b^3, 0, 0) = (coordinates of the point)."""
    F = field
    p = F.p
    out = []
    if point.e != F.zero or point.f != F.zero:
        return out
    for a in range(p):
        for b in range(p):
            if (pow(a, 3, p) == point.a and a * a * b % p == point.b
                    and a * b * b % p == point.c and pow(b, 3, p) == point.d):
                out.append((a, b))
    return out
