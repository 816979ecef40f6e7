"""Point modules: the step linear system, three-periodicity, central
characters of diagonal point modules, and predicted simple-quotient
dimensions for a triple of P^1 points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .commgeo import CentralPoint, CommPoly, central_point
from .errors import KernelDimensionUnexpected, ZeroPoint
from .fields import RationalField
from .linalg import Matrix, det, kernel


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1 in canonical form: first nonzero coordinate is 1."""
    x: object
    y: object


def proj_point(field, x, y) -> ProjPoint:
    F = field
    x = F.of(x) if isinstance(x, int) else x
    y = F.of(y) if isinstance(y, int) else y
    if x == F.zero and y == F.zero:
        raise ZeroPoint("(0,0) does not define a point of P^1")
    if x != F.zero:
        inv = F.inv(x)
        return ProjPoint(F.one, F.mul(inv, y))
    return ProjPoint(F.zero, F.one)


def all_proj_points(field):
    """The p+1 points of P^1(F_p), in canonical order."""
    pts = [proj_point(field, 1, b) for b in field.elements()]
    pts.append(proj_point(field, 0, 1))
    return pts


@dataclass(frozen=True)
class PointTriple:
    p0: ProjPoint
    p1: ProjPoint
    p2: ProjPoint

    def is_diagonal(self):
        return self.p0 == self.p1 == self.p2


def step_matrix(field, t: PointTriple) -> Matrix:
    """The 3x2 system whose kernel determines the next point (x3, y3)."""
    F = field
    x0, y0 = t.p0.x, t.p0.y
    x1, y1 = t.p1.x, t.p1.y
    x2, y2 = t.p2.x, t.p2.y
    m = F.mul
    rows = [
        [m(m(x1, x2), y0), F.neg(m(m(x0, x1), x2))],
        [F.add(m(m(x2, y0), y1), m(m(x1, y0), y2)),
         F.neg(F.add(m(m(x0, x2), y1), m(m(x1, x0), y2)))],
        [m(m(y0, y1), y2), F.neg(m(m(x0, y1), y2))],
    ]
    return Matrix(F, rows)


def solve_next(field, t: PointTriple) -> ProjPoint:
    """Unique projective solution of the step system; asserted (not
    assumed) to equal p0, so three-periodicity is checked on every call."""
    ker = kernel(step_matrix(field, t))
    if len(ker) != 1:
        raise KernelDimensionUnexpected(
            f"step system has kernel dimension {len(ker)}, expected 1")
    nxt = proj_point(field, ker[0][0], ker[0][1])
    if nxt != t.p0:
        raise KernelDimensionUnexpected(
            f"next point {nxt} differs from p0 {t.p0}")
    return nxt


def validate_point_sequence(field, points) -> bool:
    """True iff p_{i+3} = p_i throughout (needs length >= 4)."""
    if len(points) < 4:
        raise ValueError("need at least 4 points to test periodicity")
    return all(points[i + 3] == points[i] for i in range(len(points) - 3))


def central_character_diagonal(field, p: ProjPoint) -> CentralPoint:
    """Central character of the diagonal point module at p = (a, b):
    (a^3, a^2 b, a b^2, b^3, 0, 0), always on the singular locus."""
    F = field
    a, b = p.x, p.y
    m = F.mul
    return central_point(
        F, m(m(a, a), a), m(m(a, a), b), m(m(a, b), b), m(m(b, b), b),
        F.zero, F.zero, check=False)


def gamma_invariants(field, t: PointTriple):
    """The proof quantities (a, b, c, X, Y, Z, gamma) for a triple."""
    F = field
    x0, y0 = t.p0.x, t.p0.y
    x1, y1 = t.p1.x, t.p1.y
    x2, y2 = t.p2.x, t.p2.y
    m = F.mul

    def sq(v):
        return m(v, v)

    X = sq(F.sub(m(x1, y0), m(x0, y1)))
    Y = sq(F.sub(m(x2, y0), m(x0, y2)))
    Z = sq(F.sub(m(x2, y1), m(x1, y2)))
    a = F.add(F.add(m(m(x2, y2), X), m(m(x1, y1), Y)), m(m(x0, y0), Z))
    b = F.add(F.add(m(sq(x0), Z), m(sq(x1), Y)), m(sq(x2), X))
    c = F.add(F.add(m(sq(y0), Z), m(sq(y1), Y)), m(sq(y2), X))
    gamma = det(abc_matrix(field, t))
    return {"a": a, "b": b, "c": c, "X": X, "Y": Y, "Z": Z, "gamma": gamma}


def abc_matrix(field, t: PointTriple) -> Matrix:
    """The 3x3 coefficient matrix of the a = b = c = 0 system in X, Y, Z."""
    F = field
    x0, y0 = t.p0.x, t.p0.y
    x1, y1 = t.p1.x, t.p1.y
    x2, y2 = t.p2.x, t.p2.y
    m = F.mul
    return Matrix(F, [
        [m(x2, y2), m(x1, y1), m(x0, y0)],
        [m(x2, x2), m(x1, x1), m(x0, x0)],
        [m(y2, y2), m(y1, y1), m(y0, y0)],
    ])


def abc_system_admits_solution(field, t: PointTriple) -> bool:
    """Whether the actual (X, Y, Z) of the triple solves the 3x3 system.

    For non-diagonal triples this must be False (the proof's
    contradiction), so a 1-dimensional simple quotient cannot exist."""
    inv = gamma_invariants(field, t)
    v = [inv["X"], inv["Y"], inv["Z"]]
    F = field
    if all(c == F.zero for c in v):
        return True  # diagonal triple: the zero solution is the actual one
    residual = abc_matrix(field, t).mul_vec(v)
    return all(c == F.zero for c in residual)


def predict_simple_quotient(field, t: PointTriple):
    """Possible dimensions of a simple quotient of the point module:
    {1} on the diagonal, {0, 3} off it (0 encodes the trivial quotient)."""
    return {1} if t.is_diagonal() else {0, 3}


def gamma_squared_identity_symbolic() -> bool:
    """gamma^2 = X*Y*Z as a polynomial identity in x0,y0,x1,y1,x2,y2
    over the rationals, expanded with the commutative polynomial type."""
    Q = RationalField()
    v = [CommPoly.var(Q, 6, i) for i in range(6)]
    x0, y0, x1, y1, x2, y2 = v

    def sq(p):
        return p.mul(p)

    X = sq(x1.mul(y0).sub(x0.mul(y1)))
    Y = sq(x2.mul(y0).sub(x0.mul(y2)))
    Z = sq(x2.mul(y1).sub(x1.mul(y2)))
    m = [
        [x2.mul(y2), x1.mul(y1), x0.mul(y0)],
        [sq(x2), sq(x1), sq(x0)],
        [sq(y2), sq(y1), sq(y0)],
    ]
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    gamma = (a.mul(e.mul(i).sub(f.mul(h)))
             .sub(b.mul(d.mul(i).sub(f.mul(g))))
             .add(c.mul(d.mul(h).sub(e.mul(g)))))
    return sq(gamma) == X.mul(Y).mul(Z)
