"""Commutative side: binary-cubic discriminant, the discriminant
hypersurface in z0..z3 with its partials, the twisted cubic, and
singular-locus membership for central points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroPoint


class CommPoly:
    """Sparse commutative polynomial: exponent tuple -> scalar."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        if terms:
            z = field.zero
            for e, c in terms.items():
                if c != z:
                    self.terms[tuple(e)] = c

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def const(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    def is_zero(self):
        return not self.terms

    def add(self, other):
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, F.zero), c)
            if s == F.zero:
                out.pop(e, None)
            else:
                out[e] = s
        return CommPoly(F, self.nvars, out)

    def neg(self):
        F = self.field
        return CommPoly(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        F = self.field
        return CommPoly(F, self.nvars,
                        {e: F.mul(c, a) for e, a in self.terms.items()})

    def mul(self, other):
        F = self.field
        out = {}
        z = F.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, z), F.mul(c1, c2))
                if s == z:
                    out.pop(e, None)
                else:
                    out[e] = s
        return CommPoly(F, self.nvars, out)

    def pow(self, n):
        out = CommPoly.const(self.field, self.nvars, self.field.one)
        for _ in range(n):
            out = out.mul(self)
        return out

    def diff(self, i):
        """Partial derivative in variable i."""
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = F.mul(F.of(e[i]), c)
        return CommPoly(F, self.nvars, out)

    def evaluate(self, values):
        F = self.field
        total = F.zero
        for e, c in self.terms.items():
            term = c
            for exp, v in zip(e, values):
                for _ in range(exp):
                    term = F.mul(term, v)
            total = F.add(total, term)
        return total

    def __eq__(self, other):
        return (isinstance(other, CommPoly) and self.field == other.field
                and self.terms == other.terms)

    def __repr__(self):
        return f"CommPoly({self.nvars} vars, {len(self.terms)} terms)"


@dataclass(frozen=True)
class CubicForm:
    """f = a u^3 + 3b u^2 v + 3c u v^2 + d v^3."""
    a: object
    b: object
    c: object
    d: object


@dataclass(frozen=True)
class CentralPoint:
    """A maximal ideal of the center: coordinates (a,b,c,d,e,f) of
    (z0,...,z5), subject to e^2 = f^3 - 27 D(a,b,c,d)."""
    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    def coords(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)


def central_point(field, a, b, c, d, e, f, check=True) -> CentralPoint:
    F = field
    vals = tuple(F.of(v) if isinstance(v, int) else v for v in (a, b, c, d, e, f))
    pt = CentralPoint(*vals)
    if check and not point_on_fiber(field, pt):
        raise ValueError(
            f"({a},{b},{c},{d},{e},{f}) violates e^2 = f^3 - 27 D(a,b,c,d)")
    return pt


def point_on_fiber(field, pt: CentralPoint) -> bool:
    F = field
    d_val = discriminant_value(F, CubicForm(pt.a, pt.b, pt.c, pt.d))
    lhs = F.mul(pt.e, pt.e)
    rhs = F.sub(F.mul(F.mul(pt.f, pt.f), pt.f), F.mul(F.of(27), d_val))
    return lhs == rhs


def discriminant_value(field, form: CubicForm):
    """D = (1/4)(ad - bc)^2 - (ac - b^2)(bd - c^2)."""
    F = field
    a, b, c, d = (F.of(v) if isinstance(v, int) else v
                  for v in (form.a, form.b, form.c, form.d))
    s = F.sub(F.mul(a, d), F.mul(b, c))
    t = F.sub(F.mul(a, c), F.mul(b, b))
    u = F.sub(F.mul(b, d), F.mul(c, c))
    quarter = F.inv(F.of(4))
    return F.sub(F.mul(quarter, F.mul(s, s)), F.mul(t, u))


def delta_poly(field) -> CommPoly:
    """The discriminant hypersurface polynomial in z0..z3."""
    F = field
    z = [CommPoly.var(F, 4, i) for i in range(4)]
    s = z[0].mul(z[3]).sub(z[1].mul(z[2]))
    t = z[0].mul(z[2]).sub(z[1].mul(z[1]))
    u = z[1].mul(z[3]).sub(z[2].mul(z[2]))
    quarter = F.inv(F.of(4))
    return s.mul(s).scale(quarter).sub(t.mul(u))


def delta_partials(field):
    """The four partials of delta, transcribed from their closed forms and
    cross-checked against symbolic differentiation of delta_poly."""
    F = field
    z = [CommPoly.var(F, 4, i) for i in range(4)]
    half = F.inv(F.of(2))
    th = F.mul(F.of(3), half)  # 3/2
    three = F.of(3)

    p0 = (z[1].mul(z[2]).mul(z[3]).scale(F.neg(th))
          .add(z[0].mul(z[3]).mul(z[3]).scale(half))
          .add(z[2].pow(3)))
    p1 = (z[0].mul(z[2]).mul(z[3]).scale(F.neg(th))
          .add(z[1].mul(z[2]).mul(z[2]).scale(F.neg(th)))
          .add(z[1].mul(z[1]).mul(z[3]).scale(three)))
    p2 = (z[0].mul(z[1]).mul(z[3]).scale(F.neg(th))
          .add(z[1].mul(z[1]).mul(z[2]).scale(F.neg(th)))
          .add(z[0].mul(z[2]).mul(z[2]).scale(three)))
    p3 = (z[0].mul(z[1]).mul(z[2]).scale(F.neg(th))
          .add(z[0].mul(z[0]).mul(z[3]).scale(half))
          .add(z[1].pow(3)))
    transcribed = [p0, p1, p2, p3]

    delta = delta_poly(field)
    for i, p in enumerate(transcribed):
        if delta.diff(i) != p:
            raise AssertionError(
                f"transcribed partial {i} disagrees with symbolic derivative")
    return transcribed


def twisted_cubic_point(field, x0, x1):
    """(x0^3, x0^2 x1, x0 x1^2, x1^3); rejects (0, 0)."""
    F = field
    x0 = F.of(x0) if isinstance(x0, int) else x0
    x1 = F.of(x1) if isinstance(x1, int) else x1
    if x0 == F.zero and x1 == F.zero:
        raise ZeroPoint("(0,0) is not a point of P^1")
    return (F.mul(F.mul(x0, x0), x0),
            F.mul(F.mul(x0, x0), x1),
            F.mul(F.mul(x0, x1), x1),
            F.mul(F.mul(x1, x1), x1))


def on_twisted_cubic(field, a, b, c, d) -> bool:
    """Vanishing of the three 2x2 catalecticant minors (reduced variety)."""
    F = field
    a, b, c, d = (F.of(v) if isinstance(v, int) else v for v in (a, b, c, d))
    return (F.sub(F.mul(a, d), F.mul(b, c)) == F.zero
            and F.sub(F.mul(a, c), F.mul(b, b)) == F.zero
            and F.sub(F.mul(b, d), F.mul(c, c)) == F.zero)


def singular_locus_membership(field, pt: CentralPoint) -> bool:
    """True iff the point lies on the singular locus of the center:
    e = f = 0 and (a,b,c,d) on the (affine) twisted cubic."""
    F = field
    return (pt.e == F.zero and pt.f == F.zero
            and on_twisted_cubic(F, pt.a, pt.b, pt.c, pt.d))


def enumerate_center_fiber(field, a, b, c, d):
    """All (e, f) in F_p^2 over a base point of A^4, as CentralPoints."""
    F = field
    d_val = discriminant_value(F, CubicForm(*(F.of(v) if isinstance(v, int) else v
                                              for v in (a, b, c, d))))
    # square roots table of F_p
    roots = {}
    for e in F.elements():
        roots.setdefault(F.mul(e, e), []).append(e)
    out = []
    for f in F.elements():
        rhs = F.sub(F.mul(F.mul(f, f), f), F.mul(F.of(27), d_val))
        for e in roots.get(rhs, ()):
            out.append(central_point(F, a, b, c, d, e, f, check=False))
    return out
