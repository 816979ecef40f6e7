"""The six central elements of the generic Clifford algebra and the
noncommutative formal discriminant, with computational verification of
centrality and of the single center relation z4^2 = z5^3 - 27*Delta.

All constants are transcribed literally and then *checked* by normal-form
computation; a failed check reports the offending normal form instead of
silently adjusting anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOutOfRange
from .freealg import NcPoly


@dataclass
class CenterElements:
    z0: NcPoly
    z1: NcPoly
    z2: NcPoly
    z3: NcPoly
    z4: NcPoly
    z5: NcPoly
    #: alternate expansion (yx)^2 - x^2y^2 of z5, for cross-checking
    z5_alt: NcPoly

    def as_list(self):
        return [self.z0, self.z1, self.z2, self.z3, self.z4, self.z5]


def central_elements(field) -> CenterElements:
    """Fully expanded central elements; needs a primitive cube root of
    unity in the field (z4 involves omega)."""
    F = field
    w = F.of(field.omega())
    one = F.one
    third = F.inv(F.of(3))

    x = NcPoly.gen(F, "x")
    y = NcPoly.gen(F, "y")

    z0 = NcPoly.word(F, "xxx")
    z1 = NcPoly(F, {"xxy": third, "xyx": third, "yxx": third})
    z2 = NcPoly(F, {"yyx": third, "yxy": third, "xyy": third})
    z3 = NcPoly.word(F, "yyy")

    # z4 = (yx - w*xy)^3 - (3/2) w (1-w) x^3 y^3 - (9/2)(1 + 2 w^2) z1 z2
    u = y.mul(x).sub(x.mul(y).scale(w))
    cube = u.mul(u).mul(u)
    half = F.inv(F.of(2))
    c1 = F.mul(F.mul(F.mul(F.of(3), half), w), F.sub(one, w))
    w2 = F.mul(w, w)
    c2 = F.mul(F.mul(F.of(9), half), F.add(one, F.mul(F.of(2), w2)))
    z4 = cube.sub(NcPoly.word(F, "xxxyyy", c1)).sub(z1.mul(z2).scale(c2))

    z5 = NcPoly(F, {"xyxy": one, "yyxx": F.neg(one)})
    z5_alt = NcPoly(F, {"yxyx": one, "xxyy": F.neg(one)})

    return CenterElements(z0, z1, z2, z3, z4, z5, z5_alt)


def formal_discriminant_nc(field) -> NcPoly:
    """Degree-12 expansion of
    (1/4)(z0 z3 - z1 z2)^2 - (z0 z2 - z1^2)(z1 z3 - z2^2)
    in the free algebra, products taken in the written order."""
    z = central_elements(field)
    F = field
    quarter = F.inv(F.of(4))
    s = z.z0.mul(z.z3).sub(z.z1.mul(z.z2))
    t = z.z0.mul(z.z2).sub(z.z1.mul(z.z1))
    u = z.z1.mul(z.z3).sub(z.z2.mul(z.z2))
    return s.mul(s).scale(quarter).sub(t.mul(u))


def verify_centrality(system, p: NcPoly) -> bool:
    """True iff p commutes with both generators modulo the relations."""
    deg = p.degree()
    if deg != "-inf" and deg + 1 > system.confluent_to:
        raise DegreeOutOfRange("commutators would exceed the certified bound")
    F = system.field
    for letter in ("x", "y"):
        g = NcPoly.gen(F, letter)
        if not system.normal_form(p.mul(g).sub(g.mul(p))).is_zero():
            return False
    return True


def centrality_report(system, field) -> dict:
    """Per-element centrality verdicts plus the z5 cross-check."""
    z = central_elements(field)
    verdicts = {
        f"z{i}": verify_centrality(system, zi)
        for i, zi in enumerate(z.as_list())
    }
    verdicts["z5_two_expansions_agree"] = (
        system.normal_form(z.z5) == system.normal_form(z.z5_alt)
    )
    return verdicts


def center_relation_residue(system, field) -> NcPoly:
    """Normal form of z4^2 - z5^3 + 27*Delta (zero iff the relation holds)."""
    if system.confluent_to < 12:
        raise DegreeOutOfRange("center relation lives in degree 12")
    z = central_elements(field)
    F = field
    delta = formal_discriminant_nc(field)
    expr = (z.z4.mul(z.z4)
            .sub(z.z5.mul(z.z5).mul(z.z5))
            .add(delta.scale(F.of(27))))
    return system.normal_form(expr)


def verify_center_relation(system, field) -> bool:
    return center_relation_residue(system, field).is_zero()
