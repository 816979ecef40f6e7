"""The free algebra k<x,y>: words, noncommutative polynomials, relations.

Words are plain strings over the alphabet ``xy`` ("" is the empty word,
printed as "1").  Polynomials are zero-free dicts word -> scalar, wrapped
in :class:`NcPoly` together with their field.
"""

from __future__ import annotations

import re

from .errors import FieldMismatch

ALPHABET = "xy"

NEG_INF = "-inf"  # degree of the zero polynomial


class WordOrder:
    """Graded order on words, ties broken lexicographically.

    ``big_letter`` is the letter that wins a lexicographic tie-break.
    The default ``x`` makes the normal words of the generic Clifford
    system come out as y^i (xy^2)^j (xy)^k (x^2y)^l x^m.
    """

    def __init__(self, big_letter: str = "x"):
        if big_letter not in ALPHABET:
            raise ValueError("big_letter must be 'x' or 'y'")
        self.big_letter = big_letter
        small = "y" if big_letter == "x" else "x"
        # translate so that plain (len, str) comparison realizes the order
        self._trans = str.maketrans(big_letter + small, "ba")
        self._untrans = str.maketrans("ba", big_letter + small)

    def key(self, word: str):
        return (len(word), word.translate(self._trans))

    def encode(self, word: str) -> str:
        return word.translate(self._trans)

    def decode(self, encoded: str) -> str:
        return encoded.translate(self._untrans)

    def descriptor(self) -> str:
        return f"graded-lex, {self.big_letter} largest"

    def __eq__(self, other):
        return isinstance(other, WordOrder) and other.big_letter == self.big_letter

    def __repr__(self):
        return f"WordOrder({self.big_letter!r})"


class NcPoly:
    """Noncommutative polynomial: zero-free map word -> scalar."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            z = field.zero
            for w, c in terms.items():
                c = field.of(c) if isinstance(c, int) else c
                if c != z:
                    self.terms[w] = c

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, {"": field.one})

    @classmethod
    def gen(cls, field, letter):
        return cls(field, {letter: field.one})

    @classmethod
    def word(cls, field, w, coeff=None):
        return cls(field, {w: field.one if coeff is None else coeff})

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch("operands live over different fields")

    def add(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out.get(w, F.zero), c)
            if s == F.zero:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(F, out)

    def neg(self):
        F = self.field
        return NcPoly(F, {w: F.neg(c) for w, c in self.terms.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c) -> "NcPoly":
        F = self.field
        c = F.of(c) if isinstance(c, int) else c
        if c == F.zero:
            return NcPoly(F)
        return NcPoly(F, {w: F.mul(c, a) for w, a in self.terms.items()})

    def mul(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        F = self.field
        out = {}
        z = F.zero
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = F.add(out.get(w, z), F.mul(c1, c2))
                if s == z:
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcPoly(F, out)

    def pow(self, n: int) -> "NcPoly":
        out = NcPoly.one(self.field)
        for _ in range(n):
            out = out.mul(self)
        return out

    def __eq__(self, other):
        return (isinstance(other, NcPoly) and self.field == other.field
                and self.terms == other.terms)

    def sorted_terms(self, order: WordOrder | None = None):
        order = order or WordOrder()
        return sorted(self.terms.items(), key=lambda wc: order.key(wc[0]),
                      reverse=True)

    def serialize(self, order: WordOrder | None = None) -> str:
        """Canonical text form "c1*w1 + c2*w2 + ..." (words as letters, 1
        for the empty word)."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms(order):
            parts.append(f"{c}*{w or '1'}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NcPoly({self.serialize()})"


_TERM_RE = re.compile(r"^\s*(?:(-?\d+(?:/\d+)?)\s*\*\s*)?([xy]+|1)\s*$")


def parse_poly(field, text: str) -> NcPoly:
    """Parse the serialize() format back into a polynomial."""
    text = text.strip()
    if text == "0":
        return NcPoly.zero(field)
    F = field
    out = NcPoly.zero(field)
    for chunk in re.split(r"\+(?![^(]*\))", text.replace("- ", "+ -")):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff_s, word = m.groups()
        if coeff_s is None:
            c = F.one
        elif "/" in coeff_s:
            num, den = coeff_s.split("/")
            c = F.div(F.of(int(num)), F.of(int(den)))
        else:
            c = F.of(int(coeff_s))
        w = "" if word == "1" else word
        out = out.add(NcPoly.word(F, w, c))
    return out


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    return p.mul(q)


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return p.mul(q).sub(q.mul(p))


def clifford_relations(field):
    """The three defining relations of the generic Clifford algebra:
    x^3 commutes with y, the mixed degree-4 relation, y^3 commutes with x.
    """
    F = field
    one = F.one
    neg = F.neg(one)
    return [
        NcPoly(F, {"xxxy": one, "yxxx": neg}),
        NcPoly(F, {"xxyy": one, "xyxy": one, "yxyx": neg, "yyxx": neg}),
        NcPoly(F, {"xyyy": one, "yyyx": neg}),
    ]


def cubic_form_relations(field, a, b, c, d):
    """Generators of the ideal cutting out the Clifford algebra of
    f = a u^3 + 3b u^2 v + 3c u v^2 + d v^3."""
    F = field
    one = F.one
    return [
        NcPoly(F, {"xxx": one, "": F.neg(F.of(a) if isinstance(a, int) else a)}),
        NcPoly(F, {"yyy": one, "": F.neg(F.of(d) if isinstance(d, int) else d)}),
        NcPoly(F, {"xxy": one, "xyx": one, "yxx": one,
                   "": F.neg(F.mul(F.of(3), F.of(b) if isinstance(b, int) else b))}),
        NcPoly(F, {"yyx": one, "yxy": one, "xyy": one,
                   "": F.neg(F.mul(F.of(3), F.of(c) if isinstance(c, int) else c))}),
    ]
