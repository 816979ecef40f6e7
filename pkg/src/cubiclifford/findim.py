"""Finite-dimensional central quotients C/mC as explicit algebras.

A quotient is presented by the four cubic-form relations together with
z4 - e and z5 - f, completed with the same (now inhomogeneous) rewriting
engine.  The basis is the set of normal words; multiplication is normal-
form reduction of concatenated basis words, materialized as a structure-
constant table.
"""

from __future__ import annotations

from .center import central_elements
from .commgeo import CentralPoint
from .errors import NotFiniteDimensional, NotScalar, ZeroAlgebra
from .freealg import NcPoly, WordOrder, cubic_form_relations
from .linalg import Matrix
from .rewrite import complete


class FinDimAlgebra:
    """Basis labels (normal words), structure constants, field.

    ``table[i][j]`` is the coordinate vector of basis_i * basis_j.
    """

    def __init__(self, field, system, basis, table):
        self.field = field
        self.system = system
        self.basis = basis  # list of words, index 0 is the empty word
        self.index = {w: i for i, w in enumerate(basis)}
        self.table = table
        self.dim = len(basis)
        self.unit_index = self.index[""]

    def coords(self, p: NcPoly):
        """Coordinate vector of the normal form of p."""
        nf = self.system.normal_form(p)
        v = [self.field.zero] * self.dim
        for w, c in nf.terms.items():
            if w not in self.index:
                raise NotScalar(f"word {w!r} escaped the basis")
            v[self.index[w]] = c
        return v

    def mul_vec(self, u, v):
        """Product of two coordinate vectors."""
        F = self.field
        out = [F.zero] * self.dim
        for i, a in enumerate(u):
            if a == F.zero:
                continue
            for j, b in enumerate(v):
                if b == F.zero:
                    continue
                c = F.mul(a, b)
                for k, s in enumerate(self.table[i][j]):
                    if s != F.zero:
                        out[k] = F.add(out[k], F.mul(c, s))
        return out

    def left_mult_matrix(self, v) -> Matrix:
        F = self.field
        cols = []
        for j in range(self.dim):
            ej = [F.zero] * self.dim
            ej[j] = F.one
            cols.append(self.mul_vec(v, ej))
        return Matrix(F, [[cols[j][i] for j in range(self.dim)]
                          for i in range(self.dim)])

    def unit_vector(self):
        F = self.field
        v = [F.zero] * self.dim
        v[self.unit_index] = F.one
        return v

    def to_json_dict(self):
        return {
            "modulus": self.field.p,
            "dim": self.dim,
            "basis": [w or "1" for w in self.basis],
            "structure_constants": [
                [[int(c) for c in self.table[i][j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }


def quotient_relations(field, point: CentralPoint):
    """Cubic-form ideal generators plus z4 - e and z5 - f."""
    rels = cubic_form_relations(field, point.a, point.b, point.c, point.d)
    z = central_elements(field)
    one = NcPoly.one(field)
    rels.append(z.z4.sub(one.scale(point.e)))
    rels.append(z.z5.sub(one.scale(point.f)))
    return rels


def build_quotient(field, point: CentralPoint, degree_bound: int = 16,
                   order: WordOrder | None = None) -> FinDimAlgebra:
    """Complete the quotient presentation and materialize the algebra.

    Raises ZeroAlgebra when 1 reduces to 0 (the point violates the fiber
    equation) and NotFiniteDimensional when normal words persist at every
    degree up to the bound.
    """
    rels = quotient_relations(field, point)
    system = complete(rels, order=order, degree_bound=degree_bound)
    if system.inconsistent:
        raise ZeroAlgebra("1 lies in the ideal: inconsistent central point")

    basis = []
    for n in range(degree_bound + 1):
        words = system.basis_words(n)
        if not words:
            break
        basis.extend(words)
    else:
        raise NotFiniteDimensional(
            f"normal words persist at degree {degree_bound}")

    alg = FinDimAlgebra(field, system, basis, None)
    F = field
    table = []
    for wi in basis:
        row = []
        for wj in basis:
            nf = system.normal_form(NcPoly.word(F, wi + wj))
            v = [F.zero] * alg.dim
            for w, c in nf.terms.items():
                v[alg.index[w]] = c
            row.append(v)
        table.append(row)
    alg.table = table
    return alg


def generator_matrices(alg: FinDimAlgebra):
    """Left-multiplication matrices of x and y on the basis."""
    F = alg.field
    xs = alg.coords(NcPoly.gen(F, "x"))
    ys = alg.coords(NcPoly.gen(F, "y"))
    return alg.left_mult_matrix(xs), alg.left_mult_matrix(ys)


def reduce_center_images(alg: FinDimAlgebra):
    """Scalars to which z0..z5 reduce in the quotient; raises NotScalar
    if any image fails to be a multiple of the unit."""
    z = central_elements(alg.field)
    F = alg.field
    out = []
    for i, zi in enumerate(z.as_list()):
        v = alg.coords(zi)
        for k, c in enumerate(v):
            if k != alg.unit_index and c != F.zero:
                raise NotScalar(f"z{i} is not scalar in the quotient")
        out.append(v[alg.unit_index])
    return out


def check_unit_and_associativity(alg: FinDimAlgebra, sample_cap: int = 12):
    """Unit law always; associativity complete when dim <= sample_cap,
    otherwise on a deterministic sample of triples."""
    F = alg.field
    dim = alg.dim
    unit = alg.unit_vector()
    basis_vecs = []
    for i in range(dim):
        v = [F.zero] * dim
        v[i] = F.one
        basis_vecs.append(v)
    for v in basis_vecs:
        if alg.mul_vec(unit, v) != v or alg.mul_vec(v, unit) != v:
            return False
    if dim <= sample_cap:
        triples = ((i, j, k) for i in range(dim) for j in range(dim)
                   for k in range(dim))
    else:
        triples = (((7 * t) % dim, (11 * t + 3) % dim, (13 * t + 5) % dim)
                   for t in range(sample_cap ** 3))
    for i, j, k in triples:
        left = alg.mul_vec(alg.mul_vec(basis_vecs[i], basis_vecs[j]),
                           basis_vecs[k])
        right = alg.mul_vec(basis_vecs[i],
                            alg.mul_vec(basis_vecs[j], basis_vecs[k]))
        if left != right:
            return False
    return True
