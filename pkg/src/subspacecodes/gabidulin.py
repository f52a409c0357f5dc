"""The q-ary rank-metric code of maps x -> a0*x + a1*x^q on GF(q^3).

Codewords are the q^6 linearized polynomials a0*x + a1*x^q with coefficients
in GF(q^3); each is a GF(q)-linear endomorphism of GF(q^3) and its rank is
the rank of the evaluation map.  Nonzero codewords have rank 2 or 3:

    rank(a*(x^q - b*x)) = 2  iff  norm(b) = b^(q^2+q+1) = 1,

since x^q = b*x has a nonzero solution exactly when b = u^(q-1), with kernel
GF(q)*u, and monomials a0*x, a1*x^q are invertible.  The rank distribution is

    rank 0: 1,  rank 1: 0,
    rank 2: (q^3-1)(q^2+q+1),  rank 3: (q^3-1)(q^3-q^2-q).

rank_of() computes both the coordinate-matrix rank and this norm
classification and insists they agree.

For a 2-dimensional GF(q)-subspace Z = <a, b> of GF(q^3) and a point
P = <c>, d_space(Z, P) is the unique 2-dimensional constant-rank-2 subspace
of the code whose nonzero members have their kernels sweeping the points of
Z and map Z onto P; its generators are

    f(x) = c*(a*x^q - a^q*x) / (a*b^q - a^q*b),
    g(x) = c*(b*x^q - b^q*x) / (b*a^q - b^q*a),

so f(a) = g(b) = 0 and f(b) = g(a) = c.  The removable family is the
3-dimensional subspace R = {u*x^q - u^q*x : u in GF(q^3)}; it contains
d_space(Z, corr(Z)) for every Z, where the correlation

    corr(<a, b>) = GF(q) * (a*b^q - a^q*b)

is a bijection from 2-dimensional onto 1-dimensional subspaces of GF(q^3).

Z and P are passed as subspaces of the coordinate space GF(q)^3 relative to
the fixed extension-field basis (fields.ExtGF.basis).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import ExtGF, ext_field
from .linalg import Subspace, from_rows, mat_mul_rows, rref, space


@dataclass(frozen=True)
class LinPoly:
    """The GF(q)-linear map x -> a0*x + a1*x^q on GF(q^3)."""

    ext: ExtGF
    a0: int
    a1: int

    def __call__(self, x):
        e = self.ext
        return e.add(e.mul(self.a0, x), e.mul(self.a1, e.frobenius(x)))

    def add(self, other):
        e = self.ext
        return LinPoly(e, e.add(self.a0, other.a0), e.add(self.a1, other.a1))

    def sub(self, other):
        e = self.ext
        return LinPoly(e, e.sub(self.a0, other.a0), e.sub(self.a1, other.a1))

    def scale(self, c):
        """Scalar action by c in the base field GF(q)."""
        e = self.ext
        return LinPoly(e, e.mul(c, self.a0), e.mul(c, self.a1))

    def is_zero(self):
        return self.a0 == 0 and self.a1 == 0

    def matrix_rows(self):
        """Rows of the 3x3 coordinate matrix: row i = coords(f(basis[i]))."""
        e = self.ext
        sp3 = space(3, e.q)
        return tuple(sp3.vector(e.coords(self(b))) for b in e.basis)


def codewords(q: int):
    """All q^6 codewords, a0 varying fastest."""
    ext = ext_field(q)
    for a1 in range(ext.order):
        for a0 in range(ext.order):
            yield LinPoly(ext, a0, a1)


def rank_of(f: LinPoly) -> int:
    """Rank of the evaluation map, cross-checked two ways."""
    e = f.ext
    if f.is_zero():
        by_norm = 0
    elif f.a0 == 0 or f.a1 == 0:
        by_norm = 3
    else:
        # a0*x + a1*x^q = a1*(x^q - b*x) with b = -a0/a1
        b = e.neg(e.div(f.a0, f.a1))
        by_norm = 2 if e.norm(b) == 1 else 3
    sp3 = space(3, e.q)
    _, pivots = rref(sp3, f.matrix_rows())
    by_matrix = len(pivots)
    assert by_matrix == by_norm, (f.a0, f.a1, by_matrix, by_norm)
    return by_matrix


def rank_distribution(q: int) -> tuple[int, int, int, int]:
    """Histogram of codeword ranks (rank 0, 1, 2, 3)."""
    hist = [0, 0, 0, 0]
    for f in codewords(q):
        hist[rank_of(f)] += 1
    return tuple(hist)


def expected_rank_distribution(q: int) -> tuple[int, int, int, int]:
    """(1, 0, (q^3-1)(q^2+q+1), (q^3-1)(q^3-q^2-q))."""
    return (1, 0, (q**3 - 1) * (q**2 + q + 1), (q**3 - 1) * (q**3 - q**2 - q))


def mrd_restriction_image_size(q: int, z_rows) -> int:
    """Size of {Z*A : A a codeword matrix} for full-rank canonical Z.

    Injectivity of A -> Z*A over the code gives image size q^6; for t = 2
    rows this equals q^(2*3), so the map is onto GF(q)^(2x3).
    """
    t = len(z_rows)
    sp3 = space(3, q)
    got, _ = rref(sp3, z_rows)
    if got != tuple(z_rows) or len(got) != t:
        raise ValueError("Z must be canonical of full rank")
    images = set()
    for f in codewords(q):
        images.add(tuple(mat_mul_rows(sp3, sp3.field, z_rows, 3, f.matrix_rows())))
    return len(images)


def mrd_restriction_bijective(q: int, z_rows) -> bool:
    """True iff A -> Z*A is injective on the code (image size q^6)."""
    return mrd_restriction_image_size(q, z_rows) == q**6


@dataclass(frozen=True)
class ConstantRankSpace:
    """d_space output: generators f, g and the defining pair (Z, P)."""

    f: LinPoly
    g: LinPoly
    z: Subspace
    p: Subspace

    def members(self):
        """All q^2 elements lam*f + mu*g."""
        q = self.f.ext.q
        out = []
        for lam in range(q):
            for mu in range(q):
                out.append(self.f.scale(lam).add(self.g.scale(mu)))
        return out


def _ext_elems_of(ext: ExtGF, sub: Subspace):
    sp3 = space(3, ext.q)
    if sub.space.key != sp3.key:
        raise ValueError("Z and P must live in the coordinate space GF(q)^3")
    return [ext.from_coords(sp3.digits(r)) for r in sub.rows]


def d_space(ext: ExtGF, z: Subspace, p: Subspace) -> ConstantRankSpace:
    """The constant-rank-2 subspace mapping Z onto the point P."""
    if z.dim != 2 or p.dim != 1:
        raise ValueError("need dim(Z) = 2 and dim(P) = 1")
    a, b = _ext_elems_of(ext, z)
    (c,) = _ext_elems_of(ext, p)
    w = ext.sub(ext.mul(a, ext.frobenius(b)), ext.mul(ext.frobenius(a), b))
    assert w != 0, "independent a, b must have a*b^q != a^q*b"
    s = ext.div(c, w)
    f = LinPoly(ext, ext.neg(ext.mul(s, ext.frobenius(a))), ext.mul(s, a))
    g = LinPoly(ext, ext.mul(s, ext.frobenius(b)), ext.neg(ext.mul(s, b)))
    assert f(a) == 0 and g(b) == 0 and f(b) == c and g(a) == c
    return ConstantRankSpace(f, g, z, p)


def removable_set(q: int) -> tuple[LinPoly, ...]:
    """The subspace {u*x^q - u^q*x : u in GF(q^3)}, q^3 codewords."""
    ext = ext_field(q)
    return tuple(
        LinPoly(ext, ext.neg(ext.frobenius(u)), u) for u in range(ext.order)
    )


def corr(ext: ExtGF, z: Subspace) -> Subspace:
    """The point GF(q)*(a*b^q - a^q*b) for Z = <a, b>, basis independent."""
    if z.dim != 2:
        raise ValueError("corr is defined on 2-dimensional subspaces")
    a, b = _ext_elems_of(ext, z)
    w = ext.sub(ext.mul(a, ext.frobenius(b)), ext.mul(ext.frobenius(a), b))
    sp3 = space(3, ext.q)
    return from_rows(sp3, [sp3.vector(ext.coords(w))])


def triple_determinant_check(ext: ExtGF, a: int, b: int, c: int) -> bool:
    """Whether {b*c^q-b^q*c, c*a^q-c^q*a, a*b^q-a^q*b} spans GF(q^3) over GF(q).

    Equivalent to <a, b, c> = GF(q^3) via the adjoint of the Moore
    determinant.
    """
    fr = ext.frobenius

    def bracket(x, y):
        return ext.sub(ext.mul(x, fr(y)), ext.mul(fr(x), y))

    derived = [bracket(b, c), bracket(c, a), bracket(a, b)]
    sp3 = space(3, ext.q)
    rows = [sp3.vector(ext.coords(x)) for x in derived]
    _, pivots = rref(sp3, rows)
    return len(pivots) == 3
