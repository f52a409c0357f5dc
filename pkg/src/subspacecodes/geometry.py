"""Projective geometry PG(v-1,q): flat counting and enumeration, spreads.

The k-dimensional subspaces of GF(q)^v are the (k-1)-flats of PG(v-1,q);
their number is the Gaussian binomial [v choose k]_q.  Enumeration goes
through canonical matrices and is deterministic: pivot column sets in
lexicographic order, free entries counting up, matching Subspace.sort_key().

The special flat S is spanned by the last v-k unit vectors, so cm(S) is the
block (0 | I).  Plane spreads of PG(5,q) come from field reduction: the
1-dimensional GF(q^3)-subspaces of GF(q^3)^2, read as 3-dimensional
GF(q)-subspaces of GF(q)^6 through the fixed coordinate map that sends
(x, y) to coords(x) | coords(y).  That map puts S = {0} x GF(q^3) on the
last three coordinates, the convention used throughout.
"""

from __future__ import annotations

from functools import lru_cache

from .fields import ext_field
from .linalg import (
    Space,
    Subspace,
    SubspaceCode,
    canonical_matrices,
    from_rows,
    full_space,
    rref,
    space,
    subspaces_of,
)


def gaussian(v: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^v (Gaussian binomial)."""
    if k < 0 or k > v:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (v - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


class GeometrySpec:
    """PG(v-1,q) context: ambient Space plus cached flat counts."""

    def __init__(self, v: int, q: int):
        self.space = space(v, q)
        self.v = v
        self.q = q
        self.flat_counts = tuple(gaussian(v, k, q) for k in range(v + 1))

    def __repr__(self):
        return f"GeometrySpec(PG({self.v - 1},{self.q}))"


@lru_cache(maxsize=None)
def geometry(v: int, q: int) -> GeometrySpec:
    return GeometrySpec(v, q)


def enumerate_flats(geom: GeometrySpec, k: int):
    """All k-dimensional subspaces of the ambient space, in canonical order."""
    return subspaces_of(full_space(geom.space), k)


def special_flat(sp: Space, k: int) -> Subspace:
    """The subspace spanned by the last v-k unit vectors; cm = (0 | I)."""
    rows = tuple(sp.powers[j] for j in range(k, sp.v))
    return Subspace(sp, rows, tuple(range(k, sp.v)))


def lines_disjoint_from(geom: GeometrySpec, s: Subspace):
    """All lines (2-dim subspaces) meeting the given flat trivially."""
    smask = s.point_mask()
    for line in enumerate_flats(geom, 2):
        if line.point_mask() & smask == 0:
            yield line


def plane_spread_field_reduction(q: int) -> SubspaceCode:
    """The Desarguesian plane spread of PG(5,q) via GF(q^3)-field reduction.

    The q^3+1 planes are the GF(q)-shadows of the GF(q^3)-lines of
    GF(q^3)^2, spanned by <(1, t)> for t in GF(q^3) together with <(0, 1)>.
    They partition the point set and have pairwise subspace distance 6.
    """
    ext = ext_field(q)
    sp = space(6, q)
    members = []
    reps = [(1, t) for t in range(ext.order)] + [(0, 1)]
    for u, w in reps:
        rows = []
        for b in ext.basis:
            left = ext.coords(ext.mul(b, u))
            right = ext.coords(ext.mul(b, w))
            rows.append(sp.vector(left + right))
        members.append(from_rows(sp, rows))
    return SubspaceCode(sp, members, declared_distance=6)


def affine_matrix_flat(sp: Space, m: int, a_rows, z_rows) -> Subspace:
    """The flat of PG(m+n-1,q) matching the matrix-geometry flat A + <Z>.

    `a_rows` is an m x n matrix A over GF(q) (packed rows, n = v - m) and
    `z_rows` a canonical full-rank t x n matrix Z.  The result is the
    (m+t)-dimensional subspace with canonical matrix built from the blocks
    (I_m | A') over (0 | Z); it meets the special flat on the last n
    coordinates exactly in the re-embedded row space of Z.
    """
    n = sp.v - m
    zsp = space(n, sp.q)
    got, zpiv = rref(zsp, z_rows)
    if got != tuple(z_rows):
        raise ValueError("Z must be canonical")
    if len(z_rows) != len([r for r in z_rows if r]):
        raise ValueError("Z must have full rank")
    rows = [sp.powers[i] + a for i, a in enumerate(a_rows)]
    rows += [z for z in z_rows]
    return from_rows(sp, rows)
