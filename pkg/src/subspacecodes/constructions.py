"""Construction of the (6, q^6+2q^2+2q+1, 4; 3)_q subspace codes.

Everything lives in GF(q^3) x GF(q^3), identified with GF(q)^6 by applying
the fixed basis coordinates componentwise; the special plane
S = {0} x GF(q^3) then sits on the last three coordinates.

The lifted code consists of the q^6 graph planes

    G(a0, a1) = {(x, a0*x + a1*x^q) : x in GF(q^3)},

with canonical matrix (I_3 | A), A the coordinate matrix of the map.  It has
minimum distance 4 and covers every line disjoint from S exactly once, which
caps any extension containing it at q^6 + q^2 + q + 1 planes.  To do better,
the q^3 planes whose maps belong to R = {u*x^q - u^q*x} are removed and
their lines rearranged into q^3 + q^2 + q new planes, q through each point
of S:

    N(a, b, c) = {(x, c*x^q - c^q*x + y*(a*b^q - a^q*b)) : x in Z, y in GF(q)}

for each 2-dimensional subspace Z = <a, b> of GF(q^3) and each coset
c + Z in GF(q^3)/Z.  The old planes together with the new ones form a
(6, q^6+q^2+q, 4; 3)_q code whose lines disjoint from S are again each
covered once.  Finally q^2 + q + 1 planes meeting S in a line are added:
fixing v0 of nonzero trace, for each projective class representative x,

    E(x) = < (x, x^(q+1)*v0) >  +  {(0, y) : trace(y * x^(-q-1)) = 0},

whose points off S avoid everything covered by the removed planes (those
have second-component twist of trace zero).  The result is a
(6, q^6+2q^2+2q+1, 4; 3)_q code; at q = 2 it has 77 planes.

Deterministic choices: v0 is the smallest field element of nonzero trace,
coset representatives are the smallest elements of their cosets, and E(x)
uses the smallest representative of each projective class (for q > 2
different representatives give different, equally valid planes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import ExtGF, ext_field
from .gabidulin import LinPoly, removable_set
from .geometry import special_flat
from .linalg import Space, Subspace, SubspaceCode, from_rows, space, subspaces_of


def _pair_vector(sp: Space, ext: ExtGF, left: int, right: int) -> int:
    """(x, y) in GF(q^3)^2 -> packed GF(q)^6 vector via basis coordinates."""
    return sp.vector(ext.coords(left) + ext.coords(right))


def lift(ext: ExtGF, f: LinPoly) -> Subspace:
    """The graph plane {(x, f(x))}, with canonical matrix (I_3 | A)."""
    sp = space(6, ext.q)
    rows = tuple(_pair_vector(sp, ext, b, f(b)) for b in ext.basis)
    return Subspace(sp, rows, (0, 1, 2))


def lift_gabidulin(q: int) -> SubspaceCode:
    """The lifted code: q^6 planes G(a0, a1), minimum distance 4."""
    ext = ext_field(q)
    members = []
    for a1 in range(ext.order):
        for a0 in range(ext.order):
            members.append(lift(ext, LinPoly(ext, a0, a1)))
    return SubspaceCode(space(6, q), members, declared_distance=4)


@dataclass(frozen=True)
class ConstructionAParts:
    """The three plane families of the construction, plus the chosen v0."""

    old_planes: tuple[Subspace, ...]
    new_planes: tuple[Subspace, ...]
    line_planes: tuple[Subspace, ...]
    removed_planes: tuple[Subspace, ...]
    v0: int


def _two_dim_subspaces(q: int):
    sp3 = space(3, q)
    full = from_rows(sp3, sp3.powers)
    return list(subspaces_of(full, 2))


def _coset_representatives(ext: ExtGF, z_elems) -> list[int]:
    """Smallest representative of each coset of <z_elems> in GF(q^3)."""
    q = ext.q
    zset = set()
    a, b = z_elems
    for lam in range(q):
        for mu in range(q):
            zset.add(ext.add(ext.mul(lam, a), ext.mul(mu, b)))
    reps = []
    seen = set()
    for c in range(ext.order):
        if c in seen:
            continue
        reps.append(c)
        seen.update(ext.add(c, z) for z in zset)
    return reps


def construction_a_parts(q: int) -> ConstructionAParts:
    ext = ext_field(q)
    sp = space(6, q)
    sp3 = space(3, q)

    removed = removable_set(q)
    removed_keys = {(f.a0, f.a1) for f in removed}
    old = []
    for a1 in range(ext.order):
        for a0 in range(ext.order):
            if (a0, a1) not in removed_keys:
                old.append(lift(ext, LinPoly(ext, a0, a1)))

    new = []
    for z in _two_dim_subspaces(q):
        a, b = (ext.from_coords(sp3.digits(r)) for r in z.rows)
        w = ext.sub(ext.mul(a, ext.frobenius(b)), ext.mul(ext.frobenius(a), b))
        for c in _coset_representatives(ext, (a, b)):
            cq = ext.frobenius(c)
            rows = [
                _pair_vector(sp, ext, a, ext.sub(ext.mul(c, ext.frobenius(a)), ext.mul(cq, a))),
                _pair_vector(sp, ext, b, ext.sub(ext.mul(c, ext.frobenius(b)), ext.mul(cq, b))),
                _pair_vector(sp, ext, 0, w),
            ]
            new.append(from_rows(sp, rows))

    v0 = next(x for x in range(ext.order) if ext.trace(x) != 0)
    line_planes = []
    seen_classes = set()
    for x in range(1, ext.order):
        if x in seen_classes:
            continue
        seen_classes.update(ext.mul(lam, x) for lam in range(1, q))
        xq1 = ext.pow(x, q + 1)
        m = ext.inv(xq1)
        kernel = _trace_form_kernel(ext, m)
        rows = [_pair_vector(sp, ext, x, ext.mul(xq1, v0))]
        rows += [_pair_vector(sp, ext, 0, y) for y in kernel]
        line_planes.append(from_rows(sp, rows))

    removed_lift = tuple(lift(ext, f) for f in removed)
    return ConstructionAParts(tuple(old), tuple(new), tuple(line_planes), removed_lift, v0)


def _trace_form_kernel(ext: ExtGF, m: int) -> list[int]:
    """A basis of {y : trace(y*m) = 0}, a 2-dimensional subspace of GF(q^3)."""
    sp3 = space(3, ext.q)
    functional = [ext.trace(ext.mul(b, m)) for b in ext.basis]
    rows = []
    for y in _kernel_of_functional(sp3, functional):
        rows.append(y)
    sub = from_rows(sp3, rows)
    assert sub.dim == 2
    return [ext.from_coords(sp3.digits(r)) for r in sub.rows]


def _kernel_of_functional(sp3: Space, functional):
    """Basis vectors of the kernel of a nonzero linear functional on GF(q)^3."""
    f = sp3.field
    piv = next(j for j in range(3) if functional[j] != 0)
    inv = f.inv(functional[piv])
    out = []
    for j in range(3):
        if j == piv:
            continue
        coeff = f.neg(f.mul(inv, functional[j]))
        out.append(sp3.vadd(sp3.powers[j], sp3.vscale(coeff, sp3.powers[piv])))
    return out


def construction_a_core(q: int) -> SubspaceCode:
    """Old plus new planes: a (6, q^6+q^2+q, 4; 3)_q code."""
    parts = construction_a_parts(q)
    return SubspaceCode(
        space(6, q), parts.old_planes + parts.new_planes, declared_distance=4
    )


def construction_a(q: int) -> SubspaceCode:
    """The full (6, q^6+2q^2+2q+1, 4; 3)_q code (77 planes at q = 2)."""
    parts = construction_a_parts(q)
    members = parts.old_planes + parts.new_planes + parts.line_planes
    return SubspaceCode(space(6, q), members, declared_distance=4)


def maximal_core_plus_s(q: int) -> SubspaceCode:
    """The core together with the special plane S itself.

    S has distance 6 to the old planes and 4 to the new ones, and once S is
    a codeword no plane meeting S in a line can be added, so the result is
    maximal.  Its size is q^6 + q^2 + q + 1 (71 at q = 2), reported as
    computed.
    """
    parts = construction_a_parts(q)
    sp = space(6, q)
    members = parts.old_planes + parts.new_planes + (special_flat(sp, 3),)
    return SubspaceCode(sp, members, declared_distance=4)


@dataclass(frozen=True)
class LmrdCapReport:
    """Outcome of the extension cap check for the full lifted code."""

    q: int
    bound: int  # q^6 + q^2 + q + 1
    candidates_rejected: int  # planes with dim(E meet S) <= 1, all blocked
    planes_meeting_s_in_line: int  # q^2 + q + 1 per line of S at most one
    s_is_addable: bool


def lmrd_cap_check(q: int) -> LmrdCapReport:
    """Verify that only planes meeting S in >= a line can extend the lifted code.

    Every plane E with dim(E meet S) <= 1 contains a line disjoint from S;
    the lifted code covers all such lines, so E would sit at distance 2 from
    some codeword.  Hence an extension adds at most one plane per line of S,
    giving the cap q^6 + q^2 + q + 1.
    """
    from .geometry import enumerate_flats, geometry

    lifted = lift_gabidulin(q)
    covered = set()
    for plane in lifted:
        for line in subspaces_of(plane, 2):
            assert line.rows not in covered, "line disjoint from S covered twice"
            covered.add(line.rows)

    sp = space(6, q)
    s = special_flat(sp, 3)
    smask = s.point_mask()
    rejected = 0
    line_meeting = 0
    for plane in enumerate_flats(geometry(6, q), 3):
        inter = plane.point_mask() & smask
        npts = inter.bit_count()
        if npts > 1:  # meets S in at least a line (or equals S)
            if npts == q + 1:  # exactly a line
                line_meeting += 1
            continue
        blocked = any(line.rows in covered for line in subspaces_of(plane, 2))
        assert blocked, "plane meeting S in <= a point must contain a covered line"
        rejected += 1

    s_addable = all(plane.point_mask() & smask == 0 for plane in lifted)
    return LmrdCapReport(
        q=q,
        bound=q**6 + q**2 + q + 1,
        candidates_rejected=rejected,
        planes_meeting_s_in_line=line_meeting,
        s_is_addable=s_addable,
    )
