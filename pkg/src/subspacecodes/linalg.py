"""Matrices and subspaces over GF(q) with packed-integer rows.

A row vector of length v over GF(q) is stored as a single integer whose
base-q digits, most significant first, are the entries left to right:

    (x1, x2, ..., xv)  <->  x1*q^(v-1) + x2*q^(v-2) + ... + xv

so integer comparison of rows equals left-to-right entry comparison, and a
matrix (a tuple of row integers) compares row-major.  For q in {2, 4, 8}
the digits occupy independent bit groups and vector addition is XOR.

A subspace of GF(q)^v is identified with its canonical matrix: the unique
reduced-row-echelon representative of its row space with no zero rows (the
empty tuple for the zero space).  Products Z*U of canonical matrices are
canonical again, which underlies subspace enumeration: the t-dimensional
subspaces of U are exactly <Z * cm(U)> with Z running over the canonical
full-rank t x dim(U) matrices.

Subspace sums stack and re-reduce; intersections go through duals,
(A meet B) = (A^perp + B^perp)^perp, with duals taken relative to the
standard dot product.  The subspace distance is

    d_s(U, W) = dim(U + W) - dim(U meet W) = 2*rank(U stacked on W) - dim U - dim W.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .fields import GF, make_field


class Space:
    """Ambient space GF(q)^v: vector arithmetic and projective point tables."""

    def __init__(self, field: GF, v: int):
        if not 0 <= v <= 12:
            raise ValueError("ambient dimension must be between 0 and 12")
        self.field = field
        self.q = field.q
        self.v = v
        self.powers = tuple(field.q ** (v - 1 - j) for j in range(v))
        self._xor_add = field.q in (2, 4, 8)
        self._points = None
        self._point_index = None

    @property
    def key(self):
        return (self.v, self.q)

    def __repr__(self):
        return f"Space(GF({self.q})^{self.v})"

    def __eq__(self, other):
        return isinstance(other, Space) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # -- vector arithmetic on packed rows --------------------------------

    def digit(self, vec, j):
        return (vec // self.powers[j]) % self.q

    def digits(self, vec):
        return tuple((vec // p) % self.q for p in self.powers)

    def vector(self, digits):
        acc = 0
        for d in digits:
            acc = acc * self.q + d
        return acc

    def vadd(self, a, b):
        if self._xor_add:
            return a ^ b
        f = self.field
        return self.vector([f.add(x, y) for x, y in zip(self.digits(a), self.digits(b))])

    def vneg(self, a):
        if self._xor_add:
            return a
        f = self.field
        return self.vector([f.neg(x) for x in self.digits(a)])

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vscale(self, c, a):
        if c == 1:
            return a
        if c == 0:
            return 0
        f = self.field
        return self.vector([f.mul(c, x) for x in self.digits(a)])

    def dot(self, a, b):
        f = self.field
        acc = 0
        for x, y in zip(self.digits(a), self.digits(b)):
            acc = f.add(acc, f.mul(x, y))
        return acc

    def unit(self, j):
        """Standard basis vector e_(j+1) (column index j, 0-based)."""
        return self.powers[j]

    # -- projective points ------------------------------------------------

    def normalize(self, vec):
        """Scale a nonzero vector so its leading nonzero entry is 1."""
        if vec == 0:
            raise ValueError("cannot normalize the zero vector")
        for j in range(self.v):
            d = self.digit(vec, j)
            if d:
                return vec if d == 1 else self.vscale(self.field.inv(d), vec)
        raise AssertionError

    def points(self):
        """All normalized nonzero vectors, ordered by leading column then value."""
        if self._points is None:
            pts = []
            for j in range(self.v):
                lead = self.powers[j]
                for rest in range(lead):
                    pts.append(lead + rest)
            self._points = tuple(pts)
            self._point_index = {p: i for i, p in enumerate(pts)}
        return self._points

    def point_index(self, vec):
        self.points()
        return self._point_index[self.normalize(vec)]

    def n_points(self):
        return (self.q**self.v - 1) // (self.q - 1)


@lru_cache(maxsize=None)
def space(v: int, q: int) -> Space:
    return Space(make_field(q), v)


def rref(sp: Space, rows) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row echelon form of the given rows; returns (rows, pivot columns).

    Zero rows are dropped, so the result is the canonical matrix of the row
    space (the empty tuple for the zero space).
    """
    f = sp.field
    work = [r for r in rows if r]
    pivots = []
    r = 0
    for col in range(sp.v):
        piv = None
        for i in range(r, len(work)):
            if sp.digit(work[i], col):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        d = sp.digit(work[r], col)
        if d != 1:
            work[r] = sp.vscale(f.inv(d), work[r])
        for i in range(len(work)):
            if i != r:
                di = sp.digit(work[i], col)
                if di:
                    work[i] = sp.vsub(work[i], sp.vscale(di, work[r]))
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    work = [w for w in work[:r] if w]
    return tuple(work), tuple(pivots)


def is_canonical(sp: Space, rows) -> bool:
    """True iff rows form a reduced row echelon matrix without zero rows."""
    got, _ = rref(sp, rows)
    return tuple(rows) == got


class Subspace:
    """A subspace of GF(q)^v held as its canonical matrix.

    Equality and hashing use (v, q, rows); the cached projective point mask
    is internal.  Instances are immutable in use.
    """

    __slots__ = ("space", "rows", "pivots", "_mask")

    def __init__(self, sp: Space, rows, pivots=None):
        self.space = sp
        self.rows = tuple(rows)
        if pivots is None:
            got, pivots = rref(sp, rows)
            if got != self.rows:
                raise ValueError("rows are not a canonical matrix; use from_rows()")
        self.pivots = tuple(pivots)
        self._mask = None

    @property
    def dim(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.space.key == other.space.key
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.space.key, self.rows))

    def __repr__(self):
        return f"Subspace(v={self.space.v}, q={self.space.q}, rows={self.rows})"

    def sort_key(self):
        return (self.dim, self.pivots, self.rows)

    def vectors(self):
        """All q^dim vectors of the subspace (including 0)."""
        sp = self.space
        vecs = [0]
        for row in self.rows:
            vecs += [sp.vadd(w, sp.vscale(c, row)) for c in range(1, sp.q) for w in vecs]
        return vecs

    def contains(self, vec) -> bool:
        sp = self.space
        w = vec
        for row, piv in zip(self.rows, self.pivots):
            d = sp.digit(w, piv)
            if d:
                w = sp.vsub(w, sp.vscale(d, row))
        return w == 0

    def point_mask(self) -> int:
        """Bitmask over the ambient projective point indices covered here."""
        if self._mask is None:
            sp = self.space
            idx = sp.point_index
            m = 0
            for vec in self.vectors():
                if vec and _is_normalized(sp, vec):
                    m |= 1 << idx(vec)
            self._mask = m
        return self._mask

    def points(self):
        """Normalized representatives of the projective points on this flat."""
        sp = self.space
        return sorted(
            vec for vec in self.vectors() if vec and _is_normalized(sp, vec)
        )


def _is_normalized(sp, vec):
    for j in range(sp.v):
        d = sp.digit(vec, j)
        if d:
            return d == 1
    return False


def from_rows(sp: Space, rows) -> Subspace:
    got, pivots = rref(sp, rows)
    return Subspace(sp, got, pivots)


def zero_subspace(sp: Space) -> Subspace:
    return Subspace(sp, (), ())


def full_space(sp: Space) -> Subspace:
    return Subspace(sp, tuple(sp.powers), tuple(range(sp.v)))


def mat_mul_rows(sp_out: Space, field: GF, z_rows, z_cols: int, u_rows):
    """Rows of Z*U where Z is given as packed rows with z_cols digits."""
    zq = field.q
    zpow = tuple(zq ** (z_cols - 1 - j) for j in range(z_cols))
    out = []
    for zr in z_rows:
        acc = 0
        for j, u in enumerate(u_rows):
            c = (zr // zpow[j]) % zq
            if c:
                acc = sp_out.vadd(acc, sp_out.vscale(c, u))
        out.append(acc)
    return out


def canonical_product(z_sp: Space, z_rows, u: Subspace) -> Subspace:
    """Z * cm(U) for canonical Z, asserting the product is canonical as-is.

    Canonical matrices are closed under multiplication, so the product is
    returned without re-reduction; a non-canonical product is a bug.
    """
    if z_sp.v != u.dim:
        raise ValueError("column count of Z must equal dim(U)")
    if not is_canonical(z_sp, z_rows):
        raise ValueError("Z is not canonical")
    rows = mat_mul_rows(u.space, u.space.field, z_rows, z_sp.v, u.rows)
    got, pivots = rref(u.space, rows)
    assert got == tuple(rows), "canonical product closure violated"
    return Subspace(u.space, rows, pivots)


def canonical_matrices(cols: int, nrows: int, q: int):
    """Yield all canonical (RREF, no zero rows) nrows x cols matrices over GF(q).

    Order: pivot column sets lexicographically, then free entries row-major
    counting up from zero.  Yields tuples of packed rows.
    """
    sp = space(cols, q)
    if nrows == 0:
        yield ()
        return
    if nrows > cols:
        return
    for pivots in combinations(range(cols), nrows):
        pivset = set(pivots)
        free = [
            (i, j)
            for i in range(nrows)
            for j in range(pivots[i] + 1, cols)
            if j not in pivset
        ]
        base = [sp.powers[pivots[i]] for i in range(nrows)]
        for values in product(range(q), repeat=len(free)):
            rows = list(base)
            for (i, j), val in zip(free, values):
                if val:
                    rows[i] += val * sp.powers[j]
            yield tuple(rows)


def subspaces_of(u: Subspace, t: int):
    """All t-dimensional subspaces of U, canonical without re-reduction."""
    if not 0 <= t <= u.dim:
        raise ValueError("need 0 <= t <= dim(U)")
    sp = u.space
    k = u.dim
    f = sp.field
    for z_rows in canonical_matrices(k, t, sp.q):
        rows = mat_mul_rows(sp, f, z_rows, k, u.rows)
        yield Subspace(sp, tuple(rows), _product_pivots(u, z_rows, t))


def _product_pivots(u, z_rows, t):
    # pivots of Z*cm(U): the pivot columns of U selected by Z's pivots
    zsp = space(u.dim, u.space.q)
    _, zpiv = rref(zsp, z_rows)
    return tuple(u.pivots[i] for i in zpiv)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return from_rows(a.space, a.rows + b.rows)


def dual(a: Subspace) -> Subspace:
    """Orthogonal complement relative to the standard dot product."""
    sp = a.space
    f = sp.field
    pivset = set(a.pivots)
    rows = []
    for j in range(sp.v):
        if j in pivset:
            continue
        w = sp.powers[j]
        for row, piv in zip(a.rows, a.pivots):
            c = sp.digit(row, j)
            if c:
                w = sp.vsub(w, sp.vscale(c, sp.powers[piv]))
        rows.append(w)
    return from_rows(sp, rows)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return dual(subspace_sum(dual(a), dual(b)))


def subspace_distance(a: Subspace, b: Subspace) -> int:
    """dim(A+B) - dim(A meet B) = 2*rank(A stacked on B) - dim A - dim B."""
    _check_same_ambient(a, b)
    stacked, _ = rref(a.space, a.rows + b.rows)
    return 2 * len(stacked) - a.dim - b.dim


def _check_same_ambient(a, b):
    if a.space.key != b.space.key:
        raise ValueError("subspaces live in different ambient spaces")


class SubspaceCode:
    """A set of pairwise distinct subspaces of a common ambient space.

    `members` keeps construction order; `sorted_members()` gives the
    deterministic canonical order used for files.  For constant-dimension
    codes `k` is the common dimension.
    """

    def __init__(self, sp: Space, members, declared_distance=None):
        self.space = sp
        self.members = tuple(members)
        if len(set(self.members)) != len(self.members):
            raise ValueError("code members must be pairwise distinct")
        for m in self.members:
            if m.space.key != sp.key:
                raise ValueError("member in wrong ambient space")
        dims = {m.dim for m in self.members}
        self.k = dims.pop() if len(dims) == 1 else None
        self.declared_distance = declared_distance

    @property
    def size(self):
        return len(self.members)

    def sorted_members(self):
        return sorted(self.members, key=Subspace.sort_key)

    def member_set(self):
        return frozenset(self.members)

    def __contains__(self, sub):
        return sub in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"SubspaceCode(v={self.space.v}, q={self.space.q}, M={self.size}, k={self.k})"


def dual_code(code: SubspaceCode) -> SubspaceCode:
    return SubspaceCode(code.space, [dual(m) for m in code.members])
