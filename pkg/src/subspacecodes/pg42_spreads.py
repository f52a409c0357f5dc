"""Partial line spreads of size 9 in PG(4,2): types, classification, groups.

A partial spread of size 9 covers 27 of the 31 points; the 4 holes always
form E minus L for a plane E and a line L of E, and exactly 4 of the 31
solids are hole-free, each holding a regulus (here: three pairwise skew
lines spanning a solid).  A spread line lies in 4 reguli if it equals L,
in 2 if it meets L in a point, in 1 if it misses L.  That forces one of
three regulus patterns:

    X        L is a spread line and all 4 reguli share it;
    E        L is not a spread line; the 3 lines meeting L form one
             regulus themselves (they span a solid);
    I-Delta  L is not a spread line; the 3 lines meeting L span the
             whole space, and one regulus consists of lines disjoint
             from E.

There are exactly 4 isomorphism classes: one of pattern X, one of E, two
of I-Delta (named ID and ID' here; which completion of the construction
gets the prime is a convention of this module).  Classification works by
exhausting all size-9 partial spreads through the first line <e1,e2> --
every class has such members since GL(5,2) is line-transitive -- and then
certifying completeness by the orbit count identity

    sum over classes of |GL(5,2)| / |stabilizer| * 9/155  =  number found.

Representatives are built constructively: X as a hyperplane section of a
plane spread of PG(5,2) with the contained plane replaced by a line, E by
swapping one regulus of an X spread for its opposite, ID and ID' from the
three-skew-lines recipe with the two ways of completing the final solid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .autgroup import (
    DEFAULT_BUDGET,
    BlockSystem,
    find_isomorphism,
    orbits,
    stabilizer_elements,
)
from .geometry import plane_spread_field_reduction, special_flat
from .linalg import Subspace, from_rows, space, subspaces_of, full_space

GL52_ORDER = 9999360
N_LINES = 155
SPREAD_SIZE = 9

TYPE_X = "X"
TYPE_E = "E"
TYPE_ID = "ID"
TYPE_ID_PRIME = "ID'"
PATTERN_ID = "ID"  # pattern label shared by the two I-Delta classes


def _sp5():
    return space(5, 2)


def line_mask(sub: Subspace) -> int:
    """Vector bitmask of a line of PG(4,2) (3 nonzero vectors)."""
    a, b = sub.rows
    return (1 << a) | (1 << b) | (1 << (a ^ b))


def _mask_to_line(mask: int) -> Subspace:
    pts = []
    while mask:
        low = mask & -mask
        pts.append(low.bit_length() - 1)
        mask ^= low
    return from_rows(_sp5(), pts[:2])


def all_line_masks() -> tuple[int, ...]:
    """The 155 line masks of PG(4,2), sorted."""
    masks = sorted(line_mask(l) for l in subspaces_of(full_space(_sp5()), 2))
    assert len(masks) == N_LINES
    return tuple(masks)


def _rank_of_mask(mask: int) -> int:
    """GF(2)-rank of the set of vectors in the mask."""
    basis = []
    m = mask
    while m:
        low = m & -m
        m ^= low
        x = low.bit_length() - 1
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    return len(basis)


def _span_mask(mask: int) -> int:
    """Bitmask of all nonzero vectors spanned by the vectors in the mask."""
    vecs = [0]
    m = mask
    basis = []
    while m:
        low = m & -m
        m ^= low
        x = low.bit_length() - 1
        red = x
        for b in basis:
            red = min(red, red ^ b)
        if red:
            basis.append(red)
            vecs += [v ^ x for v in vecs]
    out = 0
    for v in vecs:
        if v:
            out |= 1 << v
    return out


@dataclass(frozen=True)
class PartialSpread:
    """Pairwise disjoint lines of PG(4,2), held as sorted vector masks."""

    masks: tuple[int, ...]

    def __post_init__(self):
        cover = 0
        for m in self.masks:
            assert cover & m == 0, "lines of a partial spread must be disjoint"
            cover |= m
        object.__setattr__(self, "_cover", cover)

    @property
    def cover(self) -> int:
        return self._cover

    @property
    def size(self) -> int:
        return len(self.masks)

    def lines(self) -> tuple[Subspace, ...]:
        return tuple(_mask_to_line(m) for m in self.masks)

    def holes(self) -> tuple[int, ...]:
        full = ((1 << 32) - 2)  # bits 1..31
        missing = full & ~self.cover
        out = []
        while missing:
            low = missing & -missing
            out.append(low.bit_length() - 1)
            missing ^= low
        return tuple(out)


def partial_spread(lines) -> PartialSpread:
    """Build from Subspace lines or raw masks."""
    masks = tuple(
        sorted(l if isinstance(l, int) else line_mask(l) for l in lines)
    )
    return PartialSpread(masks)


def regulus_of(l1: Subspace, l2: Subspace, l3: Subspace):
    """The triple as a regulus if the three disjoint lines span a solid."""
    m1, m2, m3 = line_mask(l1), line_mask(l2), line_mask(l3)
    if m1 & m2 or m1 & m3 or m2 & m3:
        raise ValueError("regulus lines must be pairwise disjoint")
    if _rank_of_mask(m1 | m2 | m3) != 4:
        return None
    return (l1, l2, l3)


def transversals_of(masks) -> list[int]:
    """Lines meeting every given line in exactly one point."""
    out = []
    for t in all_line_masks():
        if all((t & m).bit_count() == 1 for m in masks):
            out.append(t)
    return out


def opposite_regulus(regulus):
    """The three transversal lines; same 9 covered points."""
    masks = [line_mask(l) for l in regulus]
    opp = transversals_of(masks)
    assert len(opp) == 3, "a regulus has exactly 3 transversals"
    assert opp[0] | opp[1] | opp[2] == masks[0] | masks[1] | masks[2]
    return tuple(_mask_to_line(m) for m in opp)


def reguli_in(ps: PartialSpread) -> list[tuple[int, int, int]]:
    """All index triples of spread lines forming a regulus."""
    out = []
    for i, j, k in combinations(range(ps.size), 3):
        if _rank_of_mask(ps.masks[i] | ps.masks[j] | ps.masks[k]) == 4:
            out.append((i, j, k))
    return out


@dataclass(frozen=True)
class SpreadProfile:
    """Hole structure, reguli, and the regulus pattern of a size-9 spread."""

    holes: tuple[int, ...]
    hole_plane_mask: int  # the plane E with holes = E minus L
    l_mask: int  # the line L
    reguli: tuple[tuple[int, int, int], ...]
    membership: tuple[int, ...]  # per line: number of reguli containing it
    pattern: str  # TYPE_X, TYPE_E or PATTERN_ID


def profile(ps: PartialSpread) -> SpreadProfile:
    """Full structural profile; asserts the universal hole and regulus facts."""
    if ps.size != SPREAD_SIZE:
        raise ValueError("profile is defined for size-9 partial spreads")
    holes = ps.holes()
    assert len(holes) == 4
    hole_mask = 0
    for h in holes:
        hole_mask |= 1 << h
    e_mask = _span_mask(hole_mask)
    assert e_mask.bit_count() == 7, "holes must span a plane"
    l_mask = e_mask & ~hole_mask
    assert l_mask.bit_count() == 3 and _rank_of_mask(l_mask) == 2
    regs = reguli_in(ps)
    assert len(regs) == 4, "a size-9 partial spread contains exactly 4 reguli"
    membership = [0] * ps.size
    for tri in regs:
        for i in tri:
            membership[i] += 1
    pattern = _pattern_from_structure(ps, l_mask, regs, membership)
    return SpreadProfile(
        holes=holes,
        hole_plane_mask=e_mask,
        l_mask=l_mask,
        reguli=tuple(regs),
        membership=tuple(membership),
        pattern=pattern,
    )


def _pattern_from_structure(ps, l_mask, regs, membership):
    if l_mask in ps.masks:
        assert sorted(membership) == [1] * 8 + [4]
        shared = [set(t) for t in regs]
        common = shared[0] & shared[1] & shared[2] & shared[3]
        assert len(common) == 1 and ps.masks[common.pop()] == l_mask
        return TYPE_X
    meeting = [i for i, m in enumerate(ps.masks) if m & l_mask]
    assert len(meeting) == 3 and sorted(membership) == [1] * 6 + [2] * 3
    assert all(membership[i] == 2 for i in meeting)
    span = _rank_of_mask(ps.masks[meeting[0]] | ps.masks[meeting[1]] | ps.masks[meeting[2]])
    if span == 4:
        assert tuple(meeting) in regs
        return TYPE_E
    assert span == 5
    return PATTERN_ID


def quick_pattern(masks: tuple[int, ...], cover: int) -> str:
    """Pattern from masks alone (no regulus enumeration); used in bulk."""
    full = 0
    for x in range(1, 32):
        full |= 1 << x
    hole_mask = full & ~cover
    e_mask = _span_mask(hole_mask)
    l_mask = e_mask & ~hole_mask
    if l_mask in masks:
        return TYPE_X
    meet = 0
    for m in masks:
        if m & l_mask:
            meet |= m
    return TYPE_E if _rank_of_mask(meet) == 4 else PATTERN_ID


# -- constructions of the four representatives ---------------------------


def _hyperplane_section_spread() -> tuple[PartialSpread, Subspace]:
    """Type X from a plane spread of PG(5,2): section of the first hyperplane
    through the first spread plane, that plane replaced by its first line."""
    spread6 = plane_spread_field_reduction(2)
    sp6 = space(6, 2)
    from .linalg import subspace_intersect
    from .geometry import enumerate_flats, geometry

    hyper = next(enumerate_flats(geometry(6, 2), 5))
    inside = None
    sections = []
    for plane in spread6.members:
        inter = subspace_intersect(plane, hyper)
        if inter.dim == 3:
            inside = plane
        else:
            assert inter.dim == 2
            sections.append(inter)
    assert inside is not None and len(sections) == 8
    replacement = next(subspaces_of(inside, 2))
    # coordinates on the hyperplane: digits at its pivot columns
    pivots = hyper.pivots
    sp5 = _sp5()

    def to5(vec6):
        return sp5.vector([sp6.digit(vec6, j) for j in pivots])

    lines5 = []
    for sec in sections + [replacement]:
        lines5.append(from_rows(sp5, [to5(r) for r in sec.rows]))
    return partial_spread(lines5), inside


def construct_type(label: str) -> PartialSpread:
    """A size-9 partial spread of the requested type (X, E, ID, ID')."""
    if label == TYPE_X:
        return _hyperplane_section_spread()[0]
    if label == TYPE_E:
        base = construct_type(TYPE_X)
        regs = reguli_in(base)
        i, j, k = regs[0]
        keep = [m for t, m in enumerate(base.masks) if t not in (i, j, k)]
        opp = transversals_of([base.masks[i], base.masks[j], base.masks[k]])
        return partial_spread(keep + opp)
    if label in (TYPE_ID, TYPE_ID_PRIME):
        first, second = _tridelta_pair()
        return first if label == TYPE_ID else second
    raise ValueError(f"unknown partial spread type {label!r}")


def _tridelta_pair() -> tuple[PartialSpread, PartialSpread]:
    """The two I-Delta spreads from the explicit three-skew-lines recipe."""
    lines = all_line_masks()
    # first triple of pairwise skew lines spanning the whole space
    triple = None
    for i, j, k in combinations(range(40), 3):
        a, b, c = lines[i], lines[j], lines[k]
        if a & b or a & c or b & c:
            continue
        if _rank_of_mask(a | b | c) == 5:
            triple = (a, b, c)
            break
    l1, l2, l3 = triple
    transversal = transversals_of([l1, l2, l3])
    assert len(transversal) == 1, "three skew lines not in a solid: unique transversal"
    l = transversal[0]
    # wirings: lines skew to l1,l2,l3 and to each other, one inside each
    # solid H_i = <the other two lines>
    solids = [
        _span_mask(l2 | l3),
        _span_mask(l1 | l3),
        _span_mask(l1 | l2),
    ]
    used = l1 | l2 | l3
    candidates = [
        [m for m in lines if m & ~h == 0 and m & used == 0] for h in solids
    ]
    wirings = []
    for m1 in candidates[0]:
        for m2 in candidates[1]:
            if m1 & m2:
                continue
            for m3 in candidates[2]:
                if m3 & (m1 | m2):
                    continue
                wirings.append((m1, m2, m3))
    assert len(wirings) == 8, f"expected 8 wirings, got {len(wirings)}"
    w1, w2, w3 = wirings[0]
    # the solid H4 with H_i meet E = L for all i: complement structure in
    # the quotient by l; recover it as the span of l and the three points
    # y_i = w_i meet H4.  Each w_i meets H4 in one point; H4 is determined
    # by containing l and the transversal line l' = {y1, y2, y3}.
    h4 = _find_h4(l, solids)
    ys = [w & h4 for w in (w1, w2, w3)]
    assert all(y.bit_count() == 1 for y in ys)
    lprime = ys[0] | ys[1] | ys[2]
    assert _rank_of_mask(lprime) == 2, "the three contact points must be collinear"
    grid = h4 & ~(l | lprime)
    assert grid.bit_count() == 9
    inner = [m for m in lines if m & ~grid == 0]
    assert len(inner) == 6, "the grid holds exactly two reguli"
    completions = []
    for tri in combinations(inner, 3):
        if tri[0] & tri[1] == 0 and tri[0] & tri[2] == 0 and tri[1] & tri[2] == 0:
            completions.append(tri)
    assert len(completions) == 2, "exactly two ways to complete the spread"
    out = []
    for tri in completions:
        out.append(partial_spread([l1, l2, l3, w1, w2, w3, *tri]))
    return out[0], out[1]


def _find_h4(l_mask: int, solids) -> int:
    """The unique solid containing l with H_i meet H4 a plane through l
    for all i and not containing any wiring plane point ... computed as the
    unique solid through l whose quotient line avoids the triangle vertices."""
    candidates = []
    for h in _solids_through(l_mask):
        if h in solids:
            continue
        if all(_rank_of_mask(_intersection_mask(h, s)) == 3 for s in solids):
            qverts = [_intersection_mask(si, sj) for si, sj in combinations(solids, 2)]
            if all(_intersection_mask(h, v) & ~l_mask == 0 for v in qverts):
                candidates.append(h)
    assert len(candidates) == 1, f"H4 not unique: {len(candidates)}"
    return candidates[0]


def _solids_through(mask: int):
    out = []
    for solid in subspaces_of(full_space(_sp5()), 4):
        m = _subspace_mask(solid)
        if mask & ~m == 0:
            out.append(m)
    return out


def _subspace_mask(sub: Subspace) -> int:
    m = 0
    for vec in sub.vectors():
        if vec:
            m |= 1 << vec
    return m


def _intersection_mask(m1: int, m2: int) -> int:
    return m1 & m2


# -- automorphisms and classification ------------------------------------


def spread_system(ps: PartialSpread) -> BlockSystem:
    return BlockSystem(5, ps.masks)


def spread_aut_and_orbits(ps: PartialSpread, budget: int = DEFAULT_BUDGET):
    """Stabilizer order in GL(5,2) and orbit sizes on the 27 covered points.

    Returns (order, orbit_sizes, doubled_sizes); the doubled sizes are the
    orbit lengths of the matching 9 planes through a point of PG(5,2) on
    their 54 covered points, where a transvection kernel of order 32 doubles
    every point orbit.
    """
    maps = stabilizer_elements(spread_system(ps), budget)
    covered = [x for x in range(1, 32) if ps.cover >> x & 1]
    orbs = orbits(maps, covered)
    sizes = tuple(sorted((len(o) for o in orbs), reverse=True))
    doubled = tuple(2 * s for s in sizes)
    return len(maps), sizes, doubled


def spreads_isomorphic(a: PartialSpread, b: PartialSpread, budget: int = DEFAULT_BUDGET) -> bool:
    return find_isomorphism(spread_system(a), spread_system(b), budget) is not None


def enumerate_through_first_line():
    """All size-9 partial spreads containing the first line <e1,e2>.

    Exhaustive depth-first search branching on the lowest uncovered point:
    cover it with a disjoint line or declare it a hole (at most four).
    Yields sorted mask tuples, each spread exactly once.
    """
    lines = all_line_masks()
    # branching at the lowest uncovered point needs all lines through it
    through_point = [[] for _ in range(32)]
    for m in lines:
        mm = m
        while mm:
            x = (mm & -mm).bit_length() - 1
            through_point[x].append(m)
            mm &= mm - 1
    first = min(lines)
    results = []

    def descend(cover, chosen, holes):
        if len(chosen) == SPREAD_SIZE:
            results.append(tuple(sorted(chosen)))
            return
        x = 1
        while cover >> x & 1:
            x += 1
        if x > 31:
            return
        if holes < 4:
            hole_bit = 1 << x
            descend(cover | hole_bit, chosen, holes + 1)
        for m in through_point[x]:
            if m & cover == 0:
                chosen.append(m)
                descend(cover | m, chosen, holes)
                chosen.pop()

    start = first
    descend(start | 1, [first], 0)  # bit 0 marks the zero vector as "covered"
    return results


@dataclass(frozen=True)
class SpreadClass:
    label: str
    representative: PartialSpread
    pattern: str
    stabilizer_order: int
    orbit_sizes: tuple[int, ...]
    doubled_orbit_sizes: tuple[int, ...]
    orbit_size: int  # size of the GL(5,2) orbit
    count_through_first_line: int


@dataclass(frozen=True)
class Classification:
    classes: tuple[SpreadClass, ...]
    total_through_first_line: int
    pattern_counts: dict


def classify_all_size9(budget: int = DEFAULT_BUDGET) -> Classification:
    """Exhaustive, certified classification of size-9 partial spreads.

    Enumerates every size-9 partial spread through the first line, counts
    patterns, and matches the total against the orbit-stabilizer prediction
    for the four constructed representatives.  Equality certifies both that
    the four classes are distinct (their reps are pairwise non-isomorphic by
    exhausted search) and that they exhaust all size-9 partial spreads.
    """
    reps = {
        TYPE_X: construct_type(TYPE_X),
        TYPE_E: construct_type(TYPE_E),
        TYPE_ID: construct_type(TYPE_ID),
        TYPE_ID_PRIME: construct_type(TYPE_ID_PRIME),
    }
    for label, rep in reps.items():
        expected = TYPE_X if label == TYPE_X else (TYPE_E if label == TYPE_E else PATTERN_ID)
        got = profile(rep).pattern
        assert got == expected, (label, got)
    labels = list(reps)
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            assert not spreads_isomorphic(reps[labels[i]], reps[labels[j]], budget), (
                labels[i],
                labels[j],
            )

    found = enumerate_through_first_line()
    pattern_counts = {}
    for masks in found:
        cover = 0
        for m in masks:
            cover |= m
        pat = quick_pattern(masks, cover)
        pattern_counts[pat] = pattern_counts.get(pat, 0) + 1

    classes = []
    predicted_total = 0
    for label in labels:
        rep = reps[label]
        order, sizes, doubled = spread_aut_and_orbits(rep, budget)
        assert GL52_ORDER % order == 0
        orbit_size = GL52_ORDER // order
        assert (orbit_size * SPREAD_SIZE) % N_LINES == 0
        through_first = orbit_size * SPREAD_SIZE // N_LINES
        predicted_total += through_first
        classes.append(
            SpreadClass(
                label=label,
                representative=rep,
                pattern=profile(rep).pattern,
                stabilizer_order=order,
                orbit_sizes=sizes,
                doubled_orbit_sizes=doubled,
                orbit_size=orbit_size,
                count_through_first_line=through_first,
            )
        )

    total = len(found)
    assert total == predicted_total, (
        f"classification incomplete: enumerated {total}, predicted {predicted_total}"
    )
    by_pattern = {}
    for cls in classes:
        by_pattern[cls.pattern] = by_pattern.get(cls.pattern, 0) + cls.count_through_first_line
    assert by_pattern == pattern_counts, (by_pattern, pattern_counts)
    return Classification(
        classes=tuple(classes),
        total_through_first_line=total,
        pattern_counts=pattern_counts,
    )
