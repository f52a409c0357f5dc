"""Verification and fingerprinting of constant-dimension subspace codes.

The central invariants for plane codes in PG(5,q):

  * minimum subspace distance over all pairs;
  * the degree r(P) of each point (number of codewords through it) and the
    degree distribution; every (6,M,4;3)_q code has r(P) <= q^3 + 1;
  * the light plane: the unique plane all of whose points have degree <= 6
    while every other point has degree >= 8 (a property of all binary
    77-codes, searched by exhaustive plane sweep);
  * the profile of intersection dimensions against a distinguished plane S;
  * for q = 2: the 9-configurations (degree-9 points with the derived
    partial spread in the quotient PG(4,2) and its type), the number of
    17-configurations (pairs of degree-9 points joined by a codeword), the
    four linear-constraint families (lines <= 1, points <= 9, codewords
    per hyperplane <= 9, per solid <= 1), maximality, the automorphism
    group order in GL(6,2), and self-duality via an explicit isomorphism
    with the dual code.

Bounds: partial_spread_max gives the maximum partial line-spread sizes

    q^(v-2) + q^(v-4) + ... + q^2 + 1   (v even)
    q^(v-2) + q^(v-4) + ... + q^3 + 1   (v odd)

and recursive_bound evaluates, with t = k - d/2 + 1,

    A_q(v,d;k) <= [v over t-1]_q / [k over t-1]_q * A_q(v-k+d/2, d; d/2),

resolving the inner maximum through spread sizes (d/2 | v'), the partial
line-spread formula (d/2 = 2), or reporting None when neither applies.
At (6,4,3) this yields (q^3+1)^2, the bound 81 for q = 2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .autgroup import (
    DEFAULT_BUDGET,
    BlockSystem,
    find_isomorphism,
    stabilizer_elements,
)
from .geometry import enumerate_flats, gaussian, geometry, special_flat
from .linalg import (
    Subspace,
    SubspaceCode,
    dual_code,
    from_rows,
    space,
    subspaces_of,
    subspace_distance,
)
from .pg42_spreads import (
    PATTERN_ID,
    TYPE_E,
    TYPE_ID,
    TYPE_ID_PRIME,
    TYPE_X,
    PartialSpread,
    construct_type,
    partial_spread,
    profile,
    spreads_isomorphic,
)


def min_distance(code: SubspaceCode, threads: int = 1) -> int:
    """Minimum subspace distance over all unordered codeword pairs."""
    if code.size < 2:
        raise ValueError("minimum distance needs at least two codewords")
    members = code.members
    if code.k is not None:
        k = code.k
        masks = [m.point_mask() for m in members]
        pts_of_dim = _points_per_dim(code.space.q, k)
        if threads > 1:
            return _min_distance_parallel(masks, pts_of_dim, k, threads)
        return _min_distance_chunk(masks, pts_of_dim, k, 0, len(masks))
    return min(
        subspace_distance(a, b)
        for i, a in enumerate(members)
        for b in members[i + 1 :]
    )


def _min_distance_chunk(masks, pts_of_dim, k, lo, hi) -> int:
    best = 2 * k
    for i in range(lo, hi):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            common = (mi & masks[j]).bit_count()
            d = 2 * k - 2 * pts_of_dim[common]
            if d < best:
                best = d
                if best == 2:
                    return 2
    return best


def _min_distance_parallel(masks, pts_of_dim, k, threads) -> int:
    from concurrent.futures import ProcessPoolExecutor

    n = len(masks)
    # balance work: row i costs n-i pairs, so split by equal pair counts
    bounds = [0]
    total = n * (n - 1) // 2
    acc = 0
    target = 1
    for i in range(n):
        acc += n - 1 - i
        if acc >= target * total / threads and len(bounds) <= threads - 1:
            bounds.append(i + 1)
            target += 1
    bounds.append(n)
    jobs = [(masks, pts_of_dim, k, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return min(pool.map(_min_distance_job, jobs))


def _min_distance_job(args):
    return _min_distance_chunk(*args)


def _points_per_dim(q, kmax):
    """Map #projective points -> dimension, for intersections up to kmax."""
    return {(q**d - 1) // (q - 1): d for d in range(kmax + 1)}


def point_degrees(code: SubspaceCode) -> list[int]:
    """r(P) for every projective point, indexed like Space.points()."""
    sp = code.space
    degs = [0] * sp.n_points()
    for m in code.members:
        mask = m.point_mask()
        while mask:
            low = mask & -mask
            degs[low.bit_length() - 1] += 1
            mask ^= low
    return degs


def degree_distribution(code: SubspaceCode) -> Counter:
    """Multiset {degree: number of points}."""
    return Counter(point_degrees(code))


def find_light_plane(code: SubspaceCode) -> Subspace | None:
    """The unique plane with degrees <= 6 on it and >= 8 off it, if any.

    Uniqueness is checked by sweeping all planes of the ambient space; the
    thresholds are the binary ones, so this is meaningful for q = 2.
    """
    sp = code.space
    degs = point_degrees(code)
    light_points = 0
    heavy_ok = 0
    for i, d in enumerate(degs):
        if d <= 6:
            light_points |= 1 << i
        if d >= 8:
            heavy_ok |= 1 << i
    candidates = []
    all_points = (1 << sp.n_points()) - 1
    for plane in enumerate_flats(geometry(sp.v, sp.q), 3):
        mask = plane.point_mask()
        if mask & ~light_points:
            continue
        if (all_points & ~mask) & ~heavy_ok:
            continue
        candidates.append(plane)
    return candidates[0] if len(candidates) == 1 else None


def s_profile(code: SubspaceCode, s: Subspace) -> Counter:
    """Frequencies of dim(E meet S) over the codewords E."""
    q = code.space.q
    pts = _points_per_dim(q, s.dim)
    smask = s.point_mask()
    return Counter(pts[(m.point_mask() & smask).bit_count()] for m in code.members)


# -- quotient machinery for 9-configurations ------------------------------


def derived_spread_at(code: SubspaceCode, point_vec: int) -> PartialSpread:
    """The quotient images in PG(V/P) of the codewords through a point.

    Valid for q = 2, v = 6, k = 3 with r(P) <= 9: the images are pairwise
    disjoint lines of PG(4,2).
    """
    sp = code.space
    if sp.q != 2 or sp.v != 6:
        raise ValueError("derived spreads are computed for q=2, v=6 only")
    p = point_vec
    pivot = next(j for j in range(6) if sp.digit(p, j))
    sp5 = space(5, 2)

    def quotient(vec):
        if vec >> (5 - pivot) & 1:
            vec ^= p
        high = vec >> (6 - pivot)
        low = vec & ((1 << (5 - pivot)) - 1)
        return (high << (5 - pivot)) | low

    lines = []
    for m in code.members:
        if m.contains(p):
            rows = [quotient(r) for r in m.rows]
            img = from_rows(sp5, rows)
            assert img.dim == 2
            lines.append(img)
    return partial_spread(lines)


@dataclass(frozen=True)
class NineConfiguration:
    point: int  # vector of the degree-9 point
    spread: PartialSpread
    label: str  # TYPE_X, TYPE_E, TYPE_ID or TYPE_ID_PRIME


_ID_REPS = None


def _id_representatives():
    global _ID_REPS
    if _ID_REPS is None:
        _ID_REPS = (construct_type(TYPE_ID), construct_type(TYPE_ID_PRIME))
    return _ID_REPS


def nine_configurations(code: SubspaceCode) -> list[NineConfiguration]:
    """All 9-configurations with their derived partial spread types.

    The two I-Delta classes are told apart by isomorphism tests against the
    constructed representatives (the prime label is this module's naming
    convention for the second completion).
    """
    sp = code.space
    out = []
    degs = point_degrees(code)
    for idx, d in enumerate(degs):
        if d != 9:
            continue
        p = sp.points()[idx]
        spread = derived_spread_at(code, p)
        assert spread.size == 9
        pat = profile(spread).pattern
        if pat == PATTERN_ID:
            rep_id, _ = _id_representatives()
            pat = TYPE_ID if spreads_isomorphic(spread, rep_id) else TYPE_ID_PRIME
        out.append(NineConfiguration(point=p, spread=spread, label=pat))
    return out


def seventeen_config_count(code: SubspaceCode) -> int:
    """Pairs of degree-9 points joined by a codeword.

    Two points lie on at most one common codeword (distance 4), so summing
    C(n_E, 2) over codewords E, with n_E the number of degree-9 points on
    E, counts each pair once.
    """
    sp = code.space
    degs = point_degrees(code)
    heavy = 0
    for i, d in enumerate(degs):
        if d == 9:
            heavy |= 1 << i
    total = 0
    for m in code.members:
        n = (m.point_mask() & heavy).bit_count()
        total += n * (n - 1) // 2
    return total


def feasibility_check(code: SubspaceCode) -> dict[str, bool]:
    """The four binary linear-constraint families of distance-4 plane codes.

    lines: every line on at most one codeword; points: every point on at
    most 9; hyperplanes: at most 9 codewords inside any hyperplane;
    solids: at most one codeword inside any solid.
    """
    sp = code.space
    if sp.q != 2 or sp.v != 6 or code.k != 3:
        raise ValueError("feasibility families are stated for (6, M, 4; 3)_2 codes")
    line_count = Counter()
    for m in code.members:
        for line in subspaces_of(m, 2):
            line_count[line.rows] += 1
    lines_ok = not line_count or max(line_count.values()) <= 1
    points_ok = max(point_degrees(code)) <= 9

    member_masks = [m.point_mask() for m in code.members]
    hyper_ok = True
    for hyper in enumerate_flats(geometry(6, 2), 5):
        hmask = hyper.point_mask()
        inside = sum(1 for mm in member_masks if mm & ~hmask == 0)
        if inside > 9:
            hyper_ok = False
            break
    solid_count = Counter()
    for m in code.members:
        for solid in _solids_through(m):
            solid_count[solid] += 1
    solids_ok = not solid_count or max(solid_count.values()) <= 1
    return {
        "lines": lines_ok,
        "points": points_ok,
        "hyperplanes": hyper_ok,
        "solids": solids_ok,
    }


def _solids_through(plane: Subspace):
    sp = plane.space
    seen = set()
    for vec in range(1, sp.q**sp.v):
        if plane.contains(vec):
            continue
        solid = from_rows(sp, plane.rows + (vec,))
        if solid.rows not in seen:
            seen.add(solid.rows)
            yield solid.rows


def is_maximal(code: SubspaceCode, distance: int | None = None):
    """Whether no k-flat can be added keeping the minimum distance.

    Returns (flag, certificate): for a non-maximal code the certificate is
    an addable flat; for a maximal one it maps each rejected flat to a
    blocking codeword.  Sweeps all flats of the ambient space.
    """
    sp = code.space
    k = code.k
    if k is None:
        raise ValueError("maximality requires a constant-dimension code")
    d = distance if distance is not None else min_distance(code)
    max_common = (sp.q ** (k - d // 2) - 1) // (sp.q - 1)  # points in allowed meet
    member_masks = {m.rows: m.point_mask() for m in code.members}
    blocking = {}
    for cand in enumerate_flats(geometry(sp.v, sp.q), k):
        if cand.rows in member_masks:
            continue
        cmask = cand.point_mask()
        blocker = None
        for m in code.members:
            if (cmask & member_masks[m.rows]).bit_count() > max_common:
                blocker = m
                break
        if blocker is None:
            return False, cand
        blocking[cand.rows] = blocker
    return True, blocking


def partial_spread_max(v: int, q: int) -> int:
    """Maximum size of a partial line spread of PG(v-1,q), v >= 4."""
    if v < 4:
        raise ValueError("partial line-spread sizes start at v = 4")
    total = 1
    e = v - 2
    while e >= (2 if v % 2 == 0 else 3):
        total += q**e
        e -= 2
    return total


def recursive_bound(v: int, d: int, k: int, q: int) -> int | None:
    """The recursive upper bound on A_q(v,d;k), or None when uncovered.

    Requires 1 <= k <= v-1 and even d <= 2*min(k, v-k).  The inner
    partial-spread maximum A_q(v-k+d/2, d; d/2) is known when d/2 divides
    v-k+d/2 (spread size) or d/2 = 2.
    """
    if not 1 <= k <= v - 1:
        raise ValueError("need 1 <= k <= v-1")
    if d % 2 or not 2 <= d <= 2 * min(k, v - k):
        raise ValueError("need even d with d <= 2*min(k, v-k)")
    delta = d // 2
    t = k - delta + 1
    ratio = gaussian(v, t - 1, q) // gaussian(k, t - 1, q)
    inner_v = v - k + delta
    if inner_v % delta == 0:
        inner = (q**inner_v - 1) // (q**delta - 1)
    elif delta == 2:
        inner = partial_spread_max(inner_v, q)
    else:
        return None
    return ratio * inner


@dataclass(frozen=True)
class AutReport:
    order: int  # stabilizer order in GL(6,2)
    self_dual: bool  # C isomorphic to its dual code
    order_with_correlations: int  # doubled when self-dual


def code_system(code: SubspaceCode) -> BlockSystem:
    if code.space.q != 2:
        raise ValueError("automorphism searches are implemented for q = 2")
    blocks = [sum(1 << x for x in m.vectors() if x) for m in code.members]
    return BlockSystem(code.space.v, blocks)


def automorphism_order(code: SubspaceCode, budget: int = DEFAULT_BUDGET) -> AutReport:
    """Order of the GL(6,2) stabilizer, plus the self-duality test.

    Whether the collineation-only or the correlation-extended order is "the"
    automorphism count is a convention; both are reported (the extended
    order doubles exactly when the code is isomorphic to its dual).
    """
    order = len(stabilizer_elements(code_system(code), budget))
    sd = are_isomorphic(code, dual_code(code), budget)
    return AutReport(
        order=order,
        self_dual=sd,
        order_with_correlations=2 * order if sd else order,
    )


def are_isomorphic(c1: SubspaceCode, c2: SubspaceCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether some element of GL(6,2) maps one code onto the other."""
    if c1.space.key != c2.space.key or c1.size != c2.size:
        return False
    if sorted(degree_distribution(c1).items()) != sorted(degree_distribution(c2).items()):
        return False
    return find_isomorphism(code_system(c1), code_system(c2), budget) is not None


@dataclass
class CodeReport:
    """Analysis record for a subspace code; optional fields are q=2 extras."""

    v: int
    q: int
    k: int
    size: int
    min_distance: int
    degree_distribution: dict
    light_plane: Subspace | None = None
    s_plane: Subspace | None = None
    s_profile: dict | None = None
    nine_config_types: dict | None = None
    seventeen_configs: int | None = None
    feasibility: dict | None = None
    aut_order: int | None = None
    self_dual: bool | None = None
    aut_order_with_correlations: int | None = None


def code_report(
    code: SubspaceCode,
    with_aut: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> CodeReport:
    """Full analysis; configuration analytics only for binary plane codes."""
    sp = code.space
    report = CodeReport(
        v=sp.v,
        q=sp.q,
        k=code.k,
        size=code.size,
        min_distance=min_distance(code),
        degree_distribution=dict(sorted(degree_distribution(code).items())),
    )
    binary_planes = sp.q == 2 and sp.v == 6 and code.k == 3
    if binary_planes:
        report.light_plane = find_light_plane(code)
    s = report.light_plane if report.light_plane is not None else special_flat(sp, code.k)
    report.s_plane = s
    report.s_profile = dict(sorted(s_profile(code, s).items()))
    if binary_planes:
        report.nine_config_types = dict(
            sorted(Counter(c.label for c in nine_configurations(code)).items())
        )
        report.seventeen_configs = seventeen_config_count(code)
        report.feasibility = feasibility_check(code)
        if with_aut:
            aut = automorphism_order(code, budget)
            report.aut_order = aut.order
            report.self_dual = aut.self_dual
            report.aut_order_with_correlations = aut.order_with_correlations
    return report
