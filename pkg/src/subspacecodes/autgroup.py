"""Stabilizers and isomorphisms of block systems in PG(v-1,2) under GL(v,2).

A block system is a set of subspaces of GF(2)^v, each stored as a bitmask
over the nonzero vectors 1..2^v-1 (bit x set iff vector x lies in the
block).  The group GL(v,2) acts on vectors; the searches below find all
linear maps carrying one system onto another (or onto itself) by choosing
images for a fixed base: a basis b_1..b_v of GF(2)^v picked greedily so
that partial spans contain blocks as early as possible.

Pruning per assigned base point:
  * every element of the enlarged span must keep its refinement color;
  * every block inside the source span must map onto a target block;
  * source and image spans must contain equally many blocks.

Colors come from iterated point/block refinement (degree-style invariants),
computed jointly over both systems so color ids are comparable.  A full
traversal enumerates the stabilizer element by element, which is practical
for the small groups arising here; the node budget guards against blowups
and raises instead of returning a wrong answer.
"""

from __future__ import annotations

DEFAULT_BUDGET = 10**9


class SearchBudgetExceeded(RuntimeError):
    """Raised when a backtracking search exceeds its node budget."""


class BlockSystem:
    """Blocks as vector bitmasks over GF(2)^v, plus incidence tables."""

    def __init__(self, v: int, blocks):
        self.v = v
        self.n_vectors = 1 << v
        self.blocks = tuple(sorted(blocks))
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("blocks must be pairwise distinct")
        self.block_set = frozenset(self.blocks)
        self.blocks_through = [[] for _ in range(self.n_vectors)]
        for bi, mask in enumerate(self.blocks):
            m = mask
            while m:
                x = m & -m
                self.blocks_through[x.bit_length() - 1].append(bi)
                m ^= x
        self.block_points = [_mask_bits(mask) for mask in self.blocks]


def _mask_bits(mask):
    out = []
    while mask:
        x = mask & -mask
        out.append(x.bit_length() - 1)
        mask ^= x
    return out


def refine_colors(systems):
    """Joint point/block color refinement over one or two systems.

    Returns a list of (point_colors, block_colors) per system, with color
    ids comparable across systems, or None if the systems are told apart by
    their color histograms (hence not isomorphic).
    """
    n_sys = len(systems)
    pcolors = [[0] * s.n_vectors for s in systems]
    bcolors = [[0] * len(s.blocks) for s in systems]
    n_colors = 1
    while True:
        bsigs = [
            [
                (bcolors[i][bi], tuple(sorted(pcolors[i][x] for x in pts)))
                for bi, pts in enumerate(s.block_points)
            ]
            for i, s in enumerate(systems)
        ]
        bcolors, nb = _canon([s for s in bsigs])
        psigs = [
            [
                (pcolors[i][x], tuple(sorted(bcolors[i][bi] for bi in s.blocks_through[x])))
                for x in range(s.n_vectors)
            ]
            for i, s in enumerate(systems)
        ]
        pcolors, np_ = _canon([s for s in psigs])
        if n_sys == 2 and not _histograms_match(pcolors, bcolors):
            return None
        if nb + np_ == n_colors:
            break
        n_colors = nb + np_
    return list(zip(pcolors, bcolors))


def _canon(sig_lists):
    allsigs = sorted({s for lst in sig_lists for s in lst})
    index = {s: i for i, s in enumerate(allsigs)}
    return [[index[s] for s in lst] for lst in sig_lists], len(allsigs)


def _histograms_match(pcolors, bcolors):
    def hist(colors):
        h = {}
        for c in colors:
            h[c] = h.get(c, 0) + 1
        return h

    return hist(pcolors[0]) == hist(pcolors[1]) and hist(bcolors[0]) == hist(bcolors[1])


def _choose_base(system, pcolors):
    """A basis of GF(2)^v ordered to pull blocks into partial spans early."""
    v = system.v
    color_size = {}
    for x in range(1, system.n_vectors):
        color_size[pcolors[x]] = color_size.get(pcolors[x], 0) + 1
    base, span = [], [0]
    span_set = {0}
    for _ in range(v):
        best = None
        for cand in range(1, system.n_vectors):
            if cand in span_set:
                continue
            new_set = span_set | {x ^ cand for x in span}
            contained = sum(1 for m in system.blocks if _mask_in(m, new_set))
            score = (contained, -color_size[pcolors[cand]], -cand)
            if best is None or score > best[0]:
                best = (score, cand, new_set)
        _, cand, new_set = best
        base.append(cand)
        span = sorted(new_set)
        span_set = new_set
    return base


def _mask_in(mask, span_set):
    m = mask
    while m:
        x = m & -m
        if x.bit_length() - 1 not in span_set:
            return False
        m ^= x
    return True


class _Search:
    def __init__(self, src: BlockSystem, dst: BlockSystem, budget: int):
        self.src = src
        self.dst = dst
        self.budget = budget
        self.nodes = 0
        colored = refine_colors([src, dst] if src is not dst else [src])
        self.feasible = colored is not None
        if not self.feasible:
            return
        self.pc_src, _ = colored[0]
        self.pc_dst, _ = colored[-1]
        self.base = _choose_base(src, self.pc_src)
        # span_levels[k]: the span before level k; the elements x^base[k]
        # for x in it are the ones whose images level k determines
        self.span_levels = []
        span = [0]
        blocks_seen = set()
        self.new_blocks = []
        for k, b in enumerate(self.base):
            self.span_levels.append(list(span))
            span = span + [x ^ b for x in span]
            span_set = set(span)
            fresh = [
                bi
                for bi, m in enumerate(src.blocks)
                if bi not in blocks_seen and _mask_in(m, span_set)
            ]
            blocks_seen.update(fresh)
            self.new_blocks.append(fresh)
        # candidates per level: target points of the base point's color
        self.candidates = [
            sorted(y for y in range(1, dst.n_vectors) if self.pc_dst[y] == self.pc_src[b])
            for b in self.base
        ]
        self.n_blocks_at = []
        acc = 0
        for fresh in self.new_blocks:
            acc += len(fresh)
            self.n_blocks_at.append(acc)

    def run(self, find_all: bool):
        if not self.feasible:
            return []
        v = self.src.v
        img = [0] * self.src.n_vectors
        results = []
        dst_block_set = self.dst.block_set
        dst_blocks = self.dst.blocks
        pc_src, pc_dst = self.pc_src, self.pc_dst
        base = self.base
        span_levels = self.span_levels
        new_blocks = self.new_blocks
        block_points = self.src.block_points
        n_blocks_at = self.n_blocks_at
        budget = self.budget

        def descend(k, ispan_mask):
            if k == v:
                results.append(tuple(img))
                return not find_all
            b = base[k]
            level = span_levels[k]
            fresh = new_blocks[k]
            for r in self.candidates[k]:
                if ispan_mask >> r & 1:
                    continue
                self.nodes += 1
                if self.nodes > budget:
                    raise SearchBudgetExceeded(
                        f"stabilizer/isomorphism search exceeded {budget} nodes"
                    )
                ok = True
                new_mask = 0
                for x in level:
                    y = img[x ^ b] = img[x] ^ r
                    if pc_dst[y] != pc_src[x ^ b]:
                        ok = False
                        break
                    new_mask |= 1 << y
                if not ok:
                    continue
                nmask = ispan_mask | new_mask
                for bi in fresh:
                    bmask = 0
                    for x in block_points[bi]:
                        bmask |= 1 << img[x]
                    if bmask not in dst_block_set:
                        ok = False
                        break
                if not ok:
                    continue
                if fresh or n_blocks_at[k]:
                    cnt = 0
                    for m in dst_blocks:
                        if m & ~nmask == 0:
                            cnt += 1
                    if cnt != n_blocks_at[k]:
                        continue
                if descend(k + 1, nmask):
                    return True
            return False

        descend(0, 1)  # bit 0: the zero vector maps to itself
        return results


def stabilizer_elements(system: BlockSystem, budget: int = DEFAULT_BUDGET):
    """All GL(v,2) elements preserving the system, as vector image tuples."""
    if len(system.blocks) == 0:
        raise ValueError("refusing to enumerate the stabilizer of an empty system")
    search = _Search(system, system, budget)
    return search.run(find_all=True)


def find_isomorphism(src: BlockSystem, dst: BlockSystem, budget: int = DEFAULT_BUDGET):
    """One GL(v,2) element mapping src onto dst, or None."""
    if src.v != dst.v or len(src.blocks) != len(dst.blocks):
        return None
    search = _Search(src, dst, budget)
    maps = search.run(find_all=False)
    return maps[0] if maps else None


def orbits(maps, points):
    """Orbits of a full group element list on the given vector set."""
    remaining = set(points)
    out = []
    while remaining:
        x = min(remaining)
        orbit = {g[x] for g in maps}
        assert orbit <= remaining
        remaining -= orbit
        out.append(sorted(orbit))
    return out
