"""Brute-force ground truth for vertex/face counts and gradient-region sampling.

Vertices and faces are enumerated as per-window choice lists filtered by the
acyclicity criterion; by uniqueness of the decomposition of a face into
summand faces, each acyclic list is exactly one nonempty face, so tallying
needs no deduplication.

The enumeration walks the choice tree depth-first and prunes any prefix whose
class graph is already cyclic: extending a selection only merges classes and
adds edges, which maps an existing cycle onto a closed walk, so every
extension of a cyclic prefix is cyclic.  The pruned walk therefore visits
every acyclic list exactly once while skipping the (vast) cyclic bulk.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, TieDetectedError
from .faces import FaceSelection, build_selection_graph, is_face, selection_from_word
from .model import WindowFamily

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension; `polytope_dim` is the top nonzero dimension."""

    counts: dict[int, int]
    polytope_dim: int

    def total(self) -> int:
        return sum(self.counts.values())


def _check_budget(sizes, per_window, budget):
    total = 1
    for m in sizes:
        total *= per_window(m)
        if total > budget:
            raise BudgetExceededError(
                f"candidate space {total}+ exceeds budget {budget}"
            )


def enumerate_vertices(family: WindowFamily, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All vertices of the family's polytope, as per-window coordinate words.

    Output order is lexicographic over words.  Each word is the acyclic
    singleton selection picking word[i] in window i.
    """
    windows = [tuple(sorted(w)) for w in family.windows]
    _check_budget(windows, len, budget)
    n = len(windows)
    rest_mask = [
        {a: sum(1 << b for b in w if b != a) for a in w} for w in windows
    ]

    out: list[tuple[int, ...]] = []
    word: list[int] = []
    adj: list[int] = [0] * family.ambient_size

    def reaches_back(start, target_bit):
        # singleton choices never merge classes, so the class graph is the
        # coordinate graph; a prefix is acyclic, hence a new cycle must pass
        # through the freshly added source, i.e. reach back to it
        seen = 0
        frontier = start
        while frontier:
            if frontier & target_bit:
                return True
            low = frontier & -frontier
            seen |= low
            frontier = (frontier ^ low) | (adj[low.bit_length() - 1] & ~seen)
        return False

    def walk(level):
        if level == n:
            out.append(tuple(word))
            return
        masks = rest_mask[level]
        for a in windows[level]:
            saved = adj[a]
            new = saved | masks[a]
            if not reaches_back(new, 1 << a):
                adj[a] = new
                word.append(a)
                walk(level + 1)
                word.pop()
                adj[a] = saved

    walk(0)
    return out


def _face_walk(windows, d, on_leaf, choice_order=None):
    """DFS over all per-window nonempty chosen sets, pruning cyclic prefixes.

    `on_leaf(n_classes)` is called once per acyclic complete list.  Tallies
    are independent of the processing order; `choice_order` permutes it for
    callers that care.

    State per node: a rollback union-find over coordinates, plus one
    out-edge bitmask per class root, kept in coordinate space (targets are
    resolved to their current root only when traversed).  Because every
    prefix on the stack is acyclic, a new cycle after choosing a window can
    only run through the class `u` absorbing that window's chosen set:
    collapsing classes into `u` and adding out-edges at `u` leaves every
    u-avoiding edge of the quotient graph untouched.  So the acyclicity test
    is a single reachability walk from u's successors back to u.
    """
    n = len(windows)
    order = list(choice_order) if choice_order is not None else list(range(n))
    ordered = [tuple(sorted(windows[i])) for i in order]

    # choices per window: (chosen elements, rest bitmask) over all nonempty
    # subsets, in increasing submask order
    choices = []
    for w in ordered:
        m = len(w)
        opts = []
        for mask in range(1, 1 << m):
            chosen = tuple(w[t] for t in range(m) if mask >> t & 1)
            restmask = sum(1 << w[t] for t in range(m) if not mask >> t & 1)
            opts.append((chosen, restmask))
        choices.append(opts)

    parent = list(range(d))
    size = [1] * d
    outmask = [0] * d  # per root: coordinate-space bitmask of edge targets
    trail: list[tuple[int, int]] = []  # (absorbed root, prior outmask of survivor)
    classes = [d]  # boxed so walk() can mutate

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    def merge_set(elems):
        marker = len(trail)
        it = iter(elems)
        r0 = find(next(it))
        for b in it:
            rb = find(b)
            if rb != r0:
                if size[rb] > size[r0]:
                    r0, rb = rb, r0
                parent[rb] = r0
                size[r0] += size[rb]
                trail.append((rb, outmask[r0]))
                outmask[r0] |= outmask[rb]
                classes[0] -= 1
        return marker, r0

    def rollback(marker):
        while len(trail) > marker:
            rb, prior = trail.pop()
            r0 = parent[rb]
            parent[rb] = rb
            size[r0] -= size[rb]
            outmask[r0] = prior
            classes[0] += 1

    def cycles_through(u):
        # walk root-space successors starting from u's own out-edges
        ubit = 1 << u
        seen = 0
        coords = outmask[u]
        work = 0  # roots whose out-edges still need expanding
        while True:
            while coords:
                low = coords & -coords
                coords ^= low
                b = low.bit_length() - 1
                r = parent[b]
                if r != b:
                    r = find(r)
                rbit = 1 << r
                if rbit == ubit:
                    return True
                if not seen & rbit:
                    seen |= rbit
                    work |= rbit
            if not work:
                return False
            low = work & -work
            work ^= low
            coords = outmask[low.bit_length() - 1]

    def walk(level):
        if level == n:
            on_leaf(classes[0])
            return
        nxt = level + 1
        for chosen, restmask in choices[level]:
            marker, u = merge_set(chosen)
            saved_out = outmask[u]
            outmask[u] = saved_out | restmask
            if not cycles_through(u):
                walk(nxt)
            outmask[u] = saved_out
            rollback(marker)

    walk(0)


def enumerate_faces(family: WindowFamily, budget: int = DEFAULT_BUDGET) -> FVector:
    """Tally all nonempty faces by dimension (dimension = d - class count)."""
    windows = family.windows
    _check_budget(windows, lambda w: (1 << len(w)) - 1, budget)
    d = family.ambient_size
    counts = [0] * (d + 1)

    def on_leaf(n_classes):
        counts[d - n_classes] += 1

    _face_walk(windows, d, on_leaf)
    top = max(dim for dim, c in enumerate(counts) if c)
    return FVector(counts={dim: c for dim, c in enumerate(counts) if c}, polytope_dim=top)


def total_face_count(family: WindowFamily, budget: int = DEFAULT_BUDGET) -> int:
    """Number of faces including the empty face (hence the +1)."""
    return enumerate_faces(family, budget).total() + 1


def facet_count_oracle(family: WindowFamily, budget: int = DEFAULT_BUDGET) -> int:
    """Number of faces of dimension polytope_dim - 1."""
    fv = enumerate_faces(family, budget)
    return fv.counts.get(fv.polytope_dim - 1, 0)


def facet_count_two_classes(family: WindowFamily) -> int:
    """Count acyclic selections with exactly two classes, without a full walk.

    A selection whose graph has two classes {A, B} and no loop must choose,
    in every window, exactly the window's A-part or exactly its B-part
    (anything smaller leaves an unchosen coordinate in the chooser's own
    class, i.e. a loop), and all straddling windows must take the same side
    (mixed sides give a 2-cycle).  Scanning all 2-block coordinate partitions
    and both side choices is therefore exhaustive; each candidate's verdict
    still comes from the face criterion itself.  Equals facet_count_oracle
    whenever the polytope has dimension d - 1.
    """
    windows = family.windows
    d = family.ambient_size
    count = 0
    # coordinate 0 stays in A so each unordered partition is seen once
    for b_mask in range(1, 1 << (d - 1)):
        b_set = frozenset(i for i in range(1, d) if b_mask >> (i - 1) & 1)
        a_set = frozenset(range(d)) - b_set
        parts = [(w & a_set, w & b_set) for w in windows]
        straddlers = any(wa and wb for wa, wb in parts)
        sides = (0, 1) if straddlers else (0,)
        for side in sides:
            chosen = tuple(
                (wa if side == 0 else wb) if (wa and wb) else (wa or wb)
                for wa, wb in parts
            )
            graph = build_selection_graph(FaceSelection(family, chosen))
            if (
                graph.acyclic
                and len(graph.classes) == 2
                and set(graph.classes) == {a_set, b_set}
            ):
                count += 1
    return count


def region_pattern(family: WindowFamily, x) -> tuple[int, ...]:
    """Per-window argmax word of an input point (its gradient pattern).

    Raises TieDetectedError when some window attains its maximum twice.
    """
    if len(x) != family.ambient_size:
        raise ValueError("input length must equal the ambient size")
    word = []
    for w in family.windows:
        best = max(w, key=lambda a: (x[a], -a))
        if sum(1 for a in w if x[a] == x[best]) > 1:
            raise TieDetectedError(f"window {sorted(w)} has a tied maximum")
        word.append(best)
    return tuple(word)


_M64 = (1 << 64) - 1


def _mix64(z):
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def _uniform01(seed, trial, coord, attempt):
    # counter-based: the value depends only on (seed, trial, coord, attempt),
    # so results are identical under any partitioning of the trial range
    h = _mix64(_mix64(_mix64(seed & _M64) ^ trial) ^ (coord + (attempt << 32)))
    return h / 18446744073709551616.0


def sample_regions(family: WindowFamily, trials: int, seed: int) -> tuple[int, bool]:
    """Sample gradient patterns at random inputs.

    Returns (number of distinct patterns seen, whether every pattern passes
    the face criterion).  Deterministic given (family, trials, seed);
    tied draws are redrawn.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    d = family.ambient_size
    patterns: set[tuple[int, ...]] = set()
    all_faces = True
    for t in range(trials):
        attempt = 0
        while True:
            x = [_uniform01(seed, t, c, attempt) for c in range(d)]
            try:
                word = region_pattern(family, x)
                break
            except TieDetectedError:
                attempt += 1
        if word not in patterns:
            patterns.add(word)
            if not is_face(selection_from_word(family, word)):
                all_faces = False
    return len(patterns), all_faces
