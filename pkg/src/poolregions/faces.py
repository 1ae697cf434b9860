"""Facehood criterion for Minkowski sums of coordinate simplices.

A candidate face of the sum P = sum_i conv{e_a : a in w_i} is a list of
chosen vertex sets, one nonempty subset per window.  The criterion builds a
directed graph on equivalence classes of coordinates:

  * coordinates are merged when they appear together in some chosen set
    (transitive closure);
  * there is an edge from the class holding chosen[i] to the class of every
    coordinate of w_i not chosen by window i.

The candidate is a face exactly when this graph is acyclic, where a loop at
a single class counts as a cycle.  For a face, the dimension is
d - (number of classes), and the graph also yields the facial normal cone:
x_a = x_b inside a class, and x_a <= x_b whenever the class of b points to
the class of a.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSelectionError, NotAFaceError
from .model import WindowFamily


@dataclass(frozen=True)
class FaceSelection:
    """One chosen vertex set per window of a family."""

    family: WindowFamily
    chosen: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "chosen", tuple(frozenset(c) for c in self.chosen))
        if len(self.chosen) != len(self.family.windows):
            raise InvalidSelectionError("need one chosen set per window")
        for c, w in zip(self.chosen, self.family.windows):
            if not c:
                raise InvalidSelectionError("chosen sets must be nonempty")
            if not c <= w:
                raise InvalidSelectionError("chosen set not contained in its window")

    @property
    def is_vertex_selection(self) -> bool:
        return all(len(c) == 1 for c in self.chosen)

    @property
    def word(self) -> tuple[int, ...]:
        """The per-window coordinate word, defined for singleton selections."""
        if not self.is_vertex_selection:
            raise InvalidSelectionError("word is only defined for singleton selections")
        return tuple(min(c) for c in self.chosen)


def selection_from_word(family: WindowFamily, word) -> FaceSelection:
    """Singleton selection picking coordinate word[i] inside window i."""
    return FaceSelection(family, tuple(frozenset((a,)) for a in word))


def full_selection(family: WindowFamily) -> FaceSelection:
    """The selection choosing every window entirely (the whole polytope)."""
    return FaceSelection(family, family.windows)


@dataclass(frozen=True)
class SelectionGraph:
    """Class partition plus directed class graph of a selection.

    `classes` are sorted by minimum element; `edges` are ordered pairs of
    class indices (loops permitted).
    """

    classes: tuple[frozenset[int], ...]
    edges: frozenset[tuple[int, int]]
    acyclic: bool


@dataclass(frozen=True)
class ConeDescription:
    """Normal cone of a face, modulo the all-ones direction.

    Pairs (a, b) in `equalities` mean x_a = x_b; in `inequalities` they mean
    x_a <= x_b.  Representatives are minimum class elements, one relation per
    class pair.
    """

    ambient: int
    equalities: tuple[tuple[int, int], ...]
    inequalities: tuple[tuple[int, int], ...]


def _union_find_classes(d, chosen):
    parent = list(range(d))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in chosen:
        it = iter(c)
        r0 = find(next(it))
        for b in it:
            rb = find(b)
            if rb != r0:
                if rb < r0:
                    r0, rb = rb, r0
                parent[rb] = r0
    return find


def _graph_has_cycle(adj):
    # iterative three-color DFS; adj maps node -> bitmask of successors
    color = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 1
        stack = [(start, adj.get(start, 0))]
        while stack:
            node, mask = stack[-1]
            if mask:
                low = mask & -mask
                stack[-1] = (node, mask ^ low)
                nxt = low.bit_length() - 1
                c = color.get(nxt)
                if c == 1:
                    return True
                if c is None:
                    color[nxt] = 1
                    stack.append((nxt, adj.get(nxt, 0)))
            else:
                color[node] = 2
                stack.pop()
    return False


def build_selection_graph(sel: FaceSelection) -> SelectionGraph:
    """Compute the class partition, class graph, and acyclicity of a selection."""
    d = sel.family.ambient_size
    find = _union_find_classes(d, sel.chosen)

    members: dict[int, list[int]] = {}
    for a in range(d):
        members.setdefault(find(a), []).append(a)
    reps = sorted(members)
    index_of = {r: i for i, r in enumerate(reps)}
    classes = tuple(frozenset(members[r]) for r in reps)

    edges = set()
    has_loop = False
    adj: dict[int, int] = {}
    for c, w in zip(sel.chosen, sel.family.windows):
        src = index_of[find(min(c))]
        for b in w - c:
            dst = index_of[find(b)]
            edges.add((src, dst))
            if dst == src:
                has_loop = True
            else:
                adj[src] = adj.get(src, 0) | (1 << dst)

    acyclic = not has_loop and not _graph_has_cycle(adj)
    return SelectionGraph(classes=classes, edges=frozenset(edges), acyclic=acyclic)


def is_face(sel: FaceSelection) -> bool:
    """Whether the selection's Minkowski sum of chosen faces is a face of P."""
    return build_selection_graph(sel).acyclic


def face_dimension(sel: FaceSelection) -> int:
    """Dimension of the face: ambient size minus the number of classes."""
    graph = build_selection_graph(sel)
    if not graph.acyclic:
        raise NotAFaceError("selection graph has a directed cycle")
    return sel.family.ambient_size - len(graph.classes)


def normal_cone(sel: FaceSelection) -> ConeDescription:
    """Equality/inequality description of the face's normal cone."""
    graph = build_selection_graph(sel)
    if not graph.acyclic:
        raise NotAFaceError("selection graph has a directed cycle")
    equalities = []
    for cls in graph.classes:
        elems = sorted(cls)
        equalities.extend((a, b) for i, a in enumerate(elems) for b in elems[i + 1:])
    reps = [min(cls) for cls in graph.classes]
    # edge (src -> dst) pins the dst class below the src class: x_dst <= x_src
    inequalities = sorted((reps[dst], reps[src]) for src, dst in graph.edges)
    return ConeDescription(
        ambient=sel.family.ambient_size,
        equalities=tuple(sorted(equalities)),
        inequalities=tuple(inequalities),
    )
