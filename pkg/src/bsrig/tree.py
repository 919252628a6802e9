"""The Bass-Serre tree of BS(n, m) and elliptic/hyperbolic classification.

Vertices are cosets g<a>, positive edges are cosets g<a^n>, with
source(g<a^n>) = g<a> and range(g<a^n>) = g b^-1 <a>.  The group acts by
left multiplication; the tree is (|n| + |m|)-regular.  The right-pushed
normal form makes cosets canonical: a vertex is the normal form with tail
zeroed, an edge the normal form with tail reduced into [0, |n|).  The
vertex rep spells the geodesic from the base vertex <a>, so the b-length
of the rep is the distance to the base vertex.

An element is elliptic iff its cyclically reduced core is an a-power;
otherwise it is hyperbolic and translates along an axis by the cyclically
reduced b-length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    BsPresentation,
    NormalForm,
    IDENTITY,
    b_letter,
    conjugated_by,
    cyclically_reduce,
    format_word,
    invert,
    multiply,
    nf_sort_key,
    power,
)

__all__ = [
    "TreeVertex",
    "TreeEdge",
    "Elliptic",
    "Hyperbolic",
    "vertex_of",
    "edge_of",
    "edge_source",
    "edge_range",
    "base_vertex",
    "vertex_neighbors",
    "vertex_distance",
    "fixes_vertex",
    "classify",
    "power_classify_consistency",
    "common_fixed_vertex",
    "export_ball",
]


@dataclass(frozen=True, slots=True)
class TreeVertex:
    rep: NormalForm  # tail = 0

    def __str__(self) -> str:
        return format_word(self.rep)


@dataclass(frozen=True, slots=True)
class TreeEdge:
    rep: NormalForm  # tail in [0, |n|)

    def __str__(self) -> str:
        return format_word(self.rep)


def vertex_of(g: NormalForm, G: BsPresentation) -> TreeVertex:
    return TreeVertex(NormalForm(g.prefix, 0))


def edge_of(g: NormalForm, G: BsPresentation) -> TreeEdge:
    return TreeEdge(NormalForm(g.prefix, g.tail % abs(G.n)))


def base_vertex(G: BsPresentation) -> TreeVertex:
    return TreeVertex(IDENTITY)


def edge_source(e: TreeEdge, G: BsPresentation) -> TreeVertex:
    return TreeVertex(NormalForm(e.rep.prefix, 0))


def edge_range(e: TreeEdge, G: BsPresentation) -> TreeVertex:
    return vertex_of(multiply(e.rep, b_letter(-1), G), G)


def fixes_vertex(g: NormalForm, v: TreeVertex, G: BsPresentation) -> bool:
    """g fixes the vertex h<a> iff h^-1 g h lies in <a>."""
    return not conjugated_by(g, v.rep, G).prefix


def vertex_neighbors(v: TreeVertex, G: BsPresentation) -> list[TreeVertex]:
    """The |n| + |m| adjacent vertices: ranges of the edges v a^i <a^n> and
    sources of the edges v a^j b <a^n>."""
    out = []
    for i in range(abs(G.n)):
        out.append(vertex_of(multiply(v.rep, NormalForm(((i, -1),), 0), G), G))
    for j in range(abs(G.m)):
        out.append(vertex_of(multiply(v.rep, NormalForm(((j, 1),), 0), G), G))
    return out


def vertex_distance(u: TreeVertex, v: TreeVertex, G: BsPresentation) -> int:
    """Tree distance, read off as the b-length of u^-1 v."""
    return len(multiply(invert(u.rep, G), v.rep, G).prefix)


@dataclass(frozen=True, slots=True)
class Elliptic:
    witness: NormalForm  # witness^-1 g witness lies in <a>


@dataclass(frozen=True, slots=True)
class Hyperbolic:
    translation_length: int


def classify(g: NormalForm, G: BsPresentation) -> Elliptic | Hyperbolic:
    conj, core = cyclically_reduce(g, G)
    if core.prefix:
        return Hyperbolic(len(core.prefix))
    return Elliptic(conj)


def power_classify_consistency(g: NormalForm, z: int, G: BsPresentation) -> bool:
    """Nonzero powers of a hyperbolic element stay hyperbolic; exposed as a
    checkable predicate (vacuously true for elliptic g)."""
    if z == 0:
        raise ValueError("need a nonzero power")
    if isinstance(classify(g, G), Hyperbolic):
        return isinstance(classify(power(g, z, G), G), Hyperbolic)
    return True


def _fixes_all(gs: list[NormalForm], v: TreeVertex, G: BsPresentation) -> bool:
    return all(fixes_vertex(g, v, G) for g in gs)


def common_fixed_vertex(
    gs, G: BsPresentation, radius_bound: int
) -> tuple[TreeVertex, NormalForm] | None:
    """Search the ball of the given radius around the first element's witness
    vertex for a vertex fixed by every element of gs.

    Returns the fixed vertex in the ball whose representative has the least
    b-length (ties broken lexicographically) together with that
    representative, or None if the ball holds no common fixed vertex.  The
    search is bounded: absence is not a disproof.  Rejects hyperbolic input.

    The fixed-point sets are subtrees, so the least-b-length fixed vertex is
    the projection of the base vertex onto their intersection.  Once any
    fixed vertex is found, walking its representative prefix toward the base
    vertex while all elements still fix reaches that projection directly;
    the full ball is only scanned in the corner case where the projection
    lies outside it.
    """
    gs = list(gs)
    if not gs:
        raise ValueError("need at least one element")
    if radius_bound <= 0:
        raise ValueError("radius bound must be positive")
    classes = [classify(g, G) for g in gs]
    for g, c in zip(gs, classes):
        if isinstance(c, Hyperbolic):
            raise ValueError(f"element {format_word(g)} is hyperbolic, it fixes no vertex")
    v0 = vertex_of(classes[0].witness, G)

    hit: TreeVertex | None = None
    visited = {v0}
    frontier = [v0]
    depth = 0
    while frontier and hit is None and depth <= radius_bound:
        for v in frontier:
            if _fixes_all(gs, v, G):
                hit = v
                break
        if hit is not None or depth == radius_bound:
            break
        nxt = []
        for v in frontier:
            for w in vertex_neighbors(v, G):
                if w not in visited:
                    visited.add(w)
                    nxt.append(w)
        frontier = nxt
        depth += 1
    if hit is None:
        return None

    # walk toward the base vertex inside the common fixed subtree
    best = hit
    while best.rep.prefix:
        parent = TreeVertex(NormalForm(best.rep.prefix[:-1], 0))
        if _fixes_all(gs, parent, G):
            best = parent
        else:
            break
    if vertex_distance(v0, best, G) > radius_bound:
        best = _scan_ball_minimum(gs, v0, G, radius_bound)
        if best is None:  # pragma: no cover - hit guarantees a ball vertex
            return None
    if not _fixes_all(gs, best, G):
        raise RuntimeError("internal error: candidate vertex fails verification")
    return best, best.rep


def _scan_ball_minimum(
    gs: list[NormalForm], v0: TreeVertex, G: BsPresentation, radius_bound: int
) -> TreeVertex | None:
    best = None
    best_key = None
    visited = {v0}
    frontier = [v0]
    depth = 0
    while True:
        for v in frontier:
            if _fixes_all(gs, v, G):
                key = nf_sort_key(v.rep)
                if best_key is None or key < best_key:
                    best, best_key = v, key
        if depth == radius_bound or not frontier:
            return best
        nxt = []
        for v in frontier:
            for w in vertex_neighbors(v, G):
                if w not in visited:
                    visited.add(w)
                    nxt.append(w)
        frontier = nxt
        depth += 1


def export_ball(center: TreeVertex, radius: int, G: BsPresentation) -> str:
    """DOT description of the ball subgraph: vertex label = canonical coset
    word, directed edges source -> range with the edge coset word as label,
    everything ordered lexicographically by label."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    ball = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for w in vertex_neighbors(v, G):
                if w not in ball:
                    ball.add(w)
                    nxt.append(w)
        frontier = nxt

    labels = sorted(str(v) for v in ball)
    edges = []
    for v in ball:
        for i in range(abs(G.n)):
            e = TreeEdge(NormalForm(v.rep.prefix, i))
            rg = edge_range(e, G)
            if rg in ball:
                edges.append((str(v), str(rg), str(e)))
    edges.sort()

    lines = ["digraph bass_serre_ball {"]
    for label in labels:
        lines.append(f'  "{label}";')
    for src, dst, lab in edges:
        lines.append(f'  "{src}" -> "{dst}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
