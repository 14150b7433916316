"""Diestel-Leader graphs: vertices, adjacency, balls, point families.

A vertex of DL_d(q) is a d-tuple of tree coordinates whose heights sum
to zero.  An edge moves up by one label in one coordinate and down by
one in another, so the graph is d(d-1)q regular.  Vertex literals join
the per-tree literals with '|', e.g. "0:0|2:1,0|2:1" for d = 3.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .errors import (
    DimensionMismatch,
    HeightImbalance,
    MemoryCapExceeded,
    NonCanonicalWarning,
    VertexSyntax,
    WrongDimension,
)
from .treecoord import (
    ORIGIN,
    TreeVertex,
    canonicalize,
    format_tree,
    is_canonical,
    parse_tree,
)

MAX_DIMENSION = 8
DEFAULT_MEMORY_CAP = 2_000_000


@dataclass(frozen=True)
class DLParams:
    """Graph parameters: d tree factors, trees of valence q+1."""

    d: int = 3
    q: int = 2

    def __post_init__(self):
        if not 2 <= self.d <= MAX_DIMENSION:
            raise ValueError(f"d must be in [2, {MAX_DIMENSION}], got {self.d}")
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")


class DLVertex(NamedTuple):
    """Vertex of DL_d(q): canonical tree coordinates plus the label base q."""

    coords: tuple[TreeVertex, ...]
    q: int

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def params(self) -> DLParams:
        return DLParams(len(self.coords), self.q)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(c.h for c in self.coords)


def make_vertex(params: DLParams, coords: Iterable) -> DLVertex:
    """Validate and assemble a vertex from per-tree coordinates.

    Accepts TreeVertex values or raw (m, path) pairs; coordinates must
    already be canonical so that accidental aliasing is caught rather
    than silently rewritten (parse_vertex is the lenient entry point).
    """
    cs = tuple(TreeVertex(int(c[0]), tuple(c[1])) for c in coords)
    if len(cs) != params.d:
        raise DimensionMismatch(f"expected {params.d} coordinates, got {len(cs)}")
    for c in cs:
        canonical = canonicalize(c, params.q)
        if canonical != c:
            raise ValueError(f"coordinate {format_tree(c)} is not canonical")
    if sum(c.h for c in cs) != 0:
        raise HeightImbalance(f"heights {tuple(c.h for c in cs)} do not sum to 0")
    return DLVertex(cs, params.q)


def identity(params: DLParams) -> DLVertex:
    return DLVertex(tuple(ORIGIN for _ in range(params.d)), params.q)


def neighbors(v: DLVertex) -> list[DLVertex]:
    """All d(d-1)q adjacent vertices, in deterministic (i, j, label) order.

    Neighbor i,j,a moves coordinate i up along label a and coordinate j
    down.  Every move preserves the zero height sum and canonical form,
    so results are assembled without re-validation.
    """
    coords = v.coords
    q = v.q
    d = len(coords)
    out: list[DLVertex] = []
    downs = []
    for c in coords:
        if c.path:
            downs.append(TreeVertex(c.m, c.path[:-1]))
        else:
            downs.append(TreeVertex(c.m + 1, ()))
    for i in range(d):
        ci = coords[i]
        ups = []
        for a in range(q):
            if ci.m > 0 and not ci.path and a == 0:
                ups.append(TreeVertex(ci.m - 1, ()))
            else:
                ups.append(TreeVertex(ci.m, ci.path + (a,)))
        for j in range(d):
            if i == j:
                continue
            base = list(coords)
            base[j] = downs[j]
            for up in ups:
                base[i] = up
                out.append(DLVertex(tuple(base), q))
    return out


def ball_distances(
    params: DLParams, radius: int, max_vertices: int = DEFAULT_MEMORY_CAP
) -> dict[DLVertex, int]:
    """Breadth-first distances from the identity out to the given radius.

    Returns vertices in discovery order mapped to their graph distance.
    Raises MemoryCapExceeded once more than max_vertices are visited.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    start = identity(params)
    dist = {start: 0}
    frontier = [start]
    for layer in range(radius):
        nxt: list[DLVertex] = []
        for v in frontier:
            for w in neighbors(v):
                if w not in dist:
                    dist[w] = layer + 1
                    nxt.append(w)
            if len(dist) > max_vertices:
                raise MemoryCapExceeded("ball enumeration too large", len(dist))
        frontier = nxt
    return dist


def ball(params: DLParams, radius: int, max_vertices: int = DEFAULT_MEMORY_CAP) -> set[DLVertex]:
    return set(ball_distances(params, radius, max_vertices))


def vertex_sort_key(v: DLVertex):
    """Lexicographic key on (m, path) per coordinate, for stable output."""
    return tuple((c.m, c.path) for c in v.coords)


def format_vertex(v: DLVertex) -> str:
    return "|".join(format_tree(c) for c in v.coords)


def parse_vertex(text: str, params: DLParams) -> DLVertex:
    """Parse a '|'-joined vertex literal under the given parameters.

    Syntax errors raise VertexSyntax with a character position; label
    range and height balance are enforced.  Legal but non-canonical
    coordinates are canonicalized with a NonCanonicalWarning.
    """
    pieces = text.split("|")
    if len(pieces) != params.d:
        raise VertexSyntax(
            f"expected {params.d} '|'-separated coordinates, got {len(pieces)}", 0
        )
    coords: list[TreeVertex] = []
    offset = 0
    rewrote = False
    for piece in pieces:
        raw = parse_tree(piece, offset)
        cooked = canonicalize(raw, params.q)
        if cooked != raw:
            rewrote = True
        coords.append(cooked)
        offset += len(piece) + 1
    if rewrote:
        warnings.warn(
            f"non-canonical coordinates in {text!r} were rewritten",
            NonCanonicalWarning,
            stacklevel=2,
        )
    if sum(c.h for c in coords) != 0:
        raise HeightImbalance(
            f"heights {tuple(c.h for c in coords)} of {text!r} do not sum to 0"
        )
    return DLVertex(tuple(coords), params.q)


# ── point families ──────────────────────────────────────────────────────────

@dataclass(frozen=True)
class PointFamily:
    """Named integer-indexed vertex sequence used to approach the boundary."""

    name: str
    params: DLParams
    generator: Callable[[int], DLVertex] = field(repr=False)
    validated: bool = field(default=True, repr=False)

    def at(self, n: int) -> DLVertex:
        if n < 0:
            raise ValueError("family index must be nonnegative")
        v = self.generator(n)
        if not self.validated:
            coords = v.coords if isinstance(v, DLVertex) else v
            return make_vertex(self.params, coords)
        if v.q != self.params.q or len(v.coords) != self.params.d:
            raise DimensionMismatch(f"family {self.name} produced a foreign vertex")
        return v


def _ray_coord(n: int) -> TreeVertex:
    # spine depth n, climbing label 1 throughout: height stays 0
    return TreeVertex(n, (1,) * n)


def _require_label_one(params: DLParams, who: str) -> None:
    if params.q < 2:
        raise ValueError(f"{who} uses label 1 and needs q >= 2")


def alpha_family(params: DLParams) -> PointFamily:
    """alpha_n: tree 1 climbs label-1 edges to height n, tree 2 descends to -n."""
    _require_label_one(params, "alpha")

    def gen(n: int) -> DLVertex:
        coords = [ORIGIN] * params.d
        coords[0] = TreeVertex(0, (1,) * n)
        coords[1] = TreeVertex(n, ())
        return DLVertex(tuple(coords), params.q)

    return PointFamily("alpha", params, gen)


def beta_family(params: DLParams) -> PointFamily:
    """beta_n: tree 3 walks n down the spine then n up label-1 edges."""
    if params.d < 3:
        raise WrongDimension("beta needs at least 3 tree coordinates")
    _require_label_one(params, "beta")

    def gen(n: int) -> DLVertex:
        coords = [ORIGIN] * params.d
        coords[2] = _ray_coord(n)
        return DLVertex(tuple(coords), params.q)

    return PointFamily("beta", params, gen)


def gamma_family(params: DLParams, trees: Iterable[int]) -> PointFamily:
    """gamma_n over a tree subset containing 3: each listed tree gets the
    balanced down-then-up excursion of depth n."""
    chosen = sorted(set(int(t) for t in trees))
    if any(t < 1 or t > params.d for t in chosen):
        raise ValueError(f"tree indices {chosen} out of range 1..{params.d}")
    if 3 not in chosen:
        raise ValueError("gamma requires tree 3 among its indices")
    _require_label_one(params, "gamma")

    def gen(n: int) -> DLVertex:
        coords = [ORIGIN] * params.d
        for t in chosen:
            coords[t - 1] = _ray_coord(n)
        return DLVertex(tuple(coords), params.q)

    name = "gamma:" + ",".join(str(t) for t in chosen)
    return PointFamily(name, params, gen)


def zeta_point(params: DLParams, tree: int, k: int) -> DLVertex:
    """Balanced excursion of depth k in one tree, trivial elsewhere."""
    if not 1 <= tree <= params.d:
        raise ValueError(f"tree index {tree} out of range 1..{params.d}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 0:
        _require_label_one(params, "zeta")
    coords = [ORIGIN] * params.d
    coords[tree - 1] = _ray_coord(k)
    return DLVertex(tuple(coords), params.q)


def nu_point(params: DLParams, tree: int, eps: int, k: int) -> DLVertex:
    """Climb k label-eps edges in tree 1 or 2, descend k in tree 3."""
    if params.d != 3:
        raise WrongDimension("nu points are only defined for d = 3")
    if tree not in (1, 2):
        raise ValueError("nu tree index must be 1 or 2")
    if not 0 <= eps < params.q:
        raise ValueError(f"label {eps} out of range [0, {params.q})")
    if k < 0:
        raise ValueError("k must be nonnegative")
    coords = [ORIGIN, ORIGIN, TreeVertex(k, ())]
    coords[tree - 1] = TreeVertex(0, (eps,) * k)
    return DLVertex(tuple(coords), params.q)


def zeta_family(params: DLParams, tree: int, k: int) -> PointFamily:
    """Constant family sitting at zeta_point(tree, k)."""
    v = zeta_point(params, tree, k)
    return PointFamily(f"zeta:{tree},{k}", params, lambda n: v)


def nu_family(params: DLParams, tree: int, eps: int, k: int) -> PointFamily:
    """Constant family sitting at nu_point(tree, eps, k)."""
    v = nu_point(params, tree, eps, k)
    return PointFamily(f"nu:{tree},{eps},{k}", params, lambda n: v)


def custom_family(
    params: DLParams, generator: Callable[[int], DLVertex], name: str = "custom"
) -> PointFamily:
    """Wrap an arbitrary generator; every produced vertex is re-validated."""
    return PointFamily(name, params, generator, validated=False)
