"""Lattice operators, trajectories and the closed 2D orbits with their metrics.

The operator for index j rewrites coordinate j of an integer vector with the
alternating circular sum of all coordinates starting at -x_j, and fixes the
rest.  In two dimensions, alternating the two operators traces a closed
figure-eight ("twisted aught") through at most six lattice points.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from aughts.errors import ResourceLimitError
from aughts.intmat import sign_pow

Point = tuple[int, ...]

COORD_LIMIT = 2**31
NODE_LIMIT = 10**6

# Closed 24-step word that visits all 24 nodes of a generic 3D orbit graph:
# a full aught on one level, a jump, the aught on the mirror level, a jump
# back, then the same once more.
HAMILTONIAN_WORD_3D: tuple[int, ...] = (1, 2, 1, 2, 1, 3, 2, 1, 2, 1, 2, 3) * 2


def _check_point(x: Sequence[int]) -> Point:
    pt = tuple(int(v) for v in x)
    if not pt:
        raise ValueError("point must have at least one coordinate")
    for v in pt:
        if abs(v) > COORD_LIMIT:
            raise OverflowError(f"coordinate {v} exceeds the 2^31 input guard")
    return pt


def apply_k(x: Sequence[int], j: int) -> Point:
    """Replace coordinate j with the alternating sum starting at -x_j."""
    pt = _check_point(x)
    n = len(pt)
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    value = sum(sign_pow(j + k) * pt[k] for k in range(n))
    out = list(pt)
    out[j - 1] = value
    return tuple(out)


@dataclass(frozen=True)
class Trajectory:
    start: Point
    word: tuple[int, ...]
    path: tuple[Point, ...]
    closed: bool

    @property
    def distinct_nodes(self) -> int:
        interior = self.path[:-1] if self.closed and len(self.path) > 1 else self.path
        return len(set(interior))


def run_word(x: Sequence[int], word: Iterable[int]) -> Trajectory:
    """Apply a sequence of operator indices, first index first."""
    start = _check_point(x)
    word_t = tuple(int(j) for j in word)
    path = [start]
    current = start
    for j in word_t:
        current = apply_k(current, j)
        path.append(current)
    return Trajectory(start, word_t, tuple(path), closed=current == start)


@dataclass(frozen=True)
class ReachGraph:
    nodes: frozenset[Point]
    edges: frozenset[tuple[Point, Point]]


def reach_graph(x: Sequence[int], node_limit: int = NODE_LIMIT) -> ReachGraph:
    """Closure of a point under all operators; edges join distinct points."""
    start = _check_point(x)
    n = len(start)
    if n > 6:
        raise ValueError("reachability exploration is limited to dimension <= 6")
    seen = {start}
    edges: set[tuple[Point, Point]] = set()
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for j in range(1, n + 1):
            nxt = apply_k(current, j)
            if nxt != current:
                edges.add((min(current, nxt), max(current, nxt)))
            if nxt not in seen:
                if len(seen) >= node_limit:
                    raise ResourceLimitError(
                        f"orbit exploration exceeded {node_limit} nodes"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return ReachGraph(frozenset(seen), frozenset(edges))


def _check_dim2(x: Sequence[int]) -> tuple[int, int]:
    pt = _check_point(x)
    if len(pt) != 2:
        raise ValueError(f"expected a 2D point, got dimension {len(pt)}")
    return pt  # type: ignore[return-value]


def cycle_points(x: Sequence[int], first_generator: int = 1) -> tuple[Point, ...]:
    """The six cycle points (with possible repeats), in traversal order.

    Starting with the second operator traverses the same cycle in the
    opposite direction.
    """
    x1, x2 = _check_dim2(x)
    forward = (
        (x1, x2),
        (x2 - x1, x2),
        (x2 - x1, -x1),
        (-x2, -x1),
        (-x2, x1 - x2),
        (x1, x1 - x2),
    )
    if first_generator == 1:
        return forward
    if first_generator == 2:
        return (forward[0],) + tuple(reversed(forward[1:]))
    raise ValueError(f"first_generator must be 1 or 2, got {first_generator}")


def semi_perimeter(x: Sequence[int]) -> int:
    """|2x1-x2| + |x1+x2| + |2x2-x1|; always even, half the orbit length."""
    x1, x2 = _check_dim2(x)
    return abs(2 * x1 - x2) + abs(x1 + x2) + abs(2 * x2 - x1)


def diam_multiplier(x: Sequence[int]) -> int:
    """m with Euclidean orbit diameter sqrt(2) * m."""
    x1, x2 = _check_dim2(x)
    return max(abs(x1 + x2), abs(2 * x1 - x2), abs(2 * x2 - x1))


@dataclass(frozen=True)
class Orbit2D:
    """Closed 2D orbit: deduplicated node cycle plus cached exact metrics."""

    seed: Point
    nodes: tuple[Point, ...]
    semi_perimeter: int
    box_side: int
    diam_multiplier: int


def orbit2d(x: Sequence[int], first_generator: int = 1) -> Orbit2D:
    seed = _check_dim2(x)
    nodes: list[Point] = []
    for p in cycle_points(seed, first_generator):
        if p not in nodes:
            nodes.append(p)
    p = semi_perimeter(seed)
    assert p % 2 == 0
    return Orbit2D(
        seed=seed,
        nodes=tuple(nodes),
        semi_perimeter=p,
        box_side=p // 2,
        diam_multiplier=diam_multiplier(seed),
    )


def euclidean_diameter(o: Orbit2D) -> tuple[int, list[tuple[Point, Point]]]:
    """The diameter multiplier and the opposite node pairs attaining it.

    The three opposite pairs of the cycle sit at squared distances
    2*(x1+x2)^2, 2*(2x2-x1)^2 and 2*(2x1-x2)^2; the diameter is sqrt(2)
    times the largest of the three absolute values.
    """
    x1, x2 = o.seed
    cycle = cycle_points(o.seed)
    candidates = (
        (abs(x1 + x2), (cycle[0], cycle[3])),
        (abs(2 * x2 - x1), (cycle[1], cycle[4])),
        (abs(2 * x1 - x2), (cycle[2], cycle[5])),
    )
    m = max(value for value, _ in candidates)
    pairs: list[tuple[Point, Point]] = []
    for value, (a, b) in candidates:
        if value == m and a != b:
            pair = (min(a, b), max(a, b))
            if pair not in pairs:
                pairs.append(pair)
    return m, pairs


def _dist_sq(a: Point, b: Point) -> int:
    return sum((u - v) ** 2 for u, v in zip(a, b))


def max_pairwise_dist_sq(nodes: Sequence[Point]) -> int:
    best = 0
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            d = _dist_sq(a, b)
            if d > best:
                best = d
    return best


def is_diametral(x: Sequence[int]) -> bool:
    """True iff the point attains the largest pairwise Euclidean distance
    within its own orbit (brute force over all node pairs).

    The origin is not diametral by convention (its orbit has diameter 0).
    """
    seed = _check_dim2(x)
    nodes = orbit2d(seed).nodes
    overall = max_pairwise_dist_sq(nodes)
    if overall == 0:
        return False
    from_seed = max(_dist_sq(seed, p) for p in nodes)
    return from_seed == overall


def diametral_flags(o: Orbit2D) -> tuple[bool, ...]:
    overall = max_pairwise_dist_sq(o.nodes)
    if overall == 0:
        return (False,) * len(o.nodes)
    return tuple(
        max(_dist_sq(p, q) for q in o.nodes) == overall for p in o.nodes
    )


def canonical_rep(o: Orbit2D) -> Point:
    """Lexicographically maximal node; one representative per orbit.

    The representative always lands in the closed first-quadrant cone
    between the two fixed lines y = x/2 and y = 2x.
    """
    return max(o.nodes)


def orbit_rep(x: Sequence[int]) -> Point:
    return canonical_rep(orbit2d(x))


def orbit_distance(
    a: Sequence[int], b: Sequence[int], node_limit: int = NODE_LIMIT
) -> int | None:
    """Minimal number of operator applications from a to b, if connected."""
    start = _check_point(a)
    goal = _check_point(b)
    if len(start) != len(goal):
        raise ValueError("points must have the same dimension")
    if start == goal:
        return 0
    n = len(start)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for j in range(1, n + 1):
            nxt = apply_k(current, j)
            if nxt in dist:
                continue
            if len(dist) >= node_limit:
                raise ResourceLimitError(
                    f"orbit exploration exceeded {node_limit} nodes"
                )
            dist[nxt] = dist[current] + 1
            if nxt == goal:
                return dist[nxt]
            queue.append(nxt)
    return None


def fundamental_triangles(m: int) -> tuple[frozenset[Point], frozenset[Point]]:
    """Lattice points of the two closed triangles against the diagonal.

    Upper: 0 <= x1, x1 <= x2 <= 2*x1, x2 <= m (between y=x and y=2x).
    Lower: 0 <= x2, x1/2 <= x2 <= x1, x1 <= m (between y=x/2 and y=x).
    Their union meets every orbit that touches the punctured hexagon, and
    boundary points belong to both closed sets.
    """
    if m < 1:
        raise ValueError(f"size must be >= 1, got {m}")
    upper = frozenset(
        (a, b)
        for a in range(0, m + 1)
        for b in range(a, min(2 * a, m) + 1)
    )
    lower = frozenset(
        (a, b)
        for a in range(0, m + 1)
        for b in range((a + 1) // 2, a + 1)
    )
    return upper, lower


def orbit_record(o: Orbit2D) -> dict:
    """JSON-ready record of one orbit."""
    m, pairs = euclidean_diameter(o)
    return {
        "seed": list(o.seed),
        "nodes": [list(p) for p in o.nodes],
        "semi_perimeter": o.semi_perimeter,
        "length": 2 * o.semi_perimeter,
        "box_side": o.box_side,
        "diam_multiplier": m,
        "diametral": list(diametral_flags(o)),
        "diameter_pairs": [[list(a), list(b)] for a, b in pairs],
    }


def trajectory_record(t: Trajectory) -> dict:
    return {
        "start": list(t.start),
        "word": list(t.word),
        "path": [list(p) for p in t.path],
        "closed": t.closed,
        "distinct_nodes": t.distinct_nodes,
    }
