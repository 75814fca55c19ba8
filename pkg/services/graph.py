"""
Finite graph kernel and the exact oracles every closed form is checked
against.

Vertices are held as integer bitmasks over label indices; labels are kept
in ascending order so every scan, witness and serialization is
deterministic. All exponential searches run on twin quotients where that
cannot change the answer, and charge their work to a SearchBudget.
"""
import logging
import math
from collections import deque
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from models import (
    BasicInvariants,
    ChordalityResult,
    Distance,
    DominationStats,
    Label,
    MetricInvariants,
    PerfectnessResult,
    PropertyReport,
    WitnessKind,
)
from services.errors import (
    InvalidInput,
    LoopedGraphError,
    ResourceLimitExceeded,
    SearchBudgetExceeded,
)

logger = logging.getLogger(__name__)

INF = math.inf
DEFAULT_SEARCH_BUDGET = 5_000_000


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def label_text(label: Label) -> str:
    if isinstance(label, tuple):
        return ",".join(str(part) for part in label)
    return str(label)


def as_distance(value: float) -> Distance:
    return "inf" if value == INF else int(value)


class SearchBudget:
    """Node counter shared by the exponential searches of one evaluation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_SEARCH_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(
                f"search budget of {self.limit} nodes exhausted", limit=self.limit
            )


class LabeledGraph:
    """
    Immutable simple undirected graph over sorted, hashable labels.

    adj[i] is the neighbour bitmask of labels[i]; loops is a bitmask of
    vertices carrying a self-loop (only strong type graphs have any).
    """

    __slots__ = ("labels", "adj", "loops", "_index")

    def __init__(self, labels: Sequence[Label], adj: Sequence[int], loops: int = 0):
        self.labels: Tuple[Label, ...] = tuple(labels)
        self.adj: Tuple[int, ...] = tuple(adj)
        self.loops = loops
        self._index: Dict[Label, int] = {label: i for i, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise InvalidInput("duplicate vertex labels")
        if len(self.adj) != len(self.labels):
            raise InvalidInput("adjacency does not match the label list")
        full = self.full_mask
        if loops & ~full:
            raise InvalidInput("loop index out of range")
        for i, mask in enumerate(self.adj):
            if mask & ~full:
                raise InvalidInput(f"edge index out of range at {self.labels[i]!r}")
            if mask >> i & 1:
                raise InvalidInput("self-edges must be given as loops")
            for j in _bits(mask):
                if not self.adj[j] >> i & 1:
                    raise InvalidInput("adjacency is not symmetric")

    @classmethod
    def from_edges(
        cls,
        labels: Iterable[Label],
        edges: Iterable[Tuple[Label, Label]],
        loops: Iterable[Label] = (),
    ) -> "LabeledGraph":
        ordered = sorted(labels)
        index = {label: i for i, label in enumerate(ordered)}
        adj = [0] * len(ordered)
        try:
            for u, v in edges:
                if u == v:
                    raise InvalidInput(f"self-edge at {u!r}; pass it as a loop")
                i, j = index[u], index[v]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            loop_mask = 0
            for label in loops:
                loop_mask |= 1 << index[label]
        except KeyError as e:
            raise InvalidInput(f"edge endpoint {e.args[0]!r} is not a vertex") from None
        return cls(ordered, adj, loop_mask)

    @classmethod
    def from_predicate(
        cls,
        labels: Iterable[Label],
        adjacent: Callable[[Label, Label], bool],
        loop: Optional[Callable[[Label], bool]] = None,
    ) -> "LabeledGraph":
        ordered = sorted(labels)
        size = len(ordered)
        adj = [0] * size
        loops = 0
        for i in range(size):
            for j in range(i + 1, size):
                if adjacent(ordered[i], ordered[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            if loop is not None and loop(ordered[i]):
                loops |= 1 << i
        return cls(ordered, adj, loops)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "LabeledGraph":
        """Inverse of to_networkx; a truthy "loop" node attribute marks a loop"""
        loops = [v for v, looped in graph.nodes(data="loop", default=False) if looped]
        return cls.from_edges(graph.nodes, graph.edges, loops)

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def has_loops(self) -> bool:
        return self.loops != 0

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidInput(f"{label!r} is not a vertex of this graph") from None

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def labels_of(self, mask: int) -> List[Label]:
        return [self.labels[i] for i in _bits(mask)]

    def edges(self) -> List[Tuple[Label, Label]]:
        result = []
        for i, mask in enumerate(self.adj):
            for j in _bits(mask >> (i + 1) << (i + 1)):
                result.append((self.labels[i], self.labels[j]))
        return result

    def loop_labels(self) -> List[Label]:
        return self.labels_of(self.loops)

    def neighbors(self, label: Label) -> List[Label]:
        return self.labels_of(self.adj[self.index_of(label)])

    def has_edge(self, u: Label, v: Label) -> bool:
        return bool(self.adj[self.index_of(u)] >> self.index_of(v) & 1)

    def degree(self, label: Label) -> int:
        return self.adj[self.index_of(label)].bit_count()

    def induced(self, labels: Iterable[Label]) -> "LabeledGraph":
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return self._induced_mask(mask)

    def _induced_mask(self, mask: int) -> "LabeledGraph":
        keep = list(_bits(mask))
        position = {old: new for new, old in enumerate(keep)}
        adj = []
        for old in keep:
            adj.append(sum(1 << position[j] for j in _bits(self.adj[old] & mask)))
        loops = sum(1 << position[j] for j in _bits(self.loops & mask))
        return LabeledGraph([self.labels[i] for i in keep], adj, loops)

    def complement(self) -> "LabeledGraph":
        """Loop-free complement on the same labels"""
        return LabeledGraph.from_networkx(nx.complement(self.to_networkx()))

    def without_loops(self) -> "LabeledGraph":
        return LabeledGraph(self.labels, self.adj)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, label in enumerate(self.labels):
            graph.add_node(label, loop=bool(self.loops >> i & 1))
        graph.add_edges_from(self.edges())
        return graph

    def __repr__(self) -> str:
        return f"LabeledGraph(order={self.order}, edges={self.edge_count}, loops={self.loops.bit_count()})"


def _require_loop_free(g: LabeledGraph, operation: str) -> None:
    if g.has_loops:
        raise LoopedGraphError(f"{operation} is undefined for graphs with self-loops")


def check_oracle_cap(g: LabeledGraph, cap: int, what: str = "exact search") -> None:
    if g.order > cap:
        raise ResourceLimitExceeded(
            f"{what} on {g.order} vertices exceeds the cap of {cap}", limit=cap
        )


def _closed(adj: Sequence[int], v: int) -> int:
    return adj[v] | 1 << v


# -- basic and metric invariants -------------------------------------------


def basic_invariants(g: LabeledGraph) -> BasicInvariants:
    _require_loop_free(g, "basic_invariants")
    n = g.order
    graph = g.to_networkx()
    degrees = [d for _, d in graph.degree]
    complete = all(d == n - 1 for d in degrees)
    regular = len(set(degrees)) <= 1
    connected = n == 0 or nx.is_connected(graph)
    touched = [v for v, d in graph.degree if d]
    eulerian = (
        bool(touched)
        and all(d % 2 == 0 for d in degrees)
        and nx.number_connected_components(graph.subgraph(touched)) == 1
    )
    return BasicInvariants(
        complete=complete,
        regular=regular,
        connected=connected,
        eulerian=eulerian,
        degree_sequence=sorted(degrees, reverse=True),
    )


def metric_invariants(g: LabeledGraph) -> MetricInvariants:
    _require_loop_free(g, "metric_invariants")
    graph = g.to_networkx()
    if g.order == 0:
        diameter: float = 0
    elif nx.is_connected(graph):
        diameter = nx.diameter(graph)
    else:
        diameter = INF
    return MetricInvariants(girth=as_distance(nx.girth(graph)), diameter=as_distance(diameter))


# -- twin quotients ----------------------------------------------------------


def _twin_classes(adj: Sequence[int], mask: int) -> List[Tuple[int, bool]]:
    """
    Partition the vertices of mask into twin classes of the induced graph.

    Returns (members, true_twins) pairs ordered by lowest member. A vertex
    cannot have both a true twin and a false twin, so the classes are well
    defined; singletons are reported as false-twin classes.
    """
    by_closed: Dict[int, int] = {}
    for v in _bits(mask):
        key = (adj[v] & mask) | 1 << v
        by_closed[key] = by_closed.get(key, 0) | 1 << v
    classes: List[Tuple[int, bool]] = []
    by_open: Dict[int, int] = {}
    for members in by_closed.values():
        if members & (members - 1):
            classes.append((members, True))
        else:
            v = _lsb_index(members)
            key = adj[v] & mask
            by_open[key] = by_open.get(key, 0) | members
    classes.extend((members, False) for members in by_open.values())
    classes.sort(key=lambda item: _lsb_index(item[0]))
    return classes


def _quotient(adj: Sequence[int], classes: List[Tuple[int, bool]]) -> List[int]:
    reps = [_lsb_index(members) for members, _ in classes]
    qadj = []
    for a, ra in enumerate(reps):
        row = 0
        for b, rb in enumerate(reps):
            if a != b and adj[ra] >> rb & 1:
                row |= 1 << b
        qadj.append(row)
    return qadj


def _weighted_color_sort(p: int, adj: Sequence[int], weights: Sequence[int]) -> Tuple[List[int], List[int]]:
    order: List[int] = []
    bounds: List[int] = []
    total = 0
    while p:
        q = p
        heaviest = 0
        members = []
        while q:
            v = _lsb_index(q)
            members.append(v)
            heaviest = max(heaviest, weights[v])
            q &= ~(1 << v) & ~adj[v]
            p &= ~(1 << v)
        total += heaviest
        for v in members:
            order.append(v)
            bounds.append(total)
    return order, bounds


def _max_weight_clique(adj: Sequence[int], weights: Sequence[int], budget: SearchBudget) -> Tuple[int, int]:
    best = [0, 0]

    def expand(weight: int, chosen: int, candidates: int) -> None:
        budget.tick()
        if not candidates:
            if weight > best[0]:
                best[0], best[1] = weight, chosen
            return
        order, bounds = _weighted_color_sort(candidates, adj, weights)
        for i in range(len(order) - 1, -1, -1):
            if weight + bounds[i] <= best[0]:
                return
            v = order[i]
            expand(weight + weights[v], chosen | 1 << v, candidates & adj[v])
            candidates &= ~(1 << v)

    expand(0, 0, (1 << len(adj)) - 1)
    return best[0], best[1]


def _clique_in_mask(adj: Sequence[int], mask: int, budget: SearchBudget) -> int:
    if not mask:
        return 0
    classes = _twin_classes(adj, mask)
    qadj = _quotient(adj, classes)
    weights = [members.bit_count() if true_twins else 1 for members, true_twins in classes]
    return _max_weight_clique(qadj, weights, budget)[0]


def false_twin_core(g: LabeledGraph) -> LabeledGraph:
    """
    Keep the least vertex of every open-neighbourhood class.

    False twins can always share a colour, so the core has the chromatic
    number of g. One pass suffices: dropping a false twin leaves every
    other pair of neighbourhoods as distinct as it was.
    """
    reps = 0
    seen: Set[int] = set()
    for v, nbrs in enumerate(g.adj):
        if nbrs not in seen:
            seen.add(nbrs)
            reps |= 1 << v
    return g._induced_mask(reps)


# -- cliques, independence, covers -----------------------------------------


def clique_number(
    g: LabeledGraph, anchored_at: Optional[Label] = None, budget: Optional[SearchBudget] = None
) -> int:
    """Exact maximum clique size, optionally over cliques containing anchored_at"""
    _require_loop_free(g, "clique_number")
    budget = budget or SearchBudget()
    if anchored_at is not None:
        v = g.index_of(anchored_at)
        return 1 + _clique_in_mask(g.adj, g.adj[v], budget)
    return _clique_in_mask(g.adj, g.full_mask, budget)


def independence_number(g: LabeledGraph, budget: Optional[SearchBudget] = None) -> int:
    _require_loop_free(g, "independence_number")
    budget = budget or SearchBudget()
    return _clique_in_mask(g.complement().adj, g.full_mask, budget)


def vertex_cover_number(g: LabeledGraph, budget: Optional[SearchBudget] = None) -> int:
    return g.order - independence_number(g, budget)


def clique_census(g: LabeledGraph, max_size: int, budget: Optional[SearchBudget] = None) -> Dict[int, int]:
    """Number of cliques of every size 1..max_size"""
    _require_loop_free(g, "clique_census")
    if max_size < 1:
        raise InvalidInput("max_size must be positive")
    budget = budget or SearchBudget()
    counts = {size: 0 for size in range(1, max_size + 1)}

    def extend(size: int, candidates: int) -> None:
        for v in _bits(candidates):
            budget.tick()
            counts[size + 1] += 1
            if size + 1 < max_size:
                extend(size + 1, candidates & g.adj[v] & ~((2 << v) - 1))

    extend(0, g.full_mask)
    return counts


def simplicial_vertices(g: LabeledGraph) -> List[Label]:
    _require_loop_free(g, "simplicial_vertices")
    result = []
    for v, nbrs in enumerate(g.adj):
        if all((nbrs & ~(1 << u)) & ~g.adj[u] == 0 for u in _bits(nbrs)):
            result.append(g.labels[v])
    return result


def is_complete_multipartite(g: LabeledGraph) -> Optional[List[List[Label]]]:
    """Parts of a complete multipartite structure, or None if g has none"""
    _require_loop_free(g, "is_complete_multipartite")
    full = g.full_mask
    parts = []
    seen = 0
    for v in range(g.order):
        if seen >> v & 1:
            continue
        part = full & ~g.adj[v]
        for u in _bits(part):
            if full & ~g.adj[u] != part:
                return None
        parts.append(g.labels_of(part))
        seen |= part
    return parts


# -- chromatic number --------------------------------------------------------


def _dsatur_greedy(adj: Sequence[int]) -> int:
    n = len(adj)
    colors = [-1] * n
    saturation = [0] * n
    used = 0
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (saturation[u].bit_count(), adj[u].bit_count(), -u),
        )
        c = 0
        while saturation[v] >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
        for w in _bits(adj[v]):
            saturation[w] |= 1 << c
    return used


def _k_colorable(adj: Sequence[int], k: int, budget: SearchBudget) -> bool:
    n = len(adj)
    colors = [-1] * n
    saturation = [0] * n

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        budget.tick()
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (saturation[u].bit_count(), adj[u].bit_count(), -u),
        )
        for c in range(min(used + 1, k)):
            if saturation[v] >> c & 1:
                continue
            colors[v] = c
            changed = [w for w in _bits(adj[v]) if not saturation[w] >> c & 1]
            for w in changed:
                saturation[w] |= 1 << c
            if solve(colored + 1, max(used, c + 1)):
                return True
            for w in changed:
                saturation[w] &= ~(1 << c)
            colors[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: LabeledGraph, budget: Optional[SearchBudget] = None) -> Optional[int]:
    """Exact chromatic number; None for looped graphs, which admit no proper colouring"""
    if g.has_loops:
        return None
    if g.order == 0:
        return 0
    if g.edge_count == 0:
        return 1
    budget = budget or SearchBudget()
    reduced = false_twin_core(g).adj
    lower = _clique_in_mask(reduced, (1 << len(reduced)) - 1, budget)
    upper = _dsatur_greedy(reduced)
    for k in range(lower, upper):
        if _k_colorable(reduced, k, budget):
            return k
    return upper


# -- domination --------------------------------------------------------------


def _dominating_sets(closed: Sequence[int], k: int, budget: SearchBudget) -> Set[int]:
    full = (1 << len(closed)) - 1
    widest = max(mask.bit_count() for mask in closed)
    found: Set[int] = set()

    def search(undominated: int, chosen: int, left: int) -> None:
        budget.tick()
        if not undominated:
            found.add(chosen)
            return
        if left == 0 or left * widest < undominated.bit_count():
            return
        u = min(_bits(undominated), key=lambda x: (closed[x].bit_count(), x))
        for w in _bits(closed[u]):
            search(undominated & ~closed[w], chosen | 1 << w, left - 1)

    search(full, 0, k)
    return found


def domination_stats(g: LabeledGraph, budget: Optional[SearchBudget] = None) -> DominationStats:
    """Domination number and the number of minimum dominating sets"""
    _require_loop_free(g, "domination_stats")
    if g.order == 0:
        return DominationStats(gamma=0, min_count=1)
    budget = budget or SearchBudget()
    closed = [_closed(g.adj, v) for v in range(g.order)]
    for k in range(1, g.order + 1):
        sets = _dominating_sets(closed, k, budget)
        if sets:
            return DominationStats(gamma=k, min_count=len(sets))
    raise AssertionError("the full vertex set always dominates")


# -- holes, perfection, chordality -------------------------------------------


def _find_odd_hole_adj(adj: Sequence[int], min_len: int, budget: SearchBudget) -> Optional[List[int]]:
    n = len(adj)
    for start in range(n):
        higher = ((1 << n) - 1) & ~((2 << start) - 1)
        path = [start]

        def extend(blocked: int) -> Optional[List[int]]:
            last = path[-1]
            candidates = adj[last] & higher & ~blocked
            for x in _bits(candidates):
                budget.tick()
                if len(path) > 1 and adj[x] >> start & 1:
                    length = len(path) + 1
                    if length >= min_len and length % 2 == 1:
                        return path + [x]
                    continue
                path.append(x)
                inner = blocked | _closed(adj, last) if len(path) > 2 else blocked | 1 << last
                found = extend(inner)
                path.pop()
                if found:
                    return found
            return None

        hole = extend(1 << start)
        if hole:
            return hole
    return None


def find_odd_hole(
    g: LabeledGraph, min_len: int = 5, budget: Optional[SearchBudget] = None
) -> Optional[List[Label]]:
    """First induced odd cycle of length >= min_len found from the lowest start vertex"""
    _require_loop_free(g, "find_odd_hole")
    if min_len < 3:
        raise InvalidInput("min_len must be at least 3")
    hole = _find_odd_hole_adj(g.adj, min_len, budget or SearchBudget())
    return [g.labels[v] for v in hole] if hole else None


def _twin_free_core(g: LabeledGraph) -> LabeledGraph:
    core = g
    while True:
        classes = _twin_classes(core.adj, core.full_mask)
        if len(classes) == core.order:
            return core
        core = core._induced_mask(sum(1 << _lsb_index(members) for members, _ in classes))


def is_perfect(g: LabeledGraph, budget: Optional[SearchBudget] = None) -> PerfectnessResult:
    """
    Decide perfection by searching for odd holes in g and its complement.

    The search runs on the twin-free core, which contains a copy of every
    odd hole and antihole of g.
    """
    _require_loop_free(g, "is_perfect")
    budget = budget or SearchBudget()
    core = _twin_free_core(g)
    hole = _find_odd_hole_adj(core.adj, 5, budget)
    if hole:
        return PerfectnessResult(
            perfect=False, witness=[core.labels[v] for v in hole], witness_kind=WitnessKind.HOLE
        )
    antihole = _find_odd_hole_adj(core.complement().adj, 5, budget)
    if antihole:
        return PerfectnessResult(
            perfect=False,
            witness=[core.labels[v] for v in antihole],
            witness_kind=WitnessKind.ANTIHOLE,
        )
    return PerfectnessResult(perfect=True)


def is_induced_cycle(g: LabeledGraph, cycle: Sequence[Label]) -> bool:
    """True if cycle, in order, is a chordless cycle of g"""
    size = len(cycle)
    if size < 3 or len(set(cycle)) != size or any(label not in g for label in cycle):
        return False
    for i in range(size):
        for j in range(i + 1, size):
            consecutive = j == i + 1 or (i == 0 and j == size - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def _lex_bfs(adj: Sequence[int]) -> List[int]:
    n = len(adj)
    labels: List[List[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        v = max((u for u in range(n) if not visited[u]), key=lambda u: (labels[u], -u))
        visited[v] = True
        order.append(v)
        for w in _bits(adj[v]):
            if not visited[w]:
                labels[w].append(n - step)
    return order


def _chordless_cycle_through(adj: Sequence[int], v: int, u: int, w: int) -> Optional[List[int]]:
    """Shortest u-w path avoiding N[v] apart from its ends, closed through v"""
    allowed = ~_closed(adj, v) | 1 << u | 1 << w
    parent = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            path = []
            while x != -1:
                path.append(x)
                x = parent[x]
            return [v] + path[::-1]
        for y in _bits(adj[x] & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def _non_chordal_witness(adj: Sequence[int], first: Tuple[int, int, int]) -> List[int]:
    cycle = _chordless_cycle_through(adj, *first)
    if cycle:
        return cycle
    for v in range(len(adj)):
        nbrs = list(_bits(adj[v]))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if not adj[u] >> w & 1:
                    cycle = _chordless_cycle_through(adj, v, u, w)
                    if cycle:
                        return cycle
    raise AssertionError("a graph without a perfect elimination ordering has a hole")


def is_chordal(g: LabeledGraph) -> ChordalityResult:
    _require_loop_free(g, "is_chordal")
    adj = g.adj
    order = _lex_bfs(adj)
    # reversed LexBFS order is a perfect elimination ordering iff g is chordal
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in _bits(adj[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: position[u])
        for u in earlier:
            if u != parent and not adj[parent] >> u & 1:
                cycle = _non_chordal_witness(adj, (v, parent, u))
                return ChordalityResult(chordal=False, witness=[g.labels[x] for x in cycle])
    return ChordalityResult(chordal=True)


# -- networkx-backed oracles -------------------------------------------------


def is_planar(g: LabeledGraph) -> bool:
    _require_loop_free(g, "is_planar")
    if g.order >= 3 and g.edge_count > 3 * g.order - 6:
        return False
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def are_isomorphic(g1: LabeledGraph, g2: LabeledGraph, cap: int = 40) -> bool:
    """Exact isomorphism test that maps looped vertices onto looped vertices"""
    for g in (g1, g2):
        check_oracle_cap(g, cap, "isomorphism test")
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return False
    if g1.loops.bit_count() != g2.loops.bit_count():
        return False
    return nx.is_isomorphic(
        g1.to_networkx(), g2.to_networkx(), node_match=lambda a, b: a["loop"] == b["loop"]
    )


# -- reports -----------------------------------------------------------------

ALL_PROPERTIES = (
    "complete",
    "regular",
    "connected",
    "eulerian",
    "chromatic_number",
    "complete_multipartite",
    "girth",
    "diameter",
    "clique_number",
    "independence_number",
    "domination_number",
    "min_dominating_count",
    "vertex_cover_number",
    "chordal",
    "planar",
    "perfect",
    "simplicial",
)


def graph_report(
    g: LabeledGraph,
    properties: Optional[Iterable[str]] = None,
    budget: Optional[SearchBudget] = None,
) -> PropertyReport:
    """Oracle-side PropertyReport restricted to the requested properties"""
    wanted = list(properties) if properties is not None else list(ALL_PROPERTIES)
    unknown = [p for p in wanted if p not in ALL_PROPERTIES]
    if unknown:
        raise InvalidInput(f"unknown properties: {', '.join(unknown)}")
    budget = budget or SearchBudget()
    if g.has_loops:
        looped = [p for p in wanted if p != "chromatic_number"]
        if looped:
            raise LoopedGraphError(f"{', '.join(looped)} undefined for graphs with self-loops")
        return PropertyReport(chromatic_number="undefined")

    values: Dict[str, object] = {}
    if {"complete", "regular", "connected", "eulerian"} & set(wanted):
        basic = basic_invariants(g)
        values.update(basic.model_dump(exclude={"degree_sequence"}))
    if {"girth", "diameter"} & set(wanted):
        values.update(metric_invariants(g).model_dump())
    if {"domination_number", "min_dominating_count"} & set(wanted):
        stats = domination_stats(g, budget)
        values["domination_number"] = stats.gamma
        values["min_dominating_count"] = stats.min_count
    if {"independence_number", "vertex_cover_number"} & set(wanted):
        alpha = independence_number(g, budget)
        values["independence_number"] = alpha
        values["vertex_cover_number"] = g.order - alpha
    if "chromatic_number" in wanted:
        values["chromatic_number"] = chromatic_number(g, budget)
    if "complete_multipartite" in wanted:
        values["complete_multipartite"] = is_complete_multipartite(g)
    if "clique_number" in wanted:
        values["clique_number"] = clique_number(g, budget=budget)
    if "chordal" in wanted:
        chordality = is_chordal(g)
        values["chordal"] = chordality.chordal
        values["chordal_witness"] = chordality.witness
    if "planar" in wanted:
        values["planar"] = is_planar(g)
    if "perfect" in wanted:
        perfection = is_perfect(g, budget)
        values["perfect"] = perfection.perfect
        values["perfect_witness"] = perfection.witness
        values["perfect_witness_kind"] = perfection.witness_kind
    if "simplicial" in wanted:
        values["simplicial"] = simplicial_vertices(g)

    keep = set(wanted) | {"chordal_witness", "perfect_witness", "perfect_witness_kind"}
    return PropertyReport(**{key: value for key, value in values.items() if key in keep})
