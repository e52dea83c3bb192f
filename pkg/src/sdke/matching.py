"""Maximum matchings on general graphs, plus exhaustive enumeration.

The maximum-matching routine is the classic augmenting-path search with
blossom contraction (O(V^3)).  Everything scans vertices and neighbors in
increasing id order, so results are deterministic for a fixed graph.
The enumerators are meant for desk-scale oracle work and refuse graphs
above a configurable order bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import BoundExceededError, GraphError, MatchingError
from .graph import Edge, Graph, as_edge, delete_edge

DEFAULT_ENUMERATION_ORDER = 16


@dataclass(frozen=True)
class Matching:
    """A matching stored as an involution: pairing[v] is v's partner, or v.

    The representation makes the no-two-pairs-per-vertex property
    structural; validity against a host graph (matched pairs are edges)
    is checked by ``validate``.
    """

    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.pairing
        for v, u in enumerate(p):
            if not (0 <= u < len(p)) or p[u] != v:
                raise MatchingError(f"pairing is not an involution at vertex {v}")

    @property
    def n(self) -> int:
        return len(self.pairing)

    def partner(self, v: int) -> int:
        return self.pairing[v]

    def is_saturated(self, v: int) -> bool:
        return self.pairing[v] != v

    @property
    def size(self) -> int:
        return sum(1 for v, u in enumerate(self.pairing) if u != v) // 2

    @property
    def is_perfect(self) -> bool:
        return all(u != v for v, u in enumerate(self.pairing))

    def edge_pairs(self) -> list[Edge]:
        return [(v, u) for v, u in enumerate(self.pairing) if v < u]

    def contains_edge(self, e: tuple[int, int]) -> bool:
        u, v = e
        return u != v and 0 <= u < self.n and self.pairing[u] == v

    def validate(self, graph: Graph) -> None:
        """Raise MatchingError unless every matched pair is an edge of graph."""
        if self.n != graph.n:
            raise MatchingError(
                f"matching over {self.n} vertices used with graph of order {graph.n}"
            )
        for u, v in self.edge_pairs():
            if not graph.has_edge(u, v):
                raise MatchingError(f"matched pair ({u},{v}) is not an edge")

    def __repr__(self) -> str:
        return f"Matching({self.edge_pairs()})"


def matching_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
    """Build a Matching over n vertices from disjoint vertex pairs."""
    pairing = list(range(n))
    for u, v in pairs:
        if not (0 <= u < n) or not (0 <= v < n) or u == v:
            raise MatchingError(f"bad pair ({u},{v})")
        if pairing[u] != u or pairing[v] != v:
            raise MatchingError(f"pair ({u},{v}) reuses a matched vertex")
        pairing[u], pairing[v] = v, u
    return Matching(tuple(pairing))


def parse_matching(text: str, n: int) -> Matching:
    """Parse the matching text format: one 'u v' line per matched pair."""
    pairs = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise MatchingError(f"malformed matching line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MatchingError(f"malformed matching line {ln!r}") from None
    return matching_from_edges(n, pairs)


def serialize_matching(matching: Matching) -> str:
    return "".join(f"{u} {v}\n" for u, v in matching.edge_pairs())


def maximum_matching(graph: Graph) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossoms.

    Free vertices are tried as search roots in increasing order, and
    adjacency is scanned sorted, so the returned matching is a
    deterministic function of the graph.
    """
    n = graph.n
    adj = graph.adjacency
    match = [-1] * n

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def lowest_common_base(a: int, b: int) -> int:
            on_path = [False] * n
            x = a
            while True:
                x = base[x]
                on_path[x] = True
                if match[x] == -1:
                    break
                x = parent[match[x]]
            y = b
            while True:
                y = base[y]
                if on_path[y]:
                    return y
                y = parent[match[y]]

        def mark_blossom(x: int, stop: int, child: int, flag: list[bool]) -> None:
            while base[x] != stop:
                flag[base[x]] = True
                flag[base[match[x]]] = True
                parent[x] = child
                child = match[x]
                x = parent[match[x]]

        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or match[v] == w:
                    continue
                if w == root or (match[w] != -1 and parent[match[w]] != -1):
                    # Even-depth collision: contract the blossom.
                    stop = lowest_common_base(v, w)
                    flag = [False] * n
                    mark_blossom(v, stop, w, flag)
                    mark_blossom(w, stop, v, flag)
                    for i in range(n):
                        if flag[base[i]]:
                            base[i] = stop
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[w] == -1:
                    parent[w] = v
                    if match[w] == -1:
                        # Augmenting path found: flip it.
                        x: int = w
                        while x != -1:
                            px = parent[x]
                            nxt = match[px]
                            match[x], match[px] = px, x
                            x = nxt
                        return True
                    in_tree[match[w]] = True
                    queue.append(match[w])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return Matching(tuple(v if m == -1 else m for v, m in enumerate(match)))


def matching_number(graph: Graph) -> int:
    return maximum_matching(graph).size


def is_perfect(graph: Graph, matching: Matching) -> bool:
    """True iff the matching is valid for the graph and saturates every vertex."""
    matching.validate(graph)
    return matching.is_perfect


def is_matchable(graph: Graph) -> bool:
    """True iff the graph has a perfect matching."""
    return graph.n % 2 == 0 and matching_number(graph) * 2 == graph.n


def _check_order(graph: Graph, max_order: int) -> None:
    if graph.n > max_order:
        raise BoundExceededError(
            f"graph order {graph.n} exceeds enumeration bound {max_order}"
        )


def enumerate_perfect_matchings(
    graph: Graph, *, max_order: int = DEFAULT_ENUMERATION_ORDER
) -> list[Matching]:
    """All perfect matchings, by recursive pairing of the lowest free vertex."""
    _check_order(graph, max_order)
    n = graph.n
    if n % 2 == 1:
        return []
    out: list[Matching] = []
    pairing = list(range(n))
    free = [True] * n

    def rec(lowest: int) -> None:
        while lowest < n and not free[lowest]:
            lowest += 1
        if lowest == n:
            out.append(Matching(tuple(pairing)))
            return
        v = lowest
        for w in graph.adjacency[v]:
            if w > v and free[w]:
                free[v] = free[w] = False
                pairing[v], pairing[w] = w, v
                rec(v + 1)
                pairing[v], pairing[w] = v, w
                free[v] = free[w] = True

    rec(0)
    return out


def enumerate_maximum_matchings(
    graph: Graph, *, max_order: int = DEFAULT_ENUMERATION_ORDER
) -> list[Matching]:
    """All matchings of maximum cardinality, in deterministic order."""
    _check_order(graph, max_order)
    n = graph.n
    mu = matching_number(graph)
    out: list[Matching] = []
    pairing = list(range(n))
    free = [True] * n

    def rec(lowest: int, size: int) -> None:
        while lowest < n and not free[lowest]:
            lowest += 1
        # Even pairing every remaining vertex cannot reach mu: prune.
        if size + (n - lowest) // 2 < mu:
            return
        if lowest == n:
            if size == mu:
                out.append(Matching(tuple(pairing)))
            return
        v = lowest
        for w in graph.adjacency[v]:
            if w > v and free[w]:
                free[v] = free[w] = False
                pairing[v], pairing[w] = w, v
                rec(v + 1, size + 1)
                pairing[v], pairing[w] = v, w
                free[v] = free[w] = True
        rec(v + 1, size)  # leave v unmatched

    rec(0, 0)
    return out


def exists_max_matching_avoiding(graph: Graph, e: tuple[int, int]) -> bool:
    """True iff some maximum matching avoids edge e, i.e. mu(G-e) = mu(G)."""
    e = as_edge(*e)
    if e not in graph.edge_set:
        raise GraphError(f"edge ({e[0]},{e[1]}) not in graph")
    return matching_number(delete_edge(graph, e)) == matching_number(graph)
