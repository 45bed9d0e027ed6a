"""Exact stability and matching solvers at desk scale.

Everything here is a pure deterministic function of its Graph argument, so
results are memoized per graph. Vertex sets live in int bitsets throughout;
the configurable caps turn runaway inputs into CapacityError instead of
letting a search run away silently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, InternalInvariantError
from .graph import Edge, Graph, Matching, delete_edge

ALPHA_VERTEX_CAP = 40
OMEGA_VERTEX_CAP = 20
OMEGA_SET_CAP = 100_000
BRUTE_FORCE_VERTEX_CAP = 12
MATCHING_ENUM_CAP = 100_000

_FORCED_EDGE_CROSSCHECK_MAX_N = 10


@dataclass(frozen=True)
class StableSetReport:
    """All maximum stable sets plus their intersection and co-intersection."""

    alpha: int
    omega: tuple[tuple[int, ...], ...]
    core: tuple[int, ...]
    anticore: tuple[int, ...]

    @property
    def xi(self) -> int:
        return len(self.core)

    @property
    def sigma(self) -> int:
        return len(self.anticore)


@dataclass(frozen=True)
class PerfectMatchingStatus:
    """Perfect-matching count saturated at 2, with up to two witnesses."""

    count: int
    witnesses: tuple[Matching, ...]


@dataclass(frozen=True)
class MatchingReport:
    mu: int
    witness: Matching
    perfect_matching_count: int | None = None
    forced_edges: tuple[Edge, ...] | None = None


def _greedy_stable_size(masks: tuple[int, ...], mask: int) -> int:
    # Repeatedly take a minimum-residual-degree vertex; lower bound for alpha.
    size = 0
    while mask:
        best_v = -1
        best_d = 1 << 62
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = (masks[v] & mask).bit_count()
            if d < best_d:
                best_d = d
                best_v = v
        size += 1
        mask &= ~(masks[best_v] | (1 << best_v))
    return size


def _alpha_of_mask(masks: tuple[int, ...], mask: int) -> int:
    """Exact stability number of the subgraph induced by a vertex bitset.

    Branch and bound: branch on a maximum-residual-degree vertex (take it or
    drop it), seeded with the greedy lower bound; subproblems that cannot beat
    the incumbent are pruned and residual graphs of maximum degree <= 1 are
    closed out directly (isolated vertices plus disjoint edges).
    """
    best = _greedy_stable_size(masks, mask)

    def search(mask: int, size: int) -> None:
        nonlocal best
        while mask:
            if size + mask.bit_count() <= best:
                return
            max_d = -1
            max_v = -1
            edge_doubled = 0
            rest = mask
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                d = (masks[v] & mask).bit_count()
                edge_doubled += d
                if d > max_d:
                    max_d = d
                    max_v = v
            if max_d <= 1:
                size += mask.bit_count() - edge_doubled // 2
                break
            search(mask & ~(masks[max_v] | (1 << max_v)), size + 1)
            mask &= ~(1 << max_v)
        if size > best:
            best = size

    search(mask, 0)
    return best


@lru_cache(maxsize=1 << 16)
def stability_number(g: Graph, max_n: int = ALPHA_VERTEX_CAP) -> int:
    """Exact stability number alpha(g)."""
    if g.n > max_n:
        raise CapacityError(f"stability solver capped at n={max_n}, got n={g.n}")
    return _alpha_of_mask(g.adjacency_masks, (1 << g.n) - 1)


def lex_min_maximum_stable_set(g: Graph, max_n: int = ALPHA_VERTEX_CAP) -> tuple[int, ...]:
    """The lexicographically smallest maximum stable set (sorted-tuple order)."""
    need = stability_number(g, max_n)
    masks = g.adjacency_masks
    allowed = (1 << g.n) - 1
    chosen: list[int] = []
    for v in range(g.n):
        if need == 0:
            break
        if not (allowed >> v) & 1:
            continue
        rest = allowed & ~(masks[v] | (1 << v)) & ~((1 << (v + 1)) - 1)
        if 1 + _alpha_of_mask(masks, rest) >= need:
            chosen.append(v)
            allowed = rest
            need -= 1
        else:
            allowed &= ~(1 << v)
    return tuple(chosen)


@lru_cache(maxsize=1 << 13)
def enumerate_maximum_stable_sets(
    g: Graph, cap: int = OMEGA_SET_CAP, max_n: int = OMEGA_VERTEX_CAP
) -> StableSetReport:
    """Complete listing of maximum stable sets, in lexicographic order.

    core = their intersection, anticore = vertices in none of them. Raises
    CapacityError if there are more than `cap` sets: core/anticore must stay
    exact, so truncation is never an option.
    """
    if g.n > max_n:
        raise CapacityError(f"stable-set enumeration capped at n={max_n}, got n={g.n}")
    alpha = stability_number(g, max(max_n, ALPHA_VERTEX_CAP))
    masks = g.adjacency_masks
    found: list[tuple[int, ...]] = []
    inter_mask = (1 << g.n) - 1
    union_mask = 0

    def extend(prefix: list[int], prefix_mask: int, allowed: int, need: int) -> None:
        nonlocal inter_mask, union_mask
        if need == 0:
            if len(found) >= cap:
                raise CapacityError(f"more than {cap} maximum stable sets")
            found.append(tuple(prefix))
            inter_mask &= prefix_mask
            union_mask |= prefix_mask
            return
        while allowed:
            if allowed.bit_count() < need:
                return
            v = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            prefix.append(v)
            extend(prefix, prefix_mask | (1 << v), allowed & ~masks[v], need - 1)
            prefix.pop()

    extend([], 0, (1 << g.n) - 1, alpha)
    core = tuple(v for v in range(g.n) if (inter_mask >> v) & 1)
    anticore = tuple(v for v in range(g.n) if not (union_mask >> v) & 1)
    return StableSetReport(alpha=alpha, omega=tuple(found), core=core, anticore=anticore)


def _blossom_augment(adj: tuple[tuple[int, ...], ...], match: list[int], start: int) -> bool:
    # One BFS phase of the contraction blossom algorithm from `start`.
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[start] = True
    queue: deque[int] = deque([start])

    def lowest_common_base(a: int, b: int) -> int:
        marked = [False] * n
        while True:
            a = base[a]
            marked[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if marked[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == start or (match[to] != -1 and parent[match[to]] != -1):
                cur = lowest_common_base(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        next_to = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = next_to
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


@lru_cache(maxsize=1 << 16)
def maximum_matching(g: Graph) -> MatchingReport:
    """Maximum matching via the blossom algorithm; mu and witness only.

    Vertices are scanned in increasing order over sorted adjacency, so the
    witness is a pure function of the graph.
    """
    n = g.n
    adj = g.adj
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    for u in range(n):
        if match[u] == -1:
            _blossom_augment(adj, match, u)
    edges = tuple(sorted((u, match[u]) for u in range(n) if match[u] > u))
    return MatchingReport(mu=len(edges), witness=Matching(edges))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).mu


def maximum_matching_bruteforce(g: Graph, max_n: int = BRUTE_FORCE_VERTEX_CAP) -> int:
    """Matching number by exhaustive search; the independent oracle for blossom."""
    if g.n > max_n:
        raise CapacityError(f"matching brute force capped at n={max_n}, got n={g.n}")
    masks = g.adjacency_masks

    def best(mask: int) -> int:
        # Lowest remaining vertex with a neighbor either stays unmatched or
        # pairs with each remaining neighbor in turn.
        u = -1
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if masks[u] & mask:
                break
        else:
            return 0
        result = best(mask)
        nb = masks[u] & mask
        while nb:
            v = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            cand = 1 + best(mask & ~(1 << v))
            if cand > result:
                result = cand
        return result

    return best((1 << g.n) - 1)


@lru_cache(maxsize=1 << 14)
def perfect_matching_status(g: Graph) -> PerfectMatchingStatus:
    """Count perfect matchings with saturation at 2 plus up to two witnesses.

    The empty graph reports exactly one perfect matching (the empty one).
    Backtracking always extends the lowest uncovered vertex, so a stuck vertex
    prunes the branch immediately.
    """
    if g.n == 0:
        return PerfectMatchingStatus(1, (Matching(()),))
    if g.n % 2 == 1 or any(not nb for nb in g.adj):
        return PerfectMatchingStatus(0, ())
    masks = g.adjacency_masks
    found: list[tuple[Edge, ...]] = []
    chosen: list[Edge] = []

    def search(mask: int) -> bool:
        if mask == 0:
            found.append(tuple(chosen))
            return len(found) >= 2
        u = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << u)
        nb = masks[u] & rest
        while nb:
            v = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            chosen.append((u, v))
            if search(rest & ~(1 << v)):
                chosen.pop()
                return True
            chosen.pop()
        return False

    search((1 << g.n) - 1)
    return PerfectMatchingStatus(min(len(found), 2), tuple(Matching(m) for m in found[:2]))


def enumerate_maximum_matchings(g: Graph, cap: int = MATCHING_ENUM_CAP) -> tuple[Matching, ...]:
    """All maximum matchings, in canonical order; CapacityError beyond `cap`."""
    mu = maximum_matching(g).mu
    masks = g.adjacency_masks
    found: list[tuple[Edge, ...]] = []
    chosen: list[Edge] = []

    def search(mask: int, size: int) -> None:
        if size + mask.bit_count() // 2 < mu:
            return
        u = -1
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if masks[u] & mask:
                break
        else:
            if size == mu:
                if len(found) >= cap:
                    raise CapacityError(f"more than {cap} maximum matchings")
                found.append(tuple(sorted(chosen)))
            return
        search(mask, size)
        nb = masks[u] & mask
        while nb:
            v = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            chosen.append((u, v))
            search(mask & ~(1 << v), size + 1)
            chosen.pop()

    search((1 << g.n) - 1, 0)
    return tuple(Matching(m) for m in sorted(found))


@lru_cache(maxsize=1 << 14)
def forced_matching_edges(g: Graph) -> tuple[Edge, ...]:
    """Edges present in every maximum matching: deleting one lowers mu.

    Up to 10 vertices the definition is cross-checked against the intersection
    of the explicitly enumerated maximum matchings.
    """
    mu = maximum_matching(g).mu
    forced = tuple(e for e in g.edges if maximum_matching(delete_edge(g, e)).mu < mu)
    if g.n <= _FORCED_EDGE_CROSSCHECK_MAX_N:
        shared = set(g.edges)
        for m in enumerate_maximum_matchings(g):
            shared &= set(m.edges)
        if tuple(sorted(shared)) != forced:
            raise InternalInvariantError(
                f"forced-edge routes disagree: deletion={forced} intersection={tuple(sorted(shared))}"
            )
    return forced


def matching_report(g: Graph) -> MatchingReport:
    """MatchingReport with all fields populated."""
    base = maximum_matching(g)
    return MatchingReport(
        mu=base.mu,
        witness=base.witness,
        perfect_matching_count=perfect_matching_status(g).count,
        forced_edges=forced_matching_edges(g),
    )
