"""König-Egerváry recognition, decomposition, reduction, and consolidated reports.

The KE property here is always alpha(g) + mu(g) = n(g) with alpha computed
exactly; `g_zero` is the reduction that deletes the closed neighborhood of the
core, and `s0_procedure` is the seeded stable-set construction that certifies
criticality of a unique perfect matching edge by edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .criticality import alpha_critical_edges, mu_critical_edges
from .errors import InternalInvariantError, PreconditionError
from .graph import (
    Edge,
    Graph,
    Matching,
    delete_edge,
    delete_vertices,
    is_bipartite,
    is_maximal_matching,
    is_stable,
    is_tree,
    neighborhood,
    spans_forest,
    vertex_set,
)
from .solvers import (
    ALPHA_VERTEX_CAP,
    OMEGA_SET_CAP,
    OMEGA_VERTEX_CAP,
    enumerate_maximum_stable_sets,
    lex_min_maximum_stable_set,
    maximum_matching,
    perfect_matching_status,
    stability_number,
)

BHP_VERTEX_CAP = 14


@dataclass(frozen=True)
class SolverCaps:
    """Size limits threaded through analyses; exceeding one raises CapacityError."""

    alpha: int = ALPHA_VERTEX_CAP
    omega_vertices: int = OMEGA_VERTEX_CAP
    omega_sets: int = OMEGA_SET_CAP
    bhp: int = BHP_VERTEX_CAP

    def raised_to(self, max_n: int) -> "SolverCaps":
        """Caps with every vertex limit at least max_n (set-count cap unchanged)."""
        return SolverCaps(
            alpha=max(self.alpha, max_n),
            omega_vertices=max(self.omega_vertices, max_n),
            omega_sets=self.omega_sets,
            bhp=max(self.bhp, max_n),
        )


DEFAULT_CAPS = SolverCaps()


@dataclass(frozen=True)
class KeDecomposition:
    """Partition into a maximum stable set and its matched complement."""

    s: tuple[int, ...]
    h_vertices: tuple[int, ...]
    cut_matching: Matching

    def to_dict(self) -> dict:
        return {
            "s": list(self.s),
            "h_vertices": list(self.h_vertices),
            "cut_matching": [list(e) for e in self.cut_matching.edges],
        }


@dataclass(frozen=True)
class S0Trace:
    """Full trace of the seeded stable-set construction.

    steps[0] is the initial (S0, D) state; each later entry is the state after
    one loop iteration. s0 is the final set after the closing sweep.
    """

    s0: tuple[int, ...]
    steps: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    target_edge: Edge


@dataclass(frozen=True)
class Th2Evaluation:
    """The five equivalent statements, evaluated independently."""

    g0_unique_pm: bool
    g0_critical_maximal: bool
    eq_alpha: bool
    eq_mu: bool
    eq_n: bool

    @property
    def flags(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.g0_unique_pm, self.g0_critical_maximal, self.eq_alpha, self.eq_mu, self.eq_n)

    @property
    def consistent(self) -> bool:
        return len(set(self.flags)) == 1


@dataclass(frozen=True)
class ParameterReport:
    n: int
    m: int
    alpha: int
    mu: int
    xi: int
    sigma: int
    eta: int
    is_ke: bool
    is_bipartite: bool
    is_tree: bool
    core: tuple[int, ...]
    anticore: tuple[int, ...]
    alpha_critical_edges: tuple[Edge, ...]
    mu_critical_edges: tuple[Edge, ...]
    g0_size: int
    g0_pm_status: int
    eq_alpha: bool
    eq_mu: bool
    eq_n: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "mu": self.mu,
            "xi": self.xi,
            "sigma": self.sigma,
            "eta": self.eta,
            "is_ke": self.is_ke,
            "is_bipartite": self.is_bipartite,
            "is_tree": self.is_tree,
            "core": list(self.core),
            "anticore": list(self.anticore),
            "alpha_critical_edges": [list(e) for e in self.alpha_critical_edges],
            "mu_critical_edges": [list(e) for e in self.mu_critical_edges],
            "g0_size": self.g0_size,
            "g0_pm_status": self.g0_pm_status,
            "equalities": {
                "xi_plus_eta_eq_alpha": self.eq_alpha,
                "sigma_plus_eta_eq_mu": self.eq_mu,
                "xi_plus_2eta_plus_sigma_eq_n": self.eq_n,
            },
        }


@lru_cache(maxsize=1 << 15)
def is_koenig_egervary(g: Graph, max_n: int = ALPHA_VERTEX_CAP) -> bool:
    """True iff alpha(g) + mu(g) = n(g)."""
    return stability_number(g, max_n) + maximum_matching(g).mu == g.n


def ke_decompose(g: Graph, caps: SolverCaps = DEFAULT_CAPS) -> KeDecomposition:
    """Split a KE graph into (S, H) with a maximum matching inside the cut.

    S is the lexicographically smallest maximum stable set, for reproducible
    output. That every maximum matching lies inside the cut is a theorem for
    KE graphs; it is asserted here, not assumed.
    """
    if not is_koenig_egervary(g, caps.alpha):
        raise PreconditionError("not a König-Egerváry graph")
    s = lex_min_maximum_stable_set(g, caps.alpha)
    s_set = set(s)
    h = tuple(v for v in range(g.n) if v not in s_set)
    witness = maximum_matching(g).witness
    for u, v in witness.edges:
        if (u in s_set) == (v in s_set):
            raise InternalInvariantError(f"maximum matching edge ({u}, {v}) is not a cut edge")
    covered_h = {v for e in witness.edges for v in e if v not in s_set}
    if witness.size != len(h) or covered_h != set(h):
        raise InternalInvariantError("cut matching does not saturate the non-stable side")
    return KeDecomposition(s=s, h_vertices=h, cut_matching=witness)


@lru_cache(maxsize=1 << 13)
def g_zero(g: Graph, caps: SolverCaps = DEFAULT_CAPS) -> tuple[Graph, tuple[int, ...]]:
    """The graph minus the closed neighborhood of its core, densely relabeled.

    Returns (reduction, kept) where kept[i] is the original id of new vertex i.
    """
    report = enumerate_maximum_stable_sets(g, caps.omega_sets, caps.omega_vertices)
    closed = neighborhood(g, report.core, closed=True)
    return delete_vertices(g, closed)


def s0_procedure(
    g0: Graph,
    pm: Matching,
    a_side: Iterable[int],
    b1: int,
    caps: SolverCaps = DEFAULT_CAPS,
) -> S0Trace:
    """Grow a maximum stable set of g0 that contains b1, given its unique
    perfect matching.

    a_side must be a stable endpoint class of the matching and b1 a vertex of
    the other class. Starting from S0 = D = {b1}, each round adds the partners
    of the not-yet-matched-into-S0 a-side neighbors of D, and a closing sweep
    adds the partners of the b-side vertices still missing. The result is
    asserted to be a maximum stable set whose union with b1's partner stays
    stable once the partner edge is deleted; a violation means the matching
    was not actually unique.
    """
    a = vertex_set(g0, a_side)
    a_set = set(a)
    for e in pm.edges:
        if e not in g0.edge_set:
            raise PreconditionError(f"matching edge {e} is not an edge of the graph")
    if len(pm.covered) != g0.n:
        raise PreconditionError("matching is not perfect")
    status = perfect_matching_status(g0)
    if status.count != 1:
        raise PreconditionError(f"perfect matching count is {status.count}, need exactly 1")
    if pm != status.witnesses[0]:
        raise PreconditionError("supplied matching is not the unique perfect matching")
    if not is_stable(g0, a):
        raise PreconditionError("a_side is not stable")
    for u, v in pm.edges:
        if (u in a_set) == (v in a_set):
            raise PreconditionError("a_side is not an endpoint class of the matching")
    if b1 in a_set or not 0 <= b1 < g0.n:
        raise PreconditionError("b1 must lie outside a_side")

    partner = {}
    for u, v in pm.edges:
        partner[u] = v
        partner[v] = u
    b_set = set(range(g0.n)) - a_set
    a1 = partner[b1]

    s0 = {b1}
    d = {b1}
    steps = [(tuple(sorted(s0)), tuple(sorted(d)))]
    while True:
        frontier = set()
        for v in d:
            frontier.update(g0.adj[v])
        matched_from_s0 = {partner[v] for v in s0}
        growth = (frontier & a_set) - matched_from_s0
        if not growth:
            break
        previous = set(s0)
        s0 |= {partner[v] for v in growth}
        d = s0 - previous
        steps.append((tuple(sorted(s0)), tuple(sorted(d))))
    s0 |= {partner[v] for v in b_set - s0}

    result = tuple(sorted(s0))
    trace = S0Trace(s0=result, steps=tuple(steps), target_edge=(min(a1, b1), max(a1, b1)))
    if not is_stable(g0, result):
        raise InternalInvariantError(f"constructed set is not stable: {trace}")
    if len(result) != stability_number(g0, caps.alpha) or b1 not in s0:
        raise InternalInvariantError(f"constructed set is not a maximum stable set: {trace}")
    reduced = delete_edge(g0, trace.target_edge)
    if not is_stable(reduced, result + (a1,)):
        raise InternalInvariantError(f"set plus {a1} not stable after deleting the target edge: {trace}")
    return trace


@lru_cache(maxsize=1 << 13)
def parameter_report(g: Graph, caps: SolverCaps = DEFAULT_CAPS) -> ParameterReport:
    """Every structural parameter of one graph, with the KE identities verified.

    For KE inputs the report refuses to return if alpha + sigma != mu + xi or
    if any of the three count sums exceeds its bound; those are theorems, so a
    violation is a solver bug.
    """
    stable = enumerate_maximum_stable_sets(g, caps.omega_sets, caps.omega_vertices)
    mu = maximum_matching(g).mu
    acrit = alpha_critical_edges(g, caps.alpha)
    mcrit = mu_critical_edges(g)
    reduction, _ = g_zero(g, caps)
    pm0 = perfect_matching_status(reduction)
    alpha, xi, sigma = stable.alpha, stable.xi, stable.sigma
    eta = len(acrit)
    ke = alpha + mu == g.n
    if ke:
        if alpha + sigma != mu + xi:
            raise InternalInvariantError(f"alpha+sigma != mu+xi on a KE graph: {g}")
        if xi + eta > alpha or sigma + eta > mu or xi + 2 * eta + sigma > g.n:
            raise InternalInvariantError(f"count-sum bound violated on a KE graph: {g}")
    return ParameterReport(
        n=g.n,
        m=g.m,
        alpha=alpha,
        mu=mu,
        xi=xi,
        sigma=sigma,
        eta=eta,
        is_ke=ke,
        is_bipartite=is_bipartite(g),
        is_tree=is_tree(g),
        core=stable.core,
        anticore=stable.anticore,
        alpha_critical_edges=acrit,
        mu_critical_edges=mcrit,
        g0_size=reduction.n,
        g0_pm_status=pm0.count,
        eq_alpha=xi + eta == alpha,
        eq_mu=sigma + eta == mu,
        eq_n=xi + 2 * eta + sigma == g.n,
    )


def th2_evaluate(g: Graph, caps: SolverCaps = DEFAULT_CAPS) -> Th2Evaluation:
    """Evaluate the five-way equivalence on a KE graph, each clause independently."""
    if not is_koenig_egervary(g, caps.alpha):
        raise PreconditionError("not a König-Egerváry graph")
    report = parameter_report(g, caps)
    reduction, _ = g_zero(g, caps)
    acrit0 = alpha_critical_edges(reduction, caps.alpha)
    return Th2Evaluation(
        g0_unique_pm=report.g0_pm_status == 1,
        g0_critical_maximal=is_maximal_matching(reduction, acrit0),
        eq_alpha=report.eq_alpha,
        eq_mu=report.eq_mu,
        eq_n=report.eq_n,
    )


def forest_condition(
    g: Graph, caps: SolverCaps = DEFAULT_CAPS
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether some maximum stable set has an acyclic cut; first witness in lex order."""
    if not is_koenig_egervary(g, caps.alpha):
        raise PreconditionError("not a König-Egerváry graph")
    stable = enumerate_maximum_stable_sets(g, caps.omega_sets, caps.omega_vertices)
    for s in stable.omega:
        members = set(s)
        cut = tuple(e for e in g.edges if (e[0] in members) != (e[1] in members))
        if spans_forest(g, cut):
            return True, s
    return False, None
