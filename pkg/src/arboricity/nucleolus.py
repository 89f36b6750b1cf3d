"""Nucleolus of the arboricity game by peeling the prime-set order.

With a nonempty core, every core allocation is constant on each prime set
and zero on the non-prime set, so the game collapses to one variable per
prime set.  The optimal assignment gives each prime set an integer multiple
of a common epsilon: peel the minimal elements of the ancestor order round
by round; a set removed in round k is worth k*epsilon.  Epsilon itself is
fixed by the tight-tree normalization sum((n_p - 1) * y_P) = 1.

The multiplier of a prime set equals its height in the ancestor order; both
the round simulation and the height recursion are computed and compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import EmptyCoreError, GraphInputError, InternalInvariantError
from .game import Allocation, core_nonempty
from .multigraph import EdgeId, Multigraph
from .prime import AncestorPoset, PrimePartition, ancestors, prime_partition


@dataclass(frozen=True)
class PeelAssignment:
    """Peeling result: integer multipliers, epsilon, and per-set payoffs."""

    multipliers: dict[int, int]
    epsilon: Fraction
    y: dict[int, Fraction]

    @property
    def y_nonprime(self) -> Fraction:
        return Fraction(0)


def peel(poset: AncestorPoset) -> dict[int, int]:
    """Round number at which each prime set becomes minimal and is removed."""
    parents = poset.parents
    below: dict[int, set[int]] = {pid: set() for pid in parents}
    for pid in parents:
        for anc in poset.ancestors_of(pid):
            below[anc].add(pid)

    remaining = set(parents)
    rounds: dict[int, int] = {}
    k = 0
    while remaining:
        k += 1
        minimal = [p for p in remaining if not (below[p] & remaining)]
        if not minimal:
            raise InternalInvariantError("ancestor order contains a cycle")
        for p in minimal:
            rounds[p] = k
        remaining -= set(minimal)

    heights = _heights(parents, below)
    if heights != rounds:
        raise InternalInvariantError("peeling rounds disagree with poset heights")
    return rounds


def _heights(
    parents: dict[int, frozenset[int]], below: dict[int, set[int]]
) -> dict[int, int]:
    height: dict[int, int] = {}

    def compute(pid: int) -> int:
        if pid in height:
            return height[pid]
        height[pid] = 1 + max((compute(c) for c in below[pid]), default=0)
        return height[pid]

    for pid in parents:
        compute(pid)
    return height


def solve_epsilon(pp: PrimePartition, multipliers: dict[int, int]) -> Fraction:
    """epsilon = 1 / sum over prime sets of (n_p - 1) * k_P."""
    if not pp.prime_sets:
        raise GraphInputError("partition has no prime sets")
    total = sum((ps.n_p - 1) * multipliers[ps.id] for ps in pp.prime_sets)
    return Fraction(1, total)


def peel_assignment(pp: PrimePartition, poset: AncestorPoset) -> PeelAssignment:
    multipliers = peel(poset)
    eps = solve_epsilon(pp, multipliers)
    y = {pid: k * eps for pid, k in multipliers.items()}
    return PeelAssignment(multipliers, eps, y)


def nucleolus(g: Multigraph, variant: bool = False) -> Allocation:
    """The unique nucleolus allocation, keyed by original EdgeId.

    Requires a nonempty core (integral fractional arboricity) unless
    ``variant`` is set, in which case the coalition cost is taken to be the
    fractional arboricity itself and the same peeling formulas apply.
    """
    assignment, pp = _solve(g, variant)
    alloc: Allocation = {e: Fraction(0) for e in g.edge_ids}
    for ps in pp.prime_sets:
        for e in ps.edges:
            alloc[e] = assignment.y[ps.id]
    return alloc


def _solve(g: Multigraph, variant: bool) -> tuple[PeelAssignment, PrimePartition]:
    status = core_nonempty(g)
    if not status.nonempty and not variant:
        raise EmptyCoreError(
            f"core empty: af={status.af}, a={status.arboricity}"
        )
    pp = prime_partition(g)
    poset = ancestors(g, pp)
    return peel_assignment(pp, poset), pp


def is_tight_tree(
    g: Multigraph, pp: PrimePartition, t: Iterable[EdgeId]
) -> bool:
    """True iff ``t`` meets every prime set P in exactly n_p - 1 edges.

    Such trees have weight exactly 1 under every core allocation.
    """
    tset = set(t)
    unknown = tset - set(g.edge_ids)
    if unknown:
        raise GraphInputError(f"unknown edge ids {sorted(unknown)}")
    if len(tset) != g.num_vertices() - 1 or not g.induced_by_edges(tset).is_connected():
        raise GraphInputError("t is not a spanning tree")
    if len(g.induced_by_edges(tset).vertices) != g.num_vertices():
        raise GraphInputError("t is not a spanning tree")
    return all(len(tset & ps.edges) == ps.n_p - 1 for ps in pp.prime_sets)
