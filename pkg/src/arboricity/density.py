"""Exact graph density, fractional arboricity, and densest-subgraph extraction.

Density of a connected graph H is m(H)/(n(H)-1); a single vertex has density
zero.  The fractional arboricity af(G) is the maximum density over connected
subgraphs, and the arboricity (minimum number of forests covering all edges)
is its ceiling.  Everything here is exact: densities are ``Fraction`` values
and every decision reduces to integer max-flow through the kernel layer.

The flow decision procedure answers "is there a connected vertex set with
density > p/q".  A single source/edge/vertex/sink network cannot answer this
directly because the empty set always yields the trivial cut; the kernel
therefore prices one vertex of the candidate set as free (a "root") and
sweeps roots over the graph, peeling and deleting as it goes.  Witness
extraction follows a fixed rule: from the min-cut source side, keep the
connected component of maximum density, ties broken by minimum VertexId.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DisconnectedGraphError, GraphInputError, InternalInvariantError
from .multigraph import Multigraph, VertexId


@dataclass(frozen=True)
class DensityCertificate:
    """Exact fractional arboricity plus a connected vertex set attaining it."""

    value: Fraction
    witness: frozenset[VertexId]


def density(g: Multigraph) -> Fraction:
    """m(G)/(n(G)-c(G)); zero when the graph has no edges."""
    n = g.num_vertices()
    c = g.num_components()
    if n == c:
        return Fraction(0)
    return Fraction(g.num_edges(), n - c)


def _component_density(g: Multigraph, comp: frozenset[VertexId]) -> Fraction:
    if len(comp) <= 1:
        return Fraction(0)
    m = sum(1 for u, v in g.edges.values() if u in comp)
    return Fraction(m, len(comp) - 1)


def _best_component(g: Multigraph, vertices: list[VertexId]) -> frozenset[VertexId]:
    """Max-density component of the subgraph induced by ``vertices``.

    Ties broken by minimum VertexId; this is the pinned witness-extraction
    rule for every flow-based decision.
    """
    sub = g.induced_by_vertices(vertices)
    comps = sub.components()
    best = None
    best_d = None
    for comp in comps:  # components() is ordered by min id, so first win = tie rule
        d = _component_density(sub, comp)
        if best_d is None or d > best_d:
            best, best_d = comp, d
    assert best is not None
    return best


def _witness_above(g: Multigraph, p: int, q: int) -> frozenset[VertexId] | None:
    """Connected vertex set with density > p/q, or None."""
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    us: list[int] = []
    vs: list[int] = []
    for eid in sorted(g.edges):
        a, b = g.endpoints(eid)
        us.append(index[a])
        vs.append(index[b])
    raw = kernels.sweep(len(verts), us, vs, p, q)
    if raw is None:
        return None
    witness = _best_component(g, [verts[i] for i in raw])
    if _component_density(g.induced_by_vertices(witness), witness) * q <= p:
        raise InternalInvariantError("flow witness does not exceed the threshold")
    return witness


def _witness_at_least(g: Multigraph, lam: Fraction) -> frozenset[VertexId] | None:
    """Connected vertex set with density >= lam (lam > 0), or None.

    Works by a strict test just below lam: subgraph densities have
    denominator at most n(g)-1, so no density falls strictly between
    lam - 1/(q*n) and lam.
    """
    n = g.num_vertices()
    if n < 2 or g.num_edges() == 0:
        return None
    p, q = lam.numerator, lam.denominator
    return _witness_above(g, p * n - 1, q * n)


def exceeds_density(
    g: Multigraph, lam: Fraction | int
) -> frozenset[VertexId] | None:
    """A connected vertex set of density > lam, or None if none exists."""
    lam = Fraction(lam)
    if lam < 0:
        raise GraphInputError("density threshold must be nonnegative")
    if g.num_edges() == 0:
        raise GraphInputError("graph has no edges")
    return _witness_above(g, lam.numerator, lam.denominator)


def fractional_arboricity(g: Multigraph) -> DensityCertificate:
    """Exact af(G) with a connected witness attaining it.

    Iterates the density improvement step: starting from the density of the
    graph itself, repeatedly ask the decision oracle for a strictly denser
    connected subgraph and move the threshold to its density.  Each iterate
    is a strictly larger rational with denominator at most n-1, so the loop
    terminates at the exact maximum.
    """
    if g.num_edges() == 0:
        raise GraphInputError("graph has no edges")
    comps = g.components()
    witness = None
    lam = Fraction(-1)
    for comp in comps:
        d = _component_density(g, comp)
        if d > lam:
            lam, witness = d, comp
    assert witness is not None
    while True:
        better = _witness_above(g, lam.numerator, lam.denominator)
        if better is None:
            return DensityCertificate(lam, witness)
        witness = better
        lam = _component_density(g.induced_by_vertices(better), better)


def arboricity(g: Multigraph) -> int:
    """Minimum number of forests covering all edges: the ceiling of af(G)."""
    af = fractional_arboricity(g).value
    return -(-af.numerator // af.denominator)


def _shrink_to_minimal(
    g: Multigraph, lam: Fraction, witness: frozenset[VertexId]
) -> frozenset[VertexId]:
    """Vertex-deletion loop of the minimal-densest-subgraph extraction.

    Candidates are scanned in ascending VertexId and the scan restarts after
    each successful deletion.  A failed candidate stays failed as the graph
    shrinks (its deletion target only loses subgraphs), so failures are
    memoized; this does not change any outcome, only skips re-tests.  When a
    candidate lies outside the currently known witness, deleting it is a
    success without consulting the oracle.
    """
    held = set(g.vertices)
    failed: set[VertexId] = set()
    while True:
        progressed = False
        for v in sorted(held):
            if v in failed:
                continue
            if v not in witness:
                held.remove(v)
                progressed = True
                break
            rest = g.induced_by_vertices(held - {v})
            found = _witness_at_least(rest, lam)
            if found is None:
                failed.add(v)
            else:
                held.remove(v)
                witness = found
                progressed = True
                break
        if not progressed:
            break
    result = g.induced_by_vertices(held)
    if not result.is_connected() or density(result) != lam:
        raise InternalInvariantError("minimal densest subgraph extraction failed")
    return frozenset(held)


def minimal_densest_subgraph(g: Multigraph) -> frozenset[VertexId]:
    """A vertex-minimal connected subgraph of density af(G)."""
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    if g.num_edges() == 0:
        raise GraphInputError("graph has no edges")
    cert = fractional_arboricity(g)
    return _shrink_to_minimal(g, cert.value, cert.witness)


def _enumerate_mds(g: Multigraph, lam: Fraction) -> list[frozenset[VertexId]]:
    """All minimal densest subgraphs of ``g``, given af(g) = lam.

    Repeatedly extracts one minimal densest subgraph and removes its edges;
    minimal densest subgraphs are pairwise edge-disjoint, so this finds each
    exactly once.  Stops when the remaining graph no longer attains lam.
    """
    found: list[frozenset[VertexId]] = []
    current = g
    while current.num_edges() > 0:
        witness = _witness_at_least(current, lam)
        if witness is None:
            break
        mds = _shrink_to_minimal(current, lam, witness)
        found.append(mds)
        current = current.delete_edges(
            current.induced_by_vertices(mds).edge_ids
        )
    return found


def enumerate_minimal_densest_subgraphs(
    g: Multigraph,
) -> list[frozenset[VertexId]]:
    """All minimal densest subgraphs, in deterministic discovery order."""
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    if g.num_edges() == 0:
        raise GraphInputError("graph has no edges")
    lam = fractional_arboricity(g).value
    return _enumerate_mds(g, lam)
