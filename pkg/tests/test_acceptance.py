"""Acceptance suite: one test per criterion, one PASS line each.

Run with ``pytest tests/test_acceptance.py -v -s``.

The exhaustive corpora are generated up to isomorphism (the properties under
test are label-invariant, so labeled duplicates would only repeat work).
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from arboricity import (
    EmptyCoreError,
    Multigraph,
    ResourceLimitError,
    ancestors,
    core_membership,
    core_nonempty,
    core_vertices,
    decompose_densest_subgraph,
    enumerate_minimal_densest_subgraphs,
    fractional_arboricity,
    is_tight_tree,
    nucleolus,
    peel_assignment,
    prime_partition,
)
from arboricity.cli import main as cli_main
from arboricity.oracle import brute_fractional_arboricity, maschler_nucleolus

from conftest import four_k4_chain, k4, path, triangle, two_k4_bridge, two_k4_shared_vertex


# ---------------------------------------------------------------------------
# corpus generation (exhaustive up to isomorphism)

MAX_VERTICES = 5
MAX_EDGES = 8
MAX_MULTIPLICITY = 2


def _connected_spanning(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def _relabel(
    edges: tuple[tuple[int, int], ...], perm: tuple[int, ...]
) -> tuple[tuple[int, int], ...]:
    return tuple(
        sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)
    )


@lru_cache(maxsize=None)
def _simple_classes() -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    classes = []
    seen = set()
    for n in range(2, MAX_VERTICES + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        perms = list(itertools.permutations(range(n)))
        for mask in range(1, 1 << len(pairs)):
            edges = tuple(
                pairs[i] for i in range(len(pairs)) if mask >> i & 1
            )
            if len(edges) > MAX_EDGES:
                continue
            if not _connected_spanning(n, edges):
                continue
            canon = min(_relabel(edges, p) for p in perms)
            if (n, canon) not in seen:
                seen.add((n, canon))
                classes.append((n, canon))
    return classes


@lru_cache(maxsize=None)
def small_corpus() -> list[Multigraph]:
    """Every connected multigraph with <= 5 vertices, <= 8 edges and edge
    multiplicities <= 2, one representative per isomorphism class."""
    graphs = []
    for n, simple in _simple_classes():
        k = len(simple)
        perms = [
            p
            for p in itertools.permutations(range(n))
            if _relabel(simple, p) == simple
        ]
        seen = set()
        for bits in range(1 << k):
            extra = bin(bits).count("1")
            if k + extra > MAX_EDGES:
                continue
            weighted = tuple(
                (simple[i], 2 if bits >> i & 1 else 1) for i in range(k)
            )
            canon = min(
                tuple(
                    sorted(
                        (tuple(sorted((p[u], p[v]))), c)
                        for (u, v), c in weighted
                    )
                )
                for p in perms
            )
            if canon in seen:
                continue
            seen.add(canon)
            pairs = []
            for (u, v), c in weighted:
                pairs.extend([(u, v)] * c)
            graphs.append(Multigraph.from_edge_list(pairs))
    return graphs


def _random_graph(rng: random.Random) -> Multigraph:
    n = rng.randint(2, 12)
    edges = [(rng.randint(0, v - 1), v) for v in range(1, n)]
    m_target = rng.randint(n - 1, min(2 * n, 14))
    while len(edges) < m_target:
        u = rng.randint(0, n - 1)
        v = rng.randint(0, n - 1)
        if u != v:
            edges.append((u, v))
    return Multigraph.from_edge_list(edges)


@lru_cache(maxsize=None)
def invariant_corpus() -> list[Multigraph]:
    rng = random.Random(20260811)
    return [_random_graph(rng) for _ in range(200)]


def _densest_vertex_sets(g: Multigraph, af: Fraction) -> list[frozenset[int]]:
    verts = sorted(g.vertices)
    n = len(verts)
    out = []
    for mask in range(3, 1 << n):
        if mask & (mask - 1) == 0:
            continue
        subset = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        sub = g.induced_by_vertices(subset)
        if sub.is_connected() and Fraction(
            sub.num_edges(), len(subset) - 1
        ) == af:
            out.append(subset)
    return out


def _has_cut_vertex(g: Multigraph) -> bool:
    if g.num_vertices() <= 2:
        return False
    return any(
        not g.delete_vertices({v}).is_connected() for v in g.vertices
    )


# ---------------------------------------------------------------------------
# criteria


def test_criterion_1_af_oracle_equivalence():
    start = time.monotonic()
    corpus = small_corpus()
    for g in corpus:
        fast = fractional_arboricity(g).value
        brute, _ = brute_fractional_arboricity(g, edge_cap=MAX_EDGES)
        assert fast == brute, sorted(g.edges.items())
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"criterion 1 took {elapsed:.1f}s"
    print(
        f"\nACCEPTANCE 1 PASS: af == brute-force af on {len(corpus)} "
        f"multigraph classes (<=5 vertices, <=8 edges) in {elapsed:.1f}s"
    )


def test_criterion_2_nucleolus_oracle_equivalence():
    start = time.monotonic()
    checked = 0
    for g in small_corpus():
        if fractional_arboricity(g).value.denominator != 1:
            continue
        fast = nucleolus(g)
        slow = maschler_nucleolus(g, edge_cap=MAX_EDGES)
        assert fast == slow, sorted(g.edges.items())
        checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 600, f"criterion 2 took {elapsed:.1f}s"
    print(
        f"\nACCEPTANCE 2 PASS: peeling nucleolus == Maschler-scheme "
        f"nucleolus on {checked} integral-af classes in {elapsed:.1f}s"
    )


def test_criterion_3_named_instances():
    for m in range(1, 7):
        assert nucleolus(path(m)) == {e: Fraction(1, m) for e in range(m)}

    assert nucleolus(k4()) == {e: Fraction(1, 3) for e in range(6)}
    k4_pp = prime_partition(k4())
    k4_assignment = peel_assignment(k4_pp, ancestors(k4(), k4_pp))
    assert k4_assignment.epsilon == Fraction(1, 3)

    shared = two_k4_shared_vertex()
    assert nucleolus(shared) == {e: Fraction(1, 6) for e in range(12)}
    assert maschler_nucleolus(shared, edge_cap=12) == nucleolus(shared)

    bridge = two_k4_bridge()
    x = nucleolus(bridge)
    assert x == {
        **{e: Fraction(2, 13) for e in range(12)},
        12: Fraction(1, 13),
        13: Fraction(1, 13),
    }
    pp = prime_partition(bridge)
    assignment = peel_assignment(pp, ancestors(bridge, pp))
    assert assignment.epsilon == Fraction(1, 13)
    assert core_membership(bridge, x).verdict == "member"
    for t in bridge.enumerate_spanning_trees(5000):
        weight = sum(x[e] for e in t)
        if is_tight_tree(bridge, pp, t):
            assert weight == 1
        else:
            assert weight <= 1 - assignment.epsilon

    chain = four_k4_chain()
    cpp = prime_partition(chain)
    cassign = peel_assignment(cpp, ancestors(chain, cpp))
    assert cassign.epsilon == Fraction(1, 41)
    by_level = {ps.id: ps.level for ps in cpp.prime_sets}
    assert all(
        cassign.multipliers[i] == 3 - by_level[i] for i in cassign.multipliers
    )

    with pytest.raises(EmptyCoreError) as exc:
        nucleolus(triangle())
    assert "af=3/2" in str(exc.value) and "a=2" in str(exc.value)

    print(
        "\nACCEPTANCE 3 PASS: trees 1/m (m=1..6); K4 1/3 (eps 1/3); "
        "shared-K4s 1/6; K4-bridge eps 1/13 with 2/13|1/13 and tight-tree "
        "dichotomy; four-K4 chain eps 1/41 with multipliers 3/2/1; "
        "triangle rejected (af=3/2, a=2)"
    )


def test_criterion_4_structural_invariants():
    violations = 0
    for g in invariant_corpus():
        pp = prime_partition(g)
        poset = ancestors(g, pp)
        af = pp.af

        covered = set(pp.non_prime)
        total = len(pp.non_prime)
        for ps in pp.prime_sets:
            covered |= ps.edges
            total += len(ps.edges)
        assert covered == g.edge_ids and total == g.num_edges()
        assert sum(ps.n_p - 1 for ps in pp.prime_sets) <= g.num_vertices() - 1

        for mds in enumerate_minimal_densest_subgraphs(g):
            sub = g.induced_by_vertices(mds)
            assert sub.num_edges() == 1 or not _has_cut_vertex(sub)

        dense_sets = _densest_vertex_sets(g, af)
        for dense in dense_sets:
            de = g.induced_by_vertices(dense).edge_ids
            for ps in pp.prime_sets:
                assert ps.edges <= de or not (ps.edges & de)

        remainder = g.delete_edges(pp.non_prime)
        for comp in remainder.components():
            if len(comp) == 1:
                continue
            sub = remainder.induced_by_vertices(comp)
            assert Fraction(sub.num_edges(), len(comp) - 1) == af
            ids = decompose_densest_subgraph(pp, comp, g)
            assert sum(pp.by_id(i).n_p - 1 for i in ids) + 1 == len(comp)

        for ps in pp.prime_sets:
            for anc in poset.ancestors_of(ps.id):
                assert pp.by_id(anc).level < ps.level
                assert ps.id not in poset.ancestors_of(anc)  # acyclic

    print(
        f"\nACCEPTANCE 4 PASS: structural invariants on "
        f"{len(invariant_corpus())} random connected graphs (n<=12), "
        f"{violations} violations"
    )


def test_criterion_5_core_properties():
    checked = 0
    trees_checked = 0
    for g in invariant_corpus():
        status = core_nonempty(g)
        if not status.nonempty:
            continue
        checked += 1
        pp = prime_partition(g)
        poset = ancestors(g, pp)
        vertices = core_vertices(g, cap=100000)
        for alloc in vertices:
            assert core_membership(g, alloc).verdict == "member"
            for e in pp.non_prime:
                assert alloc[e] == 0
            for ps in pp.prime_sets:
                vals = {alloc[e] for e in ps.edges}
                assert len(vals) == 1
            for ps in pp.prime_sets:
                v = next(iter({alloc[e] for e in ps.edges}))
                for anc in poset.ancestors_of(ps.id):
                    va = next(iter({alloc[e] for e in pp.by_id(anc).edges}))
                    assert v <= va

        x = nucleolus(g)
        assert core_membership(g, x).verdict == "member"
        assignment = peel_assignment(pp, poset)
        try:
            trees = g.enumerate_spanning_trees(5000)
        except ResourceLimitError:
            continue
        trees_checked += 1
        for t in trees:
            weight = sum(x[e] for e in t)
            if is_tight_tree(g, pp, t):
                assert weight == 1
            else:
                assert weight <= 1 - assignment.epsilon

    print(
        f"\nACCEPTANCE 5 PASS: core-vertex and nucleolus properties on "
        f"{checked} integral-af graphs (tight-tree dichotomy on "
        f"{trees_checked} with <=5000 spanning trees)"
    )


def test_criterion_6_performance_smoke(tmp_path):
    rng = random.Random(424242)
    n, m = 200, 1000
    edges = [(rng.randint(0, v - 1), v) for v in range(1, n)]
    while len(edges) < m:
        u = rng.randint(0, n - 1)
        v = rng.randint(0, n - 1)
        if u != v:
            edges.append((u, v))
    graph_file = tmp_path / "big.txt"
    graph_file.write_text("".join(f"{u} {v}\n" for u, v in edges))

    t0 = time.monotonic()
    code = cli_main(["af", str(graph_file), "--output", str(tmp_path / "af.json")])
    t_af = time.monotonic() - t0
    assert code == 0
    assert t_af < 30, f"cmd_af took {t_af:.1f}s"

    t0 = time.monotonic()
    code = cli_main(
        ["prime-partition", str(graph_file), "--output", str(tmp_path / "pp.json")]
    )
    t_pp = time.monotonic() - t0
    assert code == 0
    assert t_pp < 30, f"cmd_prime_partition took {t_pp:.1f}s"

    print(
        f"\nACCEPTANCE 6 PASS: n={n} m={m}: cmd_af {t_af:.2f}s, "
        f"cmd_prime_partition {t_pp:.2f}s (budget 30s each)"
    )
