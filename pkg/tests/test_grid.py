import random
from itertools import combinations, permutations

import pytest

from slimcount.errors import ConsistencyError, DimensionError
from slimcount.grid import (
    build_lattice, build_lattice_with_quotient, build_quotient, check_cover_preserving,
    check_rules, quotient_size_formula, source_cells,
)
from slimcount.lattice import boolean_lattice, chain, is_distributive, join_irreducibles
from slimcount.oracle import enumerate_permutations, lattices_isomorphic
from slimcount.perm import PartialPermutation, Permutation, inversions

P = Permutation.parse


def uf_blocks(m, n, tau):
    """Independent reference: label propagation straight from the adjacent-merge
    description, no kernel involved."""
    cells = [(r, c) for r in range(m + 1) for c in range(n + 1)]
    comp = {x: x for x in cells}
    edges = []
    for i, j in tau:
        edges += [((i - 1, t), (i, t)) for t in range(j, n + 1)]
        edges += [((t, j - 1), (t, j)) for t in range(i, m + 1)]
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            lo = min(comp[a], comp[b])
            if comp[a] != lo or comp[b] != lo:
                comp[a] = comp[b] = lo
                changed = True
    return comp


def test_figure_two_grid():
    tau = PartialPermutation(8, 8, ((4, 4), (5, 8), (7, 1), (8, 2)))
    q = build_quotient(8, 8, tau)
    assert q.same_block((3, 4), (4, 4))
    members = q.blocks()
    for r in range(4):
        for c in range(4):
            assert len(members[q.block_of(r, c)]) == 1
    assert q.block_count == quotient_size_formula(8, 8, tau)
    ref = uf_blocks(8, 8, tau)
    assert q.block_count == len(set(ref.values()))
    check_rules(q)


def test_empty_tau_is_discrete():
    q = build_quotient(3, 4, ())
    assert q.block_count == 20
    assert quotient_size_formula(3, 4, ()) == 20


def test_single_cell():
    q = build_quotient(1, 1, [(1, 1)])
    assert q.block_count == 2
    assert q.same_block((1, 0), (0, 1)) and q.same_block((0, 1), (1, 1))
    assert not q.same_block((0, 0), (1, 1))
    assert quotient_size_formula(1, 1, [(1, 1)]) == 2
    assert source_cells(q).pairs == ((1, 1),)


def test_size_formula_worked_example():
    tau = PartialPermutation(8, 8, ((2, 5), (4, 4), (5, 8), (7, 1), (8, 2)))
    assert quotient_size_formula(8, 8, tau) == 81 + 7 - 90 + 46 == 44
    assert len(set(uf_blocks(8, 8, tau).values())) == 44
    assert build_quotient(8, 8, tau).block_count == 44


def test_dimension_errors():
    with pytest.raises(DimensionError):
        build_quotient(2, 2, [(3, 1)])
    with pytest.raises(DimensionError):
        quotient_size_formula(2, 2, [(1, 3)])
    with pytest.raises(DimensionError):
        build_quotient(0, 2, ())
    with pytest.raises(DimensionError):
        build_quotient(2, 2, PartialPermutation(3, 3, ((3, 3),)))


def partials(m, n, k):
    for rows in combinations(range(1, m + 1), k):
        for cols in permutations(range(1, n + 1), k):
            yield tuple(zip(rows, cols))


def test_formula_vs_union_find_exhaustive():
    for m in range(1, 6):
        for n in range(1, 6):
            for k in range(min(3, m, n) + 1):
                for pairs in partials(m, n, k):
                    assert build_quotient(m, n, pairs).block_count == quotient_size_formula(m, n, pairs)


def test_formula_vs_union_find_random():
    rng = random.Random(7)
    for _ in range(300):
        m, n = rng.randint(4, 9), rng.randint(4, 9)
        k = rng.randint(4, min(m, n))
        pairs = tuple(zip(sorted(rng.sample(range(1, m + 1), k)), rng.sample(range(1, n + 1), k)))
        q = build_quotient(m, n, pairs)
        assert q.block_count == quotient_size_formula(m, n, pairs)
        assert q.block_count == len(set(uf_blocks(m, n, pairs).values()))


def test_rules_hold_on_small_grids():
    for m in range(1, 5):
        for n in range(1, 5):
            for k in range(min(m, n) + 1):
                for pairs in partials(m, n, k):
                    check_rules(build_quotient(m, n, pairs))


def test_check_rules_detects_corruption():
    q = build_quotient(2, 2, [(1, 2)])
    labels = list(q.labels)
    labels[0] = labels[1]  # glue the bottom onto its neighbour
    broken = type(q)(q.m, q.n, q.source, tuple(labels), q.block_count - 1)
    with pytest.raises(ConsistencyError):
        check_rules(broken)


def test_build_lattice_identity_is_chain():
    for h in range(6):
        L = build_lattice(Permutation.identity(h))
        assert L.size == h + 1
        assert lattices_isomorphic(L, chain(h))


def test_build_lattice_transposition_is_square():
    L = build_lattice(P("2,1"))
    assert L.size == 4
    assert lattices_isomorphic(L, boolean_lattice(2))


def s7():
    # 0 < a, b; a < a2, ab; b < b2, ab; all three below 1
    from slimcount.lattice import FiniteLattice
    return FiniteLattice.from_order(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)])


def test_build_lattice_321_is_s7():
    L = build_lattice(P("3,2,1"))
    assert L.size == 3 + 1 + 3
    assert lattices_isomorphic(L, s7())
    assert not is_distributive(L)
    # two atoms and the element above each atom with no other lower cover
    assert len(join_irreducibles(L)) == 4


def test_build_lattice_empty():
    L = build_lattice(Permutation(()))
    assert L.size == 1 and L.covers == ()


def test_source_cells_examples():
    for h in range(5):
        q = build_quotient(h, h, Permutation.identity(h).graph()) if h else None
        if q:
            assert source_cells(q).pairs == tuple((i, i) for i in range(1, h + 1))
    q = build_quotient(4, 4, P("4,3,1,2").graph())
    assert source_cells(q).pairs == ((1, 4), (2, 3), (3, 1), (4, 2))


def test_size_and_round_trip_exhaustive():
    for h in range(1, 7):
        for pi in enumerate_permutations(h):
            L, q = build_lattice_with_quotient(pi, check=h <= 4)
            assert L.size == h + 1 + inversions(pi)
            assert q.block_count == quotient_size_formula(h, h, pi.graph())
            assert source_cells(q).pairs == pi.graph().pairs


def test_cover_preservation():
    for h in range(1, 6):
        for pi in enumerate_permutations(h):
            L, q = build_lattice_with_quotient(pi)
            check_cover_preserving(q, L)


def _boundary_is_chain(L, ids, h):
    assert len(set(ids)) == h + 1
    return all((ids[s], ids[s + 1]) in set(L.covers) for s in range(h))


def test_boundary_chains():
    for h in range(1, 6):
        for pi in enumerate_permutations(h):
            L = build_lattice(pi)
            id_of = {cell: x for x, block in enumerate(L.labels) for cell in block}
            assert _boundary_is_chain(L, [id_of[(i, 0)] for i in range(h + 1)], h)
            assert _boundary_is_chain(L, [id_of[(0, j)] for j in range(h + 1)], h)
            assert L.length() == h
