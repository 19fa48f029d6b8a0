"""End-to-end searches: stabilisers, transporters, centralisers, BSGS.

The worked examples pin exact node counts per mode; those separate the
classic arcless strategy (leon) from the orbital-graph and equitable
strategies the way the benchmark families do at scale.  Everything with
degree <= 7 is cross-checked against the brute-force oracle.
"""

import pytest

from permsearch import (
    Centralizer,
    DigraphAuto,
    DigraphIso,
    GroupByGens,
    ListOfSetsStab,
    Perm,
    SearchConfig,
    SearchLimitExceeded,
    SetOfSetsTransport,
    SetStab,
    SetTransport,
    brute_iso_stacks,
    brute_solve,
    parse_cycles,
    refine_pair,
    search_all,
    search_bsgs,
    search_single,
    split_stacks,
)
from permsearch.digraphs import Stack
from permsearch.groups import dihedral_gens
from permsearch.prng import SplitMix64

from .conftest import comparison_stacks, running_stack

ALL_MODES = ["leon", "orbital", "strong", "full"]


def pc(text, degree=6):
    return parse_cycles(text, degree)


def solve(constraints, mode, **kw):
    return search_all(constraints, SearchConfig.from_mode(mode, **kw))


class TestWorkedAut:
    """Automorphisms of the three-entry running stack."""

    def test_all_modes_agree_on_elements(self):
        cons = [DigraphAuto(e) for e in running_stack().entries]
        want = {pc("()"), pc("(1 2)(3 4)(5 6)")}
        for mode in ALL_MODES:
            assert set(solve(cons, mode).elements) == want

    def test_node_counts(self):
        # the arc-aware approximators solve this almost by refinement alone
        cons = [DigraphAuto(e) for e in running_stack().entries]
        nodes = {mode: solve(cons, mode).stats.nodes for mode in ALL_MODES}
        assert nodes == {"leon": 14, "orbital": 14, "strong": 2, "full": 2}

    def test_matches_brute_iso(self):
        S = running_stack()
        cons = [DigraphAuto(e) for e in S.entries]
        assert sorted(solve(cons, "strong").elements) == sorted(brute_iso_stacks(S, S))


class TestWorkedIso:
    def test_four_isomorphisms(self):
        A, B = comparison_stacks()
        cons = [DigraphIso(a, b) for a, b in zip(A.entries, B.entries)]
        want = sorted(brute_iso_stacks(A, B))
        assert len(want) == 4
        assert pc("(1 2 3 5 6)") in want
        for mode in ALL_MODES:
            assert sorted(solve(cons, mode).elements) == want

    def test_equitable_collapses_node_count(self):
        A, B = comparison_stacks()
        cons = [DigraphIso(a, b) for a, b in zip(A.entries, B.entries)]
        nodes = {mode: solve(cons, mode).stats.nodes for mode in ALL_MODES}
        assert nodes["leon"] == nodes["orbital"] == 1236
        assert nodes["strong"] == nodes["full"] == 6


class TestCentralizer:
    def test_worked_centralizer(self):
        # centraliser of a 2-cycle times a 3-cycle in S6: order 2 * 3 = 6
        c = Centralizer(pc("(1 2)(3 6 5)"))
        out = solve([c], "strong")
        assert len(out.elements) == 6
        assert out.stats.nodes == 14
        assert set(out.elements) == set(brute_solve([c], 6))
        for g in out.elements:
            assert c.src.conj(g) == c.src

    def test_centralizer_modes_agree(self):
        c = Centralizer(pc("(1 2)(3 6 5)"))
        want = sorted(brute_solve([c], 6))
        for mode in ALL_MODES:
            assert sorted(solve([c], mode).elements) == want


class TestSetStabilisers:
    def test_list_of_sets_worked(self):
        c = ListOfSetsStab(6, [{0, 2, 5}, {2, 4}, {1, 3}, {1, 2, 3}])
        out = solve([c], "strong")
        assert set(out.elements) == {pc("()"), pc("(1 6)"), pc("(2 4)"), pc("(1 6)(2 4)")}
        assert out.stats.nodes == 6

    def test_empty_set_stab_is_symmetric_group(self):
        res = search_bsgs([SetStab(4, set())])
        assert res.order == 24
        assert all(res.chain.contains(g) for g in brute_solve([SetStab(4, set())], 4))

    def test_set_transport_worked(self):
        c = SetTransport(6, {0, 1}, {4, 5})
        for mode in ALL_MODES:
            out = solve([c], mode)
            assert sorted(out.elements) == sorted(brute_solve([c], 6))
            assert len(out.elements) == 48  # 2! * 4! ways on each side of the split

    def test_set_of_sets_transport_satisfiable(self):
        c = SetOfSetsTransport(5, [{0}, {0, 1, 2}, {1, 3}], [{0}, {0, 1, 2}, {2, 4}])
        out = solve([c], "strong")
        assert out.elements == [pc("(2 3)(4 5)", 5)]
        assert out.stats.nodes == 0

    def test_set_of_sets_transport_empty_without_splitting(self):
        # triangle of pair-sets vs a family with a disjoint pair
        c = SetOfSetsTransport(5, [{0, 1}, {1, 2}, {2, 0}], [{0, 1}, {1, 2}, {3, 4}])
        for mode in ALL_MODES:
            out = solve([c], mode)
            assert out.elements == []
            assert out.stats.nodes == 0
        assert brute_solve([c], 5) == []


class TestIntersections:
    def test_group_intersection(self):
        a = GroupByGens(6, [pc("(1 2 3 4 5 6)")])
        b = GroupByGens(6, [pc("(1 2)"), pc("(1 2 3)")])
        want = sorted(brute_solve([a, b], 6))
        for mode in ALL_MODES:
            assert sorted(solve([a, b], mode).elements) == want

    def test_stab_within_group(self):
        cons = [GroupByGens(8, dihedral_gens(8)), SetStab(8, {0, 1})]
        want = sorted(brute_solve(cons, 8))
        out = solve(cons, "strong")
        assert sorted(out.elements) == want
        res = search_bsgs(cons)
        assert res.order == len(want)
        assert all(res.chain.contains(g) for g in want)

    def test_constraints_must_share_degree(self):
        with pytest.raises(ValueError):
            search_all([SetStab(5, {0}), SetStab(6, {0})])

    def test_no_constraints_rejected(self):
        with pytest.raises(ValueError):
            search_all([])


class TestModeAgreement:
    def test_random_problems_match_oracle(self):
        rng = SplitMix64(2024)
        for trial in range(12):
            degree = 5 + rng.randbelow(2)
            pts = {rng.randbelow(degree) for _ in range(2)}
            g = Perm(rng.perm_images(degree))
            cons = [SetStab(degree, pts), Centralizer(g)]
            want = sorted(brute_solve(cons, degree))
            for mode in ALL_MODES:
                got = sorted(solve(cons, mode).elements)
                assert got == want, "trial %d mode %s" % (trial, mode)


class TestSearchSingle:
    def test_single_returns_one_member(self):
        c = SetTransport(6, {0, 1}, {4, 5})
        out = search_single([c])
        assert len(out.elements) == 1
        g = out.first
        assert g.on_set({0, 1}) == {4, 5}

    def test_single_on_empty_problem(self):
        c = SetOfSetsTransport(5, [{0, 1}, {1, 2}, {2, 0}], [{0, 1}, {1, 2}, {3, 4}])
        out = search_single([c])
        assert out.elements == [] and out.first is None

    def test_single_never_needs_more_nodes(self):
        c = SetStab(7, {1, 4, 5})
        all_stats = search_all([c], SearchConfig.from_mode("strong")).stats
        one_stats = search_single([c], SearchConfig.from_mode("strong")).stats
        assert one_stats.nodes <= all_stats.nodes


class TestBsgs:
    def test_chain_matches_search_all(self):
        cons = [DigraphAuto(e) for e in running_stack().entries]
        res = search_bsgs(cons)
        members = search_all(cons).elements
        assert res.order == len(members) == 2
        assert all(res.chain.contains(g) for g in members)
        assert all(g in members for g in res.strong_gens)

    def test_base_points_distinguished(self):
        res = search_bsgs([SetStab(6, {0, 3})])
        assert res.order == 48
        assert len(res.base) == len(res.base_points)
        chain = res.chain
        assert sorted(chain.elements(cap=100), key=lambda p: p.images) \
            == sorted(brute_solve([SetStab(6, {0, 3})], 6), key=lambda p: p.images)

    def test_bsgs_modes_agree_on_order(self):
        cons = [GroupByGens(8, dihedral_gens(8)), SetStab(8, {0, 4})]
        orders = {m: search_bsgs(cons, SearchConfig.from_mode(m)).order for m in ALL_MODES}
        assert set(orders.values()) == {len(brute_solve(cons, 8))}


class TestNodeLimit:
    def test_limit_raises_with_stats(self):
        A, B = comparison_stacks()
        cons = [DigraphIso(a, b) for a, b in zip(A.entries, B.entries)]
        with pytest.raises(SearchLimitExceeded) as ei:
            solve(cons, "leon", node_limit=10)
        assert ei.value.stats.nodes >= 10

    def test_generous_limit_is_harmless(self):
        cons = [DigraphAuto(e) for e in running_stack().entries]
        out = solve(cons, "strong", node_limit=10 ** 6)
        assert len(out.elements) == 2


class TestRefineAndSplit:
    def test_refine_pair_keeps_solutions(self):
        A, B = comparison_stacks()
        cons = [DigraphIso(a, b) for a, b in zip(A.entries, B.entries)]
        S2, T2 = refine_pair(Stack(6, ()), Stack(6, ()), cons)
        sols = brute_iso_stacks(A, B)
        refined = set(brute_iso_stacks(S2, T2))
        assert len(sols) == 4
        assert all(g in refined for g in sols)

    def test_split_branches_partition_isomorphisms(self):
        A, B = comparison_stacks()
        parts = split_stacks(A, B, SearchConfig.from_mode("strong"))
        left, branches = parts[0], parts[1:]
        assert len(branches) >= 2
        base = set(brute_iso_stacks(A, B))
        seen: set = set()
        for br in branches:
            chunk = set(brute_iso_stacks(A.append(left), B.append(br)))
            assert chunk <= base
            assert not (chunk & seen)
            seen |= chunk
        assert seen == base

    def test_split_first_entry_is_shared(self):
        # the left extension may not depend on the right-hand stack
        A, B = comparison_stacks()
        cfg = SearchConfig.from_mode("strong")
        lefts = {split_stacks(A, other, cfg)[0].key() for other in (A, B)}
        assert len(lefts) == 1

    def test_split_branch_count_matches_orbit(self):
        S = running_stack()
        parts = split_stacks(S, S, SearchConfig.from_mode("leon"))
        # branches biject with the chosen orbit of the approximating group
        assert len(parts) - 1 >= 2

    def test_split_rejects_settled_pairs(self):
        A, B = comparison_stacks()
        # a pair with no isomorphisms at all: compare against a relabelled copy
        C = Stack(6, [A.entries[1], A.entries[0]])
        with pytest.raises(ValueError):
            split_stacks(A, C, SearchConfig.from_mode("full"))
