#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bbd/conditions.hpp"
#include "bbd/generate.hpp"

using namespace bbd;

namespace {

std::vector<VertexRef> all_vertices(int a) {
    std::vector<VertexRef> vs;
    for (int i = 0; i < a; ++i) vs.push_back(vx(i));
    for (int i = 0; i < a; ++i) vs.push_back(vy(i));
    return vs;
}

// Triple-loop oracle over (pair, witness) with no bit tricks.
std::set<Pair> brute_dominating(const BipartiteDigraph& d) {
    std::set<Pair> out;
    auto vs = all_vertices(d.a());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (VertexRef w : vs)
                if (d.has_arc(vs[i], w) && d.has_arc(vs[j], w)) {
                    out.insert(Pair::of(vs[i], vs[j]));
                    break;
                }
    return out;
}

std::set<Pair> as_set(const std::vector<Pair>& ps) { return {ps.begin(), ps.end()}; }

}  // namespace

TEST_CASE("dominating pairs") {
    CHECK(dominating_pairs(directed_cycle(3)).empty());

    auto k22 = dominating_pairs(complete_bipartite(2));
    CHECK(as_set(k22) ==
          std::set<Pair>{Pair::of(vx(0), vx(1)), Pair::of(vy(0), vy(1))});

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        BipartiteDigraph d = random_digraph(3, {1, 2}, seed);
        CHECK(as_set(dominating_pairs(d)) == brute_dominating(d));
    }
}

TEST_CASE("dominated pairs are dominating pairs of the reverse") {
    CHECK(dominated_pairs(directed_cycle(2)).empty());
    auto k22 = dominated_pairs(complete_bipartite(2));
    CHECK(k22.size() == 2);

    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        CHECK(as_set(dominated_pairs(d)) == as_set(dominating_pairs(d.reverse())));
    }
    for (int a : {3, 4, 5})
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            BipartiteDigraph d = random_digraph(a, {1, 2}, seed);
            CHECK(as_set(dominated_pairs(d)) == as_set(dominating_pairs(d.reverse())));
        }
}

TEST_CASE("pair families are structurally constrained") {
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        for (const Pair& p : dominating_pairs(d)) CHECK(p.u.side == p.v.side);
        for (const Pair& p : dominated_pairs(d)) CHECK(p.u.side == p.v.side);
        for (const Pair& p : non_adjacent_pairs(d)) {
            CHECK_FALSE(d.has_arc(p.u, p.v));
            CHECK_FALSE(d.has_arc(p.v, p.u));
        }
    }
}

TEST_CASE("non-adjacent pairs") {
    // K*_{a,a}: exactly the same-side pairs.
    CHECK(non_adjacent_pairs(complete_bipartite(3)).size() == 6);
    for (const Pair& p : non_adjacent_pairs(complete_bipartite(3)))
        CHECK(p.u.side == p.v.side);

    CHECK(non_adjacent_pairs(complete_bipartite(1)).empty());

    // a=2, only the 2-cycle x0<->y0: all pairs but {x0,y0}.
    std::vector<Arc> arcs{{vx(0), vy(0)}, {vy(0), vx(0)}};
    BipartiteDigraph d = BipartiteDigraph::from_arcs(2, arcs);
    auto nap = non_adjacent_pairs(d);
    CHECK(nap.size() == 5);
    CHECK(as_set(nap).count(Pair::of(vx(0), vy(0))) == 0);
}

TEST_CASE("condition evaluation") {
    ConditionVerdict v = check_condition(directed_cycle(3), {ConditionTag::Dk, 1});
    CHECK(v.holds);
    CHECK(v.vacuous);

    v = check_condition(complete_bipartite(3), {ConditionTag::Dk, 1});
    CHECK(v.holds);
    CHECK_FALSE(v.vacuous);

    // a=4, k=2: dominating pair with degrees (5, 8) fails Bk(2) since
    // 5 < a+k = 6. Build x0 with degree 5, x1 with degree 8, sharing
    // out-neighbour y0.
    BipartiteDigraph d = BipartiteDigraph::empty(4);
    for (int j = 0; j < 4; ++j) {
        d = d.with_arc({vx(1), vy(j)});
        d = d.with_arc({vy(j), vx(1)});
    }
    d = d.with_arc({vx(0), vy(0)});
    d = d.with_arc({vx(0), vy(1)});
    d = d.with_arc({vx(0), vy(2)});
    d = d.with_arc({vy(0), vx(0)});
    d = d.with_arc({vy(1), vx(0)});
    REQUIRE(d.degree(vx(0)) == 5);
    REQUIRE(d.degree(vx(1)) == 8);
    v = check_condition(d, {ConditionTag::Bk, 2});
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == Pair::of(vx(0), vx(1)));

    // A failing verdict's witness must independently re-fail the inequality.
    int du = d.degree(v.witness->u), dv = d.degree(v.witness->v);
    bool refail = (du >= 2 * 4 - 2 && dv >= 4 + 2) || (du >= 4 + 2 && dv >= 2 * 4 - 2);
    CHECK_FALSE(refail);
}

TEST_CASE("Dk monotone in k; Bk implies D0 over dominating pairs") {
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        for (int k = 1; k <= 2; ++k)
            if (check_condition(d, {ConditionTag::Dk, k}).holds)
                CHECK(check_condition(d, {ConditionTag::Dk, k - 1}).holds);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        BipartiteDigraph d = biased_highdegree_digraph(4, 6, seed);
        if (check_condition(d, {ConditionTag::Bk, 2}).holds)
            CHECK(check_condition(d, {ConditionTag::Dk, 0}).holds);
    }
}

TEST_CASE("out-of-theorem-range k is flagged, not rejected") {
    ConditionVerdict v = check_condition(complete_bipartite(3), {ConditionTag::Bk, 3});
    CHECK(v.outside_theorem_range);
    v = check_condition(complete_bipartite(4), {ConditionTag::Bk, 2});
    CHECK_FALSE(v.outside_theorem_range);
}

TEST_CASE("valid k range") {
    CHECK(valid_k_range(3) == std::vector<int>{});
    CHECK(valid_k_range(4) == std::vector<int>{2});
    CHECK(valid_k_range(8) == std::vector<int>{3, 4});
    CHECK(valid_k_range(2) == std::vector<int>{});
    CHECK(valid_k_range(5) == std::vector<int>{2});
    CHECK(valid_k_range(6) == std::vector<int>{2, 3});
    // Smaller lower fraction admits smaller k, still > 1.
    CHECK(valid_k_range(8, {1, 8}) == std::vector<int>{2, 3, 4});
    CHECK(valid_k_range(3, {1, 8}) == std::vector<int>{});
}

TEST_CASE("condition names round-trip") {
    for (ConditionTag tag :
         {ConditionTag::NonAdjacent3a, ConditionTag::DomOrDominated3a, ConditionTag::Dk,
          ConditionTag::Bk, ConditionTag::DominatedDk, ConditionTag::DominatedBk,
          ConditionTag::Thomassen2n}) {
        ConditionKind kind{tag, 1};
        auto back = condition_from_name(condition_name(kind), 1);
        REQUIRE(back.has_value());
        CHECK(back->tag == tag);
    }
    CHECK(condition_name({ConditionTag::Dk, 1}) == "dk");
    CHECK(condition_name({ConditionTag::Bk, 2}) == "bk");
    CHECK(condition_name({ConditionTag::NonAdjacent3a, 0}) == "aay-3a");
    CHECK(condition_name({ConditionTag::DomOrDominated3a, 0}) == "domdom-3a");
    CHECK(condition_name({ConditionTag::DominatedDk, 1}) == "dominated-dk");
    CHECK(condition_name({ConditionTag::DominatedBk, 2}) == "dominated-bk");
    CHECK(condition_name({ConditionTag::Thomassen2n, 0}) == "thomassen-2n");
    CHECK_FALSE(condition_from_name("nonsense", 0).has_value());
}
