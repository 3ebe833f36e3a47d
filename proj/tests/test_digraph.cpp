#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "bbd/digraph.hpp"
#include "bbd/generate.hpp"

using namespace bbd;

namespace {

// Independent degree oracle: count incidences in the plain arc list.
int list_out_degree(const BipartiteDigraph& d, VertexRef v) {
    int n = 0;
    for (const Arc& e : d.arcs()) n += e.tail == v;
    return n;
}

int list_in_degree(const BipartiteDigraph& d, VertexRef v) {
    int n = 0;
    for (const Arc& e : d.arcs()) n += e.head == v;
    return n;
}

std::vector<VertexRef> all_vertices(int a) {
    std::vector<VertexRef> vs;
    for (int i = 0; i < a; ++i) vs.push_back(vx(i));
    for (int i = 0; i < a; ++i) vs.push_back(vy(i));
    return vs;
}

}  // namespace

TEST_CASE("degrees on the boundary digraphs") {
    BipartiteDigraph cyc = directed_cycle(3);
    for (VertexRef v : all_vertices(3)) {
        CHECK(cyc.out_degree(v) == 1);
        CHECK(cyc.in_degree(v) == 1);
        CHECK(cyc.degree(v) == 2);
    }

    BipartiteDigraph k33 = complete_bipartite(3);
    for (VertexRef v : all_vertices(3)) {
        CHECK(k33.out_degree(v) == 3);
        CHECK(k33.in_degree(v) == 3);
        CHECK(k33.degree(v) == 6);
    }

    // a=2 with arcs x0->y0, x0->y1 only.
    std::vector<Arc> arcs{{vx(0), vy(0)}, {vx(0), vy(1)}};
    BipartiteDigraph d = BipartiteDigraph::from_arcs(2, arcs);
    CHECK(d.out_degree(vx(0)) == 2);
    CHECK(d.in_degree(vx(0)) == 0);
    CHECK(d.degree(vx(0)) == 2);
}

TEST_CASE("degree queries match the arc-list oracle, exhaustive a=2") {
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        for (VertexRef v : all_vertices(2)) {
            CHECK(d.out_degree(v) == list_out_degree(d, v));
            CHECK(d.in_degree(v) == list_in_degree(d, v));
            VertexSet single;
            single.add(v);
            CHECK(d.out_degree(v) == d.neighborhood(single, Direction::Out).size());
            CHECK(d.in_degree(v) == d.neighborhood(single, Direction::In).size());
        }
    }
}

TEST_CASE("restricted degrees split the total") {
    BipartiteDigraph k33 = complete_bipartite(3);
    VertexSet e;
    e.add(vy(0));
    e.add(vy(1));
    RestrictedDegrees r = k33.restricted_degrees(vx(0), e);
    CHECK(r.total_in_set == 4);
    CHECK(r.total_in_complement == 2);

    RestrictedDegrees full = k33.restricted_degrees(vx(0), VertexSet::all(3));
    CHECK(full.total_in_set == k33.degree(vx(0)));
    CHECK(full.total_in_complement == 0);

    RestrictedDegrees none = k33.restricted_degrees(vx(0), VertexSet{});
    CHECK(none.total_in_set == 0);
    CHECK(none.total_in_complement == k33.degree(vx(0)));

    // Split property on every digraph at a=2, every vertex, every 16-subset
    // pattern of one side plus a fixed pattern of the other.
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        for (VertexRef v : all_vertices(2)) {
            for (std::uint64_t xb = 0; xb < 4; ++xb)
                for (std::uint64_t yb = 0; yb < 4; ++yb) {
                    VertexSet s{xb, yb};
                    RestrictedDegrees rd = d.restricted_degrees(v, s);
                    CHECK(rd.out_in_set + rd.out_in_complement == d.out_degree(v));
                    CHECK(rd.in_in_set + rd.in_in_complement == d.in_degree(v));
                    CHECK(rd.total_in_set + rd.total_in_complement == d.degree(v));
                }
        }
    }
}

TEST_CASE("neighborhoods") {
    BipartiteDigraph cyc = directed_cycle(2);  // y0->x0->y1->x1->y0
    VertexSet s;
    s.add(vy(0));
    VertexSet expect;
    expect.add(vx(0));
    CHECK(cyc.neighborhood(s, Direction::Out) == expect);

    BipartiteDigraph k22 = complete_bipartite(2);
    VertexSet sx;
    sx.add(vx(0));
    VertexSet ys;
    ys.add(vy(0));
    ys.add(vy(1));
    CHECK(k22.neighborhood(sx, Direction::Out) == ys);

    CHECK(k22.neighborhood(VertexSet{}, Direction::Out).empty());
    CHECK(k22.neighborhood(VertexSet{}, Direction::In).empty());
}

TEST_CASE("arcs_between") {
    BipartiteDigraph k22 = complete_bipartite(2);
    CHECK(k22.arcs_between(VertexSet{3, 0}, VertexSet{0, 3}) == 8);

    BipartiteDigraph cyc = directed_cycle(2);
    VertexSet s{1, 1};  // {x0, y0}
    VertexSet t{2, 2};  // {x1, y1}
    CHECK(cyc.arcs_between(s, t) == 2);

    CHECK(cyc.arcs_between(VertexSet{1, 0}, VertexSet{2, 0}) == 0);  // no intra-side arcs

    // Symmetry plus brute-force oracle over the arc list, exhaustive a=2.
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        for (std::uint64_t sb = 0; sb < 16; ++sb)
            for (std::uint64_t tb = 0; tb < 16; ++tb) {
                VertexSet vs{sb & 3, sb >> 2};
                VertexSet vt{tb & 3, tb >> 2};
                int brute = 0;
                for (const Arc& e : d.arcs()) {
                    brute += vs.contains(e.tail) && vt.contains(e.head);
                    brute += vt.contains(e.tail) && vs.contains(e.head);
                }
                CHECK(d.arcs_between(vs, vt) == brute);
                CHECK(d.arcs_between(vs, vt) == d.arcs_between(vt, vs));
            }
    }
}

TEST_CASE("reverse") {
    BipartiteDigraph k33 = complete_bipartite(3);
    CHECK(k33.reverse() == k33);

    BipartiteDigraph cyc = directed_cycle(2);
    BipartiteDigraph rev = cyc.reverse();
    CHECK(rev.has_arc(vx(0), vy(0)));
    CHECK(rev.has_arc(vy(1), vx(0)));
    CHECK_FALSE(rev.has_arc(vy(0), vx(0)));
    CHECK(rev.reverse() == cyc);

    // Random digraphs: in/out swap per vertex, recomputed from the arc list.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BipartiteDigraph d = random_digraph(3, {1, 2}, seed);
        BipartiteDigraph r = d.reverse();
        CHECK(r.reverse() == d);
        for (VertexRef v : all_vertices(3)) {
            CHECK(list_out_degree(r, v) == list_in_degree(d, v));
            CHECK(list_in_degree(r, v) == list_out_degree(d, v));
            CHECK(r.degree(v) == d.degree(v));
        }
    }
}

TEST_CASE("parse and serialize") {
    BipartiteDigraph d = BipartiteDigraph::parse("bbd 1\na 2\nxy 0 0\nyx 0 0\nend\n");
    CHECK(d.a() == 2);
    CHECK(d.arc_count() == 2);
    CHECK(d.has_arc(vx(0), vy(0)));
    CHECK(d.has_arc(vy(0), vx(0)));
    CHECK(d.degree(vx(1)) == 0);
    CHECK(d.degree(vy(1)) == 0);

    std::string k22 = complete_bipartite(2).serialize();
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < k22.size()) {
        auto nl = k22.find('\n', pos);
        lines.push_back(k22.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "bbd 1");
    CHECK(lines[1] == "a 2");
    CHECK(lines[10] == "end");
    std::vector<std::string> arc_lines(lines.begin() + 2, lines.begin() + 10);
    CHECK(std::is_sorted(arc_lines.begin(), arc_lines.end()));

    CHECK_THROWS_AS(BipartiteDigraph::parse("bbd 1\na 2\nxy 0 5\nend\n"), parse_error);
    CHECK_THROWS_AS(BipartiteDigraph::parse("bbd 2\na 2\nend\n"), parse_error);
    CHECK_THROWS_AS(BipartiteDigraph::parse("bbd 1\na 2\nxy 0 0\nxy 0 0\nend\n"),
                    parse_error);
    CHECK_THROWS_AS(BipartiteDigraph::parse("bbd 1\na 2\nxx 0 0\nend\n"), parse_error);
    CHECK_THROWS_AS(BipartiteDigraph::parse("bbd 1\na 2\nxy 0 0\n"), parse_error);

    // Line numbers in errors.
    try {
        BipartiteDigraph::parse("bbd 1\na 2\nxy 0 5\nend\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("round trip, exhaustive a=2, both formats") {
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        BipartiteDigraph d = digraph_from_index(2, idx);
        CHECK(BipartiteDigraph::parse(d.serialize()) == d);
        CHECK(BipartiteDigraph::parse(d.serialize_compact()) == d);
        CHECK(index_of_digraph(d) == idx);
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(BipartiteDigraph(2, {1, 2, 4}, {0, 0}), input_error);
    CHECK_THROWS_AS(BipartiteDigraph(2, {4, 0}, {0, 0}), input_error);  // bit >= a
    std::vector<Arc> bad{{vx(0), vx(1)}};
    CHECK_THROWS_AS(BipartiteDigraph::from_arcs(2, bad), input_error);
}
