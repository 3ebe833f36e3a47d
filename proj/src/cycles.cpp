#include "bbd/cycles.hpp"

#include <algorithm>
#include <bit>

namespace bbd {

bool is_strongly_connected(const BipartiteDigraph& d) {
    return is_strongly_connected(as_general(d));
}

Cycle HamiltonCycle::as_cycle() const {
    Cycle c{seq};
    c.canonicalize();
    return c;
}

bool validate_hamilton_cycle(const BipartiteDigraph& d, const HamiltonCycle& c) {
    if (c.length() != d.order()) return false;
    if (c.seq.empty() || c.seq[0].side != Side::Y) return false;
    return validate_cycle(d, Cycle{c.seq});
}

void canonicalize_hamilton(HamiltonCycle& c) {
    // Rotate (by an even offset, preserving the Y,X,... pattern) so the
    // cycle starts at the smallest Y vertex, which is y_0 on a Hamilton cycle.
    int pos = 0;
    for (int i = 0; i < c.length(); i += 2)
        if (c.seq[i].index < c.seq[pos].index) pos = i;
    std::rotate(c.seq.begin(), c.seq.begin() + pos, c.seq.end());
}

namespace {

// Perfect matching feasibility on an ad-hoc bit adjacency (Hall check).
bool perfect_matching_feasible(const std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> match_tgt(64, -1);
    auto augment = [&](auto&& self, int s, std::uint64_t& visited) -> bool {
        std::uint64_t cand = rows[s] & ~visited;
        while (cand) {
            int t = std::countr_zero(cand);
            cand &= cand - 1;
            visited |= 1ull << t;
            if (match_tgt[t] < 0 || self(self, match_tgt[t], visited)) {
                match_tgt[t] = s;
                return true;
            }
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        std::uint64_t visited = 0;
        if (!augment(augment, s, visited)) return false;
    }
    return true;
}

struct HamiltonSearch {
    const BipartiteDigraph& d;
    int a;
    std::uint64_t full;
    std::uint64_t used_x = 0, used_y = 1;  // y_0 is the fixed start
    std::vector<VertexRef> seq;
    int hall_period;

    explicit HamiltonSearch(const BipartiteDigraph& dg)
        : d(dg), a(dg.a()), full(dg.row_mask()), hall_period(std::max(1, dg.a() / 2)) {
        seq.reserve(2 * a);
        seq.push_back(vy(0));
    }

    // Every unvisited vertex must keep an available in-arc and out-arc;
    // successors may be unvisited vertices or the start y_0, predecessors
    // unvisited vertices or the current endpoint.
    bool remaining_degrees_ok(VertexRef cur) const {
        std::uint64_t free_x = ~used_x & full;
        std::uint64_t free_y = ~used_y & full;
        std::uint64_t cur_x = cur.side == Side::X ? (1ull << cur.index) : 0;
        std::uint64_t cur_y = cur.side == Side::Y ? (1ull << cur.index) : 0;
        for (int i = 0; i < a; ++i) {
            if ((free_x >> i) & 1u) {
                if (!(d.xy_row(i) & (free_y | 1ull))) return false;          // out
                if (!(d.yx_col(i) & (free_y | cur_y))) return false;         // in
            }
            if ((free_y >> i) & 1u) {
                if (!(d.yx_row(i) & free_x)) return false;
                if (!(d.xy_col(i) & (free_x | cur_x))) return false;
            }
        }
        return true;
    }

    // Hall check on the bipartite reduction: the rest of the cycle assigns
    // each x in free_X (plus the current X endpoint) a distinct out-target
    // in free_Y (plus the closing y_0).
    bool hall_ok(VertexRef cur) const {
        std::uint64_t free_y = ~used_y & full;
        std::uint64_t targets = free_y | 1ull;
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < a; ++i)
            if (!((used_x >> i) & 1u)) rows.push_back(d.xy_row(i) & targets);
        if (cur.side == Side::X) rows.push_back(d.xy_row(cur.index) & targets);
        return perfect_matching_feasible(rows);
    }

    bool extend_from_y(int y) {
        std::uint64_t cand = d.yx_row(y) & ~used_x;
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            used_x |= 1ull << x;
            seq.push_back(vx(x));
            if (used_x == full && used_y == full) {
                if (d.arc_xy(x, 0)) return true;
            } else if (remaining_degrees_ok(vx(x)) &&
                       (static_cast<int>(seq.size()) % hall_period != 0 || hall_ok(vx(x))) &&
                       extend_from_x(x)) {
                return true;
            }
            seq.pop_back();
            used_x &= ~(1ull << x);
        }
        return false;
    }

    bool extend_from_x(int x) {
        std::uint64_t cand = d.xy_row(x) & ~used_y;
        while (cand) {
            int y = std::countr_zero(cand);
            cand &= cand - 1;
            used_y |= 1ull << y;
            seq.push_back(vy(y));
            if (remaining_degrees_ok(vy(y)) && extend_from_y(y)) return true;
            seq.pop_back();
            used_y &= ~(1ull << y);
        }
        return false;
    }
};

}  // namespace

std::optional<HamiltonCycle> find_hamilton_cycle(const BipartiteDigraph& d) {
    // A Hamilton cycle needs a cycle factor, so a Hall violator in either
    // direction rules it out up front.
    if (hall_violator(d, MatchDirection::XtoY) || hall_violator(d, MatchDirection::YtoX))
        return std::nullopt;
    HamiltonSearch search(d);
    if (!search.extend_from_y(0)) return std::nullopt;
    HamiltonCycle c{std::move(search.seq)};
    canonicalize_hamilton(c);
    return c;
}

namespace {

// Alternating paths from x_start using only X vertices with index > start,
// so the cycle is found from its lexicographically smallest vertex.
bool bip_cycle_dfs(const BipartiteDigraph& d, int start, bool at_x, int cur,
                   int remaining, std::uint64_t used_x, std::uint64_t used_y,
                   std::vector<VertexRef>& path) {
    if (remaining == 0) return !at_x && d.arc_yx(cur, start);
    if (at_x) {
        std::uint64_t cand = d.xy_row(cur) & ~used_y;
        while (cand) {
            int y = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(vy(y));
            if (bip_cycle_dfs(d, start, false, y, remaining - 1, used_x,
                              used_y | (1ull << y), path))
                return true;
            path.pop_back();
        }
    } else {
        std::uint64_t above = ~((1ull << (start + 1)) - 1);
        std::uint64_t cand = d.yx_row(cur) & ~used_x & above;
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(vx(x));
            if (bip_cycle_dfs(d, start, true, x, remaining - 1,
                              used_x | (1ull << x), used_y, path))
                return true;
            path.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<Cycle> find_cycle_of_length(const BipartiteDigraph& d, int len) {
    if (len < 2 || len > d.order() || len % 2 != 0)
        throw input_error("cycle length must be even and in [2, 2a]");
    for (int start = 0; start <= d.a() - len / 2; ++start) {
        std::vector<VertexRef> path{vx(start)};
        if (bip_cycle_dfs(d, start, true, start, len - 1, 1ull << start, 0, path))
            return Cycle{std::move(path)};
    }
    return std::nullopt;
}

BipancyclicVerdict is_bipancyclic(const BipartiteDigraph& d) {
    BipancyclicVerdict v;
    for (int len = 2; len <= d.order(); len += 2) {
        auto c = find_cycle_of_length(d, len);
        if (!c) {
            v.holds = false;
            v.missing_length = len;
            v.witnesses.clear();
            return v;
        }
        v.witnesses.push_back(std::move(*c));
    }
    return v;
}

HamiltonCycle reroute_hamilton(const BipartiteDigraph& d, const HamiltonCycle& c,
                               int l, int m) {
    const int a = d.a();
    if (!validate_hamilton_cycle(d, c)) throw input_error("not a Hamilton cycle of D");
    if (!(2 <= l && l < m && m <= a)) throw input_error("need 2 <= l < m <= a");
    const int l0 = l - 1, m0 = m - 1;

    auto need = [&](VertexRef u, VertexRef v) {
        if (!d.has_arc(u, v))
            throw reroute_inapplicable("missing arc " + to_string(u) + "->" + to_string(v));
    };
    VertexRef y1 = vy(c.y_label(0)), x1 = vx(c.x_label(0));
    VertexRef yl = vy(c.y_label(l0)), xl = vx(c.x_label(l0));
    VertexRef ym = vy(c.y_label(m0)), xm = vx(c.x_label(m0));
    need(y1, xl);
    need(yl, xm);
    need(ym, x1);

    HamiltonCycle out;
    out.seq.reserve(2 * a);
    out.seq.push_back(y1);
    out.seq.push_back(xl);
    for (int p = l0 + 1; p <= m0; ++p) {
        out.seq.push_back(vy(c.y_label(p)));
        if (p < m0) out.seq.push_back(vx(c.x_label(p)));
    }
    out.seq.push_back(x1);
    for (int p = 1; p <= l0; ++p) {
        out.seq.push_back(vy(c.y_label(p)));
        if (p < l0) out.seq.push_back(vx(c.x_label(p)));
    }
    out.seq.push_back(xm);
    for (int p = m0 + 1; p < a; ++p) {
        out.seq.push_back(vy(c.y_label(p)));
        out.seq.push_back(vx(c.x_label(p)));
    }
    canonicalize_hamilton(out);
    if (!validate_hamilton_cycle(d, out))
        throw std::logic_error("reroute produced an invalid Hamilton cycle");
    return out;
}

ContractionLabeling contraction_labeling(const HamiltonCycle& c) {
    ContractionLabeling lab;
    const int a = c.length() / 2;
    for (int i = 0; i < a; ++i) {
        lab.y_of.push_back(c.y_label(i));
        lab.x_of.push_back(c.x_label(i));
    }
    return lab;
}

GeneralDigraph contraction(const BipartiteDigraph& d, const HamiltonCycle& c) {
    if (!validate_hamilton_cycle(d, c))
        throw input_error("labeling mismatch: not a Hamilton cycle of D");
    ContractionLabeling lab = contraction_labeling(c);
    const int a = d.a();
    std::vector<std::uint64_t> rows(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (i != j && d.arc_xy(lab.x_of[i], lab.y_of[j])) rows[i] |= 1ull << j;
    return GeneralDigraph(a, std::move(rows));
}

Cycle lift_cycle(const BipartiteDigraph& d, const std::vector<int>& g_cycle,
                 const ContractionLabeling& labeling) {
    Cycle out;
    for (int i : g_cycle) {
        out.vertices.push_back(vy(labeling.y_of[i]));
        out.vertices.push_back(vx(labeling.x_of[i]));
    }
    if (!validate_cycle(d, out))
        throw std::logic_error("lifted cycle fails arc validation (contraction bug)");
    out.canonicalize();
    return out;
}

}  // namespace bbd
