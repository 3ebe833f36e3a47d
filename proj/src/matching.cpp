#include "bbd/matching.hpp"

#include <algorithm>
#include <bit>

#include "bbd/conditions.hpp"
#include "bbd/cycles.hpp"

namespace bbd {

void Cycle::canonicalize() {
    if (vertices.empty()) return;
    auto it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), it, vertices.end());
}

bool validate_cycle(const BipartiteDigraph& d, const Cycle& c) {
    const int m = c.length();
    if (m < 2 || m % 2 != 0) return false;
    std::vector<VertexRef> seen = c.vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (int i = 0; i < m; ++i) {
        const VertexRef& u = c.vertices[i];
        const VertexRef& v = c.vertices[(i + 1) % m];
        if (u.side == v.side) return false;
        if (!d.has_arc(u, v)) return false;
    }
    return true;
}

std::string cycle_to_string(const Cycle& c) {
    std::string out = "cycle:";
    for (VertexRef v : c.vertices) {
        out += ' ';
        out += to_string(v);
    }
    return out;
}

void CycleFactor::sort_canonical() {
    for (Cycle& c : cycles) c.canonicalize();
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
}

bool validate_cycle_factor(const BipartiteDigraph& d, const CycleFactor& f) {
    VertexSet covered;
    int total = 0;
    for (const Cycle& c : f.cycles) {
        if (!validate_cycle(d, c)) return false;
        for (VertexRef v : c.vertices) {
            if (covered.contains(v)) return false;
            covered.add(v);
        }
        total += c.length();
    }
    return total == d.order() && covered == VertexSet::all(d.a());
}

namespace {

std::uint64_t source_row(const BipartiteDigraph& d, MatchDirection dir, int i) {
    return dir == MatchDirection::XtoY ? d.xy_row(i) : d.yx_row(i);
}

// Kuhn's algorithm; target order is increasing index, so the result is
// deterministic (identity matching on complete digraphs).
struct Kuhn {
    const BipartiteDigraph& d;
    MatchDirection dir;
    std::vector<int> match_src;  // source -> target
    std::vector<int> match_tgt;  // target -> source

    explicit Kuhn(const BipartiteDigraph& dg, MatchDirection di)
        : d(dg), dir(di), match_src(dg.a(), -1), match_tgt(dg.a(), -1) {}

    bool try_augment(int src, std::uint64_t& visited_tgt) {
        // Take the smallest free target first (so the complete digraph gets
        // the identity matching); only then reroute matched ones.
        std::uint64_t row = source_row(d, dir, src) & ~visited_tgt;
        for (std::uint64_t free = row; free;) {
            int t = std::countr_zero(free);
            free &= free - 1;
            if (match_tgt[t] < 0) {
                visited_tgt |= 1ull << t;
                match_src[src] = t;
                match_tgt[t] = src;
                return true;
            }
        }
        while (row) {
            int t = std::countr_zero(row);
            row &= row - 1;
            if ((visited_tgt >> t) & 1u) continue;
            visited_tgt |= 1ull << t;
            if (try_augment(match_tgt[t], visited_tgt)) {
                match_src[src] = t;
                match_tgt[t] = src;
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        for (int s = 0; s < d.a(); ++s) {
            std::uint64_t visited = 0;
            if (try_augment(s, visited)) ++size;
        }
        return size;
    }
};

}  // namespace

MatchingOutcome perfect_matching(const BipartiteDigraph& d, MatchDirection dir) {
    Kuhn kuhn(d, dir);
    const int size = kuhn.run();
    if (size == d.a()) return {Matching{dir, std::move(kuhn.match_src)}, std::nullopt};

    // Build a Hall violator: sources reachable by alternating paths from an
    // unmatched source form S with |N+(S)| = |S| - 1.
    int u0 = 0;
    while (kuhn.match_src[u0] >= 0) ++u0;
    std::uint64_t s_bits = 1ull << u0, t_bits = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::uint64_t reach_t = 0;
        for (int s = 0; s < d.a(); ++s)
            if ((s_bits >> s) & 1u) reach_t |= source_row(d, dir, s);
        std::uint64_t new_t = reach_t & ~t_bits;
        while (new_t) {
            int t = std::countr_zero(new_t);
            new_t &= new_t - 1;
            t_bits |= 1ull << t;
            if (kuhn.match_tgt[t] >= 0 && !((s_bits >> kuhn.match_tgt[t]) & 1u)) {
                s_bits |= 1ull << kuhn.match_tgt[t];
                grew = true;
            }
        }
    }
    VertexSet violator;
    if (dir == MatchDirection::XtoY)
        violator.x_bits = s_bits;
    else
        violator.y_bits = s_bits;
    return {std::nullopt, violator};
}

std::optional<VertexSet> hall_violator(const BipartiteDigraph& d, MatchDirection dir) {
    return perfect_matching(d, dir).hall_violator;
}

namespace {

CycleFactor factor_from_successors(const BipartiteDigraph& d,
                                   const std::vector<int>& succ_x,
                                   const std::vector<int>& succ_y) {
    CycleFactor f;
    std::vector<bool> seen(d.a(), false);
    for (int start = 0; start < d.a(); ++start) {
        if (seen[start]) continue;
        Cycle c;
        int x = start;
        do {
            seen[x] = true;
            c.vertices.push_back(vx(x));
            int y = succ_x[x];
            c.vertices.push_back(vy(y));
            x = succ_y[y];
        } while (x != start);
        f.cycles.push_back(std::move(c));
    }
    f.sort_canonical();
    return f;
}

}  // namespace

FactorOutcome cycle_factor(const BipartiteDigraph& d) {
    MatchingOutcome fwd = perfect_matching(d, MatchDirection::XtoY);
    if (!fwd.matching)
        return {std::nullopt, fwd.hall_violator, MatchDirection::XtoY};
    MatchingOutcome bwd = perfect_matching(d, MatchDirection::YtoX);
    if (!bwd.matching)
        return {std::nullopt, bwd.hall_violator, MatchDirection::YtoX};
    return {factor_from_successors(d, fwd.matching->map, bwd.matching->map),
            std::nullopt, std::nullopt};
}

CycleFactor merge_two_cycle(const BipartiteDigraph& d, const CycleFactor& factor,
                            int c1_index, int cj_index, VertexRef x1, VertexRef y1,
                            VertexRef xp, VertexRef yp) {
    const int n = static_cast<int>(factor.cycles.size());
    if (c1_index < 0 || c1_index >= n || cj_index < 0 || cj_index >= n ||
        c1_index == cj_index)
        throw input_error("bad cycle indices");
    const Cycle& c1 = factor.cycles[c1_index];
    if (c1.length() != 2)
        throw merge_inapplicable("cycle at c1_index is not a 2-cycle");
    {
        std::vector<VertexRef> want{x1, y1}, have = c1.vertices;
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (want != have)
            throw merge_inapplicable("c1 is not the 2-cycle [" + to_string(x1) + "," +
                                     to_string(y1) + "]");
    }
    const Cycle& cj = factor.cycles[cj_index];
    int pos = -1;
    for (int i = 0; i < cj.length(); ++i) {
        if (cj.vertices[i] == xp && cj.vertices[(i + 1) % cj.length()] == yp) {
            pos = i;
            break;
        }
    }
    if (pos < 0)
        throw merge_inapplicable("arc " + to_string(xp) + "->" + to_string(yp) +
                                 " is not on cycle cj");
    if (!d.has_arc(xp, y1))
        throw merge_inapplicable("missing arc " + to_string(xp) + "->" + to_string(y1));
    if (!d.has_arc(x1, yp))
        throw merge_inapplicable("missing arc " + to_string(x1) + "->" + to_string(yp));

    Cycle merged;
    for (int i = 0; i <= pos; ++i) merged.vertices.push_back(cj.vertices[i]);
    merged.vertices.push_back(y1);
    merged.vertices.push_back(x1);
    for (int i = pos + 1; i < cj.length(); ++i) merged.vertices.push_back(cj.vertices[i]);

    CycleFactor out;
    for (int i = 0; i < n; ++i)
        if (i != c1_index && i != cj_index) out.cycles.push_back(factor.cycles[i]);
    out.cycles.push_back(std::move(merged));
    out.sort_canonical();
    return out;
}

namespace {

// Applies every applicable 2-cycle merge; each merge drops the cycle count
// by one, so this terminates.
CycleFactor greedy_merge(const BipartiteDigraph& d, CycleFactor f) {
    bool merged = true;
    while (merged && f.cycles.size() > 1) {
        merged = false;
        for (std::size_t i = 0; i < f.cycles.size() && !merged; ++i) {
            if (f.cycles[i].length() != 2) continue;
            VertexRef x1 = f.cycles[i].vertices[0];
            VertexRef y1 = f.cycles[i].vertices[1];
            if (x1.side != Side::X) std::swap(x1, y1);
            for (std::size_t j = 0; j < f.cycles.size() && !merged; ++j) {
                if (j == i) continue;
                const Cycle& cj = f.cycles[j];
                for (int p = 0; p < cj.length() && !merged; ++p) {
                    VertexRef xp = cj.vertices[p];
                    if (xp.side != Side::X) continue;
                    VertexRef yp = cj.vertices[(p + 1) % cj.length()];
                    if (d.has_arc(xp, y1) && d.has_arc(x1, yp)) {
                        f = merge_two_cycle(d, f, static_cast<int>(i),
                                            static_cast<int>(j), x1, y1, xp, yp);
                        merged = true;
                    }
                }
            }
        }
    }
    return f;
}

struct FactorSearch {
    const BipartiteDigraph& d;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::uint64_t used_x = 0, used_y = 0;
    std::vector<int> succ_x, succ_y;
    int best_count;
    std::vector<int> best_succ_x, best_succ_y;

    FactorSearch(const BipartiteDigraph& dg, std::uint64_t b, int seed_count)
        : d(dg), budget(b), succ_x(dg.a(), -1), succ_y(dg.a(), -1),
          best_count(seed_count) {}

    void start_cycle(int closed) {
        if (used_x == d.row_mask()) {
            if (closed < best_count) {
                best_count = closed;
                best_succ_x = succ_x;
                best_succ_y = succ_y;
            }
            return;
        }
        if (closed + 1 >= best_count || best_count == 1) return;  // bound
        int start = std::countr_zero(~used_x & d.row_mask());
        used_x |= 1ull << start;
        extend(start, start, closed);
        used_x &= ~(1ull << start);
    }

    void extend(int start, int cur, int closed) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        std::uint64_t ys = d.xy_row(cur) & ~used_y;
        while (ys && !exhausted) {
            int y = std::countr_zero(ys);
            ys &= ys - 1;
            succ_x[cur] = y;
            used_y |= 1ull << y;
            if (d.arc_yx(y, start)) {
                succ_y[y] = start;
                start_cycle(closed + 1);
            }
            std::uint64_t xs = d.yx_row(y) & ~used_x;
            while (xs && !exhausted) {
                int x2 = std::countr_zero(xs);
                xs &= xs - 1;
                succ_y[y] = x2;
                used_x |= 1ull << x2;
                extend(start, x2, closed);
                used_x &= ~(1ull << x2);
            }
            used_y &= ~(1ull << y);
        }
    }
};

}  // namespace

MinimalFactorOutcome minimal_cycle_factor(const BipartiteDigraph& d,
                                          std::uint64_t node_budget) {
    FactorOutcome seed = cycle_factor(d);
    if (!seed.factor)
        return {std::nullopt, seed.hall_violator, seed.failed_direction, false, 0};
    CycleFactor best = greedy_merge(d, *seed.factor);

    FactorSearch search(d, node_budget, static_cast<int>(best.cycles.size()));
    if (best.cycles.size() > 1) search.start_cycle(0);

    MinimalFactorOutcome out;
    out.nodes = search.nodes;
    out.optimal = !search.exhausted;
    if (!search.best_succ_x.empty())
        best = factor_from_successors(d, search.best_succ_x, search.best_succ_y);
    out.factor = std::move(best);
    return out;
}

int lemma4_bound(int c1_len, int a) {
    if (c1_len % 2 != 0) throw input_error("cycle length must be even");
    if (c1_len < 2 || c1_len > 2 * a) throw input_error("cycle length out of range");
    return c1_len * (2 * a - c1_len) / 2;
}

Lemma4Audit lemma4_check(const BipartiteDigraph& d, const CycleFactor& factor,
                         std::uint64_t node_budget) {
    if (factor.cycles.size() < 2) throw input_error("factor must have >= 2 cycles");
    if (!validate_cycle_factor(d, factor)) throw input_error("invalid cycle factor");
    CycleFactor sorted = factor;
    sorted.sort_canonical();
    const Cycle& c1 = sorted.cycles.front();

    Lemma4Audit audit;
    audit.c1_len = c1.length();
    audit.bound = lemma4_bound(c1.length(), d.a());
    VertexSet c1_set;
    for (VertexRef v : c1.vertices) c1_set.add(v);
    VertexSet rest = VertexSet::all(d.a());
    rest.x_bits &= ~c1_set.x_bits;
    rest.y_bits &= ~c1_set.y_bits;
    audit.crossing_arcs = d.arcs_between(c1_set, rest);
    audit.within_bound = audit.crossing_arcs <= audit.bound;

    audit.strongly_connected = is_strongly_connected(d);
    audit.d1_holds = check_condition(d, {ConditionTag::Dk, 1}).holds;
    audit.hamiltonian = find_hamilton_cycle(d).has_value();
    MinimalFactorOutcome minimal = minimal_cycle_factor(d, node_budget);
    if (minimal.factor && minimal.optimal)
        audit.factor_minimality = minimal.factor->cycles.size() == sorted.cycles.size()
                                      ? MinimalityStatus::Minimal
                                      : MinimalityStatus::NotMinimal;
    audit.hypotheses_satisfied = audit.strongly_connected && audit.d1_holds &&
                                 !audit.hamiltonian &&
                                 audit.factor_minimality == MinimalityStatus::Minimal;
    return audit;
}

}  // namespace bbd
