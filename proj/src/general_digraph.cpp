#include "bbd/general_digraph.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace bbd {

GeneralDigraph::GeneralDigraph(int n, std::vector<std::uint64_t> adj_rows)
    : n_(n), adj_(std::move(adj_rows)) {
    if (n < 1 || n > kMaxN) throw input_error("n must be in [1, 64]");
    if (static_cast<int>(adj_.size()) != n) throw input_error("adjacency must have n rows");
    mask_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (int i = 0; i < n; ++i) {
        if (adj_[i] & ~mask_) throw input_error("adjacency row has bits beyond n");
        if ((adj_[i] >> i) & 1u) throw input_error("loops are not allowed");
    }
    cols_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (arc(i, j)) cols_[j] |= 1ull << i;
}

GeneralDigraph GeneralDigraph::empty(int n) {
    return GeneralDigraph(n, std::vector<std::uint64_t>(n, 0));
}

int GeneralDigraph::out_degree(int v) const { return std::popcount(adj_[v]); }
int GeneralDigraph::in_degree(int v) const { return std::popcount(cols_[v]); }

int GeneralDigraph::arc_count() const {
    int c = 0;
    for (auto r : adj_) c += std::popcount(r);
    return c;
}

GeneralDigraph GeneralDigraph::with_arc(int i, int j) const {
    auto rows = adj_;
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) throw input_error("bad arc");
    rows[i] |= 1ull << j;
    return GeneralDigraph(n_, std::move(rows));
}

std::string GeneralDigraph::serialize() const {
    std::string out = "gd 1\nn " + std::to_string(n_) + "\n";
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (arc(i, j))
                out += "arc " + std::to_string(i) + " " + std::to_string(j) + "\n";
    out += "end\n";
    return out;
}

GeneralDigraph GeneralDigraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };
    auto to_int = [&](const std::string& tok) {
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw parse_error("expected integer", lineno);
        return v;
    };
    if (!next_line() || line != "gd 1") throw parse_error("missing 'gd 1' header", lineno);
    if (!next_line() || line.rfind("n ", 0) != 0) throw parse_error("missing 'n <int>' line", lineno);
    int n = to_int(line.substr(2));
    if (n < 1 || n > kMaxN) throw parse_error("n out of range", lineno);
    std::vector<std::uint64_t> rows(n, 0);
    bool saw_end = false;
    while (next_line()) {
        if (line == "end") {
            saw_end = true;
            break;
        }
        std::istringstream ls(line);
        std::string kind, si, sj;
        if (!(ls >> kind >> si >> sj) || kind != "arc")
            throw parse_error("malformed arc line", lineno);
        int i = to_int(si), j = to_int(sj);
        if (i < 0 || i >= n || j < 0 || j >= n) throw parse_error("arc index >= n", lineno);
        if (i == j) throw parse_error("loop arc", lineno);
        if ((rows[i] >> j) & 1u) throw parse_error("duplicate arc line", lineno);
        rows[i] |= 1ull << j;
    }
    if (!saw_end) throw parse_error("missing 'end' line", lineno);
    return GeneralDigraph(n, std::move(rows));
}

namespace {

std::uint64_t reachable_from(int v, const GeneralDigraph& g, bool forward) {
    std::uint64_t seen = 1ull << v, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= forward ? g.out_row(u) : g.in_col(u);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

bool is_strongly_connected(const GeneralDigraph& g) {
    if (g.n() == 1) return true;
    return reachable_from(0, g, true) == g.mask() &&
           reachable_from(0, g, false) == g.mask();
}

namespace {

// Paths rooted at `start` using only vertices >= start, so each cycle is
// searched once from its smallest vertex.
bool cycle_dfs(const GeneralDigraph& g, int start, int cur, int remaining,
               std::uint64_t used, std::vector<int>& path) {
    if (remaining == 0) return g.arc(cur, start);
    std::uint64_t cand = g.out_row(cur) & ~used;
    cand &= ~((1ull << start) - 1) & ~(1ull << start);
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        path.push_back(v);
        if (cycle_dfs(g, start, v, remaining - 1, used | (1ull << v), path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle_of_length(const GeneralDigraph& g, int len) {
    if (len < 2 || len > g.n()) throw input_error("cycle length out of range");
    for (int start = 0; start + len <= g.n(); ++start) {
        std::vector<int> path{start};
        if (cycle_dfs(g, start, start, len - 1, 1ull << start, path))
            return path;
    }
    return std::nullopt;
}

bool is_tournament(const GeneralDigraph& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.arc(i, j) == g.arc(j, i)) return false;
    return true;
}

std::optional<std::uint64_t> complete_bipartite_split(const GeneralDigraph& g) {
    if (g.n() % 2 != 0) return std::nullopt;
    const int half = g.n() / 2;
    // Vertex 0's side is exactly the set of vertices not adjacent to it, so
    // the split, if any, is forced; verify it.
    std::uint64_t side0 = 1ull << 0;
    for (int v = 1; v < g.n(); ++v)
        if (!g.adjacent(0, v)) side0 |= 1ull << v;
    if (std::popcount(side0) != half) return std::nullopt;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            if (i == j) continue;
            bool cross = ((side0 >> i) & 1u) != ((side0 >> j) & 1u);
            if (g.arc(i, j) != cross) return std::nullopt;
        }
    return side0;
}

ThomassenClass thomassen_classify(const GeneralDigraph& g) {
    ThomassenClass out;
    if (g.n() < 3) {
        out.tag = ThomassenTag::HypothesisFailed;
        out.reason = "order < 3";
        return out;
    }
    if (!is_strongly_connected(g)) {
        out.tag = ThomassenTag::HypothesisFailed;
        out.reason = "not strongly connected";
        return out;
    }
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.adjacent(i, j) && g.degree(i) + g.degree(j) < 2 * g.n()) {
                out.tag = ThomassenTag::HypothesisFailed;
                out.reason = "degree condition fails on non-adjacent pair {" +
                             std::to_string(i) + "," + std::to_string(j) + "}";
                return out;
            }

    bool pancyclic = true;
    std::optional<int> missing;
    for (int len = 2; len <= g.n(); ++len) {
        if (!find_cycle_of_length(g, len)) {
            pancyclic = false;
            missing = len;
            break;
        }
    }
    const bool tournament = is_tournament(g);
    const bool bipartite = complete_bipartite_split(g).has_value();

    if (pancyclic) {
        out.tag = ThomassenTag::Pancyclic;
        out.also_tournament = tournament;
        out.also_bipartite = bipartite;
        return out;
    }
    out.missing_length = missing;
    if (missing == 2 && !tournament && !bipartite) {
        // Pancyclic for lengths 3..n only; flagged for the 2-cycle reading.
        bool rest_ok = true;
        for (int len = 3; len <= g.n() && rest_ok; ++len)
            rest_ok = find_cycle_of_length(g, len).has_value();
        out.two_cycle_sensitive = rest_ok;
    }
    if (tournament) {
        out.tag = ThomassenTag::Tournament;
        return out;
    }
    if (bipartite) {
        out.tag = ThomassenTag::CompleteBalancedBipartite;
        return out;
    }
    out.tag = ThomassenTag::TrichotomyViolation;
    return out;
}

GeneralDigraph as_general(const BipartiteDigraph& d) {
    const int a = d.a();
    std::vector<std::uint64_t> rows(2 * a, 0);
    for (int i = 0; i < a; ++i) {
        rows[i] = d.xy_row(i) << a;
        rows[a + i] = d.yx_row(i);
    }
    return GeneralDigraph(2 * a, std::move(rows));
}

}  // namespace bbd
