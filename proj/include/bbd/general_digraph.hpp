#ifndef BBD_GENERAL_DIGRAPH_HPP
#define BBD_GENERAL_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Loop-free digraph on n <= 64 vertices, one adjacency bit row per vertex.
class GeneralDigraph {
public:
    static constexpr int kMaxN = 64;

    GeneralDigraph(int n, std::vector<std::uint64_t> adj_rows);
    static GeneralDigraph empty(int n);

    int n() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    bool arc(int i, int j) const { return (adj_[i] >> j) & 1u; }
    std::uint64_t out_row(int i) const { return adj_[i]; }
    std::uint64_t in_col(int j) const { return cols_[j]; }

    int out_degree(int v) const;
    int in_degree(int v) const;
    int degree(int v) const { return out_degree(v) + in_degree(v); }
    bool adjacent(int u, int v) const { return arc(u, v) || arc(v, u); }
    int arc_count() const;

    GeneralDigraph with_arc(int i, int j) const;

    std::string serialize() const;  // gd 1 / n <int> / arc <i> <j> / end
    static GeneralDigraph parse(std::string_view text);

    friend bool operator==(const GeneralDigraph&, const GeneralDigraph&) = default;

private:
    int n_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> cols_;
};

bool is_strongly_connected(const GeneralDigraph& g);

// A cycle of exactly the given length (as a vertex sequence), or absent.
std::optional<std::vector<int>> find_cycle_of_length(const GeneralDigraph& g, int len);

bool is_tournament(const GeneralDigraph& g);

// The bipartition certifying G isomorphic to K*_{n/2,n/2}, if any.
std::optional<std::uint64_t> complete_bipartite_split(const GeneralDigraph& g);

enum class ThomassenTag {
    Pancyclic,
    Tournament,
    CompleteBalancedBipartite,
    HypothesisFailed,
    TrichotomyViolation,  // hypothesis holds but no alternative applies
};

struct ThomassenClass {
    ThomassenTag tag = ThomassenTag::HypothesisFailed;
    std::string reason;                 // for HypothesisFailed
    bool also_tournament = false;       // secondary flags when Pancyclic
    bool also_bipartite = false;
    std::optional<int> missing_length;  // shortest missing length when not pancyclic
    // True when the classification would change if 2-cycles were exempt
    // from pancyclicity (missing lengths = {2} only).
    bool two_cycle_sensitive = false;
};

// Trichotomy check for strongly connected G with d(u)+d(v) >= 2n over
// non-adjacent pairs: pancyclic (lengths 2..n; loops cannot exist), or a
// tournament, or isomorphic to K*_{n/2,n/2}.
ThomassenClass thomassen_classify(const GeneralDigraph& g);

// Order-2a general view of a bipartite digraph: x_i -> i, y_j -> a + j.
GeneralDigraph as_general(const BipartiteDigraph& d);

}  // namespace bbd

#endif
