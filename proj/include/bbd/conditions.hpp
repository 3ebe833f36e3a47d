#ifndef BBD_CONDITIONS_HPP
#define BBD_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Unordered pair, stored with u < v.
struct Pair {
    VertexRef u, v;

    static Pair of(VertexRef a, VertexRef b) {
        return a < b ? Pair{a, b} : Pair{b, a};
    }
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

enum class ConditionTag {
    NonAdjacent3a,    // d(u)+d(v) >= 3a over non-adjacent pairs
    DomOrDominated3a, // d(u)+d(v) >= 3a over dominating and dominated pairs
    Dk,               // d(u)+d(v) >= 3a+k over dominating pairs
    Bk,               // degree disjunction over dominating pairs
    DominatedDk,
    DominatedBk,
    Thomassen2n,      // d(u)+d(v) >= 2n over non-adjacent pairs, n = 2a
};

struct ConditionKind {
    ConditionTag tag;
    int k = 0;
};

std::string condition_name(ConditionKind kind);
std::optional<ConditionKind> condition_from_name(const std::string& name, int k);

struct ConditionVerdict {
    ConditionKind kind;
    bool holds = true;
    bool vacuous = false;
    std::optional<Pair> witness;  // a violating pair when holds == false
    bool outside_theorem_range = false;
};

// Same-side pairs sharing a common out-neighbour (resp. in-neighbour).
std::vector<Pair> dominating_pairs(const BipartiteDigraph& d);
std::vector<Pair> dominated_pairs(const BipartiteDigraph& d);

// All unordered pairs, same- or cross-side, with no arc either way.
std::vector<Pair> non_adjacent_pairs(const BipartiteDigraph& d);

ConditionVerdict check_condition(const BipartiteDigraph& d, ConditionKind kind);

// Exact rational threshold, num/den.
struct Rational {
    long long num = 1;
    long long den = 4;
};

// All integers k with max{1, frac*a} < k <= a/2 (strict lower bound).
std::vector<int> valid_k_range(int a, Rational lower_fraction = {1, 4});

}  // namespace bbd

#endif
