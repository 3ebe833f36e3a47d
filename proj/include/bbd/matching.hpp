#ifndef BBD_MATCHING_HPP
#define BBD_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

enum class MatchDirection : std::uint8_t { XtoY, YtoX };

struct Matching {
    MatchDirection direction;
    std::vector<int> map;  // map[source] = target, -1 if unmatched

    bool perfect() const {
        for (int t : map)
            if (t < 0) return false;
        return true;
    }
};

// Alternating cycle [v_1,...,v_m], m even, canonical rotation starting at
// the lexicographically smallest vertex.
struct Cycle {
    std::vector<VertexRef> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    void canonicalize();
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

bool validate_cycle(const BipartiteDigraph& d, const Cycle& c);
std::string cycle_to_string(const Cycle& c);

// Vertex-disjoint cycles covering V(D), sorted by length then lexicographically.
struct CycleFactor {
    std::vector<Cycle> cycles;

    void sort_canonical();
    friend bool operator==(const CycleFactor&, const CycleFactor&) = default;
};

bool validate_cycle_factor(const BipartiteDigraph& d, const CycleFactor& f);

// Some S on the source side with |N+(S)| < |S|, if one exists.
std::optional<VertexSet> hall_violator(const BipartiteDigraph& d, MatchDirection dir);

struct MatchingOutcome {
    std::optional<Matching> matching;       // present iff a perfect matching exists
    std::optional<VertexSet> hall_violator; // present otherwise
};

// Deterministic augmenting-path matching: sources scanned in increasing
// index, targets in increasing index.
MatchingOutcome perfect_matching(const BipartiteDigraph& d, MatchDirection dir);

struct FactorOutcome {
    std::optional<CycleFactor> factor;
    std::optional<VertexSet> hall_violator;
    std::optional<MatchDirection> failed_direction;
};

// Cycle factor from perfect matchings in both directions; the union of the
// two matchings is a functional digraph decomposing into alternating cycles.
FactorOutcome cycle_factor(const BipartiteDigraph& d);

struct MinimalFactorOutcome {
    std::optional<CycleFactor> factor;
    std::optional<VertexSet> hall_violator;
    std::optional<MatchDirection> failed_direction;
    bool optimal = false;       // false when the node budget ran out
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultFactorBudget = 1u << 22;

// Exact branch-and-bound over cycle covers, seeded by cycle_factor() and
// greedy 2-cycle merges. Minimal factor subsumes hamiltonicity, so the node
// budget makes worst-case behavior explicit.
MinimalFactorOutcome minimal_cycle_factor(const BipartiteDigraph& d,
                                          std::uint64_t node_budget = kDefaultFactorBudget);

class merge_inapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The Case t=1 move: the 2-cycle [x1,y1] merges into factor[cj] by replacing
// the arc xp->yp with the path (xp, y1, x1, yp). Requires arcs xp->y1 and
// x1->yp in D.
CycleFactor merge_two_cycle(const BipartiteDigraph& d, const CycleFactor& factor,
                            int c1_index, int cj_index, VertexRef x1, VertexRef y1,
                            VertexRef xp, VertexRef yp);

// c1_len*(2a - c1_len)/2, the arc-count bound on the shortest cycle of a
// minimal factor.
int lemma4_bound(int c1_len, int a);

enum class MinimalityStatus { Minimal, NotMinimal, Unknown };

struct Lemma4Audit {
    int c1_len = 0;
    int crossing_arcs = 0;
    int bound = 0;
    bool within_bound = true;
    // Hypothesis flags, recorded rather than asserted.
    bool strongly_connected = false;
    bool d1_holds = false;
    bool hamiltonian = false;
    MinimalityStatus factor_minimality = MinimalityStatus::Unknown;
    bool hypotheses_satisfied = false;  // strong + (D_1) + non-hamiltonian + minimal
};

Lemma4Audit lemma4_check(const BipartiteDigraph& d, const CycleFactor& factor,
                         std::uint64_t node_budget = kDefaultFactorBudget);

}  // namespace bbd

#endif
