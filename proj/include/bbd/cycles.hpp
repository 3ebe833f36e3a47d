#ifndef BBD_CYCLES_HPP
#define BBD_CYCLES_HPP

#include <optional>
#include <vector>

#include "bbd/digraph.hpp"
#include "bbd/general_digraph.hpp"
#include "bbd/matching.hpp"

namespace bbd {

bool is_strongly_connected(const BipartiteDigraph& d);

// Hamilton cycle in the labeling convention [y_1, x_1, ..., y_a, x_a]:
// alternates Y, X starting from the smallest Y vertex on the cycle (y_0,
// since the cycle covers everything).
struct HamiltonCycle {
    std::vector<VertexRef> seq;

    int length() const { return static_cast<int>(seq.size()); }
    // Labels of the i-th (0-based) Y/X cycle positions.
    int y_label(int i) const { return seq[2 * i].index; }
    int x_label(int i) const { return seq[2 * i + 1].index; }
    Cycle as_cycle() const;
};

bool validate_hamilton_cycle(const BipartiteDigraph& d, const HamiltonCycle& c);

// Even rotation so the sequence starts at the smallest Y vertex.
void canonicalize_hamilton(HamiltonCycle& c);

// Exact backtracking over alternating sequences, pruned by degree-0
// detection on the remaining graph and a periodic Hall check.
std::optional<HamiltonCycle> find_hamilton_cycle(const BipartiteDigraph& d);

// Exact length-bounded DFS, one length at a time.
std::optional<Cycle> find_cycle_of_length(const BipartiteDigraph& d, int len);

struct BipancyclicVerdict {
    bool holds = true;
    std::vector<Cycle> witnesses;        // one per even length 2..2a when holds
    std::optional<int> missing_length;   // first missing even length otherwise
};

BipancyclicVerdict is_bipancyclic(const BipartiteDigraph& d);

class reroute_inapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The rerouting splice: given C = [y_1,x_1,...,y_a,x_a] and 1-based labels
// 2 <= l < m <= a with arcs y_1->x_l, y_l->x_m, y_m->x_1, returns
// C' = [y_1, x_l, ..., y_m, x_1, ..., y_l, x_m, ..., x_a].
HamiltonCycle reroute_hamilton(const BipartiteDigraph& d, const HamiltonCycle& c,
                               int l, int m);

// Labeling extracted from a Hamilton cycle: position i holds the indices of
// the i-th Y and X vertices along C.
struct ContractionLabeling {
    std::vector<int> y_of;  // y_of[i] = index of y at cycle position i
    std::vector<int> x_of;
};

ContractionLabeling contraction_labeling(const HamiltonCycle& c);

// The order-a digraph G with v_i -> v_j whenever x_i -> y_j in D, i != j.
GeneralDigraph contraction(const BipartiteDigraph& d, const HamiltonCycle& c);

// Lifts a cycle [v_{i1},...,v_{il}] of G to [y_{i1},x_{i1},...,y_{il},x_{il}]
// in D; arc-validated, a failure indicates a contraction bug.
Cycle lift_cycle(const BipartiteDigraph& d, const std::vector<int>& g_cycle,
                 const ContractionLabeling& labeling);

}  // namespace bbd

#endif
