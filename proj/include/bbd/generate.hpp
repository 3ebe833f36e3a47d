#ifndef BBD_GENERATE_HPP
#define BBD_GENERATE_HPP

#include <cstdint>

#include "bbd/conditions.hpp"
#include "bbd/digraph.hpp"

namespace bbd {

// [y_0, x_0, ..., y_{a-1}, x_{a-1}]: arcs y_i->x_i and x_i->y_{i+1 mod a}.
BipartiteDigraph directed_cycle(int a);

// K*_{a,a}: all 2a^2 arcs.
BipartiteDigraph complete_bipartite(int a);

// Number of distinct digraphs at this a, 2^(2a^2); refuses a with counts
// beyond 64 bits.
std::uint64_t enumeration_count(int a);

// Bijection index -> digraph: bit (i*a + j) of the low a^2 bits is arc
// x_i->y_j, the next a^2 bits encode yx the same way.
BipartiteDigraph digraph_from_index(int a, std::uint64_t index);
std::uint64_t index_of_digraph(const BipartiteDigraph& d);

// Each arc included independently with exact probability num/den; fully
// determined by (a, p, seed).
BipartiteDigraph random_digraph(int a, Rational arc_probability, std::uint64_t seed);

// Random digraph conditioned on every vertex having total degree >=
// degree_floor (base sampling at p = 3/4, then deterministic arc top-up).
BipartiteDigraph biased_highdegree_digraph(int a, int degree_floor, std::uint64_t seed);

// Stable per-instance seed derivation (splitmix64 over seed and index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace bbd

#endif
