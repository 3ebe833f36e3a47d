#ifndef BBD_VERIFY_HPP
#define BBD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbd/conditions.hpp"
#include "bbd/digraph.hpp"
#include "bbd/general_digraph.hpp"

namespace bbd {

enum class TheoremId {
    AAY_1_1,        // non-adjacent 3a  => hamiltonian            (a >= 2)
    A1_1_2,         // dom-or-dominated 3a => hamiltonian         (a >= 3)
    A2_1_3,         // dom-or-dominated 3a => bipancyclic or 2a-cycle
    WW_1_4,         // (B_k), k in range => hamiltonian           (a >= 3)
    Bipart_1_5,     // (B_k), k in range => bipancyclic or 2a-cycle
    Hamil_1_6,      // (D_1) => hamiltonian                       (a >= 2)
    Thomassen_4_1,  // general-digraph trichotomy                 (n >= 3)
    Dominated_5_1,  // dominated (B_k) => bipancyclic or 2a-cycle
    Dominated_5_2,  // dominated (D_1) => hamiltonian
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

class refused_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    TheoremId theorem = TheoremId::Hamil_1_6;
    int a = 2;  // n for Thomassen_4_1
    std::optional<int> k;
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    // Check each instance's reverse instead (for the reverse-duality audit).
    bool reverse_instances = false;
};

struct VerificationReport {
    TheoremId theorem;
    int a = 0;
    std::optional<int> k;
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<int> bias_floor;  // sampled bipartite runs
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_satisfied = 0;
    std::uint64_t vacuous_condition = 0;
    std::vector<std::string> violations;  // compact serializations, index order
    double wall_seconds = 0;              // not part of to_text()

    std::string to_text() const;
};

VerificationReport verify_theorem(const VerifyOptions& opts);

// Per-instance hypothesis/conclusion evaluation, exposed for audits.
struct InstanceCheck {
    bool hypothesis = false;
    bool vacuous = false;    // pair family empty (given hypothesis)
    bool conclusion = false; // evaluated only when hypothesis holds
};
InstanceCheck check_instance(TheoremId id, const BipartiteDigraph& d, int k);

// --- lemma audits --------------------------------------------------------

enum class LemmaContextKind {
    Section3,  // standing: strong, a >= 2, (D_1) (or (D_0) with d0_variant)
    Section4,  // standing: strong, a >= 3, k in range, (B_k), hamiltonian, D != C
};

struct LemmaContext {
    LemmaContextKind kind = LemmaContextKind::Section3;
    int k = 1;               // Section4 only
    bool d0_variant = false; // Section3: audit under (D_0) instead of (D_1)
};

enum class LemmaStatus { Vacuous, Confirmed, Violated };

struct LemmaFinding {
    std::string lemma;
    LemmaStatus status = LemmaStatus::Vacuous;
    std::string witness;  // violating vertex/pair, when Violated
};

std::vector<LemmaFinding> lemma_audit(const BipartiteDigraph& d, const LemmaContext& ctx);

// --- open problem searches -----------------------------------------------

struct SearchTarget {
    enum Kind { OpenD0, OpenBkSmall } kind = OpenD0;
    int a = 2;
    Rational lambda{1, 8};  // OpenBkSmall: must be < 1/4
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::size_t near_miss_limit = 10;
};

struct NearMiss {
    std::string compact;
    int slack = 0;  // worst degree-sum deficiency over the pair family
};

struct SearchReport {
    SearchTarget target;
    std::uint64_t scanned = 0;
    std::vector<std::string> candidates;  // "<compact>" or "<compact> k=<k>"
    std::vector<NearMiss> near_misses;
    bool exhausted_range = false;  // exhaustive mode completed the full scan

    std::string to_text() const;
};

// Every emitted candidate is re-validated through the independent checkers
// below before it enters the report.
SearchReport open_problem_search(const SearchTarget& target);

// Independently coded re-validation paths (brute force, no bit tricks
// shared with the main implementations).
namespace recheck {
bool strongly_connected(const BipartiteDigraph& d);
bool dominating_degree_sum_at_least(const BipartiteDigraph& d, int bound);
bool bk_condition(const BipartiteDigraph& d, int k);
bool hamiltonian(const BipartiteDigraph& d);
}  // namespace recheck

}  // namespace bbd

#endif
