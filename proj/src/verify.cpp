#include "bbd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "bbd/cycles.hpp"
#include "bbd/generate.hpp"
#include "bbd/matching.hpp"

namespace bbd {

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::AAY_1_1: return "aay-1.1";
        case TheoremId::A1_1_2: return "a1-1.2";
        case TheoremId::A2_1_3: return "a2-1.3";
        case TheoremId::WW_1_4: return "ww-1.4";
        case TheoremId::Bipart_1_5: return "bipart-1.5";
        case TheoremId::Hamil_1_6: return "hamil-1.6";
        case TheoremId::Thomassen_4_1: return "thomassen-4.1";
        case TheoremId::Dominated_5_1: return "dominated-5.1";
        case TheoremId::Dominated_5_2: return "dominated-5.2";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::AAY_1_1, TheoremId::A1_1_2, TheoremId::A2_1_3,
                         TheoremId::WW_1_4, TheoremId::Bipart_1_5, TheoremId::Hamil_1_6,
                         TheoremId::Thomassen_4_1, TheoremId::Dominated_5_1,
                         TheoremId::Dominated_5_2})
        if (theorem_name(id) == name) return id;
    return std::nullopt;
}

namespace {

bool is_directed_2a_cycle(const BipartiteDigraph& d) {
    return d.arc_count() == d.order() && is_strongly_connected(d) &&
           find_hamilton_cycle(d).has_value();
}

bool bipancyclic_or_2a_cycle(const BipartiteDigraph& d) {
    return is_bipancyclic(d).holds || is_directed_2a_cycle(d);
}

ConditionKind hypothesis_condition(TheoremId id, int k) {
    switch (id) {
        case TheoremId::AAY_1_1: return {ConditionTag::NonAdjacent3a, 0};
        case TheoremId::A1_1_2:
        case TheoremId::A2_1_3: return {ConditionTag::DomOrDominated3a, 0};
        case TheoremId::WW_1_4:
        case TheoremId::Bipart_1_5: return {ConditionTag::Bk, k};
        case TheoremId::Hamil_1_6: return {ConditionTag::Dk, 1};
        case TheoremId::Dominated_5_1: return {ConditionTag::DominatedBk, k};
        case TheoremId::Dominated_5_2: return {ConditionTag::DominatedDk, 1};
        case TheoremId::Thomassen_4_1: break;
    }
    throw input_error("not a bipartite-digraph theorem");
}

}  // namespace

InstanceCheck check_instance(TheoremId id, const BipartiteDigraph& d, int k) {
    InstanceCheck r;
    if (!is_strongly_connected(d)) return r;
    ConditionVerdict verdict = check_condition(d, hypothesis_condition(id, k));
    if (!verdict.holds) return r;
    r.hypothesis = true;
    r.vacuous = verdict.vacuous;
    switch (id) {
        case TheoremId::AAY_1_1:
        case TheoremId::A1_1_2:
        case TheoremId::WW_1_4:
        case TheoremId::Hamil_1_6:
        case TheoremId::Dominated_5_2:
            r.conclusion = find_hamilton_cycle(d).has_value();
            break;
        case TheoremId::A2_1_3:
        case TheoremId::Bipart_1_5:
        case TheoremId::Dominated_5_1:
            r.conclusion = bipancyclic_or_2a_cycle(d);
            break;
        case TheoremId::Thomassen_4_1:
            throw input_error("not a bipartite-digraph theorem");
    }
    return r;
}

namespace {

struct PartialReport {
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_satisfied = 0;
    std::uint64_t vacuous_condition = 0;
    std::vector<std::string> violations;
};

// Contiguous index ranges across workers, merged in range order; a
// single-threaded run produces the identical merged result.
template <typename Fn>
PartialReport run_partitioned(std::uint64_t total, int jobs, Fn&& per_range) {
    jobs = std::max(1, jobs);
    if (total > 0)
        jobs = static_cast<int>(std::min<std::uint64_t>(jobs, total));
    std::vector<PartialReport> parts(jobs);
    if (jobs == 1) {
        per_range(0, total, parts[0]);
    } else {
        std::vector<std::thread> workers;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            workers.emplace_back([&, lo, hi, w] { per_range(lo, hi, parts[w]); });
        }
        for (auto& t : workers) t.join();
    }
    PartialReport merged;
    for (const auto& p : parts) {
        merged.scanned += p.scanned;
        merged.hypothesis_satisfied += p.hypothesis_satisfied;
        merged.vacuous_condition += p.vacuous_condition;
        merged.violations.insert(merged.violations.end(), p.violations.begin(),
                                 p.violations.end());
    }
    return merged;
}

std::string general_compact(const GeneralDigraph& g) {
    std::string out = "n=" + std::to_string(g.n()) + ";adj=";
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) out += g.arc(i, j) ? '1' : '0';
    return out;
}

GeneralDigraph general_from_index(int n, std::uint64_t index) {
    std::vector<std::uint64_t> rows(n, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if ((index >> bit) & 1u) rows[i] |= 1ull << j;
            ++bit;
        }
    return GeneralDigraph(n, std::move(rows));
}

VerificationReport verify_thomassen(const VerifyOptions& opts) {
    const int n = opts.a;
    if (n < 3) throw refused_error("thomassen-4.1 needs n >= 3");
    if (!opts.exhaustive) throw refused_error("thomassen-4.1 supports exhaustive mode only");
    if (n > 5)
        throw refused_error("exhaustive scan at n = " + std::to_string(n) +
                            " requires 2^" + std::to_string(n * (n - 1)) +
                            " instances; supported profile is n <= 5");
    const std::uint64_t total = 1ull << (n * (n - 1));

    auto per_range = [&](std::uint64_t lo, std::uint64_t hi, PartialReport& part) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            GeneralDigraph g = general_from_index(n, idx);
            ++part.scanned;
            ThomassenClass cls = thomassen_classify(g);
            if (cls.tag == ThomassenTag::HypothesisFailed) continue;
            ++part.hypothesis_satisfied;
            bool any_nonadjacent = false;
            for (int i = 0; i < n && !any_nonadjacent; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!g.adjacent(i, j)) {
                        any_nonadjacent = true;
                        break;
                    }
            if (!any_nonadjacent) ++part.vacuous_condition;
            if (cls.tag == ThomassenTag::TrichotomyViolation)
                part.violations.push_back(general_compact(g));
        }
    };
    PartialReport merged = run_partitioned(total, opts.jobs, per_range);

    VerificationReport rep;
    rep.theorem = opts.theorem;
    rep.a = n;
    rep.exhaustive = true;
    rep.scanned = merged.scanned;
    rep.hypothesis_satisfied = merged.hypothesis_satisfied;
    rep.vacuous_condition = merged.vacuous_condition;
    rep.violations = std::move(merged.violations);
    return rep;
}

int sampling_floor(TheoremId id, int a, int k) {
    switch (id) {
        case TheoremId::WW_1_4:
        case TheoremId::Bipart_1_5:
        case TheoremId::Dominated_5_1:
            return 2 * a - k;
        case TheoremId::Hamil_1_6:
        case TheoremId::Dominated_5_2:
            return (3 * a + 2) / 2;  // ceil((3a+1)/2)
        default:
            return (3 * a + 1) / 2;  // ceil(3a/2)
    }
}

}  // namespace

VerificationReport verify_theorem(const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (opts.jobs < 1) throw refused_error("jobs must be >= 1");
    if (opts.theorem == TheoremId::Thomassen_4_1) {
        VerificationReport rep = verify_thomassen(opts);
        rep.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    const int a = opts.a;
    int k = 0;
    switch (opts.theorem) {
        case TheoremId::AAY_1_1:
            if (a < 2) throw refused_error("aay-1.1 needs a >= 2");
            break;
        case TheoremId::Hamil_1_6:
        case TheoremId::Dominated_5_2:
            if (a < 2) throw refused_error(theorem_name(opts.theorem) + " needs a >= 2");
            if (opts.k && *opts.k != 1) throw refused_error("k is fixed to 1 for this theorem");
            break;
        case TheoremId::A1_1_2:
        case TheoremId::A2_1_3:
            if (a < 3) throw refused_error(theorem_name(opts.theorem) + " needs a >= 3");
            break;
        case TheoremId::WW_1_4:
        case TheoremId::Bipart_1_5:
        case TheoremId::Dominated_5_1: {
            if (a < 3) throw refused_error(theorem_name(opts.theorem) + " needs a >= 3");
            if (!opts.k) throw refused_error("this theorem requires --k");
            auto range = valid_k_range(a);
            if (std::find(range.begin(), range.end(), *opts.k) == range.end())
                throw refused_error("k = " + std::to_string(*opts.k) +
                                    " outside max{1,a/4} < k <= a/2 at a = " +
                                    std::to_string(a));
            k = *opts.k;
            break;
        }
        case TheoremId::Thomassen_4_1:
            break;
    }

    VerificationReport rep;
    rep.theorem = opts.theorem;
    rep.a = a;
    rep.k = opts.k;
    rep.exhaustive = opts.exhaustive;
    rep.samples = opts.samples;
    rep.seed = opts.seed;

    std::uint64_t total;
    int floor = 0;
    if (opts.exhaustive) {
        if (a > 3)
            throw refused_error("exhaustive scan at a = " + std::to_string(a) +
                                " requires 2^" + std::to_string(2 * a * a) +
                                " instances; supported profile is a <= 3 "
                                "(use sampled mode)");
        total = enumeration_count(a);
    } else {
        if (opts.samples == 0) throw refused_error("sampled mode requires samples >= 1");
        if (a > 8) throw refused_error("sampled profile supports a <= 8");
        total = opts.samples;
        floor = sampling_floor(opts.theorem, a, k);
        rep.bias_floor = floor;
    }

    const TheoremId id = opts.theorem;
    const bool rev = opts.reverse_instances;
    auto per_range = [&](std::uint64_t lo, std::uint64_t hi, PartialReport& part) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            BipartiteDigraph d =
                opts.exhaustive
                    ? digraph_from_index(a, idx)
                    : biased_highdegree_digraph(a, floor, derive_seed(opts.seed, idx));
            ++part.scanned;
            InstanceCheck r = check_instance(id, rev ? d.reverse() : d, k);
            if (!r.hypothesis) continue;
            ++part.hypothesis_satisfied;
            if (r.vacuous) ++part.vacuous_condition;
            if (!r.conclusion) part.violations.push_back(d.serialize_compact());
        }
    };
    PartialReport merged = run_partitioned(total, opts.jobs, per_range);

    // Violations re-validate under the independent checker path before the
    // report is emitted.
    for (const std::string& compact : merged.violations) {
        BipartiteDigraph d = BipartiteDigraph::parse(compact);
        if (rev) d = d.reverse();
        if (!recheck::strongly_connected(d))
            throw std::logic_error("violation failed independent re-check (connectivity)");
        bool concl;
        switch (id) {
            case TheoremId::A2_1_3:
            case TheoremId::Bipart_1_5:
            case TheoremId::Dominated_5_1:
                concl = bipancyclic_or_2a_cycle(d);
                break;
            default:
                concl = recheck::hamiltonian(d);
                break;
        }
        if (concl)
            throw std::logic_error("violation failed independent re-check (conclusion)");
    }

    rep.scanned = merged.scanned;
    rep.hypothesis_satisfied = merged.hypothesis_satisfied;
    rep.vacuous_condition = merged.vacuous_condition;
    rep.violations = std::move(merged.violations);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string VerificationReport::to_text() const {
    std::string out = "report 1\n";
    out += "theorem " + theorem_name(theorem) + "\n";
    out += "a " + std::to_string(a) + "\n";
    out += "k " + (k ? std::to_string(*k) : std::string("-")) + "\n";
    out += std::string("mode ") + (exhaustive ? "exhaustive" : "sampled") + "\n";
    out += "samples " + (exhaustive ? std::string("-") : std::to_string(samples)) + "\n";
    out += "seed " + (exhaustive ? std::string("-") : std::to_string(seed)) + "\n";
    out += "bias_floor " + (bias_floor ? std::to_string(*bias_floor) : std::string("-")) + "\n";
    out += "scanned " + std::to_string(scanned) + "\n";
    out += "hypothesis_satisfied " + std::to_string(hypothesis_satisfied) + "\n";
    out += "vacuous_condition " + std::to_string(vacuous_condition) + "\n";
    out += "violations " + std::to_string(violations.size()) + "\n";
    for (const auto& v : violations) out += "violation " + v + "\n";
    return out;
}

// --- lemma audits ---------------------------------------------------------

std::vector<LemmaFinding> lemma_audit(const BipartiteDigraph& d, const LemmaContext& ctx) {
    std::vector<LemmaFinding> findings;
    const int a = d.a();

    auto vertex_in_dominating_pair = [&]() -> std::optional<VertexRef> {
        std::vector<bool> covered(2 * a, false);
        for (const Pair& p : dominating_pairs(d)) {
            covered[(p.u.side == Side::X ? 0 : a) + p.u.index] = true;
            covered[(p.v.side == Side::X ? 0 : a) + p.v.index] = true;
        }
        for (int i = 0; i < 2 * a; ++i)
            if (!covered[i]) return i < a ? vx(i) : vy(i - a);
        return std::nullopt;
    };

    if (ctx.kind == LemmaContextKind::Section3) {
        const bool strong = is_strongly_connected(d);
        const ConditionTag tag = ConditionTag::Dk;
        const bool cond =
            check_condition(d, {tag, ctx.d0_variant ? 0 : 1}).holds;
        const bool standing = strong && a >= 2 && cond;
        const bool ham = standing && find_hamilton_cycle(d).has_value();

        LemmaFinding l1{"lemma-1", LemmaStatus::Vacuous, ""};
        LemmaFinding l2{"lemma-2", LemmaStatus::Vacuous, ""};
        if (standing && !ham) {
            auto missing = vertex_in_dominating_pair();
            l1.status = missing ? LemmaStatus::Violated : LemmaStatus::Confirmed;
            if (missing) l1.witness = to_string(*missing);
            l2.status = LemmaStatus::Confirmed;
            for (VertexRef v : VertexSet::all(a).members(a))
                if (d.degree(v) < a + 1) {
                    l2.status = LemmaStatus::Violated;
                    l2.witness = to_string(v);
                    break;
                }
        }
        findings.push_back(l1);
        findings.push_back(l2);

        LemmaFinding l3{"lemma-3", LemmaStatus::Vacuous, ""};
        if (standing) {
            FactorOutcome f = cycle_factor(d);
            l3.status = f.factor ? LemmaStatus::Confirmed : LemmaStatus::Violated;
            if (!f.factor) l3.witness = "no cycle factor";
        }
        findings.push_back(l3);
        return findings;
    }

    // Section 4 standing assumptions: strong, a >= 3, k in theorem range,
    // (B_k), hamiltonian, and D distinct from its Hamilton cycle.
    const int k = ctx.k;
    auto range = valid_k_range(a);
    const bool k_ok = std::find(range.begin(), range.end(), k) != range.end();
    const bool strong = is_strongly_connected(d);
    const bool bk = k_ok && check_condition(d, {ConditionTag::Bk, k}).holds;
    const bool ham = strong && bk && find_hamilton_cycle(d).has_value();
    const bool standing = strong && a >= 3 && k_ok && bk && ham && d.arc_count() != 2 * a;

    LemmaFinding l5{"lemma-5", LemmaStatus::Vacuous, ""};
    if (standing) {
        auto missing = vertex_in_dominating_pair();
        l5.status = missing ? LemmaStatus::Violated : LemmaStatus::Confirmed;
        if (missing) l5.witness = to_string(*missing);
        if (l5.status == LemmaStatus::Confirmed)
            for (VertexRef v : VertexSet::all(a).members(a))
                if (d.degree(v) < a + k) {
                    l5.status = LemmaStatus::Violated;
                    l5.witness = to_string(v);
                    break;
                }
    }
    findings.push_back(l5);

    LemmaFinding l6{"lemma-6a", LemmaStatus::Vacuous, ""};
    if (standing && !is_bipancyclic(d).holds) {
        l6.status = LemmaStatus::Confirmed;
        for (VertexRef v : VertexSet::all(a).members(a)) {
            int din = d.in_degree(v), dout = d.out_degree(v);
            if (din < k + 1 || din > a - 1 || dout < k + 1 || dout > a - 1) {
                l6.status = LemmaStatus::Violated;
                l6.witness = to_string(v);
                break;
            }
        }
    }
    findings.push_back(l6);
    return findings;
}

// --- open problem searches --------------------------------------------------

namespace recheck {

bool strongly_connected(const BipartiteDigraph& d) {
    const int n = d.order();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    auto id = [&](VertexRef v) { return (v.side == Side::X ? 0 : d.a()) + v.index; };
    for (const Arc& e : d.arcs()) reach[id(e.tail)][id(e.head)] = true;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            if (reach[i][m])
                for (int j = 0; j < n; ++j)
                    if (reach[m][j]) reach[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !reach[i][j]) return false;
    return true;
}

namespace {

int slow_degree(const BipartiteDigraph& d, VertexRef v) {
    int deg = 0;
    for (const Arc& e : d.arcs()) deg += (e.tail == v) + (e.head == v);
    return deg;
}

std::vector<VertexRef> all_vertices(const BipartiteDigraph& d) {
    std::vector<VertexRef> vs;
    for (int i = 0; i < d.a(); ++i) vs.push_back(vx(i));
    for (int i = 0; i < d.a(); ++i) vs.push_back(vy(i));
    return vs;
}

bool is_dominating(const BipartiteDigraph& d, VertexRef u, VertexRef v) {
    for (VertexRef w : all_vertices(d))
        if (d.has_arc(u, w) && d.has_arc(v, w)) return true;
    return false;
}

bool unpruned_ham_dfs(const BipartiteDigraph& d, std::vector<VertexRef>& path,
                      std::vector<bool>& used_x, std::vector<bool>& used_y) {
    if (static_cast<int>(path.size()) == d.order())
        return d.has_arc(path.back(), path.front());
    VertexRef cur = path.back();
    Side next = other_side(cur.side);
    for (int i = 0; i < d.a(); ++i) {
        VertexRef cand{next, i};
        auto& used = next == Side::X ? used_x : used_y;
        if (used[i] || !d.has_arc(cur, cand)) continue;
        used[i] = true;
        path.push_back(cand);
        if (unpruned_ham_dfs(d, path, used_x, used_y)) return true;
        path.pop_back();
        used[i] = false;
    }
    return false;
}

}  // namespace

bool dominating_degree_sum_at_least(const BipartiteDigraph& d, int bound) {
    auto vs = all_vertices(d);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (is_dominating(d, vs[i], vs[j]) &&
                slow_degree(d, vs[i]) + slow_degree(d, vs[j]) < bound)
                return false;
    return true;
}

bool bk_condition(const BipartiteDigraph& d, int k) {
    const int a = d.a();
    auto vs = all_vertices(d);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!is_dominating(d, vs[i], vs[j])) continue;
            int du = slow_degree(d, vs[i]), dv = slow_degree(d, vs[j]);
            bool ok = (du >= 2 * a - k && dv >= a + k) || (du >= a + k && dv >= 2 * a - k);
            if (!ok) return false;
        }
    return true;
}

bool hamiltonian(const BipartiteDigraph& d) {
    const int a = d.a();
    if (a <= 5) {
        // Full interleaving brute force over permutation pairs.
        std::vector<int> xs(a), ys(a);
        for (int i = 0; i < a; ++i) xs[i] = ys[i] = i;
        do {
            std::vector<int> ys2 = ys;
            do {
                bool ok = true;
                for (int i = 0; i < a && ok; ++i) {
                    ok = d.arc_yx(ys2[i], xs[i]) &&
                         d.arc_xy(xs[i], ys2[(i + 1) % a]);
                }
                if (ok) return true;
            } while (std::next_permutation(ys2.begin() + 1, ys2.end()));
        } while (std::next_permutation(xs.begin(), xs.end()));
        return false;
    }
    std::vector<VertexRef> path{vy(0)};
    std::vector<bool> used_x(a, false), used_y(a, false);
    used_y[0] = true;
    return unpruned_ham_dfs(d, path, used_x, used_y);
}

}  // namespace recheck

std::string SearchReport::to_text() const {
    std::string out = "search 1\n";
    out += std::string("target ") +
           (target.kind == SearchTarget::OpenD0 ? "open-d0" : "open-bk") + "\n";
    out += "a " + std::to_string(target.a) + "\n";
    if (target.kind == SearchTarget::OpenBkSmall)
        out += "lambda " + std::to_string(target.lambda.num) + "/" +
               std::to_string(target.lambda.den) + "\n";
    out += std::string("mode ") + (target.exhaustive ? "exhaustive" : "sampled") + "\n";
    out += "scanned " + std::to_string(scanned) + "\n";
    out += "exhausted_range " + std::string(exhausted_range ? "yes" : "no") + "\n";
    out += "candidates " + std::to_string(candidates.size()) + "\n";
    for (const auto& c : candidates) out += "candidate " + c + "\n";
    out += "near_misses " + std::to_string(near_misses.size()) + "\n";
    for (const auto& nm : near_misses)
        out += "near_miss slack=" + std::to_string(nm.slack) + " " + nm.compact + "\n";
    return out;
}

SearchReport open_problem_search(const SearchTarget& target) {
    const int a = target.a;
    std::vector<int> ks;
    if (target.kind == SearchTarget::OpenBkSmall) {
        if (4 * target.lambda.num >= target.lambda.den)
            throw refused_error("lambda must be < 1/4 (larger lambda is the proven range)");
        ks = valid_k_range(a, target.lambda);
        if (ks.empty())
            throw refused_error("no integer k with max{1, lambda*a} < k <= a/2 at a = " +
                                std::to_string(a));
    }
    std::uint64_t total;
    if (target.exhaustive) {
        if (a > 3)
            throw refused_error("exhaustive search profile supports a <= 3");
        total = enumeration_count(a);
    } else {
        if (target.samples == 0) throw refused_error("sampled mode requires samples >= 1");
        total = target.samples;
    }

    struct Found {
        std::uint64_t index;
        std::string compact;
        int k;        // -1 for open-d0
        int slack;    // 0 for candidates, > 0 for near misses
    };
    const int jobs = std::max(1, target.jobs);
    std::vector<std::vector<Found>> parts(jobs);
    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Found>& out) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            BipartiteDigraph d =
                target.exhaustive
                    ? digraph_from_index(a, idx)
                    : biased_highdegree_digraph(
                          a,
                          target.kind == SearchTarget::OpenD0
                              ? (3 * a + 1) / 2
                              : 2 * a - ks.front(),
                          derive_seed(target.seed, idx));
            if (!is_strongly_connected(d)) continue;
            if (find_hamilton_cycle(d)) continue;
            // Strongly connected and non-hamiltonian: candidate or near miss.
            if (target.kind == SearchTarget::OpenD0) {
                int worst = 0;
                for (const Pair& p : dominating_pairs(d))
                    worst = std::max(worst, 3 * a - d.degree(p.u) - d.degree(p.v));
                out.push_back({idx, d.serialize_compact(), -1, worst});
            } else {
                int best_slack = -1;
                int best_k = -1;
                for (int k : ks) {
                    int worst = 0;
                    for (const Pair& p : dominating_pairs(d)) {
                        int du = d.degree(p.u), dv = d.degree(p.v);
                        int def1 = std::max(0, (2 * a - k) - du) + std::max(0, (a + k) - dv);
                        int def2 = std::max(0, (a + k) - du) + std::max(0, (2 * a - k) - dv);
                        worst = std::max(worst, std::min(def1, def2));
                    }
                    if (best_slack < 0 || worst < best_slack) {
                        best_slack = worst;
                        best_k = k;
                    }
                }
                out.push_back({idx, d.serialize_compact(), best_k, best_slack});
            }
        }
    };
    if (jobs == 1) {
        scan_range(0, total, parts[0]);
    } else {
        std::vector<std::thread> workers;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            workers.emplace_back([&, lo, hi, w] { scan_range(lo, hi, parts[w]); });
        }
        for (auto& t : workers) t.join();
    }

    SearchReport rep;
    rep.target = target;
    rep.scanned = total;
    rep.exhausted_range = target.exhaustive;

    std::vector<Found> all;
    for (auto& p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end(),
              [](const Found& l, const Found& r) { return l.index < r.index; });

    std::vector<Found> misses;
    for (const Found& f : all) {
        if (f.slack == 0) {
            // Candidate: independent re-validation before emission.
            BipartiteDigraph d = BipartiteDigraph::parse(f.compact);
            bool cond_ok = target.kind == SearchTarget::OpenD0
                               ? recheck::dominating_degree_sum_at_least(d, 3 * a)
                               : recheck::bk_condition(d, f.k);
            if (!cond_ok || !recheck::strongly_connected(d) || recheck::hamiltonian(d))
                throw std::logic_error("candidate failed independent re-validation");
            rep.candidates.push_back(f.k >= 0 ? f.compact + " k=" + std::to_string(f.k)
                                              : f.compact);
        } else {
            misses.push_back(f);
        }
    }
    std::stable_sort(misses.begin(), misses.end(),
                     [](const Found& l, const Found& r) { return l.slack < r.slack; });
    for (const Found& f : misses) {
        if (rep.near_misses.size() >= target.near_miss_limit) break;
        rep.near_misses.push_back({f.compact, f.slack});
    }
    return rep;
}

}  // namespace bbd
