#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bbd/conditions.hpp"
#include "bbd/cycles.hpp"
#include "bbd/digraph.hpp"
#include "bbd/generate.hpp"
#include "bbd/general_digraph.hpp"
#include "bbd/matching.hpp"
#include "bbd/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadParams = 2;
constexpr int kNegative = 3;
constexpr int kViolation = 4;
constexpr int kInternal = 5;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw bbd::input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bbd::Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw bbd::input_error("expected p/q, got '" + s + "'");
    bbd::Rational r;
    r.num = std::stoll(s.substr(0, slash));
    r.den = std::stoll(s.substr(slash + 1));
    if (r.den <= 0 || r.num < 0) throw bbd::input_error("expected nonnegative p and q > 0");
    return r;
}

bbd::VertexRef parse_vertex(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
        throw bbd::input_error("expected x<i> or y<i>, got '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    return {tok[0] == 'x' ? bbd::Side::X : bbd::Side::Y, idx};
}

// Cycle line like "cycle: x0 y1 x2 y0" or just the vertex tokens.
std::vector<bbd::VertexRef> parse_cycle_line(const std::string& line) {
    std::istringstream ss(line);
    std::string tok;
    std::vector<bbd::VertexRef> vs;
    while (ss >> tok) {
        if (tok == "cycle:" || tok == "cycle") continue;
        vs.push_back(parse_vertex(tok));
    }
    return vs;
}

std::string vertex_set_to_string(const bbd::VertexSet& s, int a) {
    std::string out;
    for (bbd::VertexRef v : s.members(a)) {
        if (!out.empty()) out += ' ';
        out += bbd::to_string(v);
    }
    return out;
}

int cmd_gen(const std::string& kind, int a, const std::string& p,
            std::optional<int> floor, std::optional<std::uint64_t> seed,
            std::optional<std::uint64_t> index, const std::string& format) {
    std::optional<bbd::BipartiteDigraph> d;
    if (kind == "cycle") {
        d = bbd::directed_cycle(a);
    } else if (kind == "complete") {
        d = bbd::complete_bipartite(a);
    } else if (kind == "random") {
        if (!seed) throw bbd::input_error("random generation requires --seed");
        d = bbd::random_digraph(a, parse_rational(p), *seed);
    } else if (kind == "biased") {
        if (!seed) throw bbd::input_error("biased generation requires --seed");
        if (!floor) throw bbd::input_error("biased generation requires --floor");
        d = bbd::biased_highdegree_digraph(a, *floor, *seed);
    } else if (kind == "index") {
        if (!index) throw bbd::input_error("index generation requires --index");
        d = bbd::digraph_from_index(a, *index);
    } else {
        throw bbd::input_error("unknown kind '" + kind + "'");
    }
    if (format == "compact")
        std::cout << d->serialize_compact() << "\n";
    else
        std::cout << d->serialize();
    return kOk;
}

int cmd_check(const std::string& input, const std::string& condition, int k) {
    auto kind = bbd::condition_from_name(condition, k);
    if (!kind) throw bbd::input_error("unknown condition '" + condition + "'");
    bbd::BipartiteDigraph d = bbd::BipartiteDigraph::parse(read_input(input));
    bbd::ConditionVerdict v = bbd::check_condition(d, *kind);
    if (v.outside_theorem_range)
        std::cerr << "note: k outside the theorem's valid range for a = " << d.a() << "\n";
    if (v.holds) {
        std::cout << (v.vacuous ? "holds (vacuous)" : "holds") << "\n";
        return kOk;
    }
    std::cout << "fails: " << bbd::to_string(v.witness->u) << " "
              << bbd::to_string(v.witness->v) << "\n";
    return kNegative;
}

int cmd_hamilton(const std::string& input) {
    bbd::BipartiteDigraph d = bbd::BipartiteDigraph::parse(read_input(input));
    auto c = bbd::find_hamilton_cycle(d);
    if (!c) {
        std::cout << "no hamilton cycle\n";
        return kNegative;
    }
    std::cout << bbd::cycle_to_string(c->as_cycle()) << "\n";
    return kOk;
}

int cmd_bipancyclic(const std::string& input) {
    bbd::BipartiteDigraph d = bbd::BipartiteDigraph::parse(read_input(input));
    bbd::BipancyclicVerdict v = bbd::is_bipancyclic(d);
    if (v.holds) {
        for (const auto& c : v.witnesses) std::cout << bbd::cycle_to_string(c) << "\n";
        return kOk;
    }
    std::cout << "missing length " << *v.missing_length << "\n";
    return kNegative;
}

int cmd_factor(const std::string& input, bool minimal, std::uint64_t budget) {
    bbd::BipartiteDigraph d = bbd::BipartiteDigraph::parse(read_input(input));
    std::optional<bbd::CycleFactor> factor;
    std::optional<bbd::VertexSet> violator;
    std::optional<bbd::MatchDirection> failed;
    if (minimal) {
        bbd::MinimalFactorOutcome out = bbd::minimal_cycle_factor(d, budget);
        if (out.factor && !out.optimal)
            std::cerr << "note: node budget exhausted; factor may not be minimal\n";
        factor = out.factor;
        violator = out.hall_violator;
        failed = out.failed_direction;
    } else {
        bbd::FactorOutcome out = bbd::cycle_factor(d);
        factor = out.factor;
        violator = out.hall_violator;
        failed = out.failed_direction;
    }
    if (!factor) {
        std::cout << "no cycle factor; hall violator ("
                  << (*failed == bbd::MatchDirection::XtoY ? "x->y" : "y->x")
                  << "): " << vertex_set_to_string(*violator, d.a()) << "\n";
        return kNegative;
    }
    for (const auto& c : factor->cycles) std::cout << bbd::cycle_to_string(c) << "\n";
    return kOk;
}

int cmd_contract(const std::string& input, const std::string& cycle_line) {
    bbd::BipartiteDigraph d = bbd::BipartiteDigraph::parse(read_input(input));
    bbd::HamiltonCycle c;
    if (cycle_line.empty()) {
        auto found = bbd::find_hamilton_cycle(d);
        if (!found) {
            std::cout << "no hamilton cycle\n";
            return kNegative;
        }
        c = *found;
    } else {
        std::vector<bbd::VertexRef> vs = parse_cycle_line(cycle_line);
        if (!vs.empty() && vs.front().side == bbd::Side::X)
            std::rotate(vs.begin(), vs.end() - 1, vs.end());
        c.seq = std::move(vs);
        bbd::canonicalize_hamilton(c);
        if (!bbd::validate_hamilton_cycle(d, c))
            throw bbd::input_error("--cycle is not a hamilton cycle of the input");
    }
    std::cout << bbd::contraction(d, c).serialize();
    return kOk;
}

int cmd_verify(const std::string& theorem, int a, std::optional<int> k,
               const std::string& mode, std::uint64_t samples, std::uint64_t seed,
               int jobs, bool reverse) {
    auto id = bbd::theorem_from_name(theorem);
    if (!id) throw bbd::input_error("unknown theorem '" + theorem + "'");
    bbd::VerifyOptions opts;
    opts.theorem = *id;
    opts.a = a;
    opts.k = k;
    opts.exhaustive = mode == "exhaustive";
    opts.samples = samples;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.reverse_instances = reverse;
    bbd::VerificationReport rep = bbd::verify_theorem(opts);
    std::cout << rep.to_text();
    std::cerr << "wall_seconds " << rep.wall_seconds << "\n";
    return rep.violations.empty() ? kOk : kViolation;
}

int cmd_search(const std::string& target, int a, const std::string& lambda,
               const std::string& mode, std::uint64_t samples, std::uint64_t seed,
               int jobs, std::size_t limit) {
    bbd::SearchTarget t;
    if (target == "open-d0")
        t.kind = bbd::SearchTarget::OpenD0;
    else if (target == "open-bk")
        t.kind = bbd::SearchTarget::OpenBkSmall;
    else
        throw bbd::input_error("unknown target '" + target + "'");
    t.a = a;
    t.lambda = parse_rational(lambda);
    t.exhaustive = mode == "exhaustive";
    t.samples = samples;
    t.seed = seed;
    t.jobs = jobs;
    t.near_miss_limit = limit;
    bbd::SearchReport rep = bbd::open_problem_search(t);
    std::cout << rep.to_text();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced bipartite digraph toolkit"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind, gen_p = "1/2", gen_format = "text";
    int gen_a = 2;
    std::optional<int> gen_floor;
    std::optional<std::uint64_t> gen_seed, gen_index;
    auto* gen = app.add_subcommand("gen", "generate a digraph");
    gen->add_option("--kind", gen_kind, "cycle|complete|random|biased|index")->required();
    gen->add_option("--a", gen_a, "half order")->required();
    gen->add_option("--p", gen_p, "arc probability p/q (random)");
    gen->add_option("--floor", gen_floor, "degree floor (biased)");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--index", gen_index, "enumeration index");
    gen->add_option("--format", gen_format, "text|compact")
        ->check(CLI::IsMember({"text", "compact"}));

    // check
    std::string check_input, check_condition;
    int check_k = 0;
    auto* check = app.add_subcommand("check", "evaluate a degree condition");
    check->add_option("input", check_input, "digraph file or -")->required();
    check->add_option("--condition", check_condition,
                      "aay-3a|domdom-3a|dk|bk|dominated-dk|dominated-bk|thomassen-2n")
        ->required();
    check->add_option("--k", check_k, "condition parameter");

    // hamilton
    std::string ham_input;
    auto* hamilton = app.add_subcommand("hamilton", "search for a hamilton cycle");
    hamilton->add_option("input", ham_input, "digraph file or -")->required();

    // bipancyclic
    std::string bip_input;
    auto* bipancyclic = app.add_subcommand("bipancyclic", "check all even cycle lengths");
    bipancyclic->add_option("input", bip_input, "digraph file or -")->required();

    // factor
    std::string factor_input;
    bool factor_minimal = false;
    std::uint64_t factor_budget = bbd::kDefaultFactorBudget;
    auto* factor = app.add_subcommand("factor", "compute a cycle factor");
    factor->add_option("input", factor_input, "digraph file or -")->required();
    factor->add_flag("--minimal", factor_minimal, "exact minimization");
    factor->add_option("--budget", factor_budget, "node cap for minimization");

    // contract
    std::string con_input, con_cycle;
    auto* contract = app.add_subcommand("contract", "contraction digraph along a hamilton cycle");
    contract->add_option("input", con_input, "digraph file or -")->required();
    contract->add_option("--cycle", con_cycle, "hamilton cycle line (found if omitted)");

    // verify
    std::string ver_theorem, ver_mode;
    int ver_a = 2, ver_jobs = 1;
    std::optional<int> ver_k;
    std::uint64_t ver_samples = 0, ver_seed = 0;
    bool ver_reverse = false;
    auto* verify = app.add_subcommand("verify", "verify a theorem over an instance stream");
    verify->add_option("--theorem", ver_theorem,
                       "aay-1.1|a1-1.2|a2-1.3|ww-1.4|bipart-1.5|hamil-1.6|"
                       "thomassen-4.1|dominated-5.1|dominated-5.2")
        ->required();
    verify->add_option("--a", ver_a, "half order (n for thomassen-4.1)")->required();
    verify->add_option("--k", ver_k, "condition parameter");
    verify->add_option("--mode", ver_mode, "exhaustive|sampled")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", ver_samples, "sample count (sampled mode)");
    verify->add_option("--seed", ver_seed, "rng seed (sampled mode)");
    verify->add_option("--jobs", ver_jobs, "worker threads");
    verify->add_flag("--reverse", ver_reverse, "check each instance's reverse");

    // search
    std::string se_target, se_lambda = "1/8", se_mode = "exhaustive";
    int se_a = 2, se_jobs = 1;
    std::uint64_t se_samples = 0, se_seed = 0;
    std::size_t se_limit = 10;
    auto* search = app.add_subcommand("search", "open-problem counterexample search");
    search->add_option("--target", se_target, "open-d0|open-bk")->required();
    search->add_option("--a", se_a, "half order")->required();
    search->add_option("--lambda", se_lambda, "lower fraction p/q (open-bk)");
    search->add_option("--mode", se_mode, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    search->add_option("--samples", se_samples, "sample count (sampled mode)");
    search->add_option("--seed", se_seed, "rng seed (sampled mode)");
    search->add_option("--jobs", se_jobs, "worker threads");
    search->add_option("--limit", se_limit, "near-miss cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadParams;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_a, gen_p, gen_floor, gen_seed, gen_index,
                           gen_format);
        if (check->parsed()) return cmd_check(check_input, check_condition, check_k);
        if (hamilton->parsed()) return cmd_hamilton(ham_input);
        if (bipancyclic->parsed()) return cmd_bipancyclic(bip_input);
        if (factor->parsed()) return cmd_factor(factor_input, factor_minimal, factor_budget);
        if (contract->parsed()) return cmd_contract(con_input, con_cycle);
        if (verify->parsed())
            return cmd_verify(ver_theorem, ver_a, ver_k, ver_mode, ver_samples, ver_seed,
                              ver_jobs, ver_reverse);
        if (search->parsed())
            return cmd_search(se_target, se_a, se_lambda, se_mode, se_samples, se_seed,
                              se_jobs, se_limit);
    } catch (const bbd::refused_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kBadParams;
    } catch (const bbd::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadParams;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kBadParams;
}
