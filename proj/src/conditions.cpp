#include "bbd/conditions.hpp"

namespace bbd {

std::string condition_name(ConditionKind kind) {
    switch (kind.tag) {
        case ConditionTag::NonAdjacent3a: return "aay-3a";
        case ConditionTag::DomOrDominated3a: return "domdom-3a";
        case ConditionTag::Dk: return "dk";
        case ConditionTag::Bk: return "bk";
        case ConditionTag::DominatedDk: return "dominated-dk";
        case ConditionTag::DominatedBk: return "dominated-bk";
        case ConditionTag::Thomassen2n: return "thomassen-2n";
    }
    return "?";
}

std::optional<ConditionKind> condition_from_name(const std::string& name, int k) {
    if (name == "aay-3a") return ConditionKind{ConditionTag::NonAdjacent3a, 0};
    if (name == "domdom-3a") return ConditionKind{ConditionTag::DomOrDominated3a, 0};
    if (name == "dk") return ConditionKind{ConditionTag::Dk, k};
    if (name == "bk") return ConditionKind{ConditionTag::Bk, k};
    if (name == "dominated-dk") return ConditionKind{ConditionTag::DominatedDk, k};
    if (name == "dominated-bk") return ConditionKind{ConditionTag::DominatedBk, k};
    if (name == "thomassen-2n") return ConditionKind{ConditionTag::Thomassen2n, 0};
    return std::nullopt;
}

std::vector<Pair> dominating_pairs(const BipartiteDigraph& d) {
    // A common out-neighbour lies in one partite set, so dominating pairs
    // are necessarily same-side.
    std::vector<Pair> out;
    const int a = d.a();
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            if (d.xy_row(i) & d.xy_row(j)) out.push_back(Pair::of(vx(i), vx(j)));
        }
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            if (d.yx_row(i) & d.yx_row(j)) out.push_back(Pair::of(vy(i), vy(j)));
        }
    return out;
}

std::vector<Pair> dominated_pairs(const BipartiteDigraph& d) {
    std::vector<Pair> out;
    const int a = d.a();
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            if (d.yx_col(i) & d.yx_col(j)) out.push_back(Pair::of(vx(i), vx(j)));
        }
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            if (d.xy_col(i) & d.xy_col(j)) out.push_back(Pair::of(vy(i), vy(j)));
        }
    return out;
}

std::vector<Pair> non_adjacent_pairs(const BipartiteDigraph& d) {
    std::vector<Pair> out;
    const int a = d.a();
    // Same-side pairs are never adjacent.
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) out.push_back(Pair::of(vx(i), vx(j)));
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) out.push_back(Pair::of(vy(i), vy(j)));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (!d.arc_xy(i, j) && !d.arc_yx(j, i)) out.push_back(Pair::of(vx(i), vy(j)));
    return out;
}

namespace {

// The (B_k) clause is a symmetric disjunction over {u,v}.
bool bk_pair_ok(int du, int dv, int a, int k) {
    return (du >= 2 * a - k && dv >= a + k) || (du >= a + k && dv >= 2 * a - k);
}

}  // namespace

ConditionVerdict check_condition(const BipartiteDigraph& d, ConditionKind kind) {
    if ((kind.tag == ConditionTag::Dk || kind.tag == ConditionTag::Bk ||
         kind.tag == ConditionTag::DominatedDk || kind.tag == ConditionTag::DominatedBk) &&
        kind.k < 0)
        throw input_error("k must be >= 0");

    const int a = d.a();
    std::vector<Pair> family;
    switch (kind.tag) {
        case ConditionTag::NonAdjacent3a:
        case ConditionTag::Thomassen2n:
            family = non_adjacent_pairs(d);
            break;
        case ConditionTag::DomOrDominated3a: {
            family = dominating_pairs(d);
            for (const Pair& p : dominated_pairs(d)) family.push_back(p);
            break;
        }
        case ConditionTag::Dk:
        case ConditionTag::Bk:
            family = dominating_pairs(d);
            break;
        case ConditionTag::DominatedDk:
        case ConditionTag::DominatedBk:
            family = dominated_pairs(d);
            break;
    }

    ConditionVerdict verdict;
    verdict.kind = kind;
    verdict.vacuous = family.empty();
    for (const Pair& p : family) {
        const int du = d.degree(p.u);
        const int dv = d.degree(p.v);
        bool ok = true;
        switch (kind.tag) {
            case ConditionTag::NonAdjacent3a:
            case ConditionTag::DomOrDominated3a:
                ok = du + dv >= 3 * a;
                break;
            case ConditionTag::Dk:
            case ConditionTag::DominatedDk:
                ok = du + dv >= 3 * a + kind.k;
                break;
            case ConditionTag::Bk:
            case ConditionTag::DominatedBk:
                ok = bk_pair_ok(du, dv, a, kind.k);
                break;
            case ConditionTag::Thomassen2n:
                ok = du + dv >= 2 * d.order();
                break;
        }
        if (!ok) {
            verdict.holds = false;
            verdict.witness = p;
            break;
        }
    }

    // Library evaluation is allowed for any k >= 0; flag k outside the
    // theorem range so harness callers can refuse it.
    if (kind.tag == ConditionTag::Bk || kind.tag == ConditionTag::DominatedBk) {
        auto range = valid_k_range(a);
        bool in_range = false;
        for (int k : range) in_range |= (k == kind.k);
        verdict.outside_theorem_range = !in_range;
    }
    if (kind.tag == ConditionTag::Dk || kind.tag == ConditionTag::DominatedDk)
        verdict.outside_theorem_range = (kind.k != 1);
    return verdict;
}

std::vector<int> valid_k_range(int a, Rational lower_fraction) {
    if (a < 1) throw input_error("a must be >= 1");
    if (lower_fraction.num <= 0 || lower_fraction.den <= 0 ||
        2 * lower_fraction.num > lower_fraction.den)
        throw input_error("lower fraction must be in (0, 1/2]");
    std::vector<int> ks;
    for (int k = 2; 2 * k <= a; ++k) {
        // strict: k > frac*a  <=>  k*den > num*a, in exact integer arithmetic
        if (static_cast<long long>(k) * lower_fraction.den > lower_fraction.num * a)
            ks.push_back(k);
    }
    return ks;
}

}  // namespace bbd
