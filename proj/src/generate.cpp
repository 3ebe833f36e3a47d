#include "bbd/generate.hpp"

#include <bit>
#include <random>

namespace bbd {

BipartiteDigraph directed_cycle(int a) {
    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    for (int i = 0; i < a; ++i) {
        yx[i] = 1ull << i;                 // y_i -> x_i
        xy[i] = 1ull << ((i + 1) % a);     // x_i -> y_{i+1}
    }
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

BipartiteDigraph complete_bipartite(int a) {
    std::uint64_t full = (a == 64) ? ~0ull : ((1ull << a) - 1);
    return BipartiteDigraph(a, std::vector<std::uint64_t>(a, full),
                            std::vector<std::uint64_t>(a, full));
}

std::uint64_t enumeration_count(int a) {
    if (a < 1) throw input_error("a must be >= 1");
    if (2 * a * a >= 64)
        throw input_error("enumeration index space exceeds 64 bits at a = " +
                          std::to_string(a));
    return 1ull << (2 * a * a);
}

BipartiteDigraph digraph_from_index(int a, std::uint64_t index) {
    if (index >= enumeration_count(a)) throw input_error("index out of range");
    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            if ((index >> (i * a + j)) & 1u) xy[i] |= 1ull << j;
            if ((index >> (a * a + i * a + j)) & 1u) yx[i] |= 1ull << j;
        }
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

std::uint64_t index_of_digraph(const BipartiteDigraph& d) {
    const int a = d.a();
    if (2 * a * a >= 64) throw input_error("digraph too large to index");
    std::uint64_t idx = 0;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            if (d.arc_xy(i, j)) idx |= 1ull << (i * a + j);
            if (d.arc_yx(i, j)) idx |= 1ull << (a * a + i * a + j);
        }
    return idx;
}

namespace {

// Unbiased bounded draw by rejection; mt19937_64 output is fixed by the
// standard, so results are reproducible across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    for (;;) {
        std::uint64_t x = rng();
        std::uint64_t r = x % n;
        if (x - r <= ~0ull - (n - 1)) return r;
    }
}

bool bernoulli(std::mt19937_64& rng, Rational p) {
    return bounded(rng, static_cast<std::uint64_t>(p.den)) <
           static_cast<std::uint64_t>(p.num);
}

}  // namespace

BipartiteDigraph random_digraph(int a, Rational p, std::uint64_t seed) {
    if (p.num < 0 || p.den <= 0 || p.num > p.den)
        throw input_error("arc probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (p.num == p.den || (p.num > 0 && bernoulli(rng, p))) xy[i] |= 1ull << j;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (p.num == p.den || (p.num > 0 && bernoulli(rng, p))) yx[i] |= 1ull << j;
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

BipartiteDigraph biased_highdegree_digraph(int a, int degree_floor, std::uint64_t seed) {
    if (degree_floor < 0 || degree_floor > 2 * a)
        throw input_error("degree floor infeasible (max is 2a)");
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (bernoulli(rng, {3, 4})) xy[i] |= 1ull << j;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (bernoulli(rng, {3, 4})) yx[i] |= 1ull << j;

    auto col = [&](const std::vector<std::uint64_t>& rows, int j) {
        std::uint64_t c = 0;
        for (int i = 0; i < a; ++i)
            if ((rows[i] >> j) & 1u) c |= 1ull << i;
        return c;
    };
    auto deg_x = [&](int i) {
        return std::popcount(xy[i]) + std::popcount(col(yx, i));
    };
    auto deg_y = [&](int i) {
        return std::popcount(yx[i]) + std::popcount(col(xy, i));
    };

    // Top-up: add uniformly chosen absent incident arcs until the floor holds.
    for (int v = 0; v < 2 * a; ++v) {
        bool is_x = v < a;
        int idx = is_x ? v : v - a;
        while ((is_x ? deg_x(idx) : deg_y(idx)) < degree_floor) {
            std::vector<std::pair<bool, int>> absent;  // (outgoing?, other index)
            for (int j = 0; j < a; ++j) {
                if (is_x) {
                    if (!((xy[idx] >> j) & 1u)) absent.push_back({true, j});
                    if (!((yx[j] >> idx) & 1u)) absent.push_back({false, j});
                } else {
                    if (!((yx[idx] >> j) & 1u)) absent.push_back({true, j});
                    if (!((xy[j] >> idx) & 1u)) absent.push_back({false, j});
                }
            }
            auto [outgoing, j] = absent[bounded(rng, absent.size())];
            if (is_x) {
                if (outgoing)
                    xy[idx] |= 1ull << j;
                else
                    yx[j] |= 1ull << idx;
            } else {
                if (outgoing)
                    yx[idx] |= 1ull << j;
                else
                    xy[j] |= 1ull << idx;
            }
        }
    }
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace bbd
