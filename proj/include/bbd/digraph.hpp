#ifndef BBD_DIGRAPH_HPP
#define BBD_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

// Partite sets. X sorts before Y, which fixes the lexicographic order on
// vertices used for canonical cycle rotations.
enum class Side : std::uint8_t { X = 0, Y = 1 };

inline char side_char(Side s) { return s == Side::X ? 'x' : 'y'; }
inline Side other_side(Side s) { return s == Side::X ? Side::Y : Side::X; }

struct VertexRef {
    Side side;
    int index;

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

inline VertexRef vx(int i) { return {Side::X, i}; }
inline VertexRef vy(int i) { return {Side::Y, i}; }

std::string to_string(VertexRef v);

// Arcs always cross sides; the representation cannot express loops or
// intra-side arcs.
struct Arc {
    VertexRef tail;
    VertexRef head;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Direction : std::uint8_t { Out, In };

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A (possibly mixed-side) vertex subset, as two index bitmasks.
struct VertexSet {
    std::uint64_t x_bits = 0;
    std::uint64_t y_bits = 0;

    static VertexSet of(std::span<const VertexRef> vs);
    static VertexSet all(int a);

    void add(VertexRef v);
    bool contains(VertexRef v) const;
    int size() const;
    bool empty() const { return x_bits == 0 && y_bits == 0; }
    std::vector<VertexRef> members(int a) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct RestrictedDegrees {
    int out_in_set = 0;
    int in_in_set = 0;
    int total_in_set = 0;
    int out_in_complement = 0;
    int in_in_complement = 0;
    int total_in_complement = 0;
};

// Immutable balanced bipartite digraph of order 2a, a <= 64.
// Arcs are stored as two dense bit matrices: row i of xy holds the
// out-neighbourhood of x_i in Y, row i of yx the out-neighbourhood of y_i
// in X. Column views are precomputed for O(1) in-degree queries.
class BipartiteDigraph {
public:
    static constexpr int kMaxA = 64;

    BipartiteDigraph(int a, std::vector<std::uint64_t> xy_rows,
                     std::vector<std::uint64_t> yx_rows);

    static BipartiteDigraph empty(int a);
    static BipartiteDigraph from_arcs(int a, std::span<const Arc> arcs);

    int a() const { return a_; }
    int order() const { return 2 * a_; }
    std::uint64_t row_mask() const { return mask_; }

    bool arc_xy(int i, int j) const { return (xy_[i] >> j) & 1u; }
    bool arc_yx(int i, int j) const { return (yx_[i] >> j) & 1u; }
    bool has_arc(VertexRef tail, VertexRef head) const;
    bool adjacent(VertexRef u, VertexRef v) const;

    std::uint64_t xy_row(int i) const { return xy_[i]; }
    std::uint64_t yx_row(int i) const { return yx_[i]; }
    // Column j of xy: in-neighbours of y_j within X.
    std::uint64_t xy_col(int j) const { return xy_cols_[j]; }
    std::uint64_t yx_col(int j) const { return yx_cols_[j]; }

    int arc_count() const;

    int out_degree(VertexRef v) const;
    int in_degree(VertexRef v) const;
    int degree(VertexRef v) const;

    RestrictedDegrees restricted_degrees(VertexRef v, const VertexSet& set) const;

    VertexSet neighborhood(const VertexSet& s, Direction dir) const;

    // arcs(S,T) = |A[S,T]| + |A[T,S]|.
    int arcs_between(const VertexSet& s, const VertexSet& t) const;

    BipartiteDigraph reverse() const;
    BipartiteDigraph with_arc(Arc arc) const;

    std::vector<Arc> arcs() const;

    std::string serialize() const;
    std::string serialize_compact() const;
    static BipartiteDigraph parse(std::string_view text);

    friend bool operator==(const BipartiteDigraph&, const BipartiteDigraph&) = default;

private:
    void check_vertex(VertexRef v) const;
    void check_set(const VertexSet& s) const;

    int a_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> xy_, yx_;
    std::vector<std::uint64_t> xy_cols_, yx_cols_;
};

}  // namespace bbd

#endif
