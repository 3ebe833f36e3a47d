#include "bbd/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace bbd {

std::string to_string(VertexRef v) {
    return std::string(1, side_char(v.side)) + std::to_string(v.index);
}

VertexSet VertexSet::of(std::span<const VertexRef> vs) {
    VertexSet s;
    for (VertexRef v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::all(int a) {
    std::uint64_t m = (a == 64) ? ~0ull : ((1ull << a) - 1);
    return {m, m};
}

void VertexSet::add(VertexRef v) {
    if (v.index < 0 || v.index >= 64) throw input_error("vertex index out of range");
    (v.side == Side::X ? x_bits : y_bits) |= 1ull << v.index;
}

bool VertexSet::contains(VertexRef v) const {
    return ((v.side == Side::X ? x_bits : y_bits) >> v.index) & 1u;
}

int VertexSet::size() const {
    return std::popcount(x_bits) + std::popcount(y_bits);
}

std::vector<VertexRef> VertexSet::members(int a) const {
    std::vector<VertexRef> out;
    for (int i = 0; i < a; ++i)
        if ((x_bits >> i) & 1u) out.push_back(vx(i));
    for (int i = 0; i < a; ++i)
        if ((y_bits >> i) & 1u) out.push_back(vy(i));
    return out;
}

BipartiteDigraph::BipartiteDigraph(int a, std::vector<std::uint64_t> xy_rows,
                                   std::vector<std::uint64_t> yx_rows)
    : a_(a), xy_(std::move(xy_rows)), yx_(std::move(yx_rows)) {
    if (a < 1 || a > kMaxA) throw input_error("a must be in [1, 64]");
    if (static_cast<int>(xy_.size()) != a || static_cast<int>(yx_.size()) != a)
        throw input_error("adjacency rows must have size a");
    mask_ = (a == 64) ? ~0ull : ((1ull << a) - 1);
    for (auto& r : xy_)
        if (r & ~mask_) throw input_error("xy row has bits beyond a");
    for (auto& r : yx_)
        if (r & ~mask_) throw input_error("yx row has bits beyond a");
    xy_cols_.assign(a, 0);
    yx_cols_.assign(a, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            if (arc_xy(i, j)) xy_cols_[j] |= 1ull << i;
            if (arc_yx(i, j)) yx_cols_[j] |= 1ull << i;
        }
}

BipartiteDigraph BipartiteDigraph::empty(int a) {
    return BipartiteDigraph(a, std::vector<std::uint64_t>(a, 0),
                            std::vector<std::uint64_t>(a, 0));
}

BipartiteDigraph BipartiteDigraph::from_arcs(int a, std::span<const Arc> arcs) {
    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    for (const Arc& e : arcs) {
        if (e.tail.side == e.head.side) throw input_error("intra-side arc");
        if (e.tail.index < 0 || e.tail.index >= a || e.head.index < 0 || e.head.index >= a)
            throw input_error("arc index out of range");
        if (e.tail.side == Side::X)
            xy[e.tail.index] |= 1ull << e.head.index;
        else
            yx[e.tail.index] |= 1ull << e.head.index;
    }
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

void BipartiteDigraph::check_vertex(VertexRef v) const {
    if (v.index < 0 || v.index >= a_) throw input_error("invalid vertex index");
}

void BipartiteDigraph::check_set(const VertexSet& s) const {
    if ((s.x_bits | s.y_bits) & ~mask_) throw input_error("set member index >= a");
}

bool BipartiteDigraph::has_arc(VertexRef tail, VertexRef head) const {
    check_vertex(tail);
    check_vertex(head);
    if (tail.side == head.side) return false;
    return tail.side == Side::X ? arc_xy(tail.index, head.index)
                                : arc_yx(tail.index, head.index);
}

bool BipartiteDigraph::adjacent(VertexRef u, VertexRef v) const {
    return has_arc(u, v) || has_arc(v, u);
}

int BipartiteDigraph::arc_count() const {
    int n = 0;
    for (int i = 0; i < a_; ++i)
        n += std::popcount(xy_[i]) + std::popcount(yx_[i]);
    return n;
}

int BipartiteDigraph::out_degree(VertexRef v) const {
    check_vertex(v);
    return std::popcount(v.side == Side::X ? xy_[v.index] : yx_[v.index]);
}

int BipartiteDigraph::in_degree(VertexRef v) const {
    check_vertex(v);
    return std::popcount(v.side == Side::X ? yx_cols_[v.index] : xy_cols_[v.index]);
}

int BipartiteDigraph::degree(VertexRef v) const {
    return out_degree(v) + in_degree(v);
}

RestrictedDegrees BipartiteDigraph::restricted_degrees(VertexRef v,
                                                       const VertexSet& set) const {
    check_vertex(v);
    check_set(set);
    std::uint64_t out_nbrs, in_nbrs, set_opp;
    if (v.side == Side::X) {
        out_nbrs = xy_[v.index];
        in_nbrs = yx_cols_[v.index];
        set_opp = set.y_bits;
    } else {
        out_nbrs = yx_[v.index];
        in_nbrs = xy_cols_[v.index];
        set_opp = set.x_bits;
    }
    RestrictedDegrees r;
    r.out_in_set = std::popcount(out_nbrs & set_opp);
    r.in_in_set = std::popcount(in_nbrs & set_opp);
    r.total_in_set = r.out_in_set + r.in_in_set;
    r.out_in_complement = std::popcount(out_nbrs & ~set_opp & mask_);
    r.in_in_complement = std::popcount(in_nbrs & ~set_opp & mask_);
    r.total_in_complement = r.out_in_complement + r.in_in_complement;
    return r;
}

VertexSet BipartiteDigraph::neighborhood(const VertexSet& s, Direction dir) const {
    check_set(s);
    VertexSet out;
    for (int i = 0; i < a_; ++i) {
        if ((s.x_bits >> i) & 1u)
            out.y_bits |= (dir == Direction::Out) ? xy_[i] : yx_cols_[i];
        if ((s.y_bits >> i) & 1u)
            out.x_bits |= (dir == Direction::Out) ? yx_[i] : xy_cols_[i];
    }
    return out;
}

int BipartiteDigraph::arcs_between(const VertexSet& s, const VertexSet& t) const {
    check_set(s);
    check_set(t);
    int n = 0;
    for (int i = 0; i < a_; ++i) {
        if ((s.x_bits >> i) & 1u) n += std::popcount(xy_[i] & t.y_bits);
        if ((t.x_bits >> i) & 1u) n += std::popcount(xy_[i] & s.y_bits);
        if ((s.y_bits >> i) & 1u) n += std::popcount(yx_[i] & t.x_bits);
        if ((t.y_bits >> i) & 1u) n += std::popcount(yx_[i] & s.x_bits);
    }
    return n;
}

BipartiteDigraph BipartiteDigraph::reverse() const {
    // Reversing x_i->y_j gives y_j->x_i, so the reversed yx matrix is the
    // transpose of xy; the column views are exactly those transposes.
    return BipartiteDigraph(a_, yx_cols_, xy_cols_);
}

BipartiteDigraph BipartiteDigraph::with_arc(Arc arc) const {
    if (arc.tail.side == arc.head.side) throw input_error("intra-side arc");
    check_vertex(arc.tail);
    check_vertex(arc.head);
    auto xy = xy_;
    auto yx = yx_;
    if (arc.tail.side == Side::X)
        xy[arc.tail.index] |= 1ull << arc.head.index;
    else
        yx[arc.tail.index] |= 1ull << arc.head.index;
    return BipartiteDigraph(a_, std::move(xy), std::move(yx));
}

std::vector<Arc> BipartiteDigraph::arcs() const {
    std::vector<Arc> out;
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < a_; ++j) {
            if (arc_xy(i, j)) out.push_back({vx(i), vy(j)});
            if (arc_yx(i, j)) out.push_back({vy(i), vx(j)});
        }
    return out;
}

std::string BipartiteDigraph::serialize() const {
    std::vector<std::string> lines;
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < a_; ++j) {
            if (arc_xy(i, j))
                lines.push_back("xy " + std::to_string(i) + " " + std::to_string(j));
            if (arc_yx(i, j))
                lines.push_back("yx " + std::to_string(i) + " " + std::to_string(j));
        }
    std::sort(lines.begin(), lines.end());
    std::string out = "bbd 1\na " + std::to_string(a_) + "\n";
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    out += "end\n";
    return out;
}

std::string BipartiteDigraph::serialize_compact() const {
    std::string out = "a=" + std::to_string(a_) + ";xy=";
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < a_; ++j) out += arc_xy(i, j) ? '1' : '0';
    out += ";yx=";
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < a_; ++j) out += arc_yx(i, j) ? '1' : '0';
    return out;
}

namespace {

int parse_int(std::string_view tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("expected integer, got '" + std::string(tok) + "'", line);
    return value;
}

BipartiteDigraph parse_compact(std::string_view text, int line) {
    // a=<n>;xy=<a^2 bits>;yx=<a^2 bits>
    auto semi1 = text.find(';');
    auto semi2 = text.find(';', semi1 == std::string_view::npos ? 0 : semi1 + 1);
    if (semi1 == std::string_view::npos || semi2 == std::string_view::npos)
        throw parse_error("compact format needs two ';' separators", line);
    std::string_view a_part = text.substr(0, semi1);
    std::string_view xy_part = text.substr(semi1 + 1, semi2 - semi1 - 1);
    std::string_view yx_part = text.substr(semi2 + 1);
    while (!yx_part.empty() && (yx_part.back() == '\n' || yx_part.back() == '\r'))
        yx_part.remove_suffix(1);
    if (!a_part.starts_with("a=")) throw parse_error("compact format must start with 'a='", line);
    if (!xy_part.starts_with("xy=")) throw parse_error("expected 'xy=' field", line);
    if (!yx_part.starts_with("yx=")) throw parse_error("expected 'yx=' field", line);
    int a = parse_int(a_part.substr(2), line);
    if (a < 1 || a > BipartiteDigraph::kMaxA) throw parse_error("a out of range", line);
    auto bits = [&](std::string_view s) {
        if (static_cast<int>(s.size()) != a * a)
            throw parse_error("bit string must have a^2 characters", line);
        std::vector<std::uint64_t> rows(a, 0);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) {
                char c = s[i * a + j];
                if (c == '1')
                    rows[i] |= 1ull << j;
                else if (c != '0')
                    throw parse_error("bit string characters must be 0/1", line);
            }
        return rows;
    };
    return BipartiteDigraph(a, bits(xy_part.substr(3)), bits(yx_part.substr(3)));
}

}  // namespace

BipartiteDigraph BipartiteDigraph::parse(std::string_view text) {
    if (text.starts_with("a=")) return parse_compact(text, 1);

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line() || line != "bbd 1") throw parse_error("missing 'bbd 1' header", lineno);
    if (!next_line() || line.rfind("a ", 0) != 0) throw parse_error("missing 'a <n>' line", lineno);
    int a = parse_int(std::string_view(line).substr(2), lineno);
    if (a < 1 || a > kMaxA) throw parse_error("a out of range", lineno);

    std::vector<std::uint64_t> xy(a, 0), yx(a, 0);
    bool saw_end = false;
    while (next_line()) {
        if (line == "end") {
            saw_end = true;
            break;
        }
        std::istringstream ls(line);
        std::string kind, si, sj;
        if (!(ls >> kind >> si >> sj)) throw parse_error("malformed arc line", lineno);
        std::string rest;
        if (ls >> rest) throw parse_error("trailing tokens on arc line", lineno);
        int i = parse_int(si, lineno);
        int j = parse_int(sj, lineno);
        if (i < 0 || i >= a || j < 0 || j >= a)
            throw parse_error("arc index >= a", lineno);
        std::vector<std::uint64_t>* rows;
        if (kind == "xy")
            rows = &xy;
        else if (kind == "yx")
            rows = &yx;
        else
            throw parse_error("arc kind must be 'xy' or 'yx'", lineno);
        if (((*rows)[i] >> j) & 1u) throw parse_error("duplicate arc line", lineno);
        (*rows)[i] |= 1ull << j;
    }
    if (!saw_end) throw parse_error("missing 'end' line", lineno);
    return BipartiteDigraph(a, std::move(xy), std::move(yx));
}

}  // namespace bbd
