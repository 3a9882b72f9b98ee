#include <gdp/edge_list.hpp>
#include <gdp/errors.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

namespace gdp {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class Int>
bool parse_int(std::string_view token, Int& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

} // namespace

SimpleGraph read_edge_list(std::istream& in, std::optional<std::size_t> node_count) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::size_t max_id = 0;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        std::istringstream fields{std::string(body)};
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError(lineno, "expected exactly two node ids");
        std::uint64_t u = 0, v = 0;
        if (!parse_int(a, u) || !parse_int(b, v)) throw ParseError(lineno, "node id is not a positive integer");
        if (u == 0 || v == 0) throw ParseError(lineno, "node ids are 1-based");
        if (u == v) throw ParseError(lineno, "self-loop on node " + a);
        if (u > UINT32_MAX || v > UINT32_MAX) throw ParseError(lineno, "node id too large");
        if (u > v) std::swap(u, v);
        if (!seen.insert((u << 32) | v).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        if (node_count && v > *node_count)
            throw ParseError(lineno, "node id exceeds declared node count");
        edges.emplace_back(static_cast<node_t>(u - 1), static_cast<node_t>(v - 1));
        max_id = std::max<std::size_t>(max_id, v);
    }
    return SimpleGraph::from_edges(node_count.value_or(max_id), edges);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

DegreeSequence read_degree_file(std::istream& in) {
    DegreeSequence d;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        std::istringstream fields(line.substr(0, line.find('#')));
        std::string token;
        while (fields >> token) {
            degree_t x = 0;
            if (!parse_int(token, x)) throw ParseError(lineno, "not an integer: '" + token + "'");
            d.push_back(x);
        }
    }
    if (d.empty()) throw ParseError(0, "no degrees found");
    return d;
}

void write_degrees(std::ostream& out, std::span<const degree_t> d) {
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
    out << '\n';
}

} // namespace gdp
