#include <gdp/errors.hpp>
#include <gdp/karate.hpp>

#include <array>
#include <vector>

namespace gdp {

namespace {

constexpr std::uint64_t kKarateChecksum = 0x6e9c739bd8fdd9bcULL;

constexpr std::array<std::pair<int, int>, 78> kKarate{{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9},
    {1, 11}, {1, 12}, {1, 13}, {1, 14}, {1, 18}, {1, 20}, {1, 22}, {1, 32},
    {2, 3}, {2, 4}, {2, 8}, {2, 14}, {2, 18}, {2, 20}, {2, 22}, {2, 31},
    {3, 4}, {3, 8}, {3, 9}, {3, 10}, {3, 14}, {3, 28}, {3, 29}, {3, 33},
    {4, 8}, {4, 13}, {4, 14}, {5, 7}, {5, 11}, {6, 7}, {6, 11}, {6, 17},
    {7, 17}, {9, 31}, {9, 33}, {9, 34}, {10, 34}, {14, 34}, {15, 33}, {15, 34},
    {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
    {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
    {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
    {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
}};

} // namespace

std::span<const std::pair<int, int>> karate_edge_pairs() { return kKarate; }

std::uint64_t edge_checksum(std::span<const std::pair<int, int>> pairs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto [u, v] : pairs) {
        for (int x : {u, v}) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

SimpleGraph karate_graph() {
    if (edge_checksum(kKarate) != kKarateChecksum) throw DatasetCorrupt("karate edge list checksum mismatch");
    std::vector<Edge> edges;
    edges.reserve(kKarate.size());
    for (auto [u, v] : kKarate) edges.emplace_back(static_cast<node_t>(u - 1), static_cast<node_t>(v - 1));
    return SimpleGraph::from_edges(34, edges);
}

DegreePartition karate_partition() { return DegreePartition::from_unsorted(degrees_of(karate_graph())); }

} // namespace gdp
