#include "carc/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "carc/error.hpp"

namespace carc {

namespace {

std::string pair_text(int a, int b) {
    std::ostringstream os;
    os << "{" << a << "," << b << "}";
    return os.str();
}

} // namespace

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::malformed_input: return "malformed input";
    case Errc::part_out_of_range: return "part-id out of range";
    case Errc::intra_part_edge: return "intra-part edge";
    case Errc::host_edge_violation: return "edge violates host graph";
    case Errc::duplicate_edge: return "duplicate edge";
    case Errc::invalid_vertex: return "invalid vertex";
    case Errc::invalid_ordering: return "invalid ordering";
    case Errc::invalid_position: return "invalid position";
    case Errc::unknown_example: return "unknown example";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::vertex_set_mismatch: return "vertex set mismatch";
    case Errc::duplicate_endpoint: return "duplicate clockwise endpoint";
    case Errc::normalization_failed: return "normalization failed";
    case Errc::not_a_witness: return "not a witness";
    case Errc::unsupported_host: return "non-complete host graph";
    case Errc::limit_exceeded: return "limit exceeded";
    }
    return "error";
}

RPartiteGraph::RPartiteGraph(int n, int r, std::vector<Part> parts, std::vector<Edge> edges,
                             std::optional<std::vector<HostEdge>> host_edges)
    : n_(n), r_(r), part_(std::move(parts)) {
    if (n < 0)
        throw Error(Errc::malformed_input, "vertex count must be non-negative");
    if (r < 1)
        throw Error(Errc::malformed_input, "part count must be positive");
    if (part_.size() != static_cast<std::size_t>(n))
        throw Error(Errc::malformed_input, "part array must have n entries");
    for (std::size_t v = 0; v < part_.size(); ++v) {
        if (part_[v] < 1 || part_[v] > r) {
            std::ostringstream os;
            os << "part-id out of range: vertex " << v + 1 << " has part " << part_[v];
            throw Error(Errc::part_out_of_range, os.str());
        }
    }

    if (host_edges) {
        auto& h = *host_edges;
        for (auto& [a, b] : h) {
            if (a < 1 || a > r || b < 1 || b > r)
                throw Error(Errc::part_out_of_range,
                            "part-id out of range in host edge " + pair_text(a, b));
            if (a == b)
                throw Error(Errc::malformed_input, "host edge is a loop " + pair_text(a, b));
            if (a > b)
                std::swap(a, b);
        }
        std::sort(h.begin(), h.end());
        if (std::adjacent_find(h.begin(), h.end()) != h.end())
            throw Error(Errc::duplicate_edge, "duplicate host edge");
        host_edges_ = std::move(host_edges);
    }

    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, w] : edges) {
        if (u < 1 || u > n || w < 1 || w > n)
            throw Error(Errc::invalid_vertex, "edge endpoint out of range " + pair_text(u, w));
        if (u == w)
            throw Error(Errc::intra_part_edge, "intra-part edge (self-loop) " + pair_text(u, w));
        if (u > w)
            std::swap(u, w);
        if (part(u) == part(w))
            throw Error(Errc::intra_part_edge, "intra-part edge " + pair_text(u, w));
        if (!host_allows(part(u), part(w)))
            throw Error(Errc::host_edge_violation,
                        "edge violates host graph " + pair_text(u, w));
        if (adj_[index(u, w)])
            throw Error(Errc::duplicate_edge, "duplicate edge " + pair_text(u, w));
        adj_[index(u, w)] = adj_[index(w, u)] = 1;
        ++degree_[static_cast<std::size_t>(u - 1)];
        ++degree_[static_cast<std::size_t>(w - 1)];
        edges_.emplace_back(u, w);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool RPartiteGraph::host_allows(Part a, Part b) const {
    if (a == b)
        return false;
    if (!host_edges_)
        return true;
    if (a > b)
        std::swap(a, b);
    return std::binary_search(host_edges_->begin(), host_edges_->end(), HostEdge{a, b});
}

AdjacencyMatrix adjacency_matrix(const RPartiteGraph& g, const CircularOrdering& order) {
    if (order.size() != g.order())
        throw Error(Errc::invalid_ordering, "ordering does not range over the graph's vertices");
    const auto n = static_cast<std::size_t>(g.order());
    AdjacencyMatrix m{order, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(n, 0))};
    for (auto [u, w] : g.edges()) {
        auto p = static_cast<std::size_t>(order.position(u) - 1);
        auto q = static_cast<std::size_t>(order.position(w) - 1);
        m.bits[p][q] = m.bits[q][p] = 1;
    }
    return m;
}

RPartiteGraph builtin_example(std::string_view name) {
    if (name == "fig1") {
        return RPartiteGraph(8, 2, {1, 2, 2, 1, 2, 1, 2, 1},
                             {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 8},
                              {4, 5}, {5, 6}, {6, 7}, {7, 8}});
    }
    if (name == "fig2") {
        // v6v7 is absent from the drawing but forced by the published arcs
        // A_v6 = [4,6], A_v7 = [6,7].
        return RPartiteGraph(10, 2, {2, 1, 1, 2, 2, 1, 2, 2, 1, 2},
                             {{1, 2}, {1, 3}, {1, 9}, {2, 4}, {3, 4}, {3, 5}, {3, 10}, {4, 6},
                              {5, 6}, {6, 7}, {6, 8}, {6, 10}, {7, 9}, {8, 9}, {9, 10}});
    }
    throw Error(Errc::unknown_example, "unknown example '" + std::string(name) + "'");
}

RPartiteGraph random_rpartite(int r, const std::vector<int>& sizes, double density,
                              std::uint64_t seed) {
    if (r < 1)
        throw Error(Errc::invalid_argument, "part count must be positive");
    if (sizes.size() != static_cast<std::size_t>(r))
        throw Error(Errc::invalid_argument, "sizes must have one entry per part");
    if (!(density >= 0.0 && density <= 1.0))
        throw Error(Errc::invalid_argument, "density must lie in [0,1]");

    std::vector<Part> part;
    for (int i = 0; i < r; ++i) {
        if (sizes[static_cast<std::size_t>(i)] < 0)
            throw Error(Errc::invalid_argument, "part sizes must be non-negative");
        part.insert(part.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]), i + 1);
    }
    const int n = static_cast<int>(part.size());

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int w = u + 1; w <= n; ++w) {
            if (part[static_cast<std::size_t>(u - 1)] == part[static_cast<std::size_t>(w - 1)])
                continue;
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < density)
                edges.emplace_back(u, w);
        }
    }
    return RPartiteGraph(n, r, std::move(part), std::move(edges));
}

} // namespace carc
