#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "carc/circular_ordering.hpp"

namespace carc {

using Vertex = int;
using Part = int;
using Edge = std::pair<Vertex, Vertex>;
using HostEdge = std::pair<Part, Part>;

// r-partite graph with vertices 1..n, parts 1..r and an optional host graph
// on the parts (absent means complete). Immutable once constructed.
class RPartiteGraph {
public:
    RPartiteGraph() = default;

    // Validates every invariant; throws carc::Error naming the offending element.
    RPartiteGraph(int n, int r, std::vector<Part> parts, std::vector<Edge> edges,
                  std::optional<std::vector<HostEdge>> host_edges = std::nullopt);

    int order() const noexcept { return n_; }
    int part_count() const noexcept { return r_; }

    Part part(Vertex v) const { return part_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Part>& parts() const noexcept { return part_; }

    bool adjacent(Vertex u, Vertex w) const {
        return adj_[index(u, w)] != 0;
    }
    bool same_part(Vertex u, Vertex w) const { return part(u) == part(w); }

    // Sorted lexicographically, each pair with u < w.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_complete_host() const noexcept { return !host_edges_.has_value(); }
    // Sorted, each pair with a < b; nullopt means K_r.
    const std::optional<std::vector<HostEdge>>& host_edges() const noexcept {
        return host_edges_;
    }
    bool host_allows(Part a, Part b) const;

    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v - 1)]; }

    // Pairs that may carry an edge: different parts, adjacent in the host.
    bool constrained_pair(Vertex u, Vertex w) const {
        return !same_part(u, w) && host_allows(part(u), part(w));
    }

    friend bool operator==(const RPartiteGraph&, const RPartiteGraph&) = default;

private:
    std::size_t index(Vertex u, Vertex w) const {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(w - 1);
    }

    int n_ = 0;
    int r_ = 1;
    std::vector<Part> part_;
    std::vector<Edge> edges_;
    std::optional<std::vector<HostEdge>> host_edges_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
};

// Symmetric 0/1 matrix with rows and columns indexed by clock position.
struct AdjacencyMatrix {
    CircularOrdering order;
    std::vector<std::vector<std::uint8_t>> bits; // bits[p-1][q-1]

    bool at(int p, int q) const {
        return bits[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] != 0;
    }
    int size() const noexcept { return static_cast<int>(bits.size()); }
};

AdjacencyMatrix adjacency_matrix(const RPartiteGraph& g, const CircularOrdering& order);

// The two worked examples: "fig1" and "fig2".
RPartiteGraph builtin_example(std::string_view name);

// Each host-allowed cross-part pair (u < w, lexicographic order) draws one
// value from std::mt19937_64(seed); the pair is an edge iff
// (draw >> 11) * 2^-53 < density. Vertices are numbered part by part.
RPartiteGraph random_rpartite(int r, const std::vector<int>& sizes, double density,
                              std::uint64_t seed);

} // namespace carc
