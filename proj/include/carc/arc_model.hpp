#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "carc/circular_ordering.hpp"
#include "carc/graph.hpp"

namespace carc {

// Closed discrete arc on an n-hour clock, covering start, start+1, ..., end
// clockwise with wraparound. start == end + 1 (mod n) covers every marker.
struct ClockArc {
    int start = 1;
    int end = 1;

    friend bool operator==(const ClockArc&, const ClockArc&) = default;
};

struct ArcModel {
    int n_positions = 0;
    std::vector<ClockArc> arcs; // arcs[v-1] belongs to vertex v

    const ClockArc& arc(int v) const { return arcs[static_cast<std::size_t>(v - 1)]; }
    int vertex_count() const noexcept { return static_cast<int>(arcs.size()); }

    friend bool operator==(const ArcModel&, const ArcModel&) = default;
};

bool arc_contains(const ClockArc& a, int p, int n);
bool arcs_intersect(const ClockArc& a, const ClockArc& b, int n);

// m_i: start of the arc built for the vertex on marker i.
int scan_anchor(const RPartiteGraph& g, const CircularOrdering& order, int i);

// Arc of seq(i) is [scan_anchor(i), i].
ArcModel build_model(const RPartiteGraph& g, const CircularOrdering& order);

struct ModelVerdict {
    bool pass = true;
    std::optional<std::pair<int, int>> offending; // vertex pair u < w
};

// Adjacency must equal intersection on every pair in different parts that
// are adjacent in the host graph; other pairs are unconstrained.
ModelVerdict validate_model(const RPartiteGraph& g, const ArcModel& m);

// Vertices sorted by clockwise endpoint. Throws Errc::duplicate_endpoint.
CircularOrdering extract_ordering(const ArcModel& m);

// Enlarges the clock so clockwise endpoints become distinct while keeping the
// intersection relation of every vertex pair. Throws Errc::normalization_failed
// if the rebuilt model would change any pair.
ArcModel normalize_model(const ArcModel& m);

// Throws unless every arc lies on the model's clock.
void check_model(const ArcModel& m);

} // namespace carc
