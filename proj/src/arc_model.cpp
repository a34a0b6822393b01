#include "carc/arc_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "carc/error.hpp"

namespace carc {

namespace {

void require_position(int p, int n) {
    if (p < 1 || p > n) {
        std::ostringstream os;
        os << "position " << p << " outside 1.." << n;
        throw Error(Errc::invalid_position, os.str());
    }
}

// Clockwise distance from a to b on an n-hour clock.
int clockwise(int a, int b, int n) { return ((b - a) % n + n) % n; }

bool is_point(const ClockArc& a) { return a.start == a.end; }

} // namespace

bool arc_contains(const ClockArc& a, int p, int n) {
    require_position(p, n);
    require_position(a.start, n);
    require_position(a.end, n);
    return clockwise(a.start, p, n) <= clockwise(a.start, a.end, n);
}

bool arcs_intersect(const ClockArc& a, const ClockArc& b, int n) {
    return arc_contains(a, b.end, n) || arc_contains(b, a.end, n);
}

int scan_anchor(const RPartiteGraph& g, const CircularOrdering& order, int i) {
    const int n = g.order();
    if (order.size() != n)
        throw Error(Errc::invalid_ordering, "ordering does not range over the graph's vertices");
    require_position(i, n);

    const int owner = order.at(i);
    int m = i;
    for (int step = 1; step < n; ++step) {
        const int p = (i - 1 - step + n) % n + 1;
        const int v = order.at(p);
        if (g.same_part(owner, v))
            continue;
        if (!g.adjacent(owner, v))
            return m;
        m = p;
    }
    // Walked back to i: either nothing out of part, or every such vertex adjacent.
    return m == i ? i : i % n + 1;
}

ArcModel build_model(const RPartiteGraph& g, const CircularOrdering& order) {
    const int n = g.order();
    if (order.size() != n)
        throw Error(Errc::invalid_ordering, "ordering does not range over the graph's vertices");
    ArcModel model{n, std::vector<ClockArc>(static_cast<std::size_t>(n))};
    for (int i = 1; i <= n; ++i)
        model.arcs[static_cast<std::size_t>(order.at(i) - 1)] = {scan_anchor(g, order, i), i};
    return model;
}

void check_model(const ArcModel& m) {
    if (m.arcs.empty())
        return;
    if (m.n_positions < 1)
        throw Error(Errc::invalid_position, "model clock must have at least one position");
    for (const auto& a : m.arcs) {
        require_position(a.start, m.n_positions);
        require_position(a.end, m.n_positions);
    }
}

ModelVerdict validate_model(const RPartiteGraph& g, const ArcModel& m) {
    if (m.vertex_count() != g.order()) {
        std::ostringstream os;
        os << "model has " << m.vertex_count() << " arcs, graph has " << g.order() << " vertices";
        throw Error(Errc::vertex_set_mismatch, os.str());
    }
    check_model(m);
    const int n = g.order();
    for (int u = 1; u <= n; ++u)
        for (int w = u + 1; w <= n; ++w) {
            if (!g.constrained_pair(u, w))
                continue;
            if (g.adjacent(u, w) != arcs_intersect(m.arc(u), m.arc(w), m.n_positions))
                return {false, std::pair{u, w}};
        }
    return {};
}

CircularOrdering extract_ordering(const ArcModel& m) {
    check_model(m);
    std::vector<int> seq(m.arcs.size());
    std::iota(seq.begin(), seq.end(), 1);
    std::stable_sort(seq.begin(), seq.end(),
                     [&](int a, int b) { return m.arc(a).end < m.arc(b).end; });
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (m.arc(seq[k]).end == m.arc(seq[k - 1]).end) {
            std::ostringstream os;
            os << "duplicate clockwise endpoint " << m.arc(seq[k]).end << " (vertices "
               << seq[k - 1] << ", " << seq[k] << ")";
            throw Error(Errc::duplicate_endpoint, os.str());
        }
    }
    return CircularOrdering(std::move(seq));
}

ArcModel normalize_model(const ArcModel& m) {
    check_model(m);
    const int n = m.n_positions;
    const int count = m.vertex_count();

    std::vector<int> ends;
    for (const auto& a : m.arcs)
        ends.push_back(a.end);
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) == ends.end())
        return m;

    // Each marker becomes a block [starts][point arcs][ends]; vertex ids
    // break ties inside a group.
    std::vector<std::vector<int>> starts(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<int>> points(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<int>> finishes(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= count; ++v) {
        const auto& a = m.arc(v);
        if (is_point(a)) {
            points[static_cast<std::size_t>(a.start)].push_back(v);
        } else {
            starts[static_cast<std::size_t>(a.start)].push_back(v);
            finishes[static_cast<std::size_t>(a.end)].push_back(v);
        }
    }

    ArcModel out{0, std::vector<ClockArc>(static_cast<std::size_t>(count))};
    int slot = 0;
    for (int p = 1; p <= n; ++p) {
        for (int v : starts[static_cast<std::size_t>(p)])
            out.arcs[static_cast<std::size_t>(v - 1)].start = ++slot;
        const int zone = slot + 1;
        for (int v : points[static_cast<std::size_t>(p)])
            out.arcs[static_cast<std::size_t>(v - 1)] = {zone, ++slot};
        for (int v : finishes[static_cast<std::size_t>(p)])
            out.arcs[static_cast<std::size_t>(v - 1)].end = ++slot;
    }
    out.n_positions = slot;

    for (int u = 1; u <= count; ++u)
        for (int w = u + 1; w <= count; ++w)
            if (arcs_intersect(m.arc(u), m.arc(w), n) !=
                arcs_intersect(out.arc(u), out.arc(w), out.n_positions)) {
                std::ostringstream os;
                os << "normalization failed: intersection of vertices " << u << " and " << w
                   << " changed";
                throw Error(Errc::normalization_failed, os.str());
            }
    return out;
}

} // namespace carc
