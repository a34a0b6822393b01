#include "carc/gtc.hpp"

#include "carc/error.hpp"

namespace carc {

namespace {

// The vertex on marker `y` is outside the part of the vertex on marker `x`
// and not adjacent to it.
bool blocks(const RPartiteGraph& g, const CircularOrdering& order, int x, int y) {
    const int vx = order.at(x);
    const int vy = order.at(y);
    return !g.same_part(vx, vy) && !g.adjacent(vx, vy);
}

bool edge_at(const RPartiteGraph& g, const CircularOrdering& order, int x, int y) {
    return g.adjacent(order.at(x), order.at(y));
}

} // namespace

char template_name(Template t) noexcept { return t == Template::A ? 'A' : 'B'; }

std::array<int, 4> ViolationWitness::quadruple() const noexcept {
    if (kind() == Template::A)
        return {p, inner, q, outer};
    return {outer, p, inner, q};
}

void require_compatible(const RPartiteGraph& g, const CircularOrdering& order) {
    if (order.size() != g.order())
        throw Error(Errc::invalid_ordering, "ordering does not range over the graph's vertices");
}

GtcVerdict verify_gtc(const RPartiteGraph& g, const CircularOrdering& order) {
    require_compatible(g, order);
    const int n = g.order();
    for (int p = 1; p <= n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            if (!edge_at(g, order, p, q))
                continue;
            int inner = 0;
            for (int b = p + 1; b < q && inner == 0; ++b)
                if (blocks(g, order, q, b))
                    inner = b;
            if (inner == 0)
                continue;
            int outer = 0;
            for (int d = 1; d < p && outer == 0; ++d)
                if (blocks(g, order, p, d))
                    outer = d;
            for (int d = q + 1; d <= n && outer == 0; ++d)
                if (blocks(g, order, p, d))
                    outer = d;
            if (outer != 0)
                return {false, ViolationWitness{p, q, inner, outer}};
        }
    }
    return {};
}

std::vector<ViolationWitness> scan_violations(const RPartiteGraph& g,
                                              const CircularOrdering& order) {
    require_compatible(g, order);
    const int n = g.order();
    std::vector<ViolationWitness> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (edge_at(g, order, i, k) && blocks(g, order, k, j) &&
                        blocks(g, order, i, l))
                        out.push_back({i, k, j, l});
                    if (edge_at(g, order, j, l) && blocks(g, order, l, k) &&
                        blocks(g, order, j, i))
                        out.push_back({j, l, k, i});
                }
    return out;
}

bool is_witness(const RPartiteGraph& g, const CircularOrdering& order,
                const ViolationWitness& w) {
    if (order.size() != g.order())
        return false;
    const int n = g.order();
    auto in_range = [n](int x) { return x >= 1 && x <= n; };
    if (!in_range(w.p) || !in_range(w.q) || !in_range(w.inner) || !in_range(w.outer))
        return false;
    if (!(w.p < w.inner && w.inner < w.q))
        return false;
    if (!(w.outer > w.q || w.outer < w.p))
        return false;
    return edge_at(g, order, w.p, w.q) && blocks(g, order, w.q, w.inner) &&
           blocks(g, order, w.p, w.outer);
}

} // namespace carc
