#include "carc/r_circular.hpp"

#include <algorithm>

#include "carc/error.hpp"
#include "carc/gtc.hpp"

namespace carc {

namespace {

template <typename Bit>
ScanResult scan_line(const AdjacencyMatrix& m, const RPartiteGraph& g, int owner, Bit bit) {
    const int n = m.size();
    if (owner < 1 || owner > n)
        throw Error(Errc::invalid_position, "scan position out of range");
    ScanResult s;
    s.owner = owner;
    const Part own = g.part(m.order.at(owner));
    bool stopped = false;
    for (int step = 1; step < n; ++step) {
        const int p = (owner - 1 - step + n) % n + 1;
        if (g.part(m.order.at(p)) == own)
            continue;
        if (!s.anchor)
            s.anchor = p;
        if (!bit(owner, p)) {
            stopped = true;
            break;
        }
        s.reached.push_back(p);
    }
    if (!s.reached.empty()) {
        s.wrapped = !stopped;
        s.terminal = s.wrapped ? owner % n + 1 : s.reached.back();
    }
    return s;
}

} // namespace

bool ScanResult::covers(int p) const {
    return std::find(reached.begin(), reached.end(), p) != reached.end();
}

ScanResult scan_row(const AdjacencyMatrix& m, const RPartiteGraph& g, int i) {
    return scan_line(m, g, i, [&](int row, int col) { return m.at(row, col); });
}

ScanResult scan_column(const AdjacencyMatrix& m, const RPartiteGraph& g, int j) {
    return scan_line(m, g, j, [&](int col, int row) { return m.at(row, col); });
}

ScanResult row_scan(const RPartiteGraph& g, const CircularOrdering& order, int i) {
    return scan_row(adjacency_matrix(g, order), g, i);
}

CoverageVerdict verify_r_circular(const RPartiteGraph& g, const CircularOrdering& order) {
    require_compatible(g, order);
    const auto m = adjacency_matrix(g, order);
    const int n = g.order();
    std::vector<ScanResult> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        rows.push_back(scan_row(m, g, i));
    auto row = [&](int p) -> const ScanResult& { return rows[static_cast<std::size_t>(p - 1)]; };

    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            if (!m.at(p, q))
                continue;
            // W_p or Q_q (the scan of column q equals the scan of row q).
            if (!row(p).covers(q) && !row(q).covers(p))
                return {false, std::pair{p, q}};
        }
    return {};
}

} // namespace carc
