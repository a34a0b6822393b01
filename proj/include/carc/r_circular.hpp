#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "carc/circular_ordering.hpp"
#include "carc/graph.hpp"

namespace carc {

// Anticlockwise scan of one row (or column) of the position-indexed
// adjacency matrix. Zeros in the owner's own part are skipped; the scan
// stops at the first zero in another part.
struct ScanResult {
    int owner = 0;
    std::optional<int> anchor;   // first out-of-part position anticlockwise
    std::vector<int> reached;    // positions of the collected 1s, scan order
    std::optional<int> terminal; // start of the owner's arc; set iff reached is nonempty
    bool wrapped = false;        // every out-of-part position is a 1

    bool covers(int p) const;
};

// Positions' parts are taken from g; bits come from the matrix.
ScanResult scan_row(const AdjacencyMatrix& m, const RPartiteGraph& g, int i);
ScanResult scan_column(const AdjacencyMatrix& m, const RPartiteGraph& g, int j);

ScanResult row_scan(const RPartiteGraph& g, const CircularOrdering& order, int i);

struct CoverageVerdict {
    bool pass = true;
    std::optional<std::pair<int, int>> uncovered; // positions p < q
};

// Every 1 of the matrix lies in some W_i or Q_j.
CoverageVerdict verify_r_circular(const RPartiteGraph& g, const CircularOrdering& order);

} // namespace carc
