#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "carc/arc_model.hpp"
#include "carc/circular_ordering.hpp"
#include "carc/graph.hpp"

namespace carc {

enum class SearchMode { sequential, parallel };

struct SearchLimits {
    int max_vertices = 12;
    SearchMode mode = SearchMode::sequential;
    unsigned threads = 0; // 0: hardware concurrency
};

struct Decision {
    bool yes = false;
    std::optional<CircularOrdering> ordering;
    std::optional<ArcModel> model;
    // Search nodes visited (partial orderings) for recognize; complete
    // orderings checked for recognize_bruteforce.
    std::uint64_t orderings_searched = 0;
    SearchMode mode = SearchMode::sequential;
    bool exhaustive = false;
};

// Backtracking over clock positions with forbidden-quadruple pruning.
// Sequential mode returns the lexicographically first passing ordering.
// Requires a complete host graph.
Decision recognize(const RPartiteGraph& g, const SearchLimits& limits = {});

// Every permutation in lexicographic order; n <= 9.
Decision recognize_bruteforce(const RPartiteGraph& g);

struct HarnessReport {
    bool gtc_exists = false;
    bool r_circular_exists = false;
    bool pattern_free_exists = false;
    std::uint64_t orderings_checked = 0;
    std::uint64_t passing_orderings = 0;
    std::uint64_t round_trips = 0;
    bool agree = true;
    std::string disagreement; // first trace, empty when agree
};

// All three characterizations over all n! orderings (n <= 10), plus the
// build -> validate -> extract -> re-verify round trip for every passing one.
HarnessReport equivalence_harness(const RPartiteGraph& g);

} // namespace carc
