#pragma once

#include <array>
#include <optional>
#include <vector>

#include "carc/circular_ordering.hpp"
#include "carc/graph.hpp"

namespace carc {

enum class Template { A, B };

char template_name(Template t) noexcept;

// An edge at positions p < q together with a blocker strictly inside (p, q)
// and a blocker in the wrap range (q..n] u [1..p).
//
//   inner: outside the part of seq(q) and not adjacent to seq(q)
//   outer: outside the part of seq(p) and not adjacent to seq(p)
//
// outer > q is a template-A quadruple (p, inner, q, outer); outer < p is a
// template-B quadruple (outer, p, inner, q).
struct ViolationWitness {
    int p = 0;
    int q = 0;
    int inner = 0;
    int outer = 0;

    Template kind() const noexcept { return outer > q ? Template::A : Template::B; }

    // The four positions in increasing order (roles i < j < k < l).
    std::array<int, 4> quadruple() const noexcept;

    friend auto operator<=>(const ViolationWitness&, const ViolationWitness&) = default;
};

struct GtcVerdict {
    bool pass = true;
    std::optional<ViolationWitness> witness;
};

// Throws Errc::invalid_ordering when the ordering does not range over g's vertices.
void require_compatible(const RPartiteGraph& g, const CircularOrdering& order);

// Generalized total-circular ordering check. On failure the witness is the
// lexicographically smallest (p, q, inner, outer).
GtcVerdict verify_gtc(const RPartiteGraph& g, const CircularOrdering& order);

// All template-A / template-B quadruples, ordered by (i, j, k, l) then A before B.
std::vector<ViolationWitness> scan_violations(const RPartiteGraph& g,
                                              const CircularOrdering& order);

bool is_witness(const RPartiteGraph& g, const CircularOrdering& order,
                const ViolationWitness& w);

} // namespace carc
