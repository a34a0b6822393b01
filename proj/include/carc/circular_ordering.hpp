#pragma once

#include <vector>

namespace carc {

// Vertices placed on the hour markers 1..n of an n-hour clock.
class CircularOrdering {
public:
    CircularOrdering() = default;

    // Throws Errc::invalid_ordering unless seq is a permutation of 1..n.
    explicit CircularOrdering(std::vector<int> seq);

    static CircularOrdering identity(int n);

    int size() const noexcept { return static_cast<int>(seq_.size()); }

    // Vertex on hour marker p (1-based).
    int at(int p) const { return seq_[static_cast<std::size_t>(p - 1)]; }
    // Hour marker of vertex v (1-based).
    int position(int v) const { return pos_[static_cast<std::size_t>(v - 1)]; }

    const std::vector<int>& sequence() const noexcept { return seq_; }

    // Same cyclic sequence started at hour marker `first`.
    CircularOrdering rotated(int first) const;

    friend bool operator==(const CircularOrdering& a, const CircularOrdering& b) {
        return a.seq_ == b.seq_;
    }

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

} // namespace carc
