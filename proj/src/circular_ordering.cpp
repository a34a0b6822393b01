#include "carc/circular_ordering.hpp"

#include <numeric>
#include <sstream>

#include "carc/error.hpp"

namespace carc {

CircularOrdering::CircularOrdering(std::vector<int> seq) : seq_(std::move(seq)) {
    const int n = size();
    pos_.assign(seq_.size(), 0);
    for (int p = 1; p <= n; ++p) {
        const int v = seq_[static_cast<std::size_t>(p - 1)];
        if (v < 1 || v > n) {
            std::ostringstream os;
            os << "ordering entry " << v << " outside 1.." << n;
            throw Error(Errc::invalid_ordering, os.str());
        }
        auto& slot = pos_[static_cast<std::size_t>(v - 1)];
        if (slot != 0) {
            std::ostringstream os;
            os << "vertex " << v << " appears twice in ordering";
            throw Error(Errc::invalid_ordering, os.str());
        }
        slot = p;
    }
}

CircularOrdering CircularOrdering::identity(int n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    return CircularOrdering(std::move(seq));
}

CircularOrdering CircularOrdering::rotated(int first) const {
    const int n = size();
    if (first < 1 || first > n)
        throw Error(Errc::invalid_position, "rotation start out of range");
    std::vector<int> seq;
    seq.reserve(seq_.size());
    for (int k = 0; k < n; ++k)
        seq.push_back(at((first - 1 + k) % n + 1));
    return CircularOrdering(std::move(seq));
}

} // namespace carc
