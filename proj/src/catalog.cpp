#include "carc/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "carc/error.hpp"

namespace carc {

namespace {

using Colors = std::array<int, 4>;

constexpr int kAllPairs = 6;

std::string roman(int value) {
    static const std::pair<int, const char*> table[] = {
        {10, "x"}, {9, "ix"}, {5, "v"}, {4, "iv"}, {1, "i"}};
    std::string out;
    for (auto [v, s] : table)
        while (value >= v) {
            out += s;
            value -= v;
        }
    return out;
}

// One labelled family: a template, a fixed colouring and the pairs whose
// presence is left open. Members are numbered by subsets of `free` in
// (popcount, mask) order starting at `first`.
struct Family {
    Template base;
    Colors colors;
    std::vector<RolePair> free;
    const char* figure;
    int first;
    std::uint8_t skip_mask = 0xff; // subset already labelled by another family
};

const std::vector<Family>& families() {
    using enum RolePair;
    static const std::vector<Family> table{
        {Template::A, {0, 0, 1, 1}, {jl}, "6", 1},
        {Template::B, {0, 1, 1, 0}, {ik}, "6", 3},
        {Template::A, {0, 1, 2, 1}, {ij, kl}, "7", 1},
        {Template::B, {0, 1, 0, 2}, {jk, il}, "7", 5},
        {Template::A, {0, 0, 1, 2}, {jl, kl}, "7", 9},
        {Template::B, {0, 1, 1, 2}, {ik, il}, "7", 13},
        {Template::A, {0, 1, 2, 2}, {ij, jl}, "7", 21},
        {Template::B, {0, 1, 2, 0}, {jk, ik}, "7", 25},
        {Template::A, {0, 1, 2, 3}, {ij, kl, jl}, "14", 1},
        {Template::B, {0, 1, 2, 3}, {jk, il, ik}, "14", 9, 0b100},
    };
    return table;
}

std::vector<std::uint8_t> subset_order(std::size_t free_count, std::uint8_t skip) {
    std::vector<std::uint8_t> masks;
    for (unsigned m = 0; m < (1u << free_count); ++m)
        if (m != skip)
            masks.push_back(static_cast<std::uint8_t>(m));
    std::stable_sort(masks.begin(), masks.end(), [](std::uint8_t a, std::uint8_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    return masks;
}

int figure_rank(const std::string& f) { return f == "6" ? 0 : f == "7" ? 1 : 2; }

Colors canonical(const Colors& raw) {
    Colors out{};
    std::map<int, int> relabel;
    for (std::size_t r = 0; r < 4; ++r) {
        auto [it, inserted] = relabel.emplace(raw[r], static_cast<int>(relabel.size()));
        out[r] = it->second;
    }
    return out;
}

bool same_color(const Colors& c, int a, int b) {
    return c[static_cast<std::size_t>(a)] == c[static_cast<std::size_t>(b)];
}

// All edge masks consistent with a template under colouring c.
std::vector<std::uint8_t> template_members(Template t, const Colors& c) {
    using enum RolePair;
    // The required edge and both required non-edges join different parts.
    const RolePair required = t == Template::A ? ik : jl;
    const RolePair absent1 = t == Template::A ? jk : kl;
    const RolePair absent2 = t == Template::A ? il : ij;
    for (RolePair p : {required, absent1, absent2}) {
        const auto& rp = kRolePairs[static_cast<std::size_t>(p)];
        if (same_color(c, rp[0], rp[1]))
            return {};
    }
    std::vector<int> open;
    for (int p = 0; p < kAllPairs; ++p) {
        auto rp = static_cast<RolePair>(p);
        if (rp == required || rp == absent1 || rp == absent2)
            continue;
        const auto& pr = kRolePairs[static_cast<std::size_t>(p)];
        if (!same_color(c, pr[0], pr[1]))
            open.push_back(p);
    }
    std::vector<std::uint8_t> out;
    for (unsigned m = 0; m < (1u << open.size()); ++m) {
        std::uint8_t edges = bit(required);
        for (std::size_t b = 0; b < open.size(); ++b)
            if (m & (1u << b))
                edges |= static_cast<std::uint8_t>(1u << open[b]);
        out.push_back(edges);
    }
    return out;
}

void assign_label(PatternConfig& cfg) {
    const Template base = cfg.matches_a ? Template::A : Template::B;
    for (const auto& fam : families()) {
        if (fam.base != base || fam.colors != cfg.colors)
            continue;
        std::uint8_t sub = 0;
        std::uint8_t covered = bit(base == Template::A ? RolePair::ik : RolePair::jl);
        for (std::size_t b = 0; b < fam.free.size(); ++b) {
            covered |= bit(fam.free[b]);
            if (cfg.has(fam.free[b]))
                sub |= static_cast<std::uint8_t>(1u << b);
        }
        if ((cfg.edges & ~covered) != 0)
            break;
        const auto order = subset_order(fam.free.size(), fam.skip_mask);
        auto it = std::find(order.begin(), order.end(), sub);
        if (it == order.end())
            break;
        cfg.figure = fam.figure;
        cfg.number = fam.first + static_cast<int>(it - order.begin());
        cfg.label = roman(cfg.number);
        return;
    }
    throw std::logic_error("pattern catalog: unlabelled configuration");
}

std::vector<PatternConfig> build_full_catalog() {
    std::map<std::pair<Colors, std::uint8_t>, PatternConfig> found;
    // Restricted growth strings of length 4: every canonical colouring.
    for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= std::max(0, b) + 1; ++c)
            for (int d = 0; d <= std::max({0, b, c}) + 1; ++d) {
                const Colors colors{0, b, c, d};
                for (Template t : {Template::A, Template::B}) {
                    for (std::uint8_t edges : template_members(t, colors)) {
                        auto& cfg = found[{colors, edges}];
                        cfg.colors = colors;
                        cfg.edges = edges;
                        (t == Template::A ? cfg.matches_a : cfg.matches_b) = true;
                    }
                }
            }

    std::vector<PatternConfig> out;
    for (auto& [key, cfg] : found) {
        assign_label(cfg);
        out.push_back(cfg);
    }
    std::sort(out.begin(), out.end(), [](const PatternConfig& x, const PatternConfig& y) {
        const int fx = figure_rank(x.figure), fy = figure_rank(y.figure);
        return fx != fy ? fx < fy : x.number < y.number;
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].id() == out[i - 1].id())
            throw std::logic_error("pattern catalog: duplicate label " + out[i].id());
    return out;
}

const std::vector<PatternConfig>& full_catalog() {
    static const std::vector<PatternConfig> catalog = build_full_catalog();
    return catalog;
}

} // namespace

int PatternConfig::color_count() const {
    return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<PatternConfig> enumerate_catalog(int colors) {
    if (colors < 2)
        throw Error(Errc::invalid_argument, "pattern catalog needs at least 2 colours");
    std::vector<PatternConfig> out;
    for (const auto& cfg : full_catalog())
        if (cfg.color_count() <= colors)
            out.push_back(cfg);
    return out;
}

PatternConfig induced_configuration(const RPartiteGraph& g, const CircularOrdering& order,
                                    const std::array<int, 4>& positions) {
    Colors raw{};
    for (std::size_t r = 0; r < 4; ++r)
        raw[r] = g.part(order.at(positions[r]));
    PatternConfig cfg;
    cfg.colors = canonical(raw);
    for (int p = 0; p < kAllPairs; ++p) {
        const auto& rp = kRolePairs[static_cast<std::size_t>(p)];
        if (g.adjacent(order.at(positions[static_cast<std::size_t>(rp[0])]),
                       order.at(positions[static_cast<std::size_t>(rp[1])])))
            cfg.edges |= static_cast<std::uint8_t>(1u << p);
    }
    return cfg;
}

PatternMatch classify_witness(const RPartiteGraph& g, const CircularOrdering& order,
                              const ViolationWitness& w) {
    if (!is_witness(g, order, w)) {
        std::ostringstream os;
        os << "not a witness: base_edge=(" << w.p << "," << w.q << ") inner=" << w.inner
           << " outer=" << w.outer;
        throw Error(Errc::not_a_witness, os.str());
    }
    const PatternConfig induced = induced_configuration(g, order, w.quadruple());
    const auto& catalog = full_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (catalog[i].colors == induced.colors && catalog[i].edges == induced.edges)
            return {i, &catalog[i]};
    throw std::logic_error("pattern catalog: genuine witness without catalog entry");
}

} // namespace carc
