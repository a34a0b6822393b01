#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "carc/gtc.hpp"

namespace carc {

// Role pairs of a quadruple i < j < k < l, in bit order of PatternConfig::edges.
enum class RolePair : std::uint8_t { ij, ik, il, jk, jl, kl };

inline constexpr std::array<std::array<int, 2>, 6> kRolePairs{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr std::uint8_t bit(RolePair p) { return std::uint8_t{1} << static_cast<int>(p); }

// A coloured four-vertex configuration. Colours are canonical
// (first-occurrence labels 0, 1, ...); absent edges are the complement of
// `edges` among the six role pairs.
struct PatternConfig {
    std::array<int, 4> colors{};
    std::uint8_t edges = 0;
    bool matches_a = false;
    bool matches_b = false;
    std::string figure; // "6", "7" or "14"
    int number = 0;     // position within the figure
    std::string label;  // `number` as a lower-case roman numeral

    int color_count() const;
    std::string id() const { return figure + "/" + label; }
    bool has(RolePair p) const { return (edges & bit(p)) != 0; }
};

// Every canonical configuration consistent with template A or B using at
// most `colors` colours (colors >= 2). Entries are ordered by group "6"
// (two colours), "7" (three), "14" (four), so the result for c is a
// prefix of the result for c + 1.
std::vector<PatternConfig> enumerate_catalog(int colors);

struct PatternMatch {
    std::size_t index = 0; // into enumerate_catalog(4)
    const PatternConfig* config = nullptr;
};

// Throws Errc::not_a_witness if w is not a genuine witness for (g, order).
PatternMatch classify_witness(const RPartiteGraph& g, const CircularOrdering& order,
                              const ViolationWitness& w);

// Canonical colouring + edge mask induced by four positions i < j < k < l.
PatternConfig induced_configuration(const RPartiteGraph& g, const CircularOrdering& order,
                                    const std::array<int, 4>& positions);

} // namespace carc
