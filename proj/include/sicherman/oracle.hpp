#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sicherman/dice.hpp"

namespace sicherman {

struct SearchConfig {
    Label max_label;
    std::uint64_t max_nodes = 50'000'000;

    // Labels above 2m - 1 would produce sums past 2m.
    static SearchConfig for_sides(std::uint64_t m) { return SearchConfig{2 * m - 1}; }
};

// A pair of dice. Equal-size search results keep left <= right.
struct DicePair {
    Die left;
    Die right;

    friend auto operator<=>(const DicePair&, const DicePair&) = default;
    friend bool operator==(const DicePair&, const DicePair&) = default;
};

// Every unordered pair of m-sided dice with labels in [1, max_label] whose
// face sums are distributed like two standard m-sided dice. Works on face
// counts only; no polynomial arithmetic. Throws BudgetExceeded.
std::vector<DicePair> brute_force_pairs(std::uint64_t m, const SearchConfig& config);
std::vector<DicePair> brute_force_pairs(std::uint64_t m);

bool verify_pair_against_standard(const Die& d1, const Die& d2, std::uint64_t m);

struct SweepEntry {
    std::uint64_t r;
    std::uint64_t s;
    std::size_t pairs;
    std::vector<DicePair> nontrivial;  // left is the r-sided die here
};

struct SweepReport {
    std::uint64_t bound;
    std::vector<SweepEntry> entries;

    std::size_t nontrivial_total() const;
};

// Runs the mixed-size solver on every coprime (r, s) with 2 <= r < s <= bound.
// The result is an observation about small sizes, not a proof.
SweepReport conjecture_sweep(std::uint64_t bound);

}  // namespace sicherman
