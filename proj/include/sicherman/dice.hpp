#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sicherman/polyint.hpp"

namespace sicherman {

using Label = std::uint64_t;

// A physical die: a nonempty multiset of positive labels, kept sorted.
class Die {
public:
    // Throws InvalidArgument on an empty list or a label of 0.
    explicit Die(std::vector<Label> labels);

    // Faces 1..m.
    static Die standard(std::size_t m);
    // Comma-separated positive integers, e.g. "1,2,2,3,3,4".
    static Die parse(std::string_view text);

    std::size_t size() const noexcept { return labels_.size(); }
    std::span<const Label> labels() const noexcept { return labels_; }
    Label min_label() const noexcept { return labels_.front(); }
    Label max_label() const noexcept { return labels_.back(); }

    std::string to_string() const;

    // Lexicographic on the sorted label sequence; the canonical order for pairs.
    friend auto operator<=>(const Die&, const Die&) = default;
    friend bool operator==(const Die&, const Die&) = default;

private:
    std::vector<Label> labels_;
};

// Generating function: the coefficient of x^j counts faces labeled j.
IntPoly die_to_poly(const Die& d);
// Throws NegativeCoefficient, NonzeroConstantTerm, or InvalidArgument (zero polynomial).
Die poly_to_die(const IntPoly& p);

// Sum value -> number of face tuples with that sum.
using SumHistogram = std::map<std::uint64_t, std::uint64_t>;

// Exact sum frequencies by walking every face tuple. Never multiplies
// polynomials; it is the reference the algebraic route is checked against.
SumHistogram sum_histogram(std::span<const Die> dice);

bool histogram_matches_poly(const SumHistogram& h, const IntPoly& f);

}  // namespace sicherman
