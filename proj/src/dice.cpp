#include "sicherman/dice.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sicherman/errors.hpp"

namespace sicherman {

Die::Die(std::vector<Label> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidArgument("a die needs at least one face");
    std::sort(labels_.begin(), labels_.end());
    if (labels_.front() == 0) throw InvalidArgument("die labels must be positive");
}

Die Die::standard(std::size_t m) {
    std::vector<Label> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = i + 1;
    return Die(std::move(labels));
}

Die Die::parse(std::string_view text) {
    std::vector<Label> labels;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        Label value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || value == 0) {
            throw InvalidArgument("cannot parse die '" + std::string(text) +
                                  "': expected comma-separated positive integers");
        }
        labels.push_back(value);
        pos = comma + 1;
    }
    return Die(std::move(labels));
}

std::string Die::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << labels_[i];
    return os.str();
}

IntPoly die_to_poly(const Die& d) {
    std::vector<Coeff> c(d.max_label() + 1, 0);
    for (Label l : d.labels()) c[l] = checked::add(c[l], 1);
    return IntPoly(std::move(c));
}

Die poly_to_die(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("the zero polynomial is not a die");
    if (auto check = is_nonnegative(p); !check) {
        throw NegativeCoefficient("coefficient " + std::to_string(check.witness->value) + " at x^" +
                                  std::to_string(check.witness->power) + " cannot be a face count");
    }
    if (p[0] != 0) throw NonzeroConstantTerm();
    std::vector<Label> labels;
    const auto c = p.coeffs();
    for (std::size_t j = 1; j < c.size(); ++j) labels.insert(labels.end(), static_cast<std::size_t>(c[j]), j);
    return Die(std::move(labels));
}

SumHistogram sum_histogram(std::span<const Die> dice) {
    if (dice.empty()) throw InvalidArgument("sum_histogram needs at least one die");
    SumHistogram h;
    // Odometer over one face index per die.
    std::vector<std::size_t> face(dice.size(), 0);
    while (true) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < dice.size(); ++i) total += dice[i].labels()[face[i]];
        ++h[total];
        std::size_t i = 0;
        while (i < dice.size() && ++face[i] == dice[i].size()) face[i++] = 0;
        if (i == dice.size()) break;
    }
    return h;
}

bool histogram_matches_poly(const SumHistogram& h, const IntPoly& f) {
    std::size_t nonzero_terms = 0;
    for (Coeff c : f.coeffs()) nonzero_terms += (c != 0);
    std::size_t nonzero_counts = 0;
    for (const auto& [sum, count] : h) {
        if (count == 0) continue;
        ++nonzero_counts;
        if (f[sum] < 0 || static_cast<std::uint64_t>(f[sum]) != count) return false;
    }
    return nonzero_counts == nonzero_terms;
}

}  // namespace sicherman
