#pragma once

#include <cstdint>
#include <optional>

namespace sicherman {

// Number of solution dice of size p^k for n dice; n == nullopt means the
// number of dice is unbounded.
struct CountResult {
    unsigned k;
    std::optional<unsigned> n;
    std::uint64_t value;
};

// C(n, k) by multiplicative accumulation; throws CoefficientOverflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// C(2k - 1, k - 1).
std::uint64_t count_unbounded(unsigned k);
// [x^k] (1 + x + ... + x^n)^k.
std::uint64_t count_n_dice(unsigned n, unsigned k);
// sum_{i <= k/2} C(k, i) C(k - i, i), the central trinomial coefficient.
std::uint64_t count_two_dice_trinomial(unsigned k);

std::uint64_t triangular(std::uint64_t n);

// m^2 == a^2 (T_b + T_{b-1}) with b = m / a, cross-checked against the
// coefficients of the a*b^2-sided die from decompose(m, a): its first a*b
// powers carry a*T_b faces and the rest a*T_{b-1}. Throws NotADivisor.
bool check_triangular_identity(std::uint64_t m, std::uint64_t a);

}  // namespace sicherman
