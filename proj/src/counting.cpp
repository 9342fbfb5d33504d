#include "sicherman/counting.hpp"

#include "sicherman/errors.hpp"
#include "sicherman/polyint.hpp"
#include "sicherman/solver.hpp"

namespace sicherman {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // r * (n - i) / (i + 1) stays integral at every step.
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > static_cast<unsigned __int128>(INT64_MAX)) throw CoefficientOverflow();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t count_unbounded(unsigned k) {
    if (k == 0) throw InvalidArgument("exponent k must be >= 1");
    return binomial(2ull * k - 1, k - 1);
}

std::uint64_t count_n_dice(unsigned n, unsigned k) {
    if (n == 0 || k == 0) throw InvalidArgument("dice count and exponent must be >= 1");
    // Only coefficients up to x^k matter, so the power is taken truncated.
    IntPoly base(std::vector<Coeff>(n + 1, 1));
    IntPoly result = IntPoly::constant(1);
    IntPoly square = truncate(base, k);
    for (unsigned e = k; e > 0; e >>= 1) {
        if (e & 1u) result = mul_truncated(result, square, k);
        if (e > 1) square = mul_truncated(square, square, k);
    }
    return static_cast<std::uint64_t>(result[k]);
}

std::uint64_t count_two_dice_trinomial(unsigned k) {
    if (k == 0) throw InvalidArgument("exponent k must be >= 1");
    std::uint64_t total = 0;
    for (unsigned i = 0; i <= k / 2; ++i) {
        Coeff term = checked::mul(static_cast<Coeff>(binomial(k, i)), static_cast<Coeff>(binomial(k - i, i)));
        total = static_cast<std::uint64_t>(checked::add(static_cast<Coeff>(total), term));
    }
    return total;
}

std::uint64_t triangular(std::uint64_t n) {
    return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
}

bool check_triangular_identity(std::uint64_t m, std::uint64_t a) {
    if (m == 0 || a == 0 || m % a != 0) {
        throw NotADivisor(std::to_string(a) + " does not divide " + std::to_string(m));
    }
    const std::uint64_t b = m / a;
    const bool arithmetic = m * m == a * a * (triangular(b) + triangular(b - 1));

    // Faces on labels 1..ab and on the remaining labels of the big die.
    const IntPoly big = decompose(m, a).right.poly;
    std::uint64_t head = 0, tail = 0;
    const auto c = big.coeffs();
    for (std::size_t j = 1; j < c.size(); ++j) (j <= a * b ? head : tail) += static_cast<std::uint64_t>(c[j]);
    const bool structural = head == a * triangular(b) && tail == a * triangular(b - 1);

    return arithmetic && structural;
}

}  // namespace sicherman
