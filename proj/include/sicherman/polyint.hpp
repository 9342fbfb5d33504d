#pragma once

/*
 * Dense polynomials with exact 64-bit integer coefficients.
 *
 * coeffs()[j] is the coefficient of x^j. The representation is kept canonical:
 * the highest stored coefficient is nonzero, and the zero polynomial stores
 * nothing. Every arithmetic step is overflow-checked; an overflow throws
 * CoefficientOverflow instead of wrapping.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace sicherman {

using Coeff = std::int64_t;

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff sub(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
}  // namespace checked

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Coeff> coeffs);
    explicit IntPoly(std::vector<Coeff> coeffs);

    static IntPoly constant(Coeff c);
    // c * x^power
    static IntPoly monomial(Coeff c, std::size_t power);
    // x^n - 1
    static IntPoly x_pow_minus_one(std::size_t n);
    // 1 - x^n
    static IntPoly one_minus_x_pow(std::size_t n);
    // x + x^2 + ... + x^m, the generating function of a standard m-sided die.
    static IntPoly standard_die(std::size_t m);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    // Coefficient of x^power; zero beyond the degree.
    Coeff operator[](std::size_t power) const noexcept {
        return power < coeffs_.size() ? coeffs_[power] : 0;
    }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();

    std::vector<Coeff> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly negate(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
// Product with every term above x^limit dropped.
IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, std::size_t limit);
IntPoly pow(const IntPoly& base, unsigned exponent);
IntPoly truncate(const IntPoly& a, std::size_t limit);

// Quotient q with q * b == a. Throws DivisionByZero or NonExactDivision.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

Coeff eval_at_one(const IntPoly& a);

// x -> x^t
IntPoly substitute_power(const IntPoly& a, std::size_t t);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return sub(a, b); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

struct NegativeWitness {
    std::size_t power;
    Coeff value;

    friend bool operator==(const NegativeWitness&, const NegativeWitness&) = default;
};

struct NonnegativityCheck {
    bool nonnegative;
    // Lowest power carrying a negative coefficient, when there is one.
    std::optional<NegativeWitness> witness;

    explicit operator bool() const noexcept { return nonnegative; }
};

NonnegativityCheck is_nonnegative(const IntPoly& a);

// One factor base^exponent of a formal power series product. A negative
// exponent expands the base's multiplicative inverse as a series.
struct SeriesFactor {
    IntPoly base;
    int exponent;
};

// Expands prod(base^exponent) as a power series through x^limit inclusive.
// Throws NonInvertibleSeries when a base under a negative exponent has a
// constant term that is not a unit of the integers.
IntPoly truncated_series_product(std::span<const SeriesFactor> factors, std::size_t limit);

// 1 / base through x^limit.
IntPoly series_inverse(const IntPoly& base, std::size_t limit);

}  // namespace sicherman
