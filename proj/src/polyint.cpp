#include "sicherman/polyint.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sicherman/errors.hpp"

namespace sicherman {

namespace checked {

Coeff add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}

Coeff sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}

Coeff mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}

}  // namespace checked

IntPoly::IntPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Coeff c) { return IntPoly(std::vector<Coeff>{c}); }

IntPoly IntPoly::monomial(Coeff c, std::size_t power) {
    std::vector<Coeff> v(power + 1, 0);
    v[power] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
    if (n == 0) return IntPoly{};
    std::vector<Coeff> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_x_pow(std::size_t n) {
    if (n == 0) return IntPoly{};
    std::vector<Coeff> v(n + 1, 0);
    v[0] = 1;
    v[n] = -1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::standard_die(std::size_t m) {
    std::vector<Coeff> v(m + 1, 1);
    v[0] = 0;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        Coeff c = coeffs_[j];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        // |INT64_MIN| is not representable; print it through the unsigned path.
        auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (mag != 1 || j == 0) os << mag;
        if (j >= 1) os << "x";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly add(const IntPoly& a, const IntPoly& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Coeff> out(std::max(x.size(), y.size()), 0);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked::add(a[j], b[j]);
    return IntPoly(std::move(out));
}

IntPoly negate(const IntPoly& a) {
    std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = checked::sub(0, c);
    return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked::sub(a[j], b[j]);
    return IntPoly(std::move(out));
}

IntPoly mul_truncated(const IntPoly& a, const IntPoly& b, std::size_t limit) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    const auto x = a.coeffs();
    const auto y = b.coeffs();
    std::size_t full = x.size() + y.size() - 1;
    std::size_t len = std::min(full, limit + 1);
    std::vector<Coeff> out(len, 0);
    for (std::size_t i = 0; i < x.size() && i < len; ++i) {
        if (x[i] == 0) continue;
        std::size_t jmax = std::min(y.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (y[j] == 0) continue;
            out[i + j] = checked::add(out[i + j], checked::mul(x[i], y[j]));
        }
    }
    return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    return mul_truncated(a, b, a.coeffs().size() + b.coeffs().size());
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly square = base;
    while (exponent > 0) {
        if (exponent & 1u) result = mul(result, square);
        exponent >>= 1;
        if (exponent > 0) square = mul(square, square);
    }
    return result;
}

IntPoly truncate(const IntPoly& a, std::size_t limit) {
    auto c = a.coeffs();
    if (c.size() <= limit + 1) return a;
    return IntPoly(std::vector<Coeff>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(limit + 1)));
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) {
        throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    }

    const auto divisor = b.coeffs();
    const std::size_t db = divisor.size() - 1;
    const Coeff lead = divisor[db];
    // Divisors here are mostly binomials x^d - 1 or short cyclotomics; only
    // walking the nonzero terms keeps long divisions linear in deg(a).
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < db; ++j) {
        if (divisor[j] != 0) support.push_back(j);
    }

    std::vector<Coeff> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Coeff> quot(rem.size() - db, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Coeff top = rem[k + db];
        if (top == 0) continue;
        if (top % lead != 0) {
            throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
        }
        Coeff q = top / lead;
        quot[k] = q;
        rem[k + db] = 0;
        for (std::size_t j : support) rem[k + j] = checked::sub(rem[k + j], checked::mul(q, divisor[j]));
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (rem[j] != 0) {
            throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
        }
    }
    return IntPoly(std::move(quot));
}

Coeff eval_at_one(const IntPoly& a) {
    Coeff s = 0;
    for (Coeff c : a.coeffs()) s = checked::add(s, c);
    return s;
}

IntPoly substitute_power(const IntPoly& a, std::size_t t) {
    if (t == 0) throw InvalidArgument("substitute_power requires t >= 1");
    if (a.is_zero() || t == 1) return a;
    const auto c = a.coeffs();
    std::vector<Coeff> out((c.size() - 1) * t + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) out[j * t] = c[j];
    return IntPoly(std::move(out));
}

NonnegativityCheck is_nonnegative(const IntPoly& a) {
    const auto c = a.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] < 0) return {false, NegativeWitness{j, c[j]}};
    }
    return {true, std::nullopt};
}

IntPoly series_inverse(const IntPoly& base, std::size_t limit) {
    const Coeff c0 = base[0];
    if (c0 != 1 && c0 != -1) {
        throw NonInvertibleSeries("series (" + base.to_string() +
                                  ") has no integer inverse: constant term must be +1 or -1");
    }
    const auto b = base.coeffs();
    std::vector<Coeff> inv(limit + 1, 0);
    inv[0] = c0;  // 1/c0 == c0 for a unit
    for (std::size_t n = 1; n <= limit; ++n) {
        Coeff acc = 0;
        std::size_t kmax = std::min(n, b.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (b[k] == 0 || inv[n - k] == 0) continue;
            acc = checked::add(acc, checked::mul(b[k], inv[n - k]));
        }
        inv[n] = checked::mul(checked::sub(0, acc), c0);
    }
    return IntPoly(std::move(inv));
}

IntPoly truncated_series_product(std::span<const SeriesFactor> factors, std::size_t limit) {
    IntPoly result = IntPoly::constant(1);
    for (const auto& f : factors) {
        IntPoly term = f.exponent < 0 ? series_inverse(f.base, limit) : truncate(f.base, limit);
        unsigned e = static_cast<unsigned>(f.exponent < 0 ? -f.exponent : f.exponent);
        for (unsigned i = 0; i < e; ++i) result = mul_truncated(result, term, limit);
    }
    return result;
}

}  // namespace sicherman
