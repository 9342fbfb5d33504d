#include "sicherman/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sicherman/errors.hpp"

namespace sicherman {

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("factorize(0) is undefined");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t existing = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front().prime;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) throw InvalidArgument("valuation needs n >= 1 and p >= 2");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("mobius(0) is undefined");
    int sign = 1;
    for (const auto& pe : factorize(n)) {
        if (pe.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t euler_totient(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("euler_totient(0) is undefined");
    // Counted directly rather than from the factorization.
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cyclotomic index must be >= 1");
    IntPoly numerator = IntPoly::constant(1);
    IntPoly denominator = IntPoly::constant(1);
    for (std::uint64_t d : divisors(n)) {
        switch (mobius(n / d)) {
            case 1: numerator = mul(numerator, IntPoly::x_pow_minus_one(d)); break;
            case -1: denominator = mul(denominator, IntPoly::x_pow_minus_one(d)); break;
            default: break;
        }
    }
    return div_exact(numerator, denominator);
}

const IntPoly& CyclotomicCache::get(std::uint64_t n) {
    auto it = table_.find(n);
    if (it != table_.end()) return it->second;
    return table_.emplace(n, cyclotomic(n)).first->second;
}

IntPoly cyclotomic_by_division(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cyclotomic index must be >= 1");
    std::map<std::uint64_t, IntPoly> memo;
    std::function<const IntPoly&(std::uint64_t)> build = [&](std::uint64_t k) -> const IntPoly& {
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        IntPoly value = IntPoly::x_pow_minus_one(k);
        for (std::uint64_t d : divisors(k)) {
            if (d < k) value = div_exact(value, build(d));
        }
        return memo.emplace(k, std::move(value)).first->second;
    };
    return build(n);
}

bool IdentityReport::all_passed() const {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

namespace {

// Tallies instances of one identity and keeps the first failure.
class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& describe) {
        ++result_.instances;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    IdentityResult take() { return std::move(result_); }

private:
    IdentityResult result_;
};

std::string params(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

IdentityReport check_identity_suite(std::uint64_t bound) {
    IdentitySuiteOptions options;
    options.bound = bound;
    return check_identity_suite(options);
}

IdentityReport check_identity_suite(const IdentitySuiteOptions& options) {
    const std::uint64_t bound = options.bound;
    if (bound < 2) throw InvalidArgument("identity suite bound must be >= 2");

    CyclotomicCache cache;
    auto phi = [&](std::uint64_t n) -> const IntPoly& { return cache.get(n); };
    const auto primes = primes_up_to(bound);
    IdentityReport report;

    {
        Tally t("x^n - 1 = prod_{d|n} phi_d");
        for (std::uint64_t n = 1; n <= bound; ++n) {
            IntPoly prod = IntPoly::constant(1);
            for (auto d : divisors(n)) prod = mul(prod, phi(d));
            t.record(prod == IntPoly::x_pow_minus_one(n), [&] { return params({{"n", n}}); });
        }
        report.results.push_back(t.take());
    }
    {
        // The division-built phi_n must satisfy the Moebius product after
        // clearing denominators.
        Tally t("phi_n = prod_{d|n} (x^d - 1)^mu(n/d)");
        for (std::uint64_t n = 1; n <= bound; ++n) {
            IntPoly lhs = cyclotomic_by_division(n);
            IntPoly rhs = IntPoly::constant(1);
            for (auto d : divisors(n)) {
                int mu = mobius(n / d);
                if (mu == 1) rhs = mul(rhs, IntPoly::x_pow_minus_one(d));
                if (mu == -1) lhs = mul(lhs, IntPoly::x_pow_minus_one(d));
            }
            t.record(lhs == rhs, [&] { return params({{"n", n}}); });
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_p = 1 + x + ... + x^(p-1) = (x^p - 1)/(x - 1)");
        for (auto p : primes) {
            std::vector<Coeff> ones(p, 1);
            bool ok = phi(p) == IntPoly(ones) && mul(phi(p), IntPoly{-1, 1}) == IntPoly::x_pow_minus_one(p);
            t.record(ok, [&] { return params({{"p", p}}); });
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_{p^k m} = phi_{pm}(x^{p^(k-1)}), gcd(m,p)=1");
        for (auto p : primes) {
            for (unsigned k = 1; ipow(p, k) <= bound; ++k) {
                for (std::uint64_t m = 1; ipow(p, k) * m <= bound; ++m) {
                    if (m % p == 0) continue;
                    bool ok = phi(ipow(p, k) * m) == substitute_power(phi(p * m), ipow(p, k - 1));
                    t.record(ok, [&] { return params({{"p", p}, {"k", k}, {"m", m}}); });
                }
            }
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_m phi_{pm} = phi_m(x^p), p not dividing m");
        for (auto p : primes) {
            for (std::uint64_t m = 1; p * m <= bound; ++m) {
                if (m % p == 0) continue;
                bool ok = mul(phi(m), phi(p * m)) == substitute_power(phi(m), p);
                t.record(ok, [&] { return params({{"p", p}, {"m", m}}); });
            }
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_n(1) = p if n = p^k, else 1");
        for (std::uint64_t n = 2; n <= bound; ++n) {
            auto base = prime_power_base(n);
            Coeff expected = base ? static_cast<Coeff>(*base) : 1;
            t.record(eval_at_one(phi(n)) == expected, [&] { return params({{"n", n}}); });
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_{p^k q} (x^{p^k}-1)(x^{p^(k-1) q}-1) = (x^{p^(k-1)}-1)(x^{p^k q}-1)");
        for (auto p : primes) {
            for (auto q : primes) {
                if (p == q) continue;
                for (unsigned k = 1; ipow(p, k) * q <= bound; ++k) {
                    std::uint64_t pk = ipow(p, k);
                    std::uint64_t pk1 = ipow(p, k - 1);
                    IntPoly lhs = mul(mul(phi(pk * q), IntPoly::x_pow_minus_one(pk)),
                                      IntPoly::x_pow_minus_one(pk1 * q));
                    IntPoly rhs = mul(IntPoly::x_pow_minus_one(pk1), IntPoly::x_pow_minus_one(pk * q));
                    t.record(lhs == rhs, [&] { return params({{"p", p}, {"q", q}, {"k", k}}); });
                }
            }
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_pqr (x-1)(x^pq-1)(x^pr-1)(x^qr-1) = (x^p-1)(x^q-1)(x^r-1)(x^pqr-1)");
        for (auto p : primes) {
            for (auto q : primes) {
                for (auto r : primes) {
                    if (p == q || q == r || p == r || p * q * r > bound) continue;
                    auto b = [](std::uint64_t n) { return IntPoly::x_pow_minus_one(n); };
                    IntPoly lhs = phi(p * q * r) * b(1) * b(p * q) * b(p * r) * b(q * r);
                    IntPoly rhs = b(p) * b(q) * b(r) * b(p * q * r);
                    t.record(lhs == rhs, [&] { return params({{"p", p}, {"q", q}, {"r", r}}); });
                }
            }
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("prod_{i=0..k} phi_{p^i q} = phi_q(x^{p^k})");
        const auto lemma_primes = primes_up_to(options.lemma_prime_bound);
        for (auto p : lemma_primes) {
            for (auto q : lemma_primes) {
                if (p == q) continue;
                IntPoly prod = IntPoly::constant(1);
                for (unsigned k = 0; k <= options.lemma_max_k; ++k) {
                    prod = mul(prod, phi(ipow(p, k) * q));
                    bool ok = prod == substitute_power(phi(q), ipow(p, k));
                    t.record(ok, [&] { return params({{"p", p}, {"q", q}, {"k", k}}); });
                }
            }
        }
        report.results.push_back(t.take());
    }
    {
        Tally t("phi_p phi_pq phi_pr phi_pqr = phi_p(x^{qr})");
        const auto& ps = options.triple_lemma_primes;
        for (auto p : ps) {
            for (auto q : ps) {
                for (auto r : ps) {
                    if (p == q || q == r || p == r) continue;
                    IntPoly lhs = phi(p) * phi(p * q) * phi(p * r) * phi(p * q * r);
                    bool ok = lhs == substitute_power(phi(p), q * r);
                    t.record(ok, [&] { return params({{"p", p}, {"q", q}, {"r", r}}); });
                }
            }
        }
        report.results.push_back(t.take());
    }
    return report;
}

}  // namespace sicherman
