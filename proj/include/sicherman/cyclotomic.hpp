#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sicherman/polyint.hpp"

namespace sicherman {

// Small-integer number theory by trial division; arguments are at most a few
// hundred thousand.

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending by prime. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);
// Ascending, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
// The prime p when n = p^k with k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);
// Multiplicity of p in n.
unsigned valuation(std::uint64_t n, std::uint64_t p);

int mobius(std::uint64_t n);
std::uint64_t euler_totient(std::uint64_t n);

// Memoized cyclotomic polynomials, built from the Moebius product
//   phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
// as one exact division of the numerator product by the denominator product.
// One cache per problem instance; not shared between threads.
class CyclotomicCache {
public:
    const IntPoly& get(std::uint64_t n);
    std::size_t size() const noexcept { return table_.size(); }

private:
    std::map<std::uint64_t, IntPoly> table_;
};

// Uncached Moebius-product construction.
IntPoly cyclotomic(std::uint64_t n);
inline const IntPoly& cyclotomic(std::uint64_t n, CyclotomicCache& cache) { return cache.get(n); }

// Independent construction: (x^n - 1) divided exactly by phi_d for every
// proper divisor d, each built recursively the same way.
IntPoly cyclotomic_by_division(std::uint64_t n);

struct IdentityResult {
    std::string name;
    std::uint64_t instances = 0;
    bool passed = true;
    std::optional<std::string> counterexample;
};

struct IdentityReport {
    std::vector<IdentityResult> results;

    bool all_passed() const;
};

struct IdentitySuiteOptions {
    // Largest cyclotomic index touched by the classical identities.
    std::uint64_t bound = 30;
    // prod_{i<=k} phi_{p^i q} = phi_q(x^{p^k}) is checked for primes p, q up to
    // this value and every k up to lemma_max_k.
    std::uint64_t lemma_prime_bound = 13;
    unsigned lemma_max_k = 3;
    // phi_p phi_pq phi_pr phi_pqr = phi_p(x^{qr}) over ordered triples from here.
    std::vector<std::uint64_t> triple_lemma_primes{2, 3, 5, 7, 11};
};

IdentityReport check_identity_suite(std::uint64_t bound);
IdentityReport check_identity_suite(const IdentitySuiteOptions& options);

}  // namespace sicherman
