#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sicherman/cyclotomic.hpp"
#include "sicherman/dice.hpp"
#include "sicherman/polyint.hpp"

namespace sicherman {

// Two standard m-sided dice.
struct EqualSizes {
    std::uint64_t m;
};
// A standard m1-sided die with a standard m2-sided die.
struct MixedSizes {
    std::uint64_t m1;
    std::uint64_t m2;
};
// Two standard m-sided dice, re-split into dice of sizes s1 and s2 (s1 * s2 = m^2).
struct UnequalTargets {
    std::uint64_t m;
    std::uint64_t s1;
    std::uint64_t s2;
};

using SizeSpec = std::variant<EqualSizes, MixedSizes, UnequalTargets>;

// A two-dice instance and its expanded frequency polynomial.
class Problem {
public:
    static Problem equal(std::uint64_t m);
    static Problem mixed(std::uint64_t m1, std::uint64_t m2);
    // Throws InvalidTargets unless s1 * s2 == m^2.
    static Problem unequal(std::uint64_t m, std::uint64_t s1, std::uint64_t s2);

    const SizeSpec& sizes() const noexcept { return sizes_; }
    const IntPoly& freq() const noexcept { return freq_; }
    unsigned dice() const noexcept { return 2; }
    std::uint64_t left_size() const noexcept { return left_size_; }
    std::uint64_t right_size() const noexcept { return right_size_; }
    // Multiplicity of phi_d in freq for every d > 1 that occurs.
    const std::map<std::uint64_t, int>& multiplicities() const noexcept { return mult_; }

private:
    Problem(SizeSpec sizes, IntPoly freq, std::uint64_t left, std::uint64_t right,
            std::map<std::uint64_t, int> mult);

    SizeSpec sizes_;
    IntPoly freq_;
    std::uint64_t left_size_;
    std::uint64_t right_size_;
    std::map<std::uint64_t, int> mult_;
};

IntPoly frequency_poly(const Problem& problem);

// Exponent c_d of phi_d, keyed by divisor d > 1. Absent entries are zero.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::map<std::uint64_t, int> entries);

    // Vectors in the tuple notation of the p^2 q and pqr analyses. The
    // entries fixed by the size constraint (c_q = 1, or c_p = c_q = c_r = 1)
    // are filled in.
    static ExponentVector p2q(std::uint64_t p, std::uint64_t q, std::array<int, 4> c_p_p2_pq_p2q);
    static ExponentVector pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                              std::array<int, 4> c_pq_pr_qr_pqr);

    int operator[](std::uint64_t d) const;
    void set(std::uint64_t d, int c);
    const std::map<std::uint64_t, int>& entries() const noexcept { return entries_; }

    // (c_p, c_{p^2}, c_pq, c_{p^2 q})
    std::array<int, 4> p2q_tuple(std::uint64_t p, std::uint64_t q) const;
    // (c_pq, c_pr, c_qr, c_pqr)
    std::array<int, 4> pqr_tuple(std::uint64_t p, std::uint64_t q, std::uint64_t r) const;

    std::string to_string() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b);
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

private:
    // Zero entries are kept so every divisor of the instance shows up when
    // printed; comparisons ignore them.
    std::map<std::uint64_t, int> entries_;
};

struct Factor {
    ExponentVector vector;
    IntPoly poly;
    Die die;
};

// Two dice whose generating functions multiply to the frequency polynomial.
// For equal-size dice the pair is unordered and stored with left <= right;
// otherwise left is the die of the first requested size.
struct SolutionPair {
    Factor left;
    Factor right;

    bool is_standard() const;
};

struct SolveOptions {
    // Refuse searches with more candidate vectors than this.
    std::uint64_t search_cap = 1'000'000;
    // Skip candidates whose reduced rational form carries a positive power
    // of (1 - x) before checking coefficients.
    bool prune_one_minus_x = true;
};

struct SearchStats {
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
    std::uint64_t expanded = 0;
    std::uint64_t survivors = 0;
};

// Number of exponent vectors the search would visit.
std::uint64_t count_candidates(const Problem& problem);

std::vector<SolutionPair> enumerate_pairs(const Problem& problem, const SolveOptions& options = {},
                                          SearchStats* stats = nullptr);
std::vector<SolutionPair> enumerate_mixed(const Problem& problem, const SolveOptions& options = {},
                                          SearchStats* stats = nullptr);
std::vector<SolutionPair> enumerate_unequal(const Problem& problem, const SolveOptions& options = {},
                                            SearchStats* stats = nullptr);

// Every candidate of a problem with the prune prediction and the full
// coefficient verdict side by side.
struct CandidateOutcome {
    ExponentVector left;
    ExponentVector right;
    bool predicted_negative;  // some side has a positive (1 - x) exponent
    bool nonnegative;         // both sides expand with nonnegative coefficients
};
std::vector<CandidateOutcome> evaluate_candidates(const Problem& problem, const SolveOptions& options = {});

// Number of different dice over all pairs.
std::size_t count_distinct_dice(std::span<const SolutionPair> pairs);

// prod phi_d^{c_d}, without the leading factor x.
IntPoly cyclotomic_product(const ExponentVector& v, CyclotomicCache& cache);

// A standard a-sided die and the a*b^2-sided die completing two standard
// m-sided dice, b = m / a. Throws NotADivisor.
SolutionPair decompose(std::uint64_t m, std::uint64_t a);
// The a*b^2-sided die built straight from its label pattern.
Die corollary_labels(std::uint64_t m, std::uint64_t a);

// Net exponent of (1 - x) in the reduced rational form of x * prod phi_d^{c_d},
// from the closed forms for m = p^2 q and m = pqr. Throws UnsupportedShape
// for any other problem.
int one_minus_x_exponent(const ExponentVector& v, const Problem& problem);
// Same quantity for any vector: sum_d c_d * mu(d).
int net_one_minus_x_exponent(const ExponentVector& v);

enum class CertificateShape { P2Q, PQR };

// A cyclotomic product with an explicit negative coefficient.
struct Certificate {
    std::string name;  // e.g. "A1102"
    ExponentVector vector;
    IntPoly product;
    NegativeWitness witness;
};

// Expands each excluded candidate (A1102, A2022, A2012 for p^2 q with primes
// (p, q); A0222, A0122, A2001, A1112 for pqr with primes (p, q, r)) and
// reports its first negative coefficient. Throws CertificateMissing when an
// expansion is entirely nonnegative.
std::vector<Certificate> negative_certificates(CertificateShape shape, std::span<const std::uint64_t> primes);

}  // namespace sicherman
