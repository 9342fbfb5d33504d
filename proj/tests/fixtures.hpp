#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sicherman/solver.hpp"

namespace fixtures {

using namespace sicherman;
using VectorPair = std::pair<ExponentVector, ExponentVector>;

inline VectorPair unordered(ExponentVector a, ExponentVector b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

inline std::set<VectorPair> vector_pairs(const std::vector<SolutionPair>& pairs) {
    std::set<VectorPair> out;
    for (const auto& p : pairs) out.insert(unordered(p.left.vector, p.right.vector));
    return out;
}

using Row = std::pair<std::array<int, 4>, std::array<int, 4>>;

// Surviving (c_p, c_{p^2}, c_pq, c_{p^2 q}) pairs for m = p^2 q.
inline const std::vector<Row> kP2QRows{
    {{1, 1, 0, 0}, {1, 1, 2, 2}}, {{1, 1, 0, 1}, {1, 1, 2, 1}}, {{1, 1, 1, 0}, {1, 1, 1, 2}},
    {{2, 0, 1, 0}, {0, 2, 1, 2}}, {{2, 0, 1, 1}, {0, 2, 1, 1}}, {{2, 0, 2, 0}, {0, 2, 0, 2}},
    {{2, 0, 2, 1}, {0, 2, 0, 1}}, {{1, 1, 1, 1}, {1, 1, 1, 1}},
};

// Surviving (c_pq, c_pr, c_qr, c_pqr) pairs for m = pqr, up to relabeling the primes.
inline const std::vector<Row> kPQRRows{
    {{1, 0, 0, 0}, {1, 2, 2, 2}}, {{1, 1, 0, 0}, {1, 1, 2, 2}}, {{1, 1, 0, 1}, {1, 1, 2, 1}},
    {{2, 1, 0, 1}, {0, 1, 2, 1}}, {{1, 1, 1, 1}, {1, 1, 1, 1}},
};

inline std::set<VectorPair> p2q_table(std::uint64_t p, std::uint64_t q) {
    std::set<VectorPair> out;
    for (const auto& [l, r] : kP2QRows) out.insert(unordered(ExponentVector::p2q(p, q, l), ExponentVector::p2q(p, q, r)));
    return out;
}

// Every row under every ordering of the three primes.
inline std::set<VectorPair> pqr_table(std::array<std::uint64_t, 3> primes) {
    std::set<VectorPair> out;
    std::sort(primes.begin(), primes.end());
    do {
        auto [p, q, r] = primes;
        for (const auto& [l, rr] : kPQRRows) {
            out.insert(unordered(ExponentVector::pqr(p, q, r, l), ExponentVector::pqr(p, q, r, rr)));
        }
    } while (std::next_permutation(primes.begin(), primes.end()));
    return out;
}

// Index d of a factor (1 - x^d), written in terms of the primes.
enum class Term { One, P, Q, R, P2, PQ, PR, QR, P2Q, PQR };

inline std::uint64_t resolve(Term t, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    switch (t) {
        case Term::One: return 1;
        case Term::P: return p;
        case Term::Q: return q;
        case Term::R: return r;
        case Term::P2: return p * p;
        case Term::PQ: return p * q;
        case Term::PR: return p * r;
        case Term::QR: return q * r;
        case Term::P2Q: return p * p * q;
        case Term::PQR: return p * q * r;
    }
    return 0;
}

// A candidate's cyclotomic product rewritten as prod (1 - x^d)^e; a negative
// e stands for a geometric series.
struct SeriesForm {
    std::string name;
    CertificateShape shape;
    std::array<int, 4> tuple;
    std::vector<std::pair<Term, int>> factors;
};

inline const std::vector<SeriesForm> kSeriesForms{
    {"A1102", CertificateShape::P2Q, {1, 1, 0, 2},
     {{Term::Q, 1}, {Term::P, 2}, {Term::P2Q, 2}, {Term::One, -2}, {Term::P2, -1}, {Term::PQ, -2}}},
    {"A2022", CertificateShape::P2Q, {2, 0, 2, 2},
     {{Term::P, 2}, {Term::P2Q, 2}, {Term::One, -1}, {Term::Q, -1}, {Term::P2, -2}}},
    {"A2012", CertificateShape::P2Q, {2, 0, 1, 2},
     {{Term::P, 3}, {Term::P2Q, 2}, {Term::One, -2}, {Term::P2, -2}, {Term::PQ, -1}}},
    {"A0222", CertificateShape::PQR, {0, 2, 2, 2},
     {{Term::P, 1}, {Term::Q, 1}, {Term::PQR, 2}, {Term::One, -1}, {Term::R, -1}, {Term::PQ, -2}}},
    {"A0122", CertificateShape::PQR, {0, 1, 2, 2},
     {{Term::P, 2}, {Term::Q, 1}, {Term::PQR, 2}, {Term::One, -2}, {Term::PR, -1}, {Term::PQ, -2}}},
    {"A2001", CertificateShape::PQR, {2, 0, 0, 1},
     {{Term::R, 2}, {Term::PQ, 1}, {Term::PQR, 1}, {Term::One, -2}, {Term::PR, -1}, {Term::QR, -1}}},
    {"A1112", CertificateShape::PQR, {1, 1, 1, 2},
     {{Term::P, 1}, {Term::Q, 1}, {Term::R, 1}, {Term::PQR, 2}, {Term::One, -2}, {Term::PQ, -1}, {Term::PR, -1},
      {Term::QR, -1}}},
};

inline const std::vector<std::array<std::uint64_t, 2>> kP2QPrimes{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}, {5, 3}};
inline const std::vector<std::array<std::uint64_t, 3>> kPQRPrimes{{2, 3, 5}, {2, 5, 3}, {3, 2, 5}, {3, 5, 2},
                                                                    {5, 2, 3}, {5, 3, 2}, {2, 3, 7}};

struct SeriesCheck {
    bool equal;
    IntPoly series;
    IntPoly direct;
};

// Expands a series form through deg F = 2m and compares it with the direct
// cyclotomic product for the given primes (r ignored for p^2 q forms).
inline SeriesCheck check_series_form(const SeriesForm& form, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    ExponentVector v = form.shape == CertificateShape::P2Q ? ExponentVector::p2q(p, q, form.tuple)
                                                           : ExponentVector::pqr(p, q, r, form.tuple);
    std::uint64_t m = form.shape == CertificateShape::P2Q ? p * p * q : p * q * r;
    std::vector<SeriesFactor> factors;
    for (const auto& [t, e] : form.factors) factors.push_back({IntPoly::one_minus_x_pow(resolve(t, p, q, r)), e});
    CyclotomicCache cache;
    IntPoly direct = truncate(cyclotomic_product(v, cache), 2 * m);
    IntPoly series = truncated_series_product(factors, 2 * m);
    return {series == direct, series, direct};
}

}  // namespace fixtures
