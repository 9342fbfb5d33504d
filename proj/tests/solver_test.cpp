#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "fixtures.hpp"
#include "sicherman/errors.hpp"
#include "sicherman/solver.hpp"

using namespace sicherman;

namespace {

using namespace fixtures;

void expect_sound(const Problem& problem, const std::vector<SolutionPair>& pairs) {
    CyclotomicCache cache;
    const IntPoly x = IntPoly::monomial(1, 1);
    for (const auto& p : pairs) {
        EXPECT_EQ(p.left.die.size(), problem.left_size());
        EXPECT_EQ(p.right.die.size(), problem.right_size());
        EXPECT_EQ(die_to_poly(p.left.die), p.left.poly);
        EXPECT_EQ(p.left.poly, x * cyclotomic_product(p.left.vector, cache));
        EXPECT_EQ(p.right.poly, x * cyclotomic_product(p.right.vector, cache));
        std::vector<Die> dice{p.left.die, p.right.die};
        EXPECT_TRUE(histogram_matches_poly(sum_histogram(dice), problem.freq()));
        // The two vectors split the multiplicities of the frequency polynomial.
        for (const auto& [d, mult] : problem.multiplicities()) {
            EXPECT_EQ(p.left.vector[d] + p.right.vector[d], mult) << d;
        }
    }
}

}  // namespace

TEST(Problem, FrequencyPolynomial) {
    EXPECT_EQ(frequency_poly(Problem::equal(6)), (IntPoly{0, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1}));
    EXPECT_EQ(Problem::equal(1).freq(), IntPoly::monomial(1, 2));
    EXPECT_EQ(Problem::mixed(2, 3).freq(), (IntPoly{0, 0, 1, 2, 2, 1}));
    EXPECT_EQ(Problem::equal(12).multiplicities(),
              (std::map<std::uint64_t, int>{{2, 2}, {3, 2}, {4, 2}, {6, 2}, {12, 2}}));
    EXPECT_EQ(Problem::mixed(2, 3).multiplicities(), (std::map<std::uint64_t, int>{{2, 1}, {3, 1}}));
}

TEST(Problem, InvalidInputs) {
    EXPECT_THROW(Problem::equal(0), InvalidArgument);
    EXPECT_THROW(Problem::mixed(0, 3), InvalidArgument);
    EXPECT_THROW(Problem::unequal(6, 5, 7), InvalidTargets);
    EXPECT_THROW(Problem::unequal(6, 0, 36), InvalidTargets);
    EXPECT_THROW(enumerate_mixed(Problem::equal(6)), InvalidArgument);
    EXPECT_THROW(enumerate_pairs(Problem::mixed(2, 3)), InvalidArgument);
    EXPECT_THROW(enumerate_unequal(Problem::equal(6)), InvalidArgument);
}

TEST(ExponentVector, TupleNotation) {
    auto v = ExponentVector::p2q(2, 3, {2, 0, 1, 2});
    EXPECT_EQ(v[2], 2);
    EXPECT_EQ(v[3], 1);
    EXPECT_EQ(v[4], 0);
    EXPECT_EQ(v[6], 1);
    EXPECT_EQ(v[12], 2);
    EXPECT_EQ(v.p2q_tuple(2, 3), (std::array<int, 4>{2, 0, 1, 2}));
    auto w = ExponentVector::pqr(2, 3, 5, {0, 1, 2, 2});
    EXPECT_EQ(w.pqr_tuple(2, 3, 5), (std::array<int, 4>{0, 1, 2, 2}));
    EXPECT_EQ(w.pqr_tuple(3, 5, 2), (std::array<int, 4>{2, 0, 1, 2}));
    EXPECT_EQ(ExponentVector(std::map<std::uint64_t, int>{{2, 1}, {3, 0}}), ExponentVector(std::map<std::uint64_t, int>{{2, 1}}));
    EXPECT_EQ(ExponentVector(std::map<std::uint64_t, int>{{2, 1}, {3, 0}}).to_string(), "(c2=1, c3=0)");
}

TEST(Solver, SichermanDice) {
    auto pairs = enumerate_pairs(Problem::equal(6));
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0].left.die, Die({1, 2, 2, 3, 3, 4}));
    EXPECT_EQ(pairs[0].right.die, Die({1, 3, 4, 5, 6, 8}));
    EXPECT_FALSE(pairs[0].is_standard());
    EXPECT_TRUE(pairs[1].is_standard());
    EXPECT_EQ(count_distinct_dice(pairs), 3u);
}

TEST(Solver, SmallSizes) {
    auto one = enumerate_pairs(Problem::equal(1));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].left.die, Die({1}));
    auto four = enumerate_pairs(Problem::equal(4));
    EXPECT_EQ(four.size(), 2u);
    EXPECT_EQ(count_distinct_dice(four), 3u);
    EXPECT_EQ(four[0].left.die, Die({1, 2, 2, 3}));
    EXPECT_EQ(four[0].right.die, Die({1, 3, 3, 5}));
}

TEST(Solver, PairCounts) {
    struct Case {
        std::uint64_t m;
        std::size_t pairs;
        std::size_t dice;
    };
    for (Case c : {Case{2, 1, 1}, Case{3, 1, 1}, Case{4, 2, 3}, Case{6, 2, 3}, Case{8, 4, 7}, Case{9, 2, 3},
                   Case{10, 2, 3}, Case{12, 8, 15}, Case{15, 2, 3}, Case{16, 10, 19}, Case{18, 8, 15},
                   Case{25, 2, 3}, Case{30, 13, 25}}) {
        Problem problem = Problem::equal(c.m);
        auto pairs = enumerate_pairs(problem);
        EXPECT_EQ(pairs.size(), c.pairs) << c.m;
        EXPECT_EQ(count_distinct_dice(pairs), c.dice) << c.m;
        expect_sound(problem, pairs);
    }
}

TEST(Solver, CanonicalOrdering) {
    auto pairs = enumerate_pairs(Problem::equal(12));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_LE(pairs[i].left.die, pairs[i].right.die);
        if (i) {
            EXPECT_LT(std::make_pair(pairs[i - 1].left.die, pairs[i - 1].right.die),
                      std::make_pair(pairs[i].left.die, pairs[i].right.die));
        }
    }
}

TEST(Solver, P2QVectorsMatchTable) {
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(12))), p2q_table(2, 3));
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(18))), p2q_table(3, 2));
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(20))), p2q_table(2, 5));
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(50))), p2q_table(5, 2));
}

TEST(Solver, PQRVectorsMatchTable) {
    auto table = pqr_table({2, 3, 5});
    EXPECT_EQ(table.size(), 13u);
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(30))), table);
    EXPECT_EQ(vector_pairs(enumerate_pairs(Problem::equal(42))), pqr_table({2, 3, 7}));
}

TEST(Solver, PruningMatchesFullCheck) {
    for (std::uint64_t m : {4, 6, 8, 12, 18, 30, 36}) {
        Problem problem = Problem::equal(m);
        for (const auto& c : evaluate_candidates(problem)) {
            // A positive (1 - x) power forces a negative coefficient.
            if (c.predicted_negative) {
                EXPECT_FALSE(c.nonnegative) << m << " " << c.left.to_string();
            }
        }
        SolveOptions unpruned;
        unpruned.prune_one_minus_x = false;
        SearchStats with, without;
        auto a = enumerate_pairs(problem, {}, &with);
        auto b = enumerate_pairs(problem, unpruned, &without);
        EXPECT_EQ(vector_pairs(a), vector_pairs(b)) << m;
        EXPECT_EQ(without.pruned, 0u);
        EXPECT_EQ(with.candidates, without.candidates);
        EXPECT_EQ(with.survivors, without.survivors);
        EXPECT_EQ(with.candidates, count_candidates(problem));
    }
}

TEST(Solver, SearchCap) {
    SolveOptions options;
    options.search_cap = 10;
    EXPECT_THROW(enumerate_pairs(Problem::equal(12), options), SearchCapExceeded);
    EXPECT_GT(count_candidates(Problem::equal(12)), 10u);
}

TEST(Solver, MixedSizes) {
    auto two_three = enumerate_mixed(Problem::mixed(2, 3));
    ASSERT_EQ(two_three.size(), 1u);
    EXPECT_TRUE(two_three[0].is_standard());

    auto two_eight = enumerate_mixed(Problem::mixed(2, 8));
    ASSERT_EQ(two_eight.size(), 3u);
    std::set<Die> small;
    for (const auto& p : two_eight) small.insert(p.left.die);
    EXPECT_EQ(small, (std::set<Die>{Die({1, 2}), Die({1, 3}), Die({1, 5})}));
    expect_sound(Problem::mixed(2, 8), two_eight);

    EXPECT_EQ(enumerate_mixed(Problem::mixed(3, 9)).size(), 2u);
}

TEST(Solver, MixedSizesCoprimeCounterexample) {
    // Coprime sizes 5 and 6 still admit a nonstandard relabeling.
    auto pairs = enumerate_mixed(Problem::mixed(6, 5));
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0].left.die, Die({1, 2, 2, 3, 3, 4}));
    EXPECT_EQ(pairs[0].right.die, Die({1, 3, 4, 5, 7}));
    std::vector<Die> dice{pairs[0].left.die, pairs[0].right.die};
    std::vector<Die> standard{Die::standard(6), Die::standard(5)};
    EXPECT_EQ(sum_histogram(dice), sum_histogram(standard));
}

TEST(Solver, UnequalSizes) {
    Problem problem = Problem::unequal(6, 4, 9);
    auto pairs = enumerate_unequal(problem);
    expect_sound(problem, pairs);
    std::set<std::pair<Die, Die>> found;
    for (const auto& p : pairs) found.insert({p.left.die, p.right.die});
    EXPECT_EQ(found, (std::set<std::pair<Die, Die>>{
                         {Die({1, 2, 2, 3}), Die({1, 3, 3, 5, 5, 5, 7, 7, 9})},
                         {Die({1, 2, 4, 5}), Die({1, 2, 3, 3, 4, 5, 5, 6, 7})},
                         {Die({1, 4, 4, 7}), Die({1, 2, 2, 3, 3, 3, 4, 4, 5})},
                     }));
    // x(1 + x)^2 times x(1 + x + x^2)^2 does not give two standard six-sided dice.
    EXPECT_FALSE(found.count({Die({1, 2, 2, 3}), Die({1, 2, 2, 3, 3, 3, 4, 4, 5})}));
}

TEST(Solver, UnequalDegenerateSplit) {
    auto pairs = enumerate_unequal(Problem::unequal(6, 1, 36));
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].left.die, Die({1}));
    EXPECT_EQ(die_to_poly(pairs[0].right.die) * IntPoly::monomial(1, 1), Problem::equal(6).freq());
}

TEST(Decompose, SixSplitTwo) {
    SolutionPair pair = decompose(6, 2);
    EXPECT_EQ(pair.left.die, Die::standard(2));
    EXPECT_EQ(pair.right.die, Die({1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 8, 8, 9, 10}));
    EXPECT_EQ(corollary_labels(6, 2), pair.right.die);
}

TEST(Decompose, EdgeSplits) {
    SolutionPair same = decompose(7, 7);
    EXPECT_EQ(same.left.die, Die::standard(7));
    EXPECT_EQ(same.right.die, Die::standard(7));
    EXPECT_EQ(corollary_labels(7, 7), Die::standard(7));

    SolutionPair one = decompose(6, 1);
    EXPECT_EQ(one.left.die, Die({1}));
    EXPECT_EQ(one.right.die.size(), 36u);

    EXPECT_EQ(corollary_labels(6, 3).size(), 12u);
    EXPECT_EQ(corollary_labels(6, 3), decompose(6, 3).right.die);

    EXPECT_THROW(decompose(6, 4), NotADivisor);
    EXPECT_THROW(decompose(6, 0), NotADivisor);
    EXPECT_THROW(corollary_labels(6, 5), NotADivisor);
}

TEST(Decompose, AllDivisorsAreSound) {
    for (std::uint64_t m = 1; m <= 24; ++m) {
        for (auto a : divisors(m)) {
            SolutionPair pair = decompose(m, a);
            EXPECT_EQ(pair.left.die.size(), a);
            EXPECT_EQ(pair.right.die.size(), m * m / a);
            EXPECT_EQ(corollary_labels(m, a), pair.right.die);
            std::vector<Die> dice{pair.left.die, pair.right.die};
            EXPECT_TRUE(histogram_matches_poly(sum_histogram(dice), Problem::equal(m).freq()));
        }
    }
}

TEST(OneMinusX, ClosedForms) {
    Problem p2q = Problem::equal(12);
    Problem pqr = Problem::equal(30);
    EXPECT_EQ(one_minus_x_exponent(ExponentVector::p2q(2, 3, {0, 2, 2, 2}), p2q), 1);
    EXPECT_EQ(one_minus_x_exponent(ExponentVector::pqr(2, 3, 5, {1, 1, 1, 1}), pqr), -1);
    EXPECT_EQ(one_minus_x_exponent(ExponentVector::pqr(2, 3, 5, {2, 2, 2, 0}), pqr), 3);
    EXPECT_THROW(one_minus_x_exponent(ExponentVector{}, Problem::equal(6)), UnsupportedShape);
    EXPECT_THROW(one_minus_x_exponent(ExponentVector{}, Problem::mixed(2, 6)), UnsupportedShape);
}

TEST(OneMinusX, ClosedFormsMatchMobiusSum) {
    for (std::uint64_t m : {12, 18, 20, 30, 42}) {
        Problem problem = Problem::equal(m);
        for (const auto& c : evaluate_candidates(problem)) {
            EXPECT_EQ(one_minus_x_exponent(c.left, problem), net_one_minus_x_exponent(c.left)) << m;
            EXPECT_EQ(one_minus_x_exponent(c.right, problem), net_one_minus_x_exponent(c.right)) << m;
        }
    }
}

TEST(Certificates, P2Q) {
    std::vector<std::uint64_t> primes{2, 3};
    auto certs = negative_certificates(CertificateShape::P2Q, primes);
    ASSERT_EQ(certs.size(), 3u);
    EXPECT_EQ(certs[0].name, "A1102");
    EXPECT_EQ(certs[1].name, "A2022");
    EXPECT_EQ(certs[2].name, "A2012");
    EXPECT_EQ(certs[2].witness, (NegativeWitness{3, -2}));
    for (const auto& c : certs) {
        EXPECT_LT(c.product[c.witness.power], 0);
        EXPECT_EQ(c.product[c.witness.power], c.witness.value);
    }
}

TEST(Certificates, PQR) {
    std::vector<std::uint64_t> primes{2, 3, 5};
    auto certs = negative_certificates(CertificateShape::PQR, primes);
    ASSERT_EQ(certs.size(), 4u);
    EXPECT_EQ(certs[0].name, "A0222");
    EXPECT_EQ(certs[1].name, "A0122");
    EXPECT_EQ(certs[2].name, "A2001");
    EXPECT_EQ(certs[3].name, "A1112");
    EXPECT_EQ(certs[0].vector, ExponentVector::pqr(2, 3, 5, {0, 2, 2, 2}));
}

TEST(Certificates, BadPrimes) {
    std::vector<std::uint64_t> two{2, 3}, three{2, 3, 5}, composite{2, 4}, repeated{3, 3, 5};
    EXPECT_THROW(negative_certificates(CertificateShape::PQR, two), InvalidArgument);
    EXPECT_THROW(negative_certificates(CertificateShape::P2Q, three), InvalidArgument);
    EXPECT_THROW(negative_certificates(CertificateShape::P2Q, composite), InvalidArgument);
    EXPECT_THROW(negative_certificates(CertificateShape::PQR, repeated), InvalidArgument);
}

TEST(Certificates, ManyPrimeChoices) {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (std::uint64_t q : {2, 3, 5, 7, 11}) {
            if (p == q) continue;
            std::vector<std::uint64_t> primes{p, q};
            EXPECT_NO_THROW(negative_certificates(CertificateShape::P2Q, primes)) << p << "," << q;
        }
    }
}

TEST(SeriesForms, AgreeWithDirectExpansion) {
    for (const auto& form : kSeriesForms) {
        if (form.shape == CertificateShape::P2Q) {
            for (auto [p, q] : kP2QPrimes) EXPECT_TRUE(check_series_form(form, p, q, 0).equal) << form.name << " " << p << q;
        } else {
            for (auto [p, q, r] : kPQRPrimes) {
                EXPECT_TRUE(check_series_form(form, p, q, r).equal) << form.name << " " << p << q << r;
            }
        }
    }
}

TEST(SeriesForms, DetectAWrongExponent) {
    SeriesForm broken = kSeriesForms[3];
    broken.factors.back().second = -1;
    EXPECT_FALSE(check_series_form(broken, 2, 3, 5).equal);
}
