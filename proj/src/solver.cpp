#include "sicherman/solver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sicherman/errors.hpp"

namespace sicherman {

// ---------------------------------------------------------------------------
// Problem

Problem::Problem(SizeSpec sizes, IntPoly freq, std::uint64_t left, std::uint64_t right,
                 std::map<std::uint64_t, int> mult)
    : sizes_(sizes), freq_(std::move(freq)), left_size_(left), right_size_(right), mult_(std::move(mult)) {}

namespace {

std::map<std::uint64_t, int> doubled_divisors(std::uint64_t m) {
    std::map<std::uint64_t, int> mult;
    for (auto d : divisors(m)) {
        if (d > 1) mult[d] = 2;
    }
    return mult;
}

}  // namespace

Problem Problem::equal(std::uint64_t m) {
    if (m == 0) throw InvalidArgument("die size must be >= 1");
    IntPoly die = IntPoly::standard_die(m);
    return Problem(EqualSizes{m}, mul(die, die), m, m, doubled_divisors(m));
}

Problem Problem::mixed(std::uint64_t m1, std::uint64_t m2) {
    if (m1 == 0 || m2 == 0) throw InvalidArgument("die sizes must be >= 1");
    std::map<std::uint64_t, int> mult;
    for (auto d : divisors(m1)) {
        if (d > 1) mult[d] += 1;
    }
    for (auto d : divisors(m2)) {
        if (d > 1) mult[d] += 1;
    }
    return Problem(MixedSizes{m1, m2}, mul(IntPoly::standard_die(m1), IntPoly::standard_die(m2)), m1, m2,
                   std::move(mult));
}

Problem Problem::unequal(std::uint64_t m, std::uint64_t s1, std::uint64_t s2) {
    if (m == 0) throw InvalidArgument("die size must be >= 1");
    unsigned __int128 product = static_cast<unsigned __int128>(s1) * s2;
    unsigned __int128 square = static_cast<unsigned __int128>(m) * m;
    if (s1 == 0 || s2 == 0 || product != square) {
        throw InvalidTargets("target sizes " + std::to_string(s1) + " x " + std::to_string(s2) +
                             " must multiply to " + std::to_string(m) + "^2");
    }
    IntPoly die = IntPoly::standard_die(m);
    return Problem(UnequalTargets{m, s1, s2}, mul(die, die), s1, s2, doubled_divisors(m));
}

IntPoly frequency_poly(const Problem& problem) { return problem.freq(); }

// ---------------------------------------------------------------------------
// ExponentVector

namespace {

std::map<std::uint64_t, int> nonzero(const std::map<std::uint64_t, int>& m) {
    std::map<std::uint64_t, int> out;
    for (const auto& [d, c] : m) {
        if (c != 0) out.emplace(d, c);
    }
    return out;
}

}  // namespace

ExponentVector::ExponentVector(std::map<std::uint64_t, int> entries) : entries_(std::move(entries)) {
    for (const auto& [d, c] : entries_) {
        if (d < 2) throw InvalidArgument("exponent vectors are indexed by divisors d > 1");
        if (c < 0) throw InvalidArgument("exponents must be nonnegative");
    }
}

ExponentVector ExponentVector::p2q(std::uint64_t p, std::uint64_t q, std::array<int, 4> c) {
    return ExponentVector({{p, c[0]}, {p * p, c[1]}, {q, 1}, {p * q, c[2]}, {p * p * q, c[3]}});
}

ExponentVector ExponentVector::pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::array<int, 4> c) {
    return ExponentVector(
        {{p, 1}, {q, 1}, {r, 1}, {p * q, c[0]}, {p * r, c[1]}, {q * r, c[2]}, {p * q * r, c[3]}});
}

int ExponentVector::operator[](std::uint64_t d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::set(std::uint64_t d, int c) {
    if (d < 2 || c < 0) throw InvalidArgument("exponent entry out of range");
    entries_[d] = c;
}

std::array<int, 4> ExponentVector::p2q_tuple(std::uint64_t p, std::uint64_t q) const {
    const auto& v = *this;
    return {v[p], v[p * p], v[p * q], v[p * p * q]};
}

std::array<int, 4> ExponentVector::pqr_tuple(std::uint64_t p, std::uint64_t q, std::uint64_t r) const {
    const auto& v = *this;
    return {v[p * q], v[p * r], v[q * r], v[p * q * r]};
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [d, c] : entries_) {
        os << (first ? "" : ", ") << "c" << d << "=" << c;
        first = false;
    }
    os << ")";
    return os.str();
}

bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return nonzero(a.entries_) == nonzero(b.entries_);
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return nonzero(a.entries_) <=> nonzero(b.entries_);
}

bool SolutionPair::is_standard() const {
    return left.die == Die::standard(left.die.size()) && right.die == Die::standard(right.die.size());
}

// ---------------------------------------------------------------------------
// Candidate walk

namespace {

// A group of divisors whose exponents are chosen together: either the powers
// of one prime (with a fixed exponent sum) or a single free divisor.
struct Slot {
    std::vector<std::uint64_t> divisors;
    std::vector<std::vector<int>> choices;
};

void compositions(const std::vector<int>& caps, int target, std::size_t at, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (at == caps.size()) {
        if (target == 0) out.push_back(current);
        return;
    }
    for (int c = 0; c <= std::min(caps[at], target); ++c) {
        current[at] = c;
        compositions(caps, target - c, at + 1, current, out);
    }
    current[at] = 0;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

// Exponent vectors with left-size constraint: for each prime p, the
// exponents of phi_{p^j} on the left sum to v_p(left size), since
// phi_{p^j}(1) = p and every other phi_d(1) = 1.
std::vector<Slot> build_slots(const Problem& problem) {
    const auto& mult = problem.multiplicities();
    const std::uint64_t left_size = problem.left_size();

    std::map<std::uint64_t, std::vector<std::uint64_t>> prime_groups;
    std::vector<Slot> slots;
    for (const auto& [d, cap] : mult) {
        if (auto p = prime_power_base(d)) {
            prime_groups[*p].push_back(d);
        } else {
            Slot s;
            s.divisors = {d};
            for (int c = 0; c <= cap; ++c) s.choices.push_back({c});
            slots.push_back(std::move(s));
        }
    }

    std::vector<Slot> groups;
    std::uint64_t covered = 1;
    for (auto& [p, ds] : prime_groups) {
        Slot s;
        s.divisors = ds;
        std::vector<int> caps;
        for (auto d : ds) caps.push_back(mult.at(d));
        int target = static_cast<int>(valuation(left_size, p));
        for (int t = 0; t < target; ++t) covered *= p;
        std::vector<int> current(caps.size(), 0);
        compositions(caps, target, 0, current, s.choices);
        groups.push_back(std::move(s));
    }
    // A prime of the left size that never occurs among the divisors makes the
    // size unreachable.
    if (covered != left_size) {
        Slot impossible;
        impossible.divisors = {};
        groups.push_back(std::move(impossible));
    }
    groups.insert(groups.end(), std::make_move_iterator(slots.begin()), std::make_move_iterator(slots.end()));
    return groups;
}

std::uint64_t count_slots(const std::vector<Slot>& slots) {
    std::uint64_t n = 1;
    for (const auto& s : slots) n = saturating_mul(n, s.choices.size());
    return n;
}

using LeafVisitor = std::function<void(const ExponentVector&, const IntPoly&, const ExponentVector&, const IntPoly&)>;

class Walker {
public:
    Walker(const Problem& problem, CyclotomicCache& cache, std::vector<Slot> slots)
        : problem_(problem), cache_(cache), slots_(std::move(slots)) {}

    void run(const LeafVisitor& visit) {
        if (count_slots(slots_) == 0) return;
        IntPoly x = IntPoly::monomial(1, 1);
        left_.clear();
        right_.clear();
        descend(0, x, x, visit);
    }

private:
    const IntPoly& phi_pow(std::uint64_t d, int k) {
        auto key = std::make_pair(d, k);
        auto it = powers_.find(key);
        if (it != powers_.end()) return it->second;
        return powers_.emplace(key, pow(cache_.get(d), static_cast<unsigned>(k))).first->second;
    }

    void descend(std::size_t at, const IntPoly& left, const IntPoly& right, const LeafVisitor& visit) {
        if (at == slots_.size()) {
            visit(ExponentVector(left_), left, ExponentVector(right_), right);
            return;
        }
        const Slot& slot = slots_[at];
        for (const auto& choice : slot.choices) {
            IntPoly l = left;
            IntPoly r = right;
            for (std::size_t i = 0; i < slot.divisors.size(); ++i) {
                std::uint64_t d = slot.divisors[i];
                int c = choice[i];
                int rest = problem_.multiplicities().at(d) - c;
                left_[d] = c;
                right_[d] = rest;
                if (c > 0) l = mul(l, phi_pow(d, c));
                if (rest > 0) r = mul(r, phi_pow(d, rest));
            }
            descend(at + 1, l, r, visit);
        }
        for (auto d : slot.divisors) {
            left_.erase(d);
            right_.erase(d);
        }
    }

    const Problem& problem_;
    CyclotomicCache& cache_;
    std::vector<Slot> slots_;
    std::map<std::pair<std::uint64_t, int>, IntPoly> powers_;
    std::map<std::uint64_t, int> left_;
    std::map<std::uint64_t, int> right_;
};

void enforce_cap(const std::vector<Slot>& slots, const SolveOptions& options) {
    std::uint64_t n = count_slots(slots);
    if (n > options.search_cap) {
        throw SearchCapExceeded("search would visit " + std::to_string(n) + " exponent vectors (cap " +
                                std::to_string(options.search_cap) + ")");
    }
}

std::vector<SolutionPair> solve(const Problem& problem, const SolveOptions& options, SearchStats* stats) {
    auto slots = build_slots(problem);
    enforce_cap(slots, options);

    CyclotomicCache cache;
    SearchStats local;
    const bool unordered = problem.left_size() == problem.right_size();
    std::map<std::pair<Die, Die>, SolutionPair> found;

    Walker walker(problem, cache, std::move(slots));
    walker.run([&](const ExponentVector& lv, const IntPoly& lp, const ExponentVector& rv, const IntPoly& rp) {
        ++local.candidates;
        if (options.prune_one_minus_x && (net_one_minus_x_exponent(lv) > 0 || net_one_minus_x_exponent(rv) > 0)) {
            ++local.pruned;
            return;
        }
        ++local.expanded;
        if (!is_nonnegative(lp) || !is_nonnegative(rp)) return;
        ++local.survivors;
        if (mul(lp, rp) != problem.freq()) {
            throw std::logic_error("factor pair does not reproduce the frequency polynomial");
        }
        SolutionPair pair{Factor{lv, lp, poly_to_die(lp)}, Factor{rv, rp, poly_to_die(rp)}};
        if (unordered && pair.right.die < pair.left.die) std::swap(pair.left, pair.right);
        auto key = std::make_pair(pair.left.die, pair.right.die);
        found.emplace(std::move(key), std::move(pair));
    });

    if (stats) *stats = local;
    std::vector<SolutionPair> out;
    out.reserve(found.size());
    for (auto& [key, pair] : found) out.push_back(std::move(pair));
    return out;
}

}  // namespace

std::uint64_t count_candidates(const Problem& problem) { return count_slots(build_slots(problem)); }

std::vector<SolutionPair> enumerate_pairs(const Problem& problem, const SolveOptions& options, SearchStats* stats) {
    if (!std::holds_alternative<EqualSizes>(problem.sizes())) {
        throw InvalidArgument("enumerate_pairs needs an equal-size problem");
    }
    return solve(problem, options, stats);
}

std::vector<SolutionPair> enumerate_mixed(const Problem& problem, const SolveOptions& options, SearchStats* stats) {
    if (!std::holds_alternative<MixedSizes>(problem.sizes())) {
        throw InvalidArgument("enumerate_mixed needs a mixed-size problem");
    }
    return solve(problem, options, stats);
}

std::vector<SolutionPair> enumerate_unequal(const Problem& problem, const SolveOptions& options,
                                            SearchStats* stats) {
    if (!std::holds_alternative<UnequalTargets>(problem.sizes())) {
        throw InvalidArgument("enumerate_unequal needs an unequal-targets problem");
    }
    return solve(problem, options, stats);
}

std::vector<CandidateOutcome> evaluate_candidates(const Problem& problem, const SolveOptions& options) {
    auto slots = build_slots(problem);
    enforce_cap(slots, options);
    CyclotomicCache cache;
    std::vector<CandidateOutcome> out;
    Walker walker(problem, cache, std::move(slots));
    walker.run([&](const ExponentVector& lv, const IntPoly& lp, const ExponentVector& rv, const IntPoly& rp) {
        bool predicted = net_one_minus_x_exponent(lv) > 0 || net_one_minus_x_exponent(rv) > 0;
        bool ok = is_nonnegative(lp) && is_nonnegative(rp);
        out.push_back({lv, rv, predicted, ok});
    });
    return out;
}

std::size_t count_distinct_dice(std::span<const SolutionPair> pairs) {
    std::vector<Die> dice;
    for (const auto& p : pairs) {
        dice.push_back(p.left.die);
        dice.push_back(p.right.die);
    }
    std::sort(dice.begin(), dice.end());
    return static_cast<std::size_t>(std::unique(dice.begin(), dice.end()) - dice.begin());
}

IntPoly cyclotomic_product(const ExponentVector& v, CyclotomicCache& cache) {
    IntPoly out = IntPoly::constant(1);
    for (const auto& [d, c] : v.entries()) {
        if (c > 0) out = mul(out, pow(cache.get(d), static_cast<unsigned>(c)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unequal sizes from a divisor

namespace {

void require_divisor(std::uint64_t m, std::uint64_t a) {
    if (m == 0 || a == 0 || m % a != 0) {
        throw NotADivisor(std::to_string(a) + " does not divide " + std::to_string(m));
    }
}

}  // namespace

SolutionPair decompose(std::uint64_t m, std::uint64_t a) {
    require_divisor(m, a);
    const IntPoly x = IntPoly::monomial(1, 1);
    const IntPoly xm1 = IntPoly::x_pow_minus_one(m);

    IntPoly left = IntPoly::standard_die(a);
    IntPoly right = div_exact(mul(x, mul(xm1, xm1)), mul(IntPoly::x_pow_minus_one(a), IntPoly::x_pow_minus_one(1)));

    if (mul(left, right) != Problem::equal(m).freq()) {
        throw std::logic_error("decompose: product differs from the frequency polynomial");
    }
    if (!is_nonnegative(right)) {
        throw std::logic_error("decompose: the large die has a negative coefficient");
    }

    ExponentVector lv, rv;
    for (auto d : divisors(m)) {
        if (d == 1) continue;
        int c = a % d == 0 ? 1 : 0;
        lv.set(d, c);
        rv.set(d, 2 - c);
    }
    return SolutionPair{Factor{lv, left, poly_to_die(left)}, Factor{rv, right, poly_to_die(right)}};
}

Die corollary_labels(std::uint64_t m, std::uint64_t a) {
    require_divisor(m, a);
    const std::uint64_t b = m / a;
    std::vector<Label> labels;
    auto repeat = [&](std::uint64_t from, std::uint64_t to, std::uint64_t times) {
        for (std::uint64_t v = from; v <= to; ++v) labels.insert(labels.end(), times, v);
    };
    for (std::uint64_t i = 1; i + 1 <= b; ++i) {
        repeat((i - 1) * a + 1, i * a, i);
        repeat(2 * m - (i + 1) * a + 1, 2 * m - a * i, i);
    }
    repeat(m - a + 1, m, b);
    return Die(std::move(labels));
}

// ---------------------------------------------------------------------------
// (1 - x) exponent

int net_one_minus_x_exponent(const ExponentVector& v) {
    int e = 0;
    for (const auto& [d, c] : v.entries()) e += c * mobius(d);
    return e;
}

int one_minus_x_exponent(const ExponentVector& v, const Problem& problem) {
    const auto* eq = std::get_if<EqualSizes>(&problem.sizes());
    if (!eq) throw UnsupportedShape("the closed (1 - x) exponent is defined for equal-size problems only");
    auto f = factorize(eq->m);
    if (f.size() == 2 && ((f[0].exponent == 2 && f[1].exponent == 1) || (f[0].exponent == 1 && f[1].exponent == 2))) {
        std::uint64_t p = f[0].exponent == 2 ? f[0].prime : f[1].prime;
        std::uint64_t q = f[0].exponent == 2 ? f[1].prime : f[0].prime;
        return v[p * q] - v[p] - 1;
    }
    if (f.size() == 3 && f[0].exponent == 1 && f[1].exponent == 1 && f[2].exponent == 1) {
        std::uint64_t p = f[0].prime, q = f[1].prime, r = f[2].prime;
        return v[p * q] + v[p * r] + v[q * r] - v[p * q * r] - 3;
    }
    throw UnsupportedShape("m = " + std::to_string(eq->m) + " is neither p^2 q nor pqr");
}

// ---------------------------------------------------------------------------
// Negative-coefficient certificates

std::vector<Certificate> negative_certificates(CertificateShape shape, std::span<const std::uint64_t> primes) {
    const std::size_t needed = shape == CertificateShape::P2Q ? 2 : 3;
    if (primes.size() != needed) {
        throw InvalidArgument("expected " + std::to_string(needed) + " primes");
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw InvalidArgument(std::to_string(primes[i]) + " is not prime");
        for (std::size_t j = 0; j < i; ++j) {
            if (primes[i] == primes[j]) throw InvalidArgument("primes must be distinct");
        }
    }

    std::vector<std::pair<std::string, ExponentVector>> excluded;
    if (shape == CertificateShape::P2Q) {
        auto p = primes[0], q = primes[1];
        excluded = {{"A1102", ExponentVector::p2q(p, q, {1, 1, 0, 2})},
                    {"A2022", ExponentVector::p2q(p, q, {2, 0, 2, 2})},
                    {"A2012", ExponentVector::p2q(p, q, {2, 0, 1, 2})}};
    } else {
        auto p = primes[0], q = primes[1], r = primes[2];
        excluded = {{"A0222", ExponentVector::pqr(p, q, r, {0, 2, 2, 2})},
                    {"A0122", ExponentVector::pqr(p, q, r, {0, 1, 2, 2})},
                    {"A2001", ExponentVector::pqr(p, q, r, {2, 0, 0, 1})},
                    {"A1112", ExponentVector::pqr(p, q, r, {1, 1, 1, 2})}};
    }

    CyclotomicCache cache;
    std::vector<Certificate> out;
    for (auto& [name, vec] : excluded) {
        IntPoly product = cyclotomic_product(vec, cache);
        auto check = is_nonnegative(product);
        if (check.nonnegative) {
            throw CertificateMissing(name + " " + vec.to_string() + " expands with no negative coefficient");
        }
        out.push_back({name, vec, std::move(product), *check.witness});
    }
    return out;
}

}  // namespace sicherman
