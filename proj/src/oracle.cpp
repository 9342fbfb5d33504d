#include "sicherman/oracle.hpp"

#include <numeric>
#include <set>

#include "sicherman/errors.hpp"
#include "sicherman/solver.hpp"

namespace sicherman {

namespace {

// Builds both dice value by value, choosing how many faces of each die carry
// label v. Once labels 1..v are placed, every sum up to v + 1 is final, so that
// sum must already hit its target; any partial count above its target is cut.
class PairSearch {
public:
    PairSearch(std::uint64_t m, const SearchConfig& config, const SumHistogram& target)
        : m_(m), config_(config), target_(2 * config.max_label + 2, 0),
          count_(target_.size(), 0), a_(config.max_label + 1, 0), b_(config.max_label + 1, 0) {
        for (const auto& [sum, freq] : target) {
            if (sum >= target_.size()) {
                overflow_target_ = true;
                continue;
            }
            target_[sum] = freq;
        }
    }

    std::set<DicePair> run() {
        if (!overflow_target_) place(1, m_, m_);
        return found_;
    }

private:
    void place(Label v, std::uint64_t left_a, std::uint64_t left_b) {
        if (++nodes_ > config_.max_nodes) {
            throw BudgetExceeded("brute-force search exceeded " + std::to_string(config_.max_nodes) + " nodes");
        }
        if (left_a == 0 && left_b == 0) {
            finish();
            return;
        }
        if (v > config_.max_label) return;

        // Both dice must show label 1.
        const std::uint64_t min_a = v == 1 ? 1 : 0;
        const std::uint64_t min_b = v == 1 ? 1 : 0;
        for (std::uint64_t ca = min_a; ca <= left_a; ++ca) {
            for (std::uint64_t cb = min_b; cb <= left_b; ++cb) {
                if (apply(v, ca, cb)) place(v + 1, left_a - ca, left_b - cb);
                undo(v, ca, cb);
            }
        }
    }

    // Adds the sums created by ca faces of v on die A and cb on die B.
    // Returns false when the partial histogram already contradicts the target.
    bool apply(Label v, std::uint64_t ca, std::uint64_t cb) {
        a_[v] = ca;
        b_[v] = cb;
        bool ok = true;
        for (Label u = 1; u < v; ++u) {
            if (ca && b_[u]) ok &= bump(v + u, ca * b_[u]);
            if (cb && a_[u]) ok &= bump(v + u, cb * a_[u]);
        }
        if (ca && cb) ok &= bump(2 * v, ca * cb);
        return ok && count_[v + 1] == target_[v + 1];
    }

    void undo(Label v, std::uint64_t ca, std::uint64_t cb) {
        for (Label u = 1; u < v; ++u) {
            if (ca && b_[u]) count_[v + u] -= ca * b_[u];
            if (cb && a_[u]) count_[v + u] -= cb * a_[u];
        }
        if (ca && cb) count_[2 * v] -= ca * cb;
        a_[v] = 0;
        b_[v] = 0;
    }

    bool bump(std::size_t sum, std::uint64_t by) {
        count_[sum] += by;
        return count_[sum] <= target_[sum];
    }

    void finish() {
        if (count_ != target_) return;
        std::vector<Label> da, db;
        for (Label v = 1; v <= config_.max_label; ++v) {
            da.insert(da.end(), a_[v], v);
            db.insert(db.end(), b_[v], v);
        }
        Die x(std::move(da)), y(std::move(db));
        if (y < x) std::swap(x, y);
        found_.insert(DicePair{std::move(x), std::move(y)});
    }

    std::uint64_t m_;
    SearchConfig config_;
    std::vector<std::uint64_t> target_;
    std::vector<std::uint64_t> count_;
    std::vector<std::uint64_t> a_;
    std::vector<std::uint64_t> b_;
    bool overflow_target_ = false;
    std::uint64_t nodes_ = 0;
    std::set<DicePair> found_;
};

}  // namespace

std::vector<DicePair> brute_force_pairs(std::uint64_t m, const SearchConfig& config) {
    if (m == 0) throw InvalidArgument("die size must be >= 1");
    if (config.max_label == 0) throw InvalidArgument("max_label must be >= 1");
    const Die standard = Die::standard(m);
    const std::vector<Die> two{standard, standard};
    PairSearch search(m, config, sum_histogram(two));
    auto found = search.run();
    return {found.begin(), found.end()};
}

std::vector<DicePair> brute_force_pairs(std::uint64_t m) { return brute_force_pairs(m, SearchConfig::for_sides(m)); }

bool verify_pair_against_standard(const Die& d1, const Die& d2, std::uint64_t m) {
    if (m == 0) return false;
    const std::vector<Die> candidate{d1, d2};
    const std::vector<Die> standard{Die::standard(m), Die::standard(m)};
    return sum_histogram(candidate) == sum_histogram(standard);
}

std::size_t SweepReport::nontrivial_total() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.nontrivial.size();
    return n;
}

SweepReport conjecture_sweep(std::uint64_t bound) {
    if (bound < 2) throw InvalidArgument("sweep bound must be >= 2");
    SweepReport report{bound, {}};
    for (std::uint64_t r = 2; r <= bound; ++r) {
        for (std::uint64_t s = r + 1; s <= bound; ++s) {
            if (std::gcd(r, s) != 1) continue;
            auto pairs = enumerate_mixed(Problem::mixed(r, s));
            SweepEntry entry{r, s, pairs.size(), {}};
            for (const auto& p : pairs) {
                if (!p.is_standard()) entry.nontrivial.push_back({p.left.die, p.right.die});
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace sicherman
