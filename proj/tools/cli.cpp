#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sicherman/counting.hpp"
#include "sicherman/cyclotomic.hpp"
#include "sicherman/dice.hpp"
#include "sicherman/errors.hpp"
#include "sicherman/oracle.hpp"
#include "sicherman/solver.hpp"

namespace sicherman::cli {

namespace {

using json = nlohmann::json;

// What a command produced: a machine-readable payload and its table rendering.
struct Outcome {
    int code = kOk;
    json results = json::object();
    std::string table;
};

// Thrown for argument values CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::uint64_t v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [end, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc{} || end != last) {
            throw UsageError(std::string("cannot parse ") + flag + " '" + text + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

json labels_json(const Die& d) { return json(std::vector<Label>(d.labels().begin(), d.labels().end())); }

json vector_json(const ExponentVector& v) {
    json out = json::array();
    for (const auto& [d, c] : v.entries()) out.push_back({d, c});
    return out;
}

std::string vector_text(const ExponentVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : v.entries()) {
        os << (first ? "" : " ") << "c" << d << "=" << c;
        first = false;
    }
    return first ? std::string("-") : os.str();
}

Outcome pairs_outcome(const std::vector<SolutionPair>& pairs) {
    Outcome o;
    json list = json::array();
    json vectors = json::array();
    std::ostringstream table;
    table << "pairs: " << pairs.size() << "\n";
    table << "distinct dice: " << count_distinct_dice(pairs) << "\n";
    for (const auto& p : pairs) {
        list.push_back({labels_json(p.left.die), labels_json(p.right.die)});
        vectors.push_back({vector_json(p.left.vector), vector_json(p.right.vector)});
        table << p.left.die.to_string() << " | " << p.right.die.to_string() << "  :: " << vector_text(p.left.vector)
              << " | " << vector_text(p.right.vector) << "\n";
    }
    o.results["pairs"] = std::move(list);
    o.results["exponent_vectors"] = std::move(vectors);
    o.results["count"] = pairs.size();
    o.results["distinct_dice"] = count_distinct_dice(pairs);
    o.table = table.str();
    return o;
}

SolveOptions solve_options() {
    SolveOptions options;
    if (const char* cap = std::getenv(kSearchCapEnv)) {
        auto v = parse_list(cap, kSearchCapEnv);
        if (v.size() != 1) throw UsageError(std::string(kSearchCapEnv) + " must be one integer");
        options.search_cap = v.front();
    }
    return options;
}

Outcome cmd_solve(std::uint64_t m) {
    if (m < 1) throw UsageError("--sides must be >= 1");
    return pairs_outcome(enumerate_pairs(Problem::equal(m), solve_options()));
}

Outcome cmd_mixed(const std::string& sides) {
    auto s = parse_list(sides, "--sides");
    if (s.size() != 2 || s[0] < 1 || s[1] < 1) throw UsageError("--sides expects two positive sizes m1,m2");
    return pairs_outcome(enumerate_mixed(Problem::mixed(s[0], s[1]), solve_options()));
}

Outcome cmd_unequal(std::uint64_t m, const std::string& targets) {
    auto t = parse_list(targets, "--targets");
    if (m < 1) throw UsageError("--sides must be >= 1");
    if (t.size() != 2) throw UsageError("--targets expects two sizes s1,s2");
    return pairs_outcome(enumerate_unequal(Problem::unequal(m, t[0], t[1]), solve_options()));
}

Outcome cmd_decompose(std::uint64_t m, std::uint64_t a) {
    SolutionPair pair = decompose(m, a);
    Die recipe = corollary_labels(m, a);
    const bool matches = recipe == pair.right.die;

    Outcome o;
    o.code = matches ? kOk : kFailed;
    o.results["pairs"] = json::array({json::array({labels_json(pair.left.die), labels_json(pair.right.die)})});
    o.results["recipe"] = labels_json(recipe);
    o.results["recipe_matches"] = matches;
    o.results["sizes"] = {pair.left.die.size(), pair.right.die.size()};

    std::ostringstream table;
    table << "small die (" << pair.left.die.size() << "): " << pair.left.die.to_string() << "\n";
    table << "large die (" << pair.right.die.size() << "): " << pair.right.die.to_string() << "\n";
    table << "label recipe: " << recipe.to_string() << "\n";
    table << "recipe matches expansion: " << (matches ? "yes" : "NO") << "\n";
    o.table = table.str();
    return o;
}

Outcome cmd_verify(const std::vector<std::string>& dice_text, std::uint64_t reference) {
    if (dice_text.size() != 2) throw UsageError("verify needs exactly two --die options");
    std::vector<Die> dice;
    for (const auto& t : dice_text) dice.push_back(Die::parse(t));
    if (reference < 1) throw UsageError("--reference must be >= 1");

    const SumHistogram got = sum_histogram(dice);
    const std::vector<Die> standard{Die::standard(reference), Die::standard(reference)};
    const SumHistogram want = sum_histogram(standard);

    Outcome o;
    std::optional<std::uint64_t> first_diff;
    std::uint64_t hi = std::max(got.empty() ? 0 : got.rbegin()->first, want.rbegin()->first);
    for (std::uint64_t s = 0; s <= hi && !first_diff; ++s) {
        auto g = got.count(s) ? got.at(s) : 0;
        auto w = want.count(s) ? want.at(s) : 0;
        if (g != w) first_diff = s;
    }
    o.results["match"] = !first_diff.has_value();
    if (first_diff) {
        o.code = kFailed;
        auto s = *first_diff;
        o.results["first_difference"] = {{"sum", s},
                                         {"observed", got.count(s) ? got.at(s) : 0},
                                         {"expected", want.count(s) ? want.at(s) : 0}};
        o.table = "MISMATCH at sum " + std::to_string(s) + ": observed " +
                  std::to_string(got.count(s) ? got.at(s) : 0) + ", expected " +
                  std::to_string(want.count(s) ? want.at(s) : 0) + "\n";
    } else {
        o.table = "MATCH\n";
    }
    return o;
}

Outcome cmd_count(std::optional<unsigned> dice, unsigned k) {
    if (k < 1) throw UsageError("--exponent must be >= 1");
    if (dice && *dice < 1) throw UsageError("--dice must be >= 1");
    Outcome o;
    std::uint64_t value = dice ? count_n_dice(*dice, k) : count_unbounded(k);
    o.results["count"] = value;
    o.results["unbounded"] = count_unbounded(k);
    if (dice && *dice == 2) o.results["trinomial"] = count_two_dice_trinomial(k);
    o.table = std::to_string(value) + "\n";
    return o;
}

Outcome cmd_identities(std::uint64_t bound) {
    if (bound < 2) throw UsageError("--bound must be >= 2");
    IdentityReport report = check_identity_suite(bound);
    Outcome o;
    o.code = report.all_passed() ? kOk : kFailed;
    json list = json::array();
    std::ostringstream table;
    for (const auto& r : report.results) {
        json item = {{"identity", r.name}, {"instances", r.instances}, {"passed", r.passed}};
        if (r.counterexample) item["counterexample"] = *r.counterexample;
        list.push_back(std::move(item));
        table << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances)";
        if (r.counterexample) table << " first counterexample: " << *r.counterexample;
        table << "\n";
    }
    o.results["report"] = std::move(list);
    o.results["all_passed"] = report.all_passed();
    o.table = table.str();
    return o;
}

Outcome cmd_oracle(std::uint64_t m, std::optional<std::uint64_t> max_nodes, std::optional<Label> max_label) {
    if (m < 1) throw UsageError("--sides must be >= 1");
    SearchConfig config = SearchConfig::for_sides(m);
    if (max_nodes) config.max_nodes = *max_nodes;
    if (max_label) config.max_label = *max_label;
    auto pairs = brute_force_pairs(m, config);

    Outcome o;
    json list = json::array();
    std::ostringstream table;
    std::set<Die> dice;
    table << "pairs: " << pairs.size() << "\n";
    for (const auto& p : pairs) {
        list.push_back({labels_json(p.left), labels_json(p.right)});
        dice.insert(p.left);
        dice.insert(p.right);
    }
    table << "distinct dice: " << dice.size() << "\n";
    for (const auto& p : pairs) table << p.left.to_string() << " | " << p.right.to_string() << "\n";
    o.results["pairs"] = std::move(list);
    o.results["count"] = pairs.size();
    o.results["distinct_dice"] = dice.size();
    o.table = table.str();
    return o;
}

Outcome cmd_certify(const std::string& shape_text, const std::string& primes_text) {
    CertificateShape shape;
    if (shape_text == "p2q") {
        shape = CertificateShape::P2Q;
    } else if (shape_text == "pqr") {
        shape = CertificateShape::PQR;
    } else {
        throw UsageError("--case must be p2q or pqr");
    }
    auto primes = parse_list(primes_text, "--primes");
    auto certs = negative_certificates(shape, primes);

    Outcome o;
    json list = json::array();
    std::ostringstream table;
    for (const auto& c : certs) {
        list.push_back({{"name", c.name},
                        {"vector", vector_json(c.vector)},
                        {"power", c.witness.power},
                        {"coefficient", c.witness.value}});
        table << c.name << " " << vector_text(c.vector) << ": coefficient " << c.witness.value << " at x^"
              << c.witness.power << "\n";
    }
    o.results["report"] = std::move(list);
    o.results["count"] = certs.size();
    o.table = table.str();
    return o;
}

Outcome cmd_sweep(std::uint64_t bound) {
    if (bound < 2) throw UsageError("--bound must be >= 2");
    SweepReport report = conjecture_sweep(bound);
    Outcome o;
    json list = json::array();
    std::ostringstream table;
    for (const auto& e : report.entries) {
        for (const auto& p : e.nontrivial) {
            list.push_back({{"sizes", {e.r, e.s}}, {"pair", {labels_json(p.left), labels_json(p.right)}}});
            table << e.r << "x" << e.s << ": " << p.left.to_string() << " | " << p.right.to_string() << "\n";
        }
    }
    table << "coprime size pairs checked: " << report.entries.size() << "\n";
    table << "nontrivial relabelings found: " << report.nontrivial_total() << "\n";
    o.results["report"] = std::move(list);
    o.results["pairs_checked"] = report.entries.size();
    o.results["count"] = report.nontrivial_total();
    o.table = table.str();
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate dice relabelings that keep the sum frequencies of standard dice."};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    };

    std::uint64_t sides = 0, split = 0, reference = 0, bound = 0;
    std::string sides_list, targets, shape, primes;
    std::vector<std::string> dice_text;
    unsigned exponent = 0, dice_count = 0;
    std::uint64_t max_nodes = 0;
    Label max_label = 0;

    auto* solve = app.add_subcommand("solve", "All pairs of m-sided dice matching two standard m-sided dice");
    solve->add_option("--sides", sides, "Number of sides m")->required();
    add_format(solve);

    auto* mixed = app.add_subcommand("mixed", "Relabelings of a standard m1-sided and m2-sided die");
    mixed->add_option("--sides", sides_list, "Sizes m1,m2")->required();
    add_format(mixed);

    auto* unequal = app.add_subcommand("unequal", "Dice of sizes s1, s2 matching two standard m-sided dice");
    unequal->add_option("--sides", sides, "Number of sides m")->required();
    unequal->add_option("--targets", targets, "Target sizes s1,s2 with s1*s2 = m^2")->required();
    add_format(unequal);

    auto* decomp = app.add_subcommand("decompose", "Standard a-sided die plus an a*b^2-sided die, m = a*b");
    decomp->add_option("--sides", sides, "Number of sides m")->required();
    decomp->add_option("--split", split, "Divisor a of m")->required();
    add_format(decomp);

    auto* verify = app.add_subcommand("verify", "Compare two dice against two standard dice");
    verify->add_option("--die", dice_text, "Comma-separated labels (give twice)")->required();
    verify->add_option("--reference", reference, "Sides of the standard dice")->required();
    add_format(verify);

    auto* count = app.add_subcommand("count", "Number of solution dice of size p^k");
    auto* dice_opt = count->add_option("--dice", dice_count, "Number of dice n (omit for unbounded)");
    count->add_option("--exponent", exponent, "Exponent k")->required();
    add_format(count);

    auto* identities = app.add_subcommand("identities", "Check the cyclotomic identity suite");
    identities->add_option("--bound", bound, "Largest cyclotomic index")->required();
    add_format(identities);

    auto* oracle = app.add_subcommand("oracle", "Brute-force pair search over label multisets");
    oracle->add_option("--sides", sides, "Number of sides m")->required();
    auto* nodes_opt = oracle->add_option("--max-nodes", max_nodes, "Search node budget");
    auto* label_opt = oracle->add_option("--max-label", max_label, "Largest label tried (default 2m-1)");
    add_format(oracle);

    auto* certify = app.add_subcommand("certify", "Negative-coefficient certificates for excluded candidates");
    certify->add_option("--case", shape, "p2q or pqr")->required();
    certify->add_option("--primes", primes, "Distinct primes, e.g. 2,3,5")->required();
    add_format(certify);

    auto* sweep = app.add_subcommand("sweep", "Mixed-size search over coprime sizes up to a bound");
    sweep->add_option("--bound", bound, "Largest size")->required();
    add_format(sweep);

    std::vector<const char*> argv{"sicherman"};
    for (const auto& a : args) argv.push_back(a.c_str());

    json parameters = json::object();
    std::string command;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    command = app.get_subcommands().front()->get_name();
    for (const auto* opt : app.get_subcommands().front()->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        auto name = opt->get_name().substr(2);
        auto values = opt->results();
        parameters[name] = values.size() == 1 ? json(values.front()) : json(values);
    }

    Outcome outcome;
    std::string error;
    int code = kOk;
    try {
        if (solve->parsed()) outcome = cmd_solve(sides);
        else if (mixed->parsed()) outcome = cmd_mixed(sides_list);
        else if (unequal->parsed()) outcome = cmd_unequal(sides, targets);
        else if (decomp->parsed()) outcome = cmd_decompose(sides, split);
        else if (verify->parsed()) outcome = cmd_verify(dice_text, reference);
        else if (count->parsed()) {
            outcome = cmd_count(dice_opt->count() ? std::optional<unsigned>(dice_count) : std::nullopt, exponent);
        } else if (identities->parsed()) outcome = cmd_identities(bound);
        else if (oracle->parsed()) {
            outcome = cmd_oracle(sides, nodes_opt->count() ? std::optional(max_nodes) : std::nullopt,
                                 label_opt->count() ? std::optional(max_label) : std::nullopt);
        } else if (certify->parsed()) outcome = cmd_certify(shape, primes);
        else if (sweep->parsed()) outcome = cmd_sweep(bound);
        code = outcome.code;
    } catch (const UsageError& e) {
        code = kUsage;
        error = e.what();
    } catch (const InvalidArgument& e) {
        code = kUsage;
        error = e.what();
    } catch (const InvalidTargets& e) {
        code = kUsage;
        error = e.what();
    } catch (const NotADivisor& e) {
        code = kUsage;
        error = e.what();
    } catch (const SearchCapExceeded& e) {
        code = kResourceCap;
        error = e.what();
    } catch (const BudgetExceeded& e) {
        code = kResourceCap;
        error = e.what();
    } catch (const CertificateMissing& e) {
        code = kFailed;
        error = e.what();
    } catch (const Error& e) {
        code = kFailed;
        error = e.what();
    }

    if (format == "json") {
        json envelope = {{"command", command}, {"parameters", parameters}};
        if (error.empty()) {
            envelope["results"] = outcome.results;
            envelope["status"] = code == kOk ? "ok" : "error";
            if (code != kOk) envelope["message"] = outcome.table;
        } else {
            envelope["results"] = json::object();
            envelope["status"] = "error";
            envelope["message"] = error;
        }
        out << envelope.dump(2) << "\n";
    } else if (error.empty()) {
        out << outcome.table;
    }
    if (!error.empty()) err << "error: " << error << "\n";
    return code;
}

}  // namespace sicherman::cli
