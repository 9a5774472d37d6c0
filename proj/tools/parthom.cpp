// Command-line front end: parse filter specs, run analyses and verifications,
// emit deterministic text/JSON/CSV reports.
//
// Exit codes: 0 success (and all verified identities hold), 1 usage or parse
// error, 2 verified-identity mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "parthom/corpus.hpp"
#include "parthom/parallel.hpp"
#include "parthom/filter_spec.hpp"
#include "parthom/frobenius.hpp"
#include "parthom/homology.hpp"
#include "parthom/partitions.hpp"
#include "parthom/report_json.hpp"
#include "parthom/specht.hpp"
#include "parthom/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Options {
    std::string spec;
    int n = 0;
    int oracle_bound = parthom::kDefaultOracleBound;
    bool oracle = false;
    bool verbose = false;
    bool shapes = false;
    bool json = false;
    bool csv = false;
    std::uint64_t seed = parthom::kDefaultSeed;
    int random_count = 0;
    std::string dump_matrices;
    std::string composition;
    std::string arith;
    std::string gens;
    std::string range;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw parthom::ParseError("expected range n0..n1", 0);
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int run_analyze(const Options& opt) {
    parthom::CompositionComplex delta = parthom::parse_spec(opt.spec);
    parthom::DecompositionReport report = parthom::decomposition(delta, opt.verbose);

    std::optional<bool> oracle_ok;
    std::optional<bool> lefschetz_ok;
    if (opt.oracle) {
        oracle_ok = parthom::oracle_betti(delta, opt.oracle_bound) == report.betti;
        bool lef = true;
        for (const auto& t : parthom::all_cycle_types(delta.n() - 1))
            if (!parthom::lefschetz_check(delta, t).equal()) {
                lef = false;
                break;
            }
        lefschetz_ok = lef;
    }

    if (!opt.dump_matrices.empty()) {
        std::ofstream out(opt.dump_matrices);
        if (!out) throw std::runtime_error("cannot open " + opt.dump_matrices);
        parthom::chain_complex_of(delta).dump(out);
    }

    std::cout << parthom::report_to_json(report, opt.spec, oracle_ok, lefschetz_ok,
                                         opt.shapes)
                     .dump(2)
              << '\n';
    if ((oracle_ok && !*oracle_ok) || (lefschetz_ok && !*lefschetz_ok)) {
        std::cerr << "identity mismatch for " << opt.spec << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    std::vector<parthom::NamedFilter> targets;
    if (!opt.spec.empty())
        targets.push_back({opt.spec, parthom::parse_spec(opt.spec)});
    if (opt.random_count > 0) {
        if (opt.n == 0)
            throw parthom::ParseError("--random requires --n", 0);
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < opt.random_count; ++i) {
            parthom::CompositionComplex delta = parthom::random_filter(opt.n, rng);
            targets.push_back({parthom::spec_of_facets(delta), std::move(delta)});
        }
    }
    if (targets.empty())
        throw parthom::ParseError("verify needs --spec and/or --random with --n", 0);

    for (const auto& [spec, delta] : targets) {
        if (opt.oracle && delta.n() > opt.oracle_bound) {
            std::cerr << "--oracle requested but n = " << delta.n()
                      << " exceeds --oracle-bound " << opt.oracle_bound << '\n';
            return kExitUsage;
        }
    }

    // Independent jobs; output buffered per job and emitted in input order.
    std::vector<parthom::VerifyReport> reports(targets.size());
    parthom::parallel_for(targets.size(), [&](std::size_t i) {
        reports[i] = parthom::verify(targets[i].delta, targets[i].spec, opt.oracle_bound);
    });
    bool all_ok = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        std::cout << reports[i].to_string();
        if (!reports[i].all_passed()) {
            all_ok = false;
            std::cerr << "counterexample: reproduce with --spec '" << targets[i].spec << "'\n";
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_character(const Options& opt) {
    parthom::CompositionComplex delta = parthom::parse_spec(opt.spec);
    const int n = delta.n();
    bool all_ok = true;
    std::ostringstream out;
    for (const auto& t : parthom::all_cycle_types(n - 1)) {
        parthom::LefschetzPair pair = parthom::lefschetz_check(delta, t);
        out << t.to_string() << " lhs " << pair.lhs << " rhs " << pair.rhs
            << (pair.equal() ? " ok" : " MISMATCH") << '\n';
        if (!pair.equal()) all_ok = false;
        if (!opt.composition.empty()) {
            parthom::Composition c = parthom::Composition::parse(opt.composition);
            out << "  specht" << c.to_string() << " = "
                << parthom::specht_star_character(c, t) << ", perm = "
                << parthom::perm_module_character(c, t) << '\n';
        }
    }
    std::cout << out.str();
    if (opt.shapes && !opt.composition.empty()) {
        parthom::Composition c = parthom::Composition::parse(opt.composition);
        std::cout << parthom::shape_b_star(c).ascii();
    }
    if (!all_ok) std::cerr << "counterexample: reproduce with --spec '" << opt.spec << "'\n";
    return all_ok ? kExitOk : kExitMismatch;
}

void print_shapes(const parthom::DecompositionReport& report, const char* prefix,
                  std::ostream& os) {
    for (const auto& e : report.entries) {
        os << prefix << "degree " << e.degree << " summand " << e.composition.to_string();
        if (e.upper) os << " up to " << e.upper->to_string();
        os << " dim " << e.specht_dim << '\n';
        parthom::SkewShapeSpec shape =
            e.upper ? parthom::shape_b_star_interval(e.composition, *e.upper)
                    : parthom::shape_b_star(e.composition);
        std::istringstream rows(shape.ascii());
        std::string row;
        while (std::getline(rows, row)) os << prefix << row << '\n';
    }
}

void print_frobenius_report(const parthom::DecompositionReport& report,
                            const std::string& label, const Options& opt,
                            std::ostream& os) {
    if (opt.csv) {
        for (const auto& [deg, val] : report.betti.entries())
            os << report.n << ',' << deg << ',' << val << '\n';
        // shapes ride along as comment lines so the CSV stays parseable
        if (opt.shapes) print_shapes(report, "# ", os);
        return;
    }
    os << "# " << label << '\n';
    for (const auto& [deg, val] : report.betti.entries())
        os << "H~_" << deg << " dimension " << val << '\n';
    if (opt.shapes) print_shapes(report, "", os);
}

int run_frobenius(const Options& opt) {
    if (opt.arith.empty() == opt.gens.empty())
        throw parthom::ParseError("frobenius needs exactly one of --arith a,d or --gens a,b,...", 0);

    int n0 = opt.n, n1 = opt.n;
    if (!opt.range.empty()) std::tie(n0, n1) = parse_range(opt.range);
    if (n0 == 0) throw parthom::ParseError("frobenius needs --n or --table n0..n1", 0);

    std::ostringstream out;
    if (opt.csv) out << "n,degree,betti\n";
    for (int n = n0; n <= n1; ++n) {
        if (!opt.arith.empty()) {
            const auto comma = opt.arith.find(',');
            if (comma == std::string::npos)
                throw parthom::ParseError("--arith expects a,d", 0);
            parthom::ApSpec spec(std::stoi(opt.arith.substr(0, comma)),
                                 std::stoi(opt.arith.substr(comma + 1)));
            if (!spec.semigroup(n).contains(n)) {
                if (!opt.csv) out << "# n=" << n << " not in the semigroup\n";
                continue;
            }
            parthom::DecompositionReport report = parthom::ap_homology(spec, n);
            std::string label = "arith " + opt.arith + " n=" + std::to_string(n);
            if (opt.json) {
                out << parthom::report_to_json(report, label, std::nullopt, std::nullopt,
                                               opt.shapes)
                           .dump(2)
                    << '\n';
            } else {
                print_frobenius_report(report, label, opt, out);
            }
        } else {
            std::string spec_text = "semigroup:" + opt.gens + "@" + std::to_string(n);
            parthom::CompositionComplex delta;
            try {
                delta = parthom::parse_spec(spec_text);
            } catch (const parthom::ParseError&) {
                if (!opt.csv) out << "# n=" << n << " not in the semigroup\n";
                continue;
            }
            parthom::DecompositionReport report = parthom::decomposition(delta);
            if (opt.json) {
                out << parthom::report_to_json(report, spec_text, std::nullopt, std::nullopt,
                                               opt.shapes)
                           .dump(2)
                    << '\n';
            } else {
                print_frobenius_report(report, spec_text, opt, out);
            }
        }
    }
    std::cout << out.str();
    return kExitOk;
}

int run_table(const Options& opt) {
    if (opt.range.empty()) throw parthom::ParseError("table needs --range n0..n1", 0);
    auto [n0, n1] = parse_range(opt.range);
    const auto at = opt.spec.rfind("@N");
    if (at == std::string::npos)
        throw parthom::ParseError("table spec must end in @N (substituted per row)", 0);
    std::ostringstream out;
    out << "n,degree,betti\n";
    for (int n = n0; n <= n1; ++n) {
        std::string spec_text = opt.spec.substr(0, at) + "@" + std::to_string(n);
        parthom::CompositionComplex delta;
        try {
            delta = parthom::parse_spec(spec_text);
        } catch (const parthom::ParseError&) {
            continue;  // n outside the family
        }
        const parthom::BettiVector betti = parthom::main_betti(delta);
        for (const auto& [deg, val] : betti.entries())
            out << n << ',' << deg << ',' << val << '\n';
    }
    std::cout << out.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology of filters in the partition lattice"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--oracle-bound", opt.oracle_bound, "enumeration bound for the oracle")
            ->check(CLI::Range(1, parthom::kHardOracleBound));
        cmd->add_flag("--oracle", opt.oracle, "run the brute-force oracle checks");
        cmd->add_flag("--verbose", opt.verbose, "include zero-multiplicity rows");
        cmd->add_flag("--shapes", opt.shapes, "render border shapes as ASCII");
        cmd->add_flag("--json", opt.json, "JSON output");
        cmd->add_flag("--csv", opt.csv, "CSV output");
        cmd->add_option("--seed", opt.seed, "seed for random-filter corpora");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Betti numbers and Specht decomposition");
    analyze->add_option("--spec", opt.spec, "filter spec")->required();
    analyze->add_option("--dump-matrices", opt.dump_matrices, "write boundary triplets to file");
    add_common(analyze);

    CLI::App* verify = app.add_subcommand("verify", "verify the engine's identities");
    verify->add_option("--spec", opt.spec, "filter spec");
    verify->add_option("--random", opt.random_count, "number of seeded random filters");
    verify->add_option("--n", opt.n, "n for random filters");
    add_common(verify);

    CLI::App* character = app.add_subcommand("character", "S_{n-1} character identities");
    character->add_option("--spec", opt.spec, "filter spec")->required();
    character->add_option("--composition", opt.composition, "composition [c] to tabulate");
    add_common(character);

    CLI::App* frobenius = app.add_subcommand("frobenius", "numerical-semigroup filters");
    frobenius->add_option("--arith", opt.arith, "arithmetic progression a,d");
    frobenius->add_option("--gens", opt.gens, "semigroup generators a,b,...");
    frobenius->add_option("--n", opt.n, "single n");
    frobenius->add_option("--table", opt.range, "range n0..n1");
    add_common(frobenius);

    CLI::App* table = app.add_subcommand("table", "Betti table for a spec family over a range");
    table->add_option("--spec", opt.spec, "filter spec ending in @N")->required();
    table->add_option("--range", opt.range, "range n0..n1");
    add_common(table);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(character)) return run_character(opt);
        if (app.got_subcommand(frobenius)) return run_frobenius(opt);
        if (app.got_subcommand(table)) return run_table(opt);
    } catch (const parthom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const parthom::IdentityMismatch& e) {
        std::cerr << "identity mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
