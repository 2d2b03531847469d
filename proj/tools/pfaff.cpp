// Command-line front end.
//
//   pfaff decide <file>                integrability verdict + chain summary
//   pfaff chain <file>                 every chain step in full
//   pfaff nullstellensatz <file>       least differentiation order certifying
//                                      inconsistency (autonomous systems only)
//
// Exit codes: 0 decision completed, 2 input error, 3 resource limit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfaff/jet.hpp"
#include "pfaff/report_json.hpp"
#include "pfaff/system_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string file;
    bool json = false;
    bool verbose = false;
    std::uint64_t max_degree = 64;
    std::size_t max_basis = 4096;
    std::size_t max_pairs = 1000000;
    std::size_t max_steps = 0; // 0 = use the theoretical bound
    unsigned k_max = 6;
};

pfaff::ChainLimits chain_limits(const Options& opt) {
    pfaff::ChainLimits limits;
    limits.gb.max_degree = opt.max_degree;
    limits.gb.max_basis = opt.max_basis;
    limits.gb.max_pairs = opt.max_pairs;
    if (opt.max_steps > 0)
        limits.max_steps = opt.max_steps;
    return limits;
}

pfaff::PfaffianSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw pfaff::SystemFormatError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return pfaff::parse_system(buf.str());
    } catch (const pfaff::DegreeLimitError& e) {
        throw pfaff::SystemFormatError(e.what(), 0);
    }
}

void print_steps(std::ostream& out, const pfaff::ChainReport& report) {
    for (const auto& s : report.steps) {
        out << "step p=" << s.p << ": dim=" << s.dim
            << ", trivial=" << (s.trivial ? "true" : "false") << ", generators: [";
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
            if (i)
                out << ", ";
            out << s.generators[i].to_string();
        }
        out << "]\n";
    }
}

int cmd_decide(const Options& opt, bool full_chain) {
    pfaff::PfaffianSystem system = load_system(opt.file);
    auto t0 = std::chrono::steady_clock::now();
    pfaff::ChainReport report = pfaff::build_chain(system, chain_limits(opt));
    if (opt.verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "chain finished in " << ms << " ms over "
                  << report.steps.size() << " steps\n";
    }
    if (opt.json) {
        std::cout << pfaff::chain_report_to_json(report).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << (report.integrable ? "INTEGRABLE" : "NOT INTEGRABLE")
              << ", rho=" << report.rho << ", p_infinity=" << report.p_infinity << "\n";
    std::cout << "autonomized: " << (report.autonomized ? "true" : "false")
              << ", n_aut: " << report.n_aut << "\n";
    if (full_chain) {
        print_steps(std::cout, report);
    } else {
        std::cout << "step dims:";
        for (const auto& s : report.steps)
            std::cout << " " << s.dim;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_nullstellensatz(const Options& opt) {
    pfaff::PfaffianSystem system = load_system(opt.file);
    if (!system.autonomous()) {
        std::cerr << "error: the differentiation-order search handles autonomous "
                     "systems only; use 'decide', which autonomizes first\n";
        return kExitInput;
    }
    pfaff::GroebnerLimits limits = chain_limits(opt).gb;
    auto k = pfaff::minimal_order(system, opt.k_max, limits);
    if (opt.json) {
        nlohmann::json j;
        j["k_max"] = opt.k_max;
        j["certificate"] = k.has_value();
        if (k)
            j["k"] = *k;
        else
            j["k"] = nullptr;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (k)
        std::cout << "k = " << *k << "\n";
    else
        std::cout << "no certificate <= " << opt.k_max << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integrability of differential-algebraic Pfaffian systems"};
    app.require_subcommand(1);

    Options opt;
    app.fallthrough();
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_flag("--verbose", opt.verbose, "report timing on stderr");
    app.add_option("--max-degree", opt.max_degree, "basis polynomial degree ceiling")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-basis", opt.max_basis, "basis size ceiling")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-pairs", opt.max_pairs, "S-pair ceiling")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-steps", opt.max_steps, "chain step override (0 = bound)");

    CLI::App* decide = app.add_subcommand("decide", "decide integrability");
    decide->add_option("file", opt.file, "system file")->required();
    CLI::App* chain = app.add_subcommand("chain", "print the whole prolongation chain");
    chain->add_option("file", opt.file, "system file")->required();
    CLI::App* nullst =
        app.add_subcommand("nullstellensatz", "least differentiation order certifying "
                                              "inconsistency");
    nullst->add_option("file", opt.file, "system file")->required();
    nullst->add_option("--k-max", opt.k_max, "largest order to try");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (decide->parsed())
            return cmd_decide(opt, false);
        if (chain->parsed())
            return cmd_decide(opt, true);
        return cmd_nullstellensatz(opt);
    } catch (const pfaff::SystemFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const pfaff::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const pfaff::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const pfaff::DegreeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
