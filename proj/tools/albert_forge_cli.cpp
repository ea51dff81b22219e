// albert-forge: exact construction and verification of the exceptional
// groups on the 27-dimensional space of Hermitian octonion matrices.
//
// Subcommands: table, verify, census, orbit, dickson, orders, classify.
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 budget exhaustion.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "af/orbits.hpp"
#include "af/reports.hpp"
#include "af/serialize.hpp"

namespace {

int default_threads() {
    if (const char* env = std::getenv("ALBERT_FORGE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const af::Json& report, const std::string& output, const std::string& format) {
    std::string text;
    if (format == "csv") {
        if (report["command"] == "census")
            text = af::census_csv(report);
        else if (report["command"] == "orders")
            text = af::orders_csv(report);
        else
            throw CLI::ValidationError("--format csv is supported for census and orders only");
    } else {
        text = report.dump(2) + "\n";
    }
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw CLI::ValidationError("cannot open output file " + output);
        os << text;
    }
}

af::Json parse_vector_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream is(arg.substr(1));
        if (!is) throw CLI::ValidationError("cannot open vector file " + arg.substr(1));
        return af::Json::parse(is);
    }
    return af::Json::parse(arg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"albert-forge: split octonions, the 27-space cubic form, and the groups "
                 "preserving it"};
    app.require_subcommand(1);

    std::string output;
    std::string format = "json";
    app.add_option("--output", output, "write the report to a file instead of stdout");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    int threads = default_threads();
    uint64_t seed = 1;
    uint64_t budget = 0;
    uint64_t random_instances = 100000;

    auto* c_table = app.add_subcommand("table", "dump the octonion multiplication table");

    auto* c_verify = app.add_subcommand("verify", "run module invariant suites");
    std::vector<std::string> suites;
    std::vector<int> verify_q;
    c_verify->add_option("--suite", suites, "octonion, albert, generators, twisted (repeatable)")
        ->check(CLI::IsMember({"octonion", "albert", "generators", "twisted"}));
    c_verify->add_option("--q", verify_q, "field sizes (twisted suites read q and work over q^2)");
    c_verify->add_option("--seed", seed, "seed for the randomized checks");
    c_verify->add_option("--threads", threads, "worker count");
    c_verify->add_option("--random-instances", random_instances,
                         "instances per identity when not exhaustive");

    auto* c_census = app.add_subcommand("census", "white/grey/black counts");
    int census_q = 2;
    std::string census_mode = "closed";
    c_census->add_option("--q", census_q, "field size");
    c_census->add_option("--mode", census_mode, "brute, structured or closed")
        ->check(CLI::IsMember({"brute", "structured", "closed"}));
    c_census->add_option("--threads", threads, "worker count");

    auto* c_orbit = app.add_subcommand("orbit", "BFS orbit of a projective point");
    std::string orbit_start;
    std::string orbit_gens = "standard";
    c_orbit->add_option("--start", orbit_start, "start vector as JSON (or @file)")->required();
    c_orbit->add_option("--gens", orbit_gens, "standard or stabilizer")
        ->check(CLI::IsMember({"standard", "stabilizer"}));
    c_orbit->add_option("--budget", budget, "node budget (0 = default)");

    auto* c_dickson = app.add_subcommand("dickson", "exact polynomial equivalence certificate");
    std::vector<int> dickson_p = {2, 3, 5, 101};
    c_dickson->add_option("--p", dickson_p, "primes to certify over (repeatable)");

    auto* c_orders = app.add_subcommand("orders", "group-order identity report");
    std::vector<int> orders_q = {2, 3, 4, 5, 7, 8, 9};
    c_orders->add_option("--q", orders_q, "prime powers (repeatable)");

    auto* c_classify = app.add_subcommand("classify", "color (and twisted type) of a vector");
    std::string classify_vec;
    c_classify->add_option("vector", classify_vec, "vector as JSON (or @file)")->required();

    // allow the global --output/--format after a subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        // elapsed time goes to stderr so reports stay byte-identical
        auto t0 = std::chrono::steady_clock::now();
        auto elapsed = [&t0] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        };
        af::Json report;
        bool passed = true;
        if (c_table->parsed()) {
            report = af::table_report();
        } else if (c_verify->parsed()) {
            if (suites.empty()) suites = {"octonion", "albert", "generators", "twisted"};
            std::vector<int> untwisted = verify_q.empty() ? std::vector<int>{2, 3, 4, 5} : verify_q;
            std::vector<int> twisted = verify_q.empty() ? std::vector<int>{2, 3} : verify_q;
            report = af::verify_report(suites, untwisted, twisted, seed, random_instances, threads);
            passed = report["passed"].get<bool>();
        } else if (c_census->parsed()) {
            report = af::census_report(census_q, census_mode, threads);
            if (report.contains("closed_form_match")) passed = report["closed_form_match"];
            if (report.contains("formula_match")) passed = report["formula_match"];
            std::cerr << "census: mode " << census_mode << ", " << elapsed() << "s\n";
        } else if (c_orbit->parsed()) {
            report = af::orbit_report(parse_vector_arg(orbit_start), orbit_gens, budget);
            std::cerr << "orbit: " << report["size"].get<uint64_t>() << " points, "
                      << report["generators"].get<uint64_t>() << " operators, " << elapsed()
                      << "s\n";
            if (report["truncated"].get<bool>()) {
                emit(report, output, format);
                std::cerr << "orbit: node budget exhausted\n";
                return 3;
            }
        } else if (c_dickson->parsed()) {
            report = af::dickson_report(dickson_p);
            passed = report["passed"].get<bool>();
        } else if (c_orders->parsed()) {
            report = af::orders_report(orders_q);
            passed = report["passed"].get<bool>();
        } else if (c_classify->parsed()) {
            report = af::classify_report(parse_vector_arg(classify_vec));
        }
        emit(report, output, format);
        return passed ? 0 : 1;
    } catch (const af::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
