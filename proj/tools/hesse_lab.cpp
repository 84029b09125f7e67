// hesse-lab: run verification suites and parse polynomial literals.
//
// Exit status: 0 when no check fails, 1 when some check fails, 2 on a
// configuration or usage error.

#include <hesselab/suites.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace hesselab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

unsigned default_jobs() {
    if (const char* env = std::getenv("HESSE_LAB_JOBS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1) throw ConfigError("HESSE_LAB_JOBS must be a positive integer");
        return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_verify(const std::string& suite, const std::vector<std::string>& lambdas, bool json, const std::string& out,
               int shear_seed, std::optional<unsigned> jobs) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.shear_seed = shear_seed;
    cfg.jobs = jobs ? *jobs : default_jobs();
    for (const auto& l : lambdas) {
        try {
            cfg.lambdas.push_back(parse_pencil_param(l));
        } catch (const std::exception& e) {
            throw ConfigError("invalid lambda '" + l + "': " + e.what());
        }
    }
    auto tasks = suite_tasks(cfg);  // validates
    auto results = run_tasks(tasks, cfg.jobs);
    const std::string body = json ? report_json(cfg, results).dump(2) + "\n" : report_text(cfg, results);
    Summary s = summarize(results);
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out);
        if (!f) throw ConfigError("cannot write " + out);
        f << body;
        std::cout << s.pass << " passed, " << s.fail << " failed, " << s.info << " info; report written to " << out
                  << "\n";
    }
    return s.fail > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the Hesse pencil and its flex-tangent geometry"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<std::string> lambdas;
    bool json = false;
    std::string out;
    int shear_seed = 0;
    std::optional<unsigned> jobs;
    verify->add_option("suite", suite, "suite name (see list-suites)")->required();
    verify->add_option("--lambda", lambdas, "pencil parameter, e.g. 2, -1/3, 2*w, inf (repeatable)");
    verify->add_flag("--json", json, "emit the JSON report");
    verify->add_option("--out", out, "write the report to this file");
    verify->add_option("--shear-seed", shear_seed, "first index of the shear sequence")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs, "parallel tasks (default: HESSE_LAB_JOBS or the core count)")
        ->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list-suites", "list the suite names");

    auto* parse = app.add_subcommand("parse", "parse a polynomial literal and print its normal form");
    std::string text;
    std::string parse_lambda;
    parse->add_option("poly", text, "polynomial literal")->required();
    parse->add_option("--lambda", parse_lambda, "substitute l0 = 1, l1 = lambda");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*list) {
            for (const auto& s : suite_table()) std::cout << s.name << "  " << s.description << "\n";
            std::cout << "all  every suite above\n";
            return 0;
        }
        if (*parse) {
            MPoly p = parse_poly(text);
            if (!parse_lambda.empty()) {
                PencilParam l = parse_pencil_param(parse_lambda);
                p = p.specialize(Var::l0, l.l0()).specialize(Var::l1, l.l1());
            }
            std::cout << to_string(p) << "\n";
            return 0;
        }
        return run_verify(suite, lambdas, json, out, shear_seed, jobs);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
