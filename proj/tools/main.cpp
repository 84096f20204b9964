#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "z3q/error.hpp"
#include "z3q/io.hpp"
#include "z3q/parser.hpp"
#include "z3q/presentations.hpp"
#include "z3q/report.hpp"
#include "z3q/suites.hpp"

namespace {

using nlohmann::ordered_json;

/* Exit codes: 0 all checks passed, 1 at least one check failed,
   2 usage or evaluation error. */
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string algebra = "plane";
    std::vector<std::string> suites;
    std::vector<std::string> exprs;
    z3q::SuiteOptions suite_opt;
    bool json = false;
    bool inject_failure = false;
};

int print_checks(const std::vector<z3q::CheckResult>& results, const Options& opt) {
    for (const auto& r : results) {
        if (opt.json)
            std::cout << z3q::to_json_line(r) << "\n";
        else
            std::cout << z3q::to_text_line(r) << "\n";
    }
    if (!opt.json) {
        std::size_t failed = 0;
        for (const auto& r : results)
            if (r.status == z3q::Status::Fail) ++failed;
        std::cout << results.size() << " checks, " << failed << " failed\n";
    }
    return z3q::all_ok(results) ? kExitOk : kExitCheckFailed;
}

int eval_one(const std::string& src, const z3q::Presentation& alg, const Options& opt) {
    z3q::Value v = z3q::evaluate(src, alg);
    v = z3q::value_normal_form(v);
    if (opt.json) {
        ordered_json line;
        line["expr"] = src;
        line["algebra"] = alg.name();
        line["normal_form"] = z3q::to_string(v);
        std::cout << line.dump() << "\n";
    } else {
        std::cout << z3q::to_string(v) << "\n";
    }
    return kExitOk;
}

int repl(const z3q::Presentation& alg, const Options& opt) {
    std::cerr << "algebra: " << alg.name() << "  (quit with \"quit\" or end of input)\n";
    std::string line;
    while (true) {
        std::cerr << "z3q> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t");
        std::string src = line.substr(a, b - a + 1);
        if (src == "quit" || src == "exit") break;
        try {
            eval_one(src, alg, opt);
        } catch (const z3q::ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
        } catch (const z3q::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;

    CLI::App app{"normal forms and consistency checks for the cubic quantum plane"};
    app.add_option("--algebra", opt.algebra,
                   "algebra to work in: plane, omega, dual, gl, gl-plane, mixed-partial")
        ->default_str("plane");
    app.add_option("--check", opt.suites,
                   "run a named check suite (repeatable); \"all\" runs every suite")
        ->expected(-1);
    app.add_option("--max-degree", opt.suite_opt.max_degree, "degree bound for graded sweeps")
        ->default_val(opt.suite_opt.max_degree);
    app.add_option("--max-word-len", opt.suite_opt.max_word_len,
                   "word length bound for exhaustive sweeps")
        ->default_val(opt.suite_opt.max_word_len);
    app.add_option("--random-words", opt.suite_opt.random_words,
                   "sample count for randomized confluence checks")
        ->default_val(opt.suite_opt.random_words);
    app.add_option("--seed", opt.suite_opt.seed, "seed for randomized checks")
        ->default_val(opt.suite_opt.seed);
    app.add_flag("--json", opt.json, "emit one JSON object per line instead of text");
    app.add_flag("--inject-failure", opt.inject_failure)->group("");  // for exercising exit codes
    app.add_option("expr", opt.exprs, "expressions to bring to normal form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const z3q::Presentation& alg = z3q::presentation_by_name(opt.algebra);

        if (!opt.suites.empty()) {
            std::vector<std::string> names = opt.suites;
            if (std::find(names.begin(), names.end(), "all") != names.end())
                names = z3q::suite_names();
            auto results = z3q::run_suites(names, opt.suite_opt);
            if (opt.inject_failure) {
                z3q::CheckResult forced;
                forced.suite = "injected";
                forced.id = "injected:forced-failure";
                forced.ref = "synthetic failure requested on the command line";
                forced.status = z3q::Status::Fail;
                forced.residual = "1";
                results.push_back(forced);
            }
            return print_checks(results, opt);
        }

        if (!opt.exprs.empty()) {
            for (const auto& src : opt.exprs) eval_one(src, alg, opt);
            return kExitOk;
        }

        return repl(alg, opt);
    } catch (const z3q::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const z3q::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
