#pragma once

/*
 * Named verification suites, assembled from the module check functions.
 * Options bound the exhaustive enumerations and the randomized confluence
 * sampling; the defaults match the shipped verification run.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "z3q/report.hpp"

namespace z3q {

struct SuiteOptions {
    int max_degree = 8;
    int max_word_len = 4;
    std::size_t random_words = 10000;
    int random_word_len = 8;
    std::uint64_t seed = 20260815;
};

/* scalars, confluence, hopf, calculus, cartan, lie, partial, gl. */
const std::vector<std::string>& suite_names();

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<CheckResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opt);

}  // namespace z3q
