/*
 * Acceptance gate: twelve criteria over one full verification run with the
 * shipped options, plus the serialization and round-trip contracts of the
 * command line tool.  Prints one line per criterion and exits nonzero when
 * any of them fails.
 */

#include <cstdlib>
#include <initializer_list>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "z3q/io.hpp"
#include "z3q/parser.hpp"
#include "z3q/presentations.hpp"
#include "z3q/report.hpp"
#include "z3q/suites.hpp"

using namespace z3q;

namespace {

struct Gate {
    const std::vector<CheckResult>& results;
    std::map<std::string, const CheckResult*> by_id;
    int failed = 0;

    explicit Gate(const std::vector<CheckResult>& r) : results(r) {
        for (auto& c : r) by_id[c.id] = &c;
    }

    bool require(std::initializer_list<const char*> ids, Status want, std::string& detail) {
        for (const char* id : ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                detail = std::string("missing check ") + id;
                return false;
            }
            if (it->second->status != want) {
                detail = std::string(id) + " is " + to_string(it->second->status);
                return false;
            }
        }
        return true;
    }

    bool pass(std::initializer_list<const char*> ids, std::string& detail) {
        return require(ids, Status::Pass, detail);
    }

    bool nonzero(std::initializer_list<const char*> ids, std::string& detail) {
        return require(ids, Status::ExpectedNonzero, detail);
    }

    bool clean_prefix(const std::string& prefix, std::size_t min_count, std::string& detail) {
        std::size_t n = 0;
        for (auto& c : results) {
            if (c.id.rfind(prefix, 0) != 0) continue;
            ++n;
            if (c.status == Status::Fail) {
                detail = c.id + " failed";
                return false;
            }
        }
        if (n < min_count) {
            detail = "only " + std::to_string(n) + " checks under " + prefix;
            return false;
        }
        return true;
    }

    void criterion(int n, const std::string& title, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title;
        if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failed;
    }
};

/* Sum of one to three random words with monomial coefficients, printed and
   re-read; normal forms must agree with the printed text exactly. */
bool roundtrip_batch(const Presentation& p, int count, std::string& detail) {
    std::mt19937_64 rng(2026 + p.gens().size());
    const auto& gens = p.gens();
    for (int iter = 0; iter < count; ++iter) {
        Element e = Element::zero(p);
        int terms = 1 + int(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Word w;
            int len = 1 + int(rng() % 5);
            for (int i = 0; i < len; ++i) w.push_back(gens[rng() % gens.size()]);
            e += Element::from_word(p, w,
                                    Scalar::monomial(Cyclo::j_pow(long(rng() % 3)),
                                                     long(rng() % 7) - 3));
        }
        std::string printed = to_string(normal_form(e));
        Value back = value_normal_form(evaluate(printed, p));
        if (to_string(back) != printed) {
            detail = "algebra " + p.name() + ", expression " + printed;
            return false;
        }
    }
    return true;
}

int run_cli_all() {
    std::string cmd = std::string(Z3Q_CLI_PATH) + " --check all > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main() {
    SuiteOptions opt;  // the shipped verification parameters
    auto results = run_suites(suite_names(), opt);
    Gate gate(results);
    std::string d;

    bool c1 = gate.pass({"scalars:j-cubed", "scalars:j-sum", "scalars:cyclo-inverse-roundtrip",
                         "scalars:fixture-inverse", "scalars:fixture-ratio",
                         "scalars:ring-axioms"}, d) &&
              gate.clean_prefix("scalars:", 8, d);
    gate.criterion(1, "exact scalar arithmetic with cube-root inversions", c1, d);

    d.clear();
    bool c2 = true;
    for (const char* name : {"plane", "omega", "dual", "gl", "mixed-partial"}) {
        std::string ex = std::string("confluence:") + name + ":exhaustive";
        std::string rn = std::string("confluence:") + name + ":random";
        c2 = c2 && gate.pass({ex.c_str()}, d) && gate.pass({rn.c_str()}, d);
    }
    c2 = c2 && gate.clean_prefix("confluence:", 12, d);
    gate.criterion(2, "two-strategy confluence, exhaustive and randomized", c2, d);

    d.clear();
    bool c3 = gate.pass({"calculus:d-respects-relations", "calculus:d-chain-dx-x",
                         "calculus:d-chain-dx-th", "calculus:d-chain-dth-x",
                         "calculus:d-chain-dth-th", "calculus:d-chain-dth-dx",
                         "calculus:d-chain-d2th-x"}, d);
    gate.criterion(3, "differential well definedness and second order coefficients", c3, d);

    d.clear();
    bool c4 = gate.pass({"calculus:d-cubed", "calculus:d-squared-x-value"}, d) &&
              gate.nonzero({"calculus:d-squared-x", "calculus:d-squared-theta"}, d);
    gate.criterion(4, "d cubed vanishes on the monomial grid while d squared does not", c4, d);

    d.clear();
    bool c5 = gate.pass({"calculus:braiding-root-j", "calculus:braiding-root-one",
                         "calculus:normalization-x", "calculus:normalization-theta",
                         "calculus:normalization-y", "calculus:normalization-cross",
                         "calculus:x-side-leading", "calculus:x-side-correction",
                         "calculus:theta-side-value", "calculus:x-denominator",
                         "calculus:theta-denominator",
                         "calculus:alternative-branch-j2-residual"}, d) &&
              gate.nonzero({"calculus:alternative-branch-j2"}, d);
    gate.criterion(5, "coefficient resolution singles out the consistent branch", c5, d);

    d.clear();
    bool c6 = gate.pass({"hopf:coassociativity", "hopf:counit-left", "hopf:counit-right",
                         "hopf:antipode-left", "hopf:antipode-right", "hopf:relations",
                         "hopf:theta-cubed-image"}, d) &&
              gate.clean_prefix("hopf:", 9, d);
    gate.criterion(6, "Hopf axioms on the extended plane", c6, d);

    d.clear();
    bool c7 = gate.pass({"coact:relations", "coact:coassociativity", "coact:counit",
                         "coact:d-compatibility", "coact:w-invariant", "coact:u-invariant",
                         "coact:w-cubed", "coact:module-compatibility"}, d) &&
              gate.clean_prefix("coact:", 14, d);
    gate.criterion(7, "left covariance of the differential calculus", c7, d);

    d.clear();
    bool c8 = gate.pass({"cartan:w-x", "cartan:w-theta", "cartan:u-x", "cartan:u-theta",
                         "cartan:w-dx", "cartan:w-dth", "cartan:u-dx", "cartan:u-dth",
                         "cartan:w-d2x", "cartan:w-d2th", "cartan:u-d2x", "cartan:u-d2th",
                         "cartan:w-cubed", "cartan:wu-commute", "cartan:dw", "cartan:du",
                         "cartan:w-dw", "cartan:w-du", "cartan:u-dw", "cartan:u-du",
                         "cartan:d2w", "cartan:d2u"}, d) &&
              gate.clean_prefix("cartan:", 27, d);
    gate.criterion(8, "structure relations of the invariant forms", c8, d);

    d.clear();
    bool c9 = gate.pass({"lie:T-nabla-commute", "lie:nabla-cubed", "lie:T-leibniz",
                         "lie:nabla-leibniz", "lie:T-closed-form", "lie:euler-decomposition",
                         "lie:nabla-decomposition", "lie:monomial-w", "lie:monomial-u",
                         "cartan:dx-from-w", "cartan:dth-from-wu"}, d);
    gate.criterion(9, "operator module relations, closed forms and product rules", c9, d);

    d.clear();
    bool c10 = gate.pass({"lie:partial-bridge", "lie:partials-exchange",
                          "lie:partial-theta-cubed", "partial:counit-px-x-value",
                          "partial:counit-pth-th-value", "partial:coproduct-plane-sector",
                          "partial:coproduct-partial-sector"}, d) &&
               gate.nonzero({"partial:coproduct-px-x", "partial:coproduct-pth-th",
                             "partial:coproduct-px-th", "partial:coproduct-pth-x"}, d) &&
               gate.clean_prefix("partial:", 15, d);
    gate.criterion(10, "partial derivative extraction and its expected non-invariance", c10, d);

    d.clear();
    bool c11 = gate.pass({"gl:plane-commutation", "gl:plane-cube", "gl:dual-commutation",
                          "gl:dual-cube", "gl:coaction-plane-commutation",
                          "gl:coaction-plane-cube", "gl:coaction-dual-commutation",
                          "gl:coaction-dual-cube", "gl:coaction-collapse"}, d) &&
               gate.nonzero({"gl:sensitivity:slot-0", "gl:sensitivity:slot-1",
                             "gl:sensitivity:slot-2", "gl:sensitivity:slot-3",
                             "gl:sensitivity:slot-4", "gl:sensitivity:slot-5",
                             "gl:sensitivity:slot-6"}, d) &&
               gate.clean_prefix("gl:", 16, d);
    gate.criterion(11, "matrix transformations, their coactions and rule sensitivity", c11, d);

    d.clear();
    bool c12 = true;
    if (!all_ok(results)) {
        c12 = false;
        d = "a suite check failed";
    }
    if (c12 && results.size() != 149) {
        c12 = false;
        d = "expected 149 checks, saw " + std::to_string(results.size());
    }
    if (c12) {
        for (const Presentation* p :
             {&plane(), &omega(), &dual(), &gl(), &mixed_partial()})
            if (!roundtrip_batch(*p, 200, d)) {
                c12 = false;
                break;
            }
    }
    if (c12) {
        CheckResult sample;
        sample.suite = "demo";
        sample.id = "demo:sample";
        sample.ref = "j^3 = 1";
        sample.status = Status::Pass;
        sample.ms = 0.25;
        if (to_json_line(sample) !=
            "{\"suite\":\"demo\",\"id\":\"demo:sample\",\"paper_ref\":\"j^3 = 1\","
            "\"status\":\"pass\",\"ms\":0.25}") {
            c12 = false;
            d = "pass line layout changed: " + to_json_line(sample);
        }
        sample.status = Status::Fail;
        sample.residual = "q - 1";
        if (c12 && to_json_line(sample) !=
                       "{\"suite\":\"demo\",\"id\":\"demo:sample\",\"paper_ref\":\"j^3 = 1\","
                       "\"status\":\"fail\",\"residual\":\"q - 1\",\"ms\":0.25}") {
            c12 = false;
            d = "fail line layout changed: " + to_json_line(sample);
        }
    }
    if (c12) {
        int rc = run_cli_all();
        if (rc != 0) {
            c12 = false;
            d = "cli --check all exited " + std::to_string(rc);
        }
    }
    gate.criterion(12, "the cli gate: round-trips, stable json layout, clean full run", c12, d);

    if (gate.failed == 0) {
        std::cout << "all 12 criteria passed (" << results.size() << " checks)\n";
        return 0;
    }
    std::cout << gate.failed << " criteria failed\n";
    return 1;
}
