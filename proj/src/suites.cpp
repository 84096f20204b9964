#include "z3q/suites.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "z3q/calculus.hpp"
#include "z3q/costructure.hpp"
#include "z3q/glqj.hpp"
#include "z3q/io.hpp"
#include "z3q/operators.hpp"
#include "z3q/presentations.hpp"

namespace z3q {

namespace {

Cyclo random_cyclo(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Cyclo{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<long> expo(-4, 4);
    Scalar s = Scalar::zero();
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) s += Scalar::monomial(random_cyclo(rng), expo(rng));
    return s;
}

std::vector<CheckResult> scalars_suite(const SuiteOptions& opt) {
    Checks c("scalars");
    const Scalar one = Scalar::one();

    c.scalar_vanishes("scalars:j-cubed", "j^3 = 1", [&] { return Scalar::j(3) - one; });
    c.scalar_vanishes("scalars:j-sum", "1 + j + j^2 = 0",
                      [&] { return one + Scalar::j(1) + Scalar::j(2); });
    c.scalar_vanishes("scalars:q-inverse", "q q^-1 = 1",
                      [&] { return Scalar::q(1) * Scalar::q(-1) - one; });
    c.scalar_vanishes("scalars:fixture-inverse", "(2 + j)^-1 = (1 - j)/3", [&] {
        Cyclo lhs = (Cyclo{2, 0} + Cyclo::j()).inv();
        Cyclo rhs{Rational(1, 3), Rational(-1, 3)};
        return Scalar(lhs - rhs);
    });
    c.scalar_vanishes("scalars:fixture-ratio", "(1 - j) / (1 - j^2) = -j", [&] {
        Scalar num = one - Scalar::j(1), den = one - Scalar::j(2);
        return num * den.inv() + Scalar::j(1);
    });

    c.holds("scalars:cyclo-inverse-roundtrip", "c c^-1 = 1 for random field elements",
            [&](std::string& detail) {
                std::mt19937_64 rng(opt.seed);
                for (int i = 0; i < 1000; ++i) {
                    Cyclo v = random_cyclo(rng);
                    if (v.is_zero()) continue;
                    if (v * v.inv() != Cyclo::one()) {
                        detail = "element " + to_string(v);
                        return false;
                    }
                }
                return true;
            });

    c.holds("scalars:ring-axioms",
            "associativity, commutativity and distributivity on random triples",
            [&](std::string& detail) {
                std::mt19937_64 rng(opt.seed + 1);
                for (int i = 0; i < 300; ++i) {
                    Scalar a = random_scalar(rng), b = random_scalar(rng),
                           d = random_scalar(rng);
                    if ((a * b) * d != a * (b * d) || a * b != b * a ||
                        a * (b + d) != a * b + a * d || a + b != b + a) {
                        detail = "triple " + to_string(a) + " ; " + to_string(b) + " ; " +
                                 to_string(d);
                        return false;
                    }
                }
                return true;
            });

    c.holds("scalars:monomial-inverse",
            "monomials invert and anything else refuses to",
            [&](std::string& detail) {
                std::mt19937_64 rng(opt.seed + 2);
                std::uniform_int_distribution<long> expo(-6, 6);
                for (int i = 0; i < 200; ++i) {
                    Cyclo v = random_cyclo(rng);
                    if (v.is_zero()) continue;
                    Scalar m = Scalar::monomial(v, expo(rng));
                    if (m * m.inv() != Scalar::one()) {
                        detail = "monomial " + to_string(m);
                        return false;
                    }
                }
                try {
                    (Scalar::q(1) + Scalar::one()).inv();
                    detail = "q + 1 claimed an inverse";
                    return false;
                } catch (const Error&) {
                }
                try {
                    Scalar::zero().inv();
                    detail = "zero claimed an inverse";
                    return false;
                } catch (const Error&) {
                }
                return true;
            });

    return c.take();
}

std::vector<CheckResult> confluence_suite(const SuiteOptions& opt) {
    Checks c("confluence");
    const Presentation* core[] = {&plane(), &omega(), &dual(), &gl(), &mixed_partial()};
    std::uint64_t salt = 0;
    for (const Presentation* p : core) {
        c.holds("confluence:" + p->name() + ":exhaustive",
                "both reduction strategies agree on every short word",
                [&, p](std::string& detail) {
                    auto rep = check_local_confluence(*p, opt.max_word_len);
                    if (!rep.confluent) detail = "word " + word_string(rep.witness);
                    return rep.confluent;
                });
        c.holds("confluence:" + p->name() + ":random",
                "both reduction strategies agree on random long words",
                [&, p, salt](std::string& detail) {
                    auto rep = check_confluence_random(*p, opt.random_words,
                                                       opt.random_word_len, opt.seed + salt);
                    if (!rep.confluent) detail = "word " + word_string(rep.witness);
                    return rep.confluent;
                });
        ++salt;
    }
    for (const Presentation* p : {&gl_plane(), &gl_dual()}) {
        c.holds("confluence:" + p->name() + ":exhaustive",
                "both reduction strategies agree on every short word",
                [&, p](std::string& detail) {
                    auto rep = check_local_confluence(*p, opt.max_word_len);
                    if (!rep.confluent) detail = "word " + word_string(rep.witness);
                    return rep.confluent;
                });
    }
    return c.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"scalars", "confluence", "hopf", "calculus",
                                                   "cartan",  "lie",        "partial", "gl"};
    return names;
}

namespace {

void sort_report(std::vector<CheckResult>& r) {
    std::stable_sort(r.begin(), r.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
    });
}

std::vector<CheckResult> dispatch_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "scalars") return scalars_suite(opt);
    if (name == "confluence") return confluence_suite(opt);
    if (name == "hopf") {
        auto r = check_hopf_axioms(opt.max_word_len);
        auto more = check_coaction_axioms(opt.max_word_len);
        r.insert(r.end(), more.begin(), more.end());
        return r;
    }
    if (name == "calculus") {
        auto r = check_d_well_defined();
        auto cube = check_d_cubed(opt.max_degree);
        auto coef = check_coefficient_resolution();
        r.insert(r.end(), cube.begin(), cube.end());
        r.insert(r.end(), coef.begin(), coef.end());
        return r;
    }
    if (name == "cartan") return check_cartan_maurer();
    if (name == "lie") {
        auto r = check_lie_relations(opt.max_degree);
        auto more = check_operator_coproducts();
        r.insert(r.end(), more.begin(), more.end());
        return r;
    }
    if (name == "partial") return check_partial_noninvariance(opt.max_word_len);
    if (name == "gl") {
        auto r = check_transformed_plane();
        for (auto part : {check_transformed_dual(), check_matrix_coactions(),
                          check_gl_sensitivity()})
            r.insert(r.end(), part.begin(), part.end());
        return r;
    }
    std::string known;
    for (auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error("unknown suite '" + name + "' (known: " + known + ", all)");
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    auto r = dispatch_suite(name, opt);
    sort_report(r);
    return r;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    for (auto& n : names) {
        auto r = dispatch_suite(n, opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    sort_report(out);
    return out;
}

}  // namespace z3q
