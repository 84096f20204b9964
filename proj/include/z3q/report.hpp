#pragma once

/*
 * Check results and the collector the verification suites write into.
 *
 * A check either must vanish (Pass when the residual is exactly zero),
 * must hold (boolean), or is expected-nonzero: the verified statement is
 * that the residual does NOT vanish, and a zero residual fails it.
 * Exceptions thrown while computing a check are caught and reported as
 * failures, never propagated.
 */

#include <functional>
#include <string>
#include <vector>

#include "z3q/algebra.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

enum class Status { Pass, Fail, ExpectedNonzero };

std::string to_string(Status s);

struct CheckResult {
    std::string suite;
    std::string id;
    std::string ref;       // the identity being checked, in plain notation
    Status status = Status::Fail;
    std::string residual;  // printed residual when it matters
    double ms = 0;
};

/* One JSON object per check: {suite, id, paper_ref, status, residual?, ms}. */
std::string to_json_line(const CheckResult& c);
std::string to_text_line(const CheckResult& c);
bool all_ok(const std::vector<CheckResult>& results);

class Checks {
public:
    explicit Checks(std::string suite) : suite_(std::move(suite)) {}

    void vanishes(const std::string& id, const std::string& ref,
                  const std::function<Element()>& fn);
    void tensor_vanishes(const std::string& id, const std::string& ref,
                         const std::function<TensorElement()>& fn);
    void tensor3_vanishes(const std::string& id, const std::string& ref,
                          const std::function<Tensor3()>& fn);
    void scalar_vanishes(const std::string& id, const std::string& ref,
                         const std::function<Scalar()>& fn);

    void nonzero(const std::string& id, const std::string& ref,
                 const std::function<Element()>& fn);
    void tensor_nonzero(const std::string& id, const std::string& ref,
                        const std::function<TensorElement()>& fn);
    void scalar_nonzero(const std::string& id, const std::string& ref,
                        const std::function<Scalar()>& fn);

    /* Boolean checks; on failure `detail` (if the callback fills it) is reported. */
    void holds(const std::string& id, const std::string& ref,
               const std::function<bool(std::string& detail)>& fn);

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckResult> out_;

    template <typename T>
    void run(const std::string& id, const std::string& ref, bool expect_nonzero,
             const std::function<T()>& fn);
};

}  // namespace z3q
