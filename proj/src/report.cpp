#include "z3q/report.hpp"

#include <chrono>

#include <json.hpp>

#include "z3q/io.hpp"

namespace z3q {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "expected-nonzero";
    }
}

std::string to_json_line(const CheckResult& c) {
    nlohmann::ordered_json o;
    o["suite"] = c.suite;
    o["id"] = c.id;
    o["paper_ref"] = c.ref;
    o["status"] = to_string(c.status);
    if (!c.residual.empty()) o["residual"] = c.residual;
    o["ms"] = c.ms;
    return o.dump();
}

std::string to_text_line(const CheckResult& c) {
    std::string line = "[" + to_string(c.status) + "] ";
    if (c.id.rfind(c.suite + ":", 0) == 0)
        line += c.id;
    else
        line += c.suite + ":" + c.id;
    if (!c.ref.empty()) line += "  (" + c.ref + ")";
    if (!c.residual.empty() && c.status == Status::Fail) line += "  residual: " + c.residual;
    return line;
}

bool all_ok(const std::vector<CheckResult>& results) {
    for (auto& r : results)
        if (r.status == Status::Fail) return false;
    return true;
}

namespace {

std::string printed(const Element& e) { return to_string(e); }
std::string printed(const TensorElement& e) { return to_string(e); }
std::string printed(const Tensor3& e) { return to_string(e); }
std::string printed(const Scalar& e) { return to_string(e); }

template <typename T>
bool vanished(const T& v) {
    return v.is_zero();
}

}  // namespace

template <typename T>
void Checks::run(const std::string& id, const std::string& ref, bool expect_nonzero,
                 const std::function<T()>& fn) {
    CheckResult r{suite_, id, ref, Status::Fail, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        T value = fn();
        bool zero = vanished(value);
        if (expect_nonzero) {
            r.status = zero ? Status::Fail : Status::ExpectedNonzero;
            r.residual = printed(value);
            if (zero) r.residual = "residual unexpectedly vanished";
        } else {
            r.status = zero ? Status::Pass : Status::Fail;
            if (!zero) r.residual = printed(value);
        }
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.residual = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
}

void Checks::vanishes(const std::string& id, const std::string& ref,
                      const std::function<Element()>& fn) {
    run<Element>(id, ref, false, fn);
}

void Checks::tensor_vanishes(const std::string& id, const std::string& ref,
                             const std::function<TensorElement()>& fn) {
    run<TensorElement>(id, ref, false, fn);
}

void Checks::tensor3_vanishes(const std::string& id, const std::string& ref,
                              const std::function<Tensor3()>& fn) {
    run<Tensor3>(id, ref, false, fn);
}

void Checks::scalar_vanishes(const std::string& id, const std::string& ref,
                             const std::function<Scalar()>& fn) {
    run<Scalar>(id, ref, false, fn);
}

void Checks::nonzero(const std::string& id, const std::string& ref,
                     const std::function<Element()>& fn) {
    run<Element>(id, ref, true, fn);
}

void Checks::tensor_nonzero(const std::string& id, const std::string& ref,
                            const std::function<TensorElement()>& fn) {
    run<TensorElement>(id, ref, true, fn);
}

void Checks::scalar_nonzero(const std::string& id, const std::string& ref,
                            const std::function<Scalar()>& fn) {
    run<Scalar>(id, ref, true, fn);
}

void Checks::holds(const std::string& id, const std::string& ref,
                   const std::function<bool(std::string&)>& fn) {
    CheckResult r{suite_, id, ref, Status::Fail, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail;
        bool ok = fn(detail);
        r.status = ok ? Status::Pass : Status::Fail;
        if (!ok) r.residual = detail.empty() ? "check failed" : detail;
    } catch (const std::exception& e) {
        r.residual = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
}

}  // namespace z3q
