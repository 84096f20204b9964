#include "z3q/scalar.hpp"

namespace z3q {

Cyclo Cyclo::j_pow(long k) {
    long r = k % 3;
    if (r < 0) r += 3;
    switch (r) {
        case 0: return one();
        case 1: return j();
        default: return Cyclo{Rational(-1), Rational(-1)};  // j^2 = -1 - j
    }
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw Error("division by zero in Q(j)");
    Rational n = norm();
    Cyclo c = conj();
    return Cyclo{c.re / n, c.jm / n};
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == Cyclo::one();
}

Scalar Scalar::inv() const {
    if (terms_.size() != 1)
        throw Error("scalar not invertible: " + to_string(*this) +
                    " (only monomials c*q^k have inverses)");
    auto& [k, c] = *terms_.begin();
    return monomial(c.inv(), -k);
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    r += -o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_) {
            Cyclo p = c1 * c2;
            if (p.is_zero()) continue;
            auto it = r.terms_.find(k1 + k2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k1 + k2, p);
            } else {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

Scalar operator*(const Cyclo& c, const Scalar& s) {
    Scalar r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : s.terms_) {
        Cyclo p = c * v;
        if (!p.is_zero()) r.terms_.emplace(k, p);
    }
    return r;
}

std::string to_string(const Rational& r) { return r.str(); }

namespace {

/*
 * The printed forms below stay inside the expression grammar, which has no
 * unary minus: a leading negative term is rendered as "0 - ...".  Signs of
 * later terms fold into the "+"/"-" separators.
 */

bool leading_negative(const Cyclo& c) {
    if (c.re != 0) return c.re < 0;
    return c.jm < 0;
}

/* Magnitude part of c*q^k, assuming c has a positive leading component. */
std::string magnitude(const Cyclo& c, long k) {
    std::string qs;
    if (k == 1) qs = "q";
    else if (k != 0) qs = "q^" + std::to_string(k);

    std::string cs;
    if (c.jm == 0) {
        if (!(c.re == 1 && !qs.empty())) cs = to_string(c.re);
    } else if (c.re == 0) {
        cs = (c.jm == 1) ? "j" : to_string(c.jm) + "*j";
    } else {
        std::string inner = to_string(c.re);
        inner += (c.jm < 0) ? " - " : " + ";
        Rational b = abs(c.jm);
        inner += (b == 1) ? "j" : to_string(b) + "*j";
        cs = "(" + inner + ")";
    }

    if (cs.empty()) return qs.empty() ? "1" : qs;
    if (qs.empty()) return cs;
    return cs + "*" + qs;
}

}  // namespace

std::string to_string(const Cyclo& c) {
    return to_string(Scalar{c});
}

std::string to_string(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : s.terms()) {
        bool neg = leading_negative(c);
        Cyclo mag = neg ? -c : c;
        if (first) {
            if (neg) out += "0 - ";
        } else {
            out += neg ? " - " : " + ";
        }
        out += magnitude(mag, k);
        first = false;
    }
    return out;
}

ScalarPrint print_for_product(const Scalar& s) {
    if (s.is_zero()) return {false, "0"};
    if (s.terms().size() == 1) {
        auto& [k, c] = *s.terms().begin();
        bool neg = leading_negative(c);
        return {neg, magnitude(neg ? -c : c, k)};
    }
    bool neg = leading_negative(s.terms().begin()->second);
    return {neg, "(" + to_string(neg ? -s : s) + ")"};
}

}  // namespace z3q
