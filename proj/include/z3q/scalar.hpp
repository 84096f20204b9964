#pragma once

/*
 * Exact coefficient arithmetic for the engine.
 *
 * Cyclo is the field Q(j) where j is a primitive cube root of unity,
 * stored on the basis {1, j} with j^2 = -1 - j.  Scalar is the ring of
 * Laurent polynomials in the deformation parameter q with Cyclo
 * coefficients, kept as a sparse exponent -> coefficient map.  All
 * arithmetic is exact; there are no floating point numbers anywhere.
 */

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "z3q/error.hpp"

namespace z3q {

using Rational = boost::multiprecision::cpp_rational;

struct Cyclo {
    Rational re;  // coefficient of 1
    Rational jm;  // coefficient of j

    Cyclo() = default;
    Cyclo(Rational r, Rational i) : re(std::move(r)), jm(std::move(i)) {}
    explicit Cyclo(Rational r) : re(std::move(r)) {}
    explicit Cyclo(long n) : re(n) {}

    static Cyclo zero() { return Cyclo{}; }
    static Cyclo one() { return Cyclo{1}; }
    static Cyclo j() { return Cyclo{Rational(0), Rational(1)}; }
    /* j^k for any integer k (period 3). */
    static Cyclo j_pow(long k);

    bool is_zero() const { return re == 0 && jm == 0; }
    bool is_rational() const { return jm == 0; }

    /* Galois conjugate j -> j^2:  a + b j  |->  (a - b) - b j. */
    Cyclo conj() const { return Cyclo{re - jm, -jm}; }
    /* Field norm c * conj(c) = a^2 - a b + b^2, zero only at c = 0. */
    Rational norm() const { return re * re - re * jm + jm * jm; }
    /* Multiplicative inverse; throws Error on zero. */
    Cyclo inv() const;

    Cyclo operator-() const { return Cyclo{-re, -jm}; }
    Cyclo operator+(const Cyclo& o) const { return Cyclo{re + o.re, jm + o.jm}; }
    Cyclo operator-(const Cyclo& o) const { return Cyclo{re - o.re, jm - o.jm}; }
    /* (a + b j)(c + d j) = (ac - bd) + (ad + bc - bd) j  using j^2 = -1 - j. */
    Cyclo operator*(const Cyclo& o) const {
        return Cyclo{re * o.re - jm * o.jm, re * o.jm + jm * o.re - jm * o.jm};
    }
    Cyclo& operator+=(const Cyclo& o) { re += o.re; jm += o.jm; return *this; }
    Cyclo& operator-=(const Cyclo& o) { re -= o.re; jm -= o.jm; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    bool operator==(const Cyclo& o) const { return re == o.re && jm == o.jm; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
};

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(long n) { if (n != 0) terms_[0] = Cyclo{n}; }
    explicit Scalar(const Rational& r) { if (r != 0) terms_[0] = Cyclo{r}; }
    explicit Scalar(const Cyclo& c) { if (!c.is_zero()) terms_[0] = c; }

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return Scalar{1}; }
    /* q^k */
    static Scalar q(long k = 1) {
        Scalar s;
        s.terms_[k] = Cyclo::one();
        return s;
    }
    /* j^k */
    static Scalar j(long k = 1) { return Scalar{Cyclo::j_pow(k)}; }
    /* c * q^k */
    static Scalar monomial(const Cyclo& c, long k) {
        Scalar s;
        if (!c.is_zero()) s.terms_[k] = c;
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /* Single q-power with coefficient 1? (what powers of q look like) */
    bool is_monomial() const { return terms_.size() == 1; }

    /* Inverse of c*q^k; throws Error unless *this is such a monomial. */
    Scalar inv() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const std::map<long, Cyclo>& terms() const { return terms_; }

private:
    std::map<long, Cyclo> terms_;  // q-exponent -> nonzero coefficient

    void put(long k, const Cyclo& c) {
        if (!c.is_zero()) terms_[k] = c;
    }
    friend Scalar operator*(const Cyclo& c, const Scalar& s);
};

Scalar operator*(const Cyclo& c, const Scalar& s);

std::string to_string(const Rational& r);
std::string to_string(const Cyclo& c);
std::string to_string(const Scalar& s);

/* Sign-split rendering for use inside printed products.  body never starts
   with '-', parses as a factor of the expression grammar, and is exactly
   "1" when the magnitude is one. */
struct ScalarPrint {
    bool negative = false;
    std::string body;
};
ScalarPrint print_for_product(const Scalar& s);

}  // namespace z3q
