#pragma once

/*
 * Graded tensor squares and cubes.
 *
 * Multiplication twists by the crossing grades:
 *   (A (x) B) (C (x) D) = j^{grade(B) grade(C)} AC (x) BD
 * and for three legs the twist exponent is the sum over all pairs that
 * cross.  Legs may live in different presentations; normal forms reduce
 * each leg independently.
 */

#include <map>
#include <tuple>
#include <utility>

#include "z3q/algebra.hpp"

namespace z3q {

class TensorElement {
public:
    TensorElement() = default;

    static TensorElement zero(const Presentation& l, const Presentation& r);
    static TensorElement unit(const Presentation& l, const Presentation& r);
    /* a (x) b, plain bilinear pairing. */
    static TensorElement of(const Element& a, const Element& b);

    const Presentation* left_pres() const { return lp_; }
    const Presentation* right_pres() const { return rp_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word a, Word b, const Scalar& c);

    TensorElement operator-() const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    friend TensorElement operator*(const Scalar& s, const TensorElement& e);

private:
    const Presentation* lp_ = nullptr;
    const Presentation* rp_ = nullptr;
    std::map<std::pair<Word, Word>, Scalar> terms_;

    void adopt(const TensorElement& o);
};

TensorElement operator*(const Scalar& s, const TensorElement& e);

TensorElement tensor_normal_form(const TensorElement& t, Strategy strategy = Strategy::Leftmost,
                                 std::size_t budget = kDefaultBudget);

class Tensor3 {
public:
    Tensor3() = default;

    static Tensor3 zero(const Presentation& p1, const Presentation& p2, const Presentation& p3);
    static Tensor3 of(const Element& a, const Element& b, const Element& c);

    const std::map<std::tuple<Word, Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word a, Word b, Word c, const Scalar& s);

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator*(const Tensor3& o) const;
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    friend Tensor3 operator*(const Scalar& s, const Tensor3& e);

    const Presentation* pres(int leg) const { return ps_[leg]; }

private:
    const Presentation* ps_[3] = {nullptr, nullptr, nullptr};
    std::map<std::tuple<Word, Word, Word>, Scalar> terms_;

    void adopt(const Tensor3& o);
};

Tensor3 operator*(const Scalar& s, const Tensor3& e);

Tensor3 tensor3_normal_form(const Tensor3& t, Strategy strategy = Strategy::Leftmost,
                            std::size_t budget = kDefaultBudget);

}  // namespace z3q
