#include "z3q/tensor.hpp"

namespace z3q {

namespace {

const Presentation* join(const Presentation* a, const Presentation* b, const char* side) {
    if (a == nullptr) return b;
    if (b == nullptr) return a;
    if (a != b)
        throw Error(std::string("presentation mismatch on the ") + side + " tensor leg ('" +
                    a->name() + "' vs '" + b->name() + "')");
    return a;
}

}  // namespace

TensorElement TensorElement::zero(const Presentation& l, const Presentation& r) {
    TensorElement t;
    t.lp_ = &l;
    t.rp_ = &r;
    return t;
}

TensorElement TensorElement::unit(const Presentation& l, const Presentation& r) {
    TensorElement t = zero(l, r);
    t.add_term(Word{}, Word{}, Scalar::one());
    return t;
}

TensorElement TensorElement::of(const Element& a, const Element& b) {
    TensorElement t;
    t.lp_ = a.pres();
    t.rp_ = b.pres();
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
    return t;
}

void TensorElement::add_term(Word a, Word b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::move(a), std::move(b));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::adopt(const TensorElement& o) {
    lp_ = join(lp_, o.lp_, "left");
    rp_ = join(rp_, o.rp_, "right");
}

TensorElement TensorElement::operator-() const {
    TensorElement t;
    t.lp_ = lp_;
    t.rp_ = rp_;
    for (auto& [w, c] : terms_) t.terms_.emplace(w, -c);
    return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    adopt(o);
    for (auto& [w, c] : o.terms_) add_term(w.first, w.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    adopt(o);
    for (auto& [w, c] : o.terms_) add_term(w.first, w.second, -c);
    return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement t = *this;
    t += o;
    return t;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement t = *this;
    t -= o;
    return t;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement t;
    t.lp_ = lp_;
    t.rp_ = rp_;
    t.adopt(o);
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            Scalar twist = Scalar::j(word_grade(w1.second) * word_grade(w2.first));
            t.add_term(w1.first + w2.first, w1.second + w2.second, c1 * c2 * twist);
        }
    return t;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (lp_ && o.lp_ && lp_ != o.lp_) return false;
    if (rp_ && o.rp_ && rp_ != o.rp_) return false;
    return terms_ == o.terms_;
}

TensorElement operator*(const Scalar& s, const TensorElement& e) {
    TensorElement t;
    t.lp_ = e.lp_;
    t.rp_ = e.rp_;
    if (s.is_zero()) return t;
    for (auto& [w, c] : e.terms_) {
        Scalar p = s * c;
        if (!p.is_zero()) t.terms_.emplace(w, std::move(p));
    }
    return t;
}

TensorElement tensor_normal_form(const TensorElement& t, Strategy strategy, std::size_t budget) {
    if (t.left_pres() == nullptr || t.right_pres() == nullptr) return t;
    TensorElement out = TensorElement::zero(*t.left_pres(), *t.right_pres());
    for (auto& [w, c] : t.terms()) {
        Element l = normal_form(Element::from_word(*t.left_pres(), w.first), strategy, budget);
        Element r = normal_form(Element::from_word(*t.right_pres(), w.second), strategy, budget);
        for (auto& [wl, cl] : l.terms())
            for (auto& [wr, cr] : r.terms()) out.add_term(wl, wr, c * cl * cr);
    }
    return out;
}

/* ---------------- three legs ---------------- */

Tensor3 Tensor3::zero(const Presentation& p1, const Presentation& p2, const Presentation& p3) {
    Tensor3 t;
    t.ps_[0] = &p1;
    t.ps_[1] = &p2;
    t.ps_[2] = &p3;
    return t;
}

Tensor3 Tensor3::of(const Element& a, const Element& b, const Element& c) {
    Tensor3 t;
    t.ps_[0] = a.pres();
    t.ps_[1] = b.pres();
    t.ps_[2] = c.pres();
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms())
            for (auto& [wc, cc] : c.terms()) t.add_term(wa, wb, wc, ca * cb * cc);
    return t;
}

void Tensor3::add_term(Word a, Word b, Word c, const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(std::move(a), std::move(b), std::move(c));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), s);
    } else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Tensor3::adopt(const Tensor3& o) {
    static const char* sides[] = {"first", "second", "third"};
    for (int i = 0; i < 3; ++i) ps_[i] = join(ps_[i], o.ps_[i], sides[i]);
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    Tensor3 t = *this;
    t.adopt(o);
    for (auto& [w, c] : o.terms_) t.add_term(std::get<0>(w), std::get<1>(w), std::get<2>(w), c);
    return t;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    Tensor3 t = *this;
    t.adopt(o);
    for (auto& [w, c] : o.terms_) t.add_term(std::get<0>(w), std::get<1>(w), std::get<2>(w), -c);
    return t;
}

Tensor3 Tensor3::operator*(const Tensor3& o) const {
    Tensor3 t;
    for (int i = 0; i < 3; ++i) t.ps_[i] = ps_[i];
    t.adopt(o);
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            auto& [a, b, c] = w1;
            auto& [d, e, f] = w2;
            int tw = word_grade(b) * word_grade(d) + word_grade(c) * word_grade(d) +
                     word_grade(c) * word_grade(e);
            t.add_term(a + d, b + e, c + f, c1 * c2 * Scalar::j(tw));
        }
    return t;
}

bool Tensor3::operator==(const Tensor3& o) const {
    for (int i = 0; i < 3; ++i)
        if (ps_[i] && o.ps_[i] && ps_[i] != o.ps_[i]) return false;
    return terms_ == o.terms_;
}

Tensor3 operator*(const Scalar& s, const Tensor3& e) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i) t.ps_[i] = e.ps_[i];
    if (s.is_zero()) return t;
    for (auto& [w, c] : e.terms_) {
        Scalar p = s * c;
        if (!p.is_zero()) t.terms_.emplace(w, std::move(p));
    }
    return t;
}

Tensor3 tensor3_normal_form(const Tensor3& t, Strategy strategy, std::size_t budget) {
    for (int i = 0; i < 3; ++i)
        if (t.pres(i) == nullptr) return t;
    Tensor3 out = Tensor3::zero(*t.pres(0), *t.pres(1), *t.pres(2));
    for (auto& [w, c] : t.terms()) {
        Element l1 = normal_form(Element::from_word(*t.pres(0), std::get<0>(w)), strategy, budget);
        Element l2 = normal_form(Element::from_word(*t.pres(1), std::get<1>(w)), strategy, budget);
        Element l3 = normal_form(Element::from_word(*t.pres(2), std::get<2>(w)), strategy, budget);
        for (auto& [w1, c1] : l1.terms())
            for (auto& [w2, c2] : l2.terms())
                for (auto& [w3, c3] : l3.terms()) out.add_term(w1, w2, w3, c * c1 * c2 * c3);
    }
    return out;
}

}  // namespace z3q
