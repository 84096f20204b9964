#include "z3q/calculus.hpp"

#include "z3q/io.hpp"
#include "z3q/presentations.hpp"

namespace z3q {

namespace {

/* d on a single letter, as a free envelope element. */
Element letter_d(const Presentation& o, char g) {
    switch (g) {
        case gen::x: return Element::gen(o, gen::dx);
        case gen::th: return Element::gen(o, gen::dth);
        case gen::dx: return Element::gen(o, gen::d2x);
        case gen::dth: return Element::gen(o, gen::d2th);
        case gen::d2x:
        case gen::d2th: return Element::zero(o);
        case gen::xi:
            return -Element::from_word(o, make_word({gen::xi, gen::dx, gen::xi}));
        default:
            throw Error("d is defined on the envelope algebra only (got '" +
                        std::string(generator_symbol(g)) + "')");
    }
}

Element rule_element(const Presentation& p, char g1, char g2) {
    const Rule* r = p.pair_rule(g1, g2);
    if (!r) throw Error("no rule for that pair");
    Element rel = Element::from_word(p, r->lhs);
    for (auto& [w, c] : r->rhs) rel -= Element::from_word(p, w, c);
    return rel;
}

/* x^a th^b with x^-1 powers for negative a. */
Element coordinate_monomial(const Presentation& p, long a, int b) {
    Word w;
    for (long i = 0; i < (a >= 0 ? a : -a); ++i) w.push_back(a >= 0 ? gen::x : gen::xi);
    for (int i = 0; i < b; ++i) w.push_back(gen::th);
    return Element::from_word(p, w);
}

}  // namespace

Element differentiate(const Element& e) {
    const Presentation& o = omega();
    Element out = Element::zero(o);
    for (auto& [w, c] : e.terms()) {
        int prefix_grade = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Element mid = letter_d(o, w[i]);
            if (!mid.is_zero()) {
                Element pre = Element::from_word(o, w.substr(0, i),
                                                 c * Scalar::j(prefix_grade));
                Element post = Element::from_word(o, w.substr(i + 1));
                out += pre * mid * post;
            }
            prefix_grade += generator_grade(w[i]);
        }
    }
    return out;
}

Element cartan_w() { return Element::from_word(omega(), make_word({gen::dx, gen::xi})); }

Element cartan_u() {
    const Presentation& o = omega();
    return Element::from_word(o, make_word({gen::dth, gen::xi})) -
           Element::from_word(o, make_word({gen::dx, gen::xi, gen::th, gen::xi}));
}

std::pair<Element, Element> left_extract(const Element& one_form, std::size_t budget) {
    const Presentation& o = omega();
    Element a = Element::zero(o), b = Element::zero(o);
    std::map<Word, Scalar> pending(one_form.terms());
    std::size_t steps = 0;

    auto push = [&pending](Word w, Scalar c) {
        if (c.is_zero()) return;
        auto it = pending.find(w);
        if (it == pending.end()) {
            pending.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = std::move(it->second);
        pending.erase(it);

        std::size_t pos = Word::npos;
        int firsts = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == gen::dx || w[i] == gen::dth) {
                if (++firsts == 1) pos = i;
            } else if (w[i] == gen::d2x || w[i] == gen::d2th) {
                firsts = 3;
            }
        }
        if (firsts != 1)
            throw Error("left_extract expects a one-form: each word needs exactly one "
                        "first-order differential");
        if (pos == 0) {
            (w[0] == gen::dx ? a : b).add_term(w.substr(1), c);
            continue;
        }
        if (++steps > budget) throw BudgetExceeded(budget);

        // invert the rule for (coordinate, differential) to move d one slot left
        char g = w[pos - 1], dl = w[pos];
        Word pre = w.substr(0, pos - 1), post = w.substr(pos + 1);
        auto emit = [&](std::initializer_list<char> mid, const Scalar& s) {
            Word nw = pre;
            nw.append(Word(mid)).append(post);
            push(std::move(nw), c * s);
        };
        if (dl == gen::dx) {
            if (g == gen::x) emit({gen::dx, gen::x}, Scalar::j(2));
            else if (g == gen::xi) emit({gen::dx, gen::xi}, Scalar::j(1));
            else if (g == gen::th) emit({gen::dx, gen::th}, Scalar::j(1) * Scalar::q(-1));
            else throw Error("left_extract: stray letter in a one-form");
        } else {
            if (g == gen::x) {
                emit({gen::dth, gen::x}, Scalar::q(1));
                emit({gen::dx, gen::th}, -(Scalar::one() - Scalar::j(2)));
            } else if (g == gen::xi) {
                emit({gen::dth, gen::xi}, Scalar::q(-1));
                emit({gen::xi, gen::xi, gen::th, gen::dx},
                     -Scalar::q(1) * (Scalar::one() - Scalar::j(1)));
            } else if (g == gen::th) {
                emit({gen::dth, gen::th}, Scalar::j(1));
            } else {
                throw Error("left_extract: stray letter in a one-form");
            }
        }
    }
    return {a, b};
}

/* ---------------- Check suites ---------------- */

std::vector<CheckResult> check_d_well_defined() {
    Checks c("calculus");
    const Presentation& o = omega();
    auto J = [](long k) { return Scalar::j(k); };
    auto Q = [](long k) { return Scalar::q(k); };

    c.holds("calculus:d-respects-relations",
            "d of every defining envelope relation reduces to zero",
            [&](std::string& detail) {
                for (auto& rel : relation_elements(o)) {
                    if (!normal_form(differentiate(rel)).is_zero()) {
                        detail = "relation " + to_string(rel);
                        return false;
                    }
                }
                return true;
            });

    c.vanishes("calculus:d-chain-dx-x", "d maps the dx x relation onto the d2x x relation",
               [&] { return differentiate(rule_element(o, gen::dx, gen::x)) -
                            rule_element(o, gen::d2x, gen::x); });

    c.vanishes("calculus:d-chain-dth-th", "d maps the dth th relation onto the d2th th relation",
               [&] { return differentiate(rule_element(o, gen::dth, gen::th)) -
                            rule_element(o, gen::d2th, gen::th); });

    c.vanishes("calculus:d-chain-dth-x",
               "d maps the dth x relation onto the d2th x relation plus j^2 times the "
               "dth dx relation",
               [&] { return differentiate(rule_element(o, gen::dth, gen::x)) -
                            rule_element(o, gen::d2th, gen::x) -
                            J(2) * rule_element(o, gen::dth, gen::dx); });

    c.vanishes("calculus:d-chain-dx-th",
               "d maps the dx th relation onto the d2x th relation minus j^2 q times the "
               "dth dx relation",
               [&] { return differentiate(rule_element(o, gen::dx, gen::th)) -
                            rule_element(o, gen::d2x, gen::th) +
                            J(2) * Q(1) * rule_element(o, gen::dth, gen::dx); });

    c.vanishes("calculus:d-chain-dth-dx",
               "d maps the dth dx relation onto the d2th dx relation minus j q^-1 times "
               "the d2x dth relation",
               [&] { return differentiate(rule_element(o, gen::dth, gen::dx)) -
                            rule_element(o, gen::d2th, gen::dx) +
                            J(1) * Q(-1) * rule_element(o, gen::d2x, gen::dth); });

    c.vanishes("calculus:d-chain-d2th-x",
               "d maps the d2th x relation onto the d2th dx relation",
               [&] { return differentiate(rule_element(o, gen::d2th, gen::x)) -
                            rule_element(o, gen::d2th, gen::dx); });

    return c.take();
}

std::vector<CheckResult> check_d_cubed(int max_degree) {
    Checks c("calculus");
    const Presentation& o = omega();

    c.holds("calculus:d-cubed",
            "d^3 kills every coordinate monomial x^a th^b",
            [&](std::string& detail) {
                for (long a = -3; a <= max_degree; ++a)
                    for (int b = 0; b <= 2; ++b) {
                        Element m = coordinate_monomial(o, a, b);
                        Element r = m;
                        for (int k = 0; k < 3; ++k) r = normal_form(differentiate(r));
                        if (!r.is_zero()) {
                            detail = "monomial " + to_string(m);
                            return false;
                        }
                    }
                return true;
            });

    c.vanishes("calculus:d-squared-x-value", "d^2 x = d2x", [&] {
        return normal_form(differentiate(differentiate(Element::gen(o, gen::x)))) -
               Element::gen(o, gen::d2x);
    });

    c.nonzero("calculus:d-squared-x", "d^2 x does not vanish", [&] {
        return normal_form(differentiate(differentiate(Element::gen(o, gen::x))));
    });

    c.nonzero("calculus:d-squared-theta", "d^2 th does not vanish", [&] {
        return normal_form(differentiate(differentiate(Element::gen(o, gen::th))));
    });

    c.nonzero("calculus:d-squared-x-squared", "d^2 (x^2) does not vanish", [&] {
        Element x2 = coordinate_monomial(o, 2, 0);
        return normal_form(differentiate(normal_form(differentiate(x2))));
    });

    return c.take();
}

std::vector<CheckResult> check_coefficient_resolution() {
    Checks c("calculus");
    const Scalar one = Scalar::one();
    const Scalar X = Scalar::j(2), A = Scalar::q(1), B = Scalar::j(2) - one;
    const Scalar C = Scalar::j(1) * Scalar::q(-1), D = Scalar::zero(), Y = Scalar::j(1);
    const Scalar F = Scalar::q(1) * Scalar::j(1);
    auto braiding_poly = [&](const Scalar& y) {
        return one + Scalar::j(1) * y + Scalar::j(2) * y * y;
    };

    c.scalar_vanishes("calculus:normalization-x", "j X = 1 at the principal branch",
                      [&] { return Scalar::j(1) * X - one; });
    c.scalar_vanishes("calculus:normalization-theta", "j^2 A + j B F = F",
                      [&] { return Scalar::j(2) * A + Scalar::j(1) * B * F - F; });
    c.scalar_vanishes("calculus:normalization-y", "j Y = j^2",
                      [&] { return Scalar::j(1) * Y - Scalar::j(2); });
    c.scalar_vanishes("calculus:normalization-cross", "j D + C F = j^2",
                      [&] { return Scalar::j(1) * D + C * F - Scalar::j(2); });

    c.scalar_vanishes("calculus:braiding-root-one", "1 + j Y + j^2 Y^2 vanishes at Y = 1",
                      [&] { return braiding_poly(one); });
    c.scalar_vanishes("calculus:braiding-root-j", "1 + j Y + j^2 Y^2 vanishes at Y = j",
                      [&] { return braiding_poly(Scalar::j(1)); });
    c.scalar_nonzero("calculus:braiding-root-j2-claim",
                     "the recorded root Y = j^2 does not satisfy 1 + j Y + j^2 Y^2 = 0; "
                     "the actual root set is {1, j}",
                     [&] { return braiding_poly(Scalar::j(2)); });
    c.holds("calculus:braiding-root-j2-residual", "1 + j Y + j^2 Y^2 at Y = j^2 equals 3",
            [&](std::string& detail) {
                Scalar got = braiding_poly(Scalar::j(2));
                if (got != Scalar(3)) {
                    detail = "residual " + to_string(got);
                    return false;
                }
                return true;
            });

    c.scalar_nonzero("calculus:alternative-branch-j2",
                     "on the Y = j^2 branch the x normalization residual j X - 1 = j - 1 "
                     "does not vanish",
                     [&] { return Scalar::j(1) * one - one; });
    c.holds("calculus:alternative-branch-j2-residual", "that residual equals j - 1",
            [&](std::string& detail) {
                Scalar got = Scalar::j(1) - one;
                if (Scalar::j(1) * one - one != got) {
                    detail = "residual " + to_string(Scalar::j(1) * one - one);
                    return false;
                }
                return true;
            });
    c.scalar_nonzero("calculus:alternative-branch-one",
                     "on the Y = 1 branch the x normalization residual j X - 1 = j^2 - 1 "
                     "does not vanish",
                     [&] { return Scalar::j(1) * Scalar::j(1) - one; });
    c.holds("calculus:alternative-branch-one-residual", "that residual equals j^2 - 1",
            [&](std::string& detail) {
                Scalar got = Scalar::j(1) * Scalar::j(1) - one;
                if (got != Scalar::j(2) - one) {
                    detail = "residual " + to_string(got);
                    return false;
                }
                return true;
            });

    // The two normalization denominators and what they resolve to.
    const Scalar Qd = A * F.inv() + Scalar::j(2) * (one + B);
    const Scalar Qp = D + Scalar::j(2) * (one + C * F);
    c.scalar_vanishes("calculus:x-denominator", "A F^-1 + j^2 (1 + B) = -1",
                      [&] { return Qd + one; });
    c.scalar_vanishes("calculus:x-side-leading", "- A / Q = q",
                      [&] { return -(A * Qd.inv()) - Scalar::q(1); });
    c.scalar_vanishes("calculus:x-side-correction", "(1 + B - j^2 A F^-1) / Q = j - j^2",
                      [&] {
                          return (one + B - Scalar::j(2) * A * F.inv()) * Qd.inv() -
                                 (Scalar::j(1) - Scalar::j(2));
                      });
    c.scalar_vanishes("calculus:theta-denominator", "D + j^2 (1 + C F) = -1",
                      [&] { return Qp + one; });
    c.scalar_nonzero("calculus:theta-side-mismatch",
                     "- C / Q' evaluates to j q^-1 while the differential route forces "
                     "j^2 q^-1; the difference does not vanish",
                     [&] { return -(C * Qp.inv()) - Scalar::j(2) * Scalar::q(-1); });
    c.holds("calculus:theta-side-value", "- C / Q' = j q^-1",
            [&](std::string& detail) {
                Scalar got = -(C * Qp.inv());
                if (got != Scalar::j(1) * Scalar::q(-1)) {
                    detail = "value " + to_string(got);
                    return false;
                }
                return true;
            });

    return c.take();
}

std::vector<CheckResult> check_cartan_maurer() {
    Checks c("cartan");
    const Presentation& o = omega();
    auto g = [&](char v) { return Element::gen(o, v); };
    auto J = [](long k) { return Scalar::j(k); };
    auto Q = [](long k) { return Scalar::q(k); };
    const Element w = cartan_w(), u = cartan_u();
    const Element dw = differentiate(w), du = differentiate(u);

    c.vanishes("cartan:w-x", "x w = j^2 w x",
               [&] { return normal_form(g(gen::x) * w - J(2) * (w * g(gen::x))); });
    c.vanishes("cartan:w-theta", "th w = j w th",
               [&] { return normal_form(g(gen::th) * w - J(1) * (w * g(gen::th))); });
    c.vanishes("cartan:u-x", "x u = q u x",
               [&] { return normal_form(g(gen::x) * u - Q(1) * (u * g(gen::x))); });
    c.vanishes("cartan:u-theta", "th u = q j u th",
               [&] { return normal_form(g(gen::th) * u - Q(1) * J(1) * (u * g(gen::th))); });

    c.vanishes("cartan:w-dx", "dx w = j^2 w dx",
               [&] { return normal_form(g(gen::dx) * w - J(2) * (w * g(gen::dx))); });
    c.vanishes("cartan:w-dth", "w dth = j^2 dth w + q^-1 (1 - j) dx u",
               [&] {
                   return normal_form(w * g(gen::dth) - J(2) * (g(gen::dth) * w) -
                                      Q(-1) * (Scalar::one() - J(1)) * (g(gen::dx) * u));
               });
    c.vanishes("cartan:u-dx", "dx u = q u dx",
               [&] { return normal_form(g(gen::dx) * u - Q(1) * (u * g(gen::dx))); });
    c.vanishes("cartan:u-dth", "u dth = q^-1 dth u + q^-2 (1 - j) dx u th x^-1",
               [&] {
                   return normal_form(u * g(gen::dth) - Q(-1) * (g(gen::dth) * u) -
                                      Q(-2) * (Scalar::one() - J(1)) *
                                          (g(gen::dx) * u * g(gen::th) * g(gen::xi)));
               });

    c.vanishes("cartan:w-d2x", "w d2x = j^2 d2x w",
               [&] { return normal_form(w * g(gen::d2x) - J(2) * (g(gen::d2x) * w)); });
    c.vanishes("cartan:u-d2x", "u d2x = q^-1 d2x u",
               [&] { return normal_form(u * g(gen::d2x) - Q(-1) * (g(gen::d2x) * u)); });
    c.vanishes("cartan:w-d2th", "w d2th = d2th w + q^-1 (j - j^2) d2x u",
               [&] {
                   return normal_form(w * g(gen::d2th) - g(gen::d2th) * w -
                                      Q(-1) * (J(1) - J(2)) * (g(gen::d2x) * u));
               });
    c.vanishes("cartan:u-d2th", "u d2th = q^-1 d2th u + q^-2 (1 - j) d2x u th x^-1",
               [&] {
                   return normal_form(u * g(gen::d2th) - Q(-1) * (g(gen::d2th) * u) -
                                      Q(-2) * (Scalar::one() - J(1)) *
                                          (g(gen::d2x) * u * g(gen::th) * g(gen::xi)));
               });

    c.vanishes("cartan:w-cubed", "w^3 = 0", [&] { return normal_form(w * w * w); });
    c.vanishes("cartan:wu-commute", "w u = u w", [&] { return normal_form(w * u - u * w); });

    c.vanishes("cartan:w-xinv", "x^-1 w = j w x^-1",
               [&] { return normal_form(g(gen::xi) * w - J(1) * (w * g(gen::xi))); });
    c.vanishes("cartan:u-xinv", "x^-1 u = q^-1 u x^-1",
               [&] { return normal_form(g(gen::xi) * u - Q(-1) * (u * g(gen::xi))); });

    c.vanishes("cartan:dx-from-w", "w x = dx",
               [&] { return normal_form(w * g(gen::x)) - g(gen::dx); });
    c.vanishes("cartan:dth-from-wu", "w th + u x = dth",
               [&] { return normal_form(w * g(gen::th) + u * g(gen::x)) - g(gen::dth); });

    c.vanishes("cartan:dw", "d w = d2x x^-1 - j w^2", [&] {
        Element rhs = Element::from_word(o, make_word({gen::d2x, gen::xi})) - J(1) * (w * w);
        return normal_form(dw - rhs);
    });
    c.vanishes("cartan:du", "d u = d2th x^-1 - d2x x^-1 th x^-1 + u w", [&] {
        Element rhs = Element::from_word(o, make_word({gen::d2th, gen::xi})) -
                      Element::from_word(o, make_word({gen::d2x, gen::xi, gen::th, gen::xi})) +
                      u * w;
        return normal_form(du - rhs);
    });

    c.vanishes("cartan:w-dw", "w dw = j dw w",
               [&] { return normal_form(w * dw - J(1) * (dw * w)); });
    c.vanishes("cartan:w-du", "w du = j^2 du w + (j - j^2) dw u",
               [&] {
                   return normal_form(w * du - J(2) * (du * w) - (J(1) - J(2)) * (dw * u));
               });
    c.vanishes("cartan:u-dw", "u dw = dw u", [&] { return normal_form(u * dw - dw * u); });
    c.vanishes("cartan:u-du", "u du = du u", [&] { return normal_form(u * du - du * u); });

    c.vanishes("cartan:d2w", "d(dw) = 0", [&] { return normal_form(differentiate(dw)); });
    c.vanishes("cartan:d2u", "d(du) = 0", [&] { return normal_form(differentiate(du)); });

    c.holds("cartan:left-extract-roundtrip",
            "pulling the differential to the front of d f inverts cleanly",
            [&](std::string& detail) {
                auto words = all_words({gen::xi, gen::x, gen::th}, 1, 4);
                for (auto& wd : words) {
                    Element f = Element::from_word(o, wd);
                    Element df = normal_form(differentiate(f));
                    auto [ea, eb] = left_extract(df);
                    Element back = normal_form(g(gen::dx) * ea + g(gen::dth) * eb);
                    if (back != df) {
                        detail = "word " + word_string(wd);
                        return false;
                    }
                }
                return true;
            });

    return c.take();
}

}  // namespace z3q
