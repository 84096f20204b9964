#include "z3q/costructure.hpp"

#include "z3q/calculus.hpp"
#include "z3q/io.hpp"
#include "z3q/presentations.hpp"

namespace z3q {

/* ---------------- TensorHom ---------------- */

TensorHom::TensorHom(const Presentation& dom, const Presentation& left, const Presentation& right)
    : dom_(&dom), left_(&left), right_(&right), images_(gen::count), set_(gen::count, false) {}

void TensorHom::set_image(char g, TensorElement img) {
    images_[static_cast<unsigned char>(g)] = std::move(img);
    set_[static_cast<unsigned char>(g)] = true;
}

bool TensorHom::has_image(char g) const { return set_[static_cast<unsigned char>(g)]; }

TensorElement TensorHom::apply(const Element& e, Strategy strategy, std::size_t budget) const {
    TensorElement out = TensorElement::zero(*left_, *right_);
    for (auto& [w, c] : e.terms()) {
        TensorElement acc = TensorElement::unit(*left_, *right_);
        for (char g : w) {
            if (!has_image(g))
                throw Error("no image for generator '" + std::string(generator_symbol(g)) +
                            "' under this map");
            acc = acc * images_[static_cast<unsigned char>(g)];
        }
        out += c * acc;
    }
    return tensor_normal_form(out, strategy, budget);
}

/* ---------------- The maps ---------------- */

const TensorHom& coproduct() {
    static const TensorHom hom = [] {
        const Presentation& p = plane();
        TensorHom h(p, p, p);
        auto g = [&](char v) { return Element::gen(p, v); };
        h.set_image(gen::x, TensorElement::of(g(gen::x), g(gen::x)));
        h.set_image(gen::xi, TensorElement::of(g(gen::xi), g(gen::xi)));
        h.set_image(gen::th, TensorElement::of(g(gen::th), g(gen::x)) +
                                 TensorElement::of(g(gen::x), g(gen::th)));
        return h;
    }();
    return hom;
}

const TensorHom& delta_L() {
    static const TensorHom hom = [] {
        const Presentation& p = plane();
        const Presentation& o = omega();
        TensorHom h(o, p, o);
        auto pg = [&](char v) { return Element::gen(p, v); };
        auto og = [&](char v) { return Element::gen(o, v); };
        h.set_image(gen::x, TensorElement::of(pg(gen::x), og(gen::x)));
        h.set_image(gen::xi, TensorElement::of(pg(gen::xi), og(gen::xi)));
        h.set_image(gen::th, TensorElement::of(pg(gen::th), og(gen::x)) +
                                 TensorElement::of(pg(gen::x), og(gen::th)));
        h.set_image(gen::dx, TensorElement::of(pg(gen::x), og(gen::dx)));
        h.set_image(gen::dth, Scalar::j() * TensorElement::of(pg(gen::th), og(gen::dx)) +
                                  TensorElement::of(pg(gen::x), og(gen::dth)));
        h.set_image(gen::d2x, TensorElement::of(pg(gen::x), og(gen::d2x)));
        h.set_image(gen::d2th, Scalar::j(2) * TensorElement::of(pg(gen::th), og(gen::d2x)) +
                                   TensorElement::of(pg(gen::x), og(gen::d2th)));
        return h;
    }();
    return hom;
}

namespace {

Scalar letter_counit(char g) {
    switch (g) {
        case gen::x:
        case gen::xi: return Scalar::one();
        case gen::th:
        case gen::dx:
        case gen::dth:
        case gen::d2x:
        case gen::d2th: return Scalar::zero();
        default:
            throw Error("counit is not defined on generator '" +
                        std::string(generator_symbol(g)) + "'");
    }
}

Scalar word_counit(const Word& w) {
    Scalar s = Scalar::one();
    for (char g : w) {
        s = s * letter_counit(g);
        if (s.is_zero()) break;
    }
    return s;
}

Element antipode_word(const Presentation& p, const Word& w) {
    if (w.empty()) return Element::unit(p);
    char g = w.front();
    Word rest = w.substr(1);
    Element sg;
    switch (g) {
        case gen::x: sg = Element::gen(p, gen::xi); break;
        case gen::xi: sg = Element::gen(p, gen::x); break;
        case gen::th:
            sg = -Element::from_word(p, make_word({gen::xi, gen::th, gen::xi}));
            break;
        default:
            throw Error("antipode is defined on the plane algebra only");
    }
    return Scalar::j(generator_grade(g) * word_grade(rest)) * (antipode_word(p, rest) * sg);
}

}  // namespace

Scalar counit(const Element& e) {
    Scalar s = Scalar::zero();
    for (auto& [w, c] : e.terms()) s += c * word_counit(w);
    return s;
}

Element antipode(const Element& e, Strategy strategy, std::size_t budget) {
    const Presentation& p = plane();
    Element out = Element::zero(p);
    for (auto& [w, c] : e.terms()) out += c * antipode_word(p, w);
    return normal_form(out, strategy, budget);
}

TensorElement phi_L(const Element& one_form, Strategy strategy, std::size_t budget) {
    for (auto& [w, c] : one_form.terms()) {
        (void)c;
        int first = 0, second = 0;
        for (char g : w) {
            if (g == gen::dx || g == gen::dth) ++first;
            if (g == gen::d2x || g == gen::d2th) ++second;
        }
        if (first != 1 || second != 0)
            throw Error("phi_L expects a one-form: each word needs exactly one "
                        "first-order differential");
    }
    return delta_L().apply(one_form, strategy, budget);
}

/* ---------------- Leg utilities ---------------- */

Element counit_contract_left(const TensorElement& t) {
    Element out = t.right_pres() ? Element::zero(*t.right_pres()) : Element();
    for (auto& [ws, c] : t.terms()) out += Element::from_word(*t.right_pres(), ws.second,
                                                              c * word_counit(ws.first));
    return out;
}

Element counit_contract_right(const TensorElement& t) {
    Element out = t.left_pres() ? Element::zero(*t.left_pres()) : Element();
    for (auto& [ws, c] : t.terms()) out += Element::from_word(*t.left_pres(), ws.first,
                                                              c * word_counit(ws.second));
    return out;
}

Element transport(const Element& e, const Presentation& target) {
    Element out = Element::zero(target);
    for (auto& [w, c] : e.terms()) out += Element::from_word(target, w, c);
    return out;
}

Element antipode_multiply_left(const TensorElement& t, const Presentation& target,
                               Strategy strategy, std::size_t budget) {
    Element acc = Element::zero(target);
    for (auto& [ws, c] : t.terms()) {
        Element sa = antipode(Element::from_word(*t.left_pres(), ws.first), strategy, budget);
        acc += c * (transport(sa, target) * Element::from_word(target, ws.second));
    }
    return normal_form(acc, strategy, budget);
}

Element antipode_multiply_right(const TensorElement& t, const Presentation& target,
                                Strategy strategy, std::size_t budget) {
    Element acc = Element::zero(target);
    for (auto& [ws, c] : t.terms()) {
        Element sb = antipode(Element::from_word(*t.right_pres(), ws.second), strategy, budget);
        acc += c * (Element::from_word(target, ws.first) * transport(sb, target));
    }
    return normal_form(acc, strategy, budget);
}

Tensor3 expand_left(const TensorHom& h, const TensorElement& t, Strategy strategy,
                    std::size_t budget) {
    Tensor3 out = Tensor3::zero(h.left(), h.right(),
                                t.right_pres() ? *t.right_pres() : h.right());
    for (auto& [ws, c] : t.terms()) {
        TensorElement ha = h.apply(Element::from_word(h.domain(), ws.first), strategy, budget);
        for (auto& [uv, d] : ha.terms()) out.add_term(uv.first, uv.second, ws.second, c * d);
    }
    return tensor3_normal_form(out, strategy, budget);
}

Tensor3 expand_right(const TensorHom& h, const TensorElement& t, Strategy strategy,
                     std::size_t budget) {
    Tensor3 out = Tensor3::zero(t.left_pres() ? *t.left_pres() : h.left(), h.left(), h.right());
    for (auto& [ws, c] : t.terms()) {
        TensorElement hb = h.apply(Element::from_word(h.domain(), ws.second), strategy, budget);
        for (auto& [uv, d] : hb.terms()) out.add_term(ws.first, uv.first, uv.second, c * d);
    }
    return tensor3_normal_form(out, strategy, budget);
}

/* ---------------- Check suites ---------------- */

namespace {

/* (grade twist (x) exterior differential) applied leg by leg; the right
   leg is rebuilt in the envelope so d can act on it. */
TensorElement twist_tensor_d(const TensorElement& t) {
    const Presentation& o = omega();
    TensorElement out = TensorElement::zero(*t.left_pres(), o);
    for (auto& [ws, c] : t.terms()) {
        Element db = normal_form(differentiate(Element::from_word(o, ws.second)));
        Scalar tw = c * Scalar::j(word_grade(ws.first));
        for (auto& [w, d] : db.terms()) out.add_term(ws.first, w, tw * d);
    }
    return tensor_normal_form(out);
}

}  // namespace

std::vector<CheckResult> check_hopf_axioms(int max_word_len) {
    Checks c("hopf");
    const Presentation& p = plane();
    const TensorHom& D = coproduct();
    auto e = [&](char g) { return Element::gen(p, g); };
    auto words = all_words(p.gens(), 0, max_word_len);

    c.holds("hopf:coassociativity",
            "(Delta ox id) Delta = (id ox Delta) Delta on all plane words",
            [&](std::string& detail) {
                for (auto& w : words) {
                    TensorElement dw = D.apply(Element::from_word(p, w));
                    if (expand_left(D, dw) != expand_right(D, dw)) {
                        detail = "word " + word_string(w);
                        return false;
                    }
                }
                return true;
            });

    c.holds("hopf:counit-left", "m (eps ox id) Delta = id", [&](std::string& detail) {
        for (auto& w : words) {
            Element el = Element::from_word(p, w);
            if (normal_form(counit_contract_left(D.apply(el))) != normal_form(el)) {
                detail = "word " + word_string(w);
                return false;
            }
        }
        return true;
    });

    c.holds("hopf:counit-right", "m (id ox eps) Delta = id", [&](std::string& detail) {
        for (auto& w : words) {
            Element el = Element::from_word(p, w);
            if (normal_form(counit_contract_right(D.apply(el))) != normal_form(el)) {
                detail = "word " + word_string(w);
                return false;
            }
        }
        return true;
    });

    c.holds("hopf:antipode-left", "m (S ox id) Delta = eps 1", [&](std::string& detail) {
        for (auto& w : words) {
            Element el = Element::from_word(p, w);
            Element want = counit(el) * Element::unit(p);
            if (antipode_multiply_left(D.apply(el), p) != want) {
                detail = "word " + word_string(w);
                return false;
            }
        }
        return true;
    });

    c.holds("hopf:antipode-right", "m (id ox S) Delta = eps 1", [&](std::string& detail) {
        for (auto& w : words) {
            Element el = Element::from_word(p, w);
            Element want = counit(el) * Element::unit(p);
            if (antipode_multiply_right(D.apply(el), p) != want) {
                detail = "word " + word_string(w);
                return false;
            }
        }
        return true;
    });

    c.holds("hopf:relations", "Delta annihilates every defining plane relation",
            [&](std::string& detail) {
                for (auto& rel : relation_elements(p)) {
                    if (!D.apply(rel).is_zero()) {
                        detail = "relation " + to_string(rel);
                        return false;
                    }
                }
                return true;
            });

    c.tensor_vanishes("hopf:theta-squared-image",
                      "Delta(th^2) = th^2 ox x^2 + q^-1 (1+j) x th ox x th + x^2 ox th^2",
                      [&] {
                          TensorElement want =
                              TensorElement::of(e(gen::th) * e(gen::th), e(gen::x) * e(gen::x)) +
                              (Scalar::q(-1) * (Scalar(Cyclo::one() + Cyclo::j()))) *
                                  TensorElement::of(e(gen::x) * e(gen::th),
                                                    e(gen::x) * e(gen::th)) +
                              TensorElement::of(e(gen::x) * e(gen::x), e(gen::th) * e(gen::th));
                          return D.apply(e(gen::th) * e(gen::th)) - tensor_normal_form(want);
                      });

    c.tensor_vanishes("hopf:theta-cubed-image", "Delta(th)^3 = 0", [&] {
        TensorElement dth = D.apply(e(gen::th));
        return tensor_normal_form(dth * dth * dth);
    });

    c.vanishes("hopf:antipode-theta", "S(th) = - x^-1 th x^-1", [&] {
        return antipode(e(gen::th)) +
               normal_form(Element::from_word(p, make_word({gen::xi, gen::th, gen::xi})));
    });

    return c.take();
}

std::vector<CheckResult> check_coaction_axioms(int max_word_len) {
    Checks c("coact");
    const Presentation& p = plane();
    const Presentation& o = omega();
    const TensorHom& D = coproduct();
    const TensorHom& DL = delta_L();
    auto og = [&](char g) { return Element::gen(o, g); };
    auto words = all_words(o.gens(), 0, max_word_len);

    c.holds("coact:coassociativity",
            "(Delta ox id) Delta_L = (id ox Delta_L) Delta_L on all envelope words",
            [&](std::string& detail) {
                for (auto& w : words) {
                    TensorElement dw = DL.apply(Element::from_word(o, w));
                    if (expand_left(D, dw) != expand_right(DL, dw)) {
                        detail = "word " + word_string(w);
                        return false;
                    }
                }
                return true;
            });

    c.holds("coact:counit", "(eps ox id) Delta_L = id", [&](std::string& detail) {
        for (auto& w : words) {
            Element el = Element::from_word(o, w);
            if (normal_form(counit_contract_left(DL.apply(el))) != normal_form(el)) {
                detail = "word " + word_string(w);
                return false;
            }
        }
        return true;
    });

    c.holds("coact:relations", "Delta_L annihilates every defining envelope relation",
            [&](std::string& detail) {
                for (auto& rel : relation_elements(o)) {
                    if (!DL.apply(rel).is_zero()) {
                        detail = "relation " + to_string(rel);
                        return false;
                    }
                }
                return true;
            });

    c.holds("coact:d-compatibility",
            "(twist ox d) after the coaction equals the coaction after d",
            [&](std::string& detail) {
                const char all[] = {gen::xi, gen::x, gen::th, gen::dx, gen::dth};
                for (char g : all) {
                    TensorElement lhs = twist_tensor_d(DL.apply(og(g)));
                    TensorElement rhs = DL.apply(normal_form(differentiate(og(g))));
                    if (lhs != rhs) {
                        detail = std::string("generator ") + std::string(generator_symbol(g));
                        return false;
                    }
                }
                return true;
            });

    c.tensor_vanishes("coact:w-invariant", "Delta_L(w) = 1 ox w", [&] {
        Element w = cartan_w();
        return DL.apply(w) - tensor_normal_form(TensorElement::of(Element::unit(p), w));
    });

    c.tensor_vanishes("coact:u-invariant", "Delta_L(u) = 1 ox u", [&] {
        Element u = cartan_u();
        return DL.apply(u) - tensor_normal_form(TensorElement::of(Element::unit(p), u));
    });

    c.tensor_vanishes("coact:w-cubed", "Delta_L(w^3) = 0", [&] {
        Element w = cartan_w();
        return DL.apply(w * w * w);
    });

    c.tensor_vanishes("coact:module-compatibility", "Delta_L(x w) = Delta(x) Delta_L(w)", [&] {
        Element w = cartan_w();
        TensorElement dx_img = TensorElement::of(Element::gen(p, gen::x), og(gen::x));
        return DL.apply(og(gen::x) * w) - tensor_normal_form(dx_img * DL.apply(w));
    });

    c.vanishes("coact:invariant-projection-dx", "m (S ox id) Delta_L(dx) = j w", [&] {
        return antipode_multiply_left(DL.apply(og(gen::dx)), o) -
               Scalar::j() * normal_form(cartan_w());
    });

    c.vanishes("coact:invariant-projection-dth", "m (S ox id) Delta_L(dth) = q^-1 u", [&] {
        return antipode_multiply_left(DL.apply(og(gen::dth)), o) -
               Scalar::q(-1) * normal_form(cartan_u());
    });

    c.scalar_vanishes("coact:counit-kills-w", "eps(w) = 0", [&] { return counit(cartan_w()); });
    c.scalar_vanishes("coact:counit-kills-u", "eps(u) = 0", [&] { return counit(cartan_u()); });

    c.vanishes("coact:antipode-projection-w", "m (S ox id) Delta_L(w) = w", [&] {
        Element w = normal_form(cartan_w());
        return antipode_multiply_left(DL.apply(w), o) - w;
    });
    c.vanishes("coact:antipode-projection-u", "m (S ox id) Delta_L(u) = u", [&] {
        Element u = normal_form(cartan_u());
        return antipode_multiply_left(DL.apply(u), o) - u;
    });

    c.holds("coact:one-form-restriction",
            "phi_L acts on one-forms and rejects everything else",
            [&](std::string& detail) {
                Element form = og(gen::x) * og(gen::dx);
                if (phi_L(form) != DL.apply(form)) {
                    detail = "phi_L disagrees with Delta_L on x dx";
                    return false;
                }
                try {
                    phi_L(og(gen::x));
                    detail = "phi_L accepted a zero-form";
                    return false;
                } catch (const Error&) {
                }
                try {
                    phi_L(og(gen::d2x));
                    detail = "phi_L accepted a second-order form";
                    return false;
                } catch (const Error&) {
                }
                return true;
            });

    return c.take();
}

}  // namespace z3q
