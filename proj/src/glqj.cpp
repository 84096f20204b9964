#include "z3q/glqj.hpp"

#include <memory>

#include "z3q/costructure.hpp"
#include "z3q/io.hpp"
#include "z3q/presentations.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

namespace {

Element transformed_x(const Presentation& p) {
    return Element::gen(p, gen::a) * Element::gen(p, gen::x) +
           Element::gen(p, gen::be) * Element::gen(p, gen::th);
}

Element transformed_th(const Presentation& p) {
    return Element::gen(p, gen::ga) * Element::gen(p, gen::x) +
           Element::gen(p, gen::dd) * Element::gen(p, gen::th);
}

Element transformed_phi(const Presentation& p) {
    return Element::gen(p, gen::a) * Element::gen(p, gen::phi) +
           Scalar::j(2) * (Element::gen(p, gen::be) * Element::gen(p, gen::y));
}

Element transformed_y(const Presentation& p) {
    return Scalar::j(1) * (Element::gen(p, gen::ga) * Element::gen(p, gen::phi)) +
           Element::gen(p, gen::dd) * Element::gen(p, gen::y);
}

Element plane_residual(const Presentation& p, Strategy st = Strategy::Leftmost) {
    Element xp = transformed_x(p), tp = transformed_th(p);
    return normal_form(xp * tp - Scalar::q(1) * (tp * xp), st);
}

Element plane_cube_residual(const Presentation& p, Strategy st = Strategy::Leftmost) {
    Element tp = transformed_th(p);
    return normal_form(tp * tp * tp, st);
}

Element dual_residual(const Presentation& p, Strategy st = Strategy::Leftmost) {
    Element fp = transformed_phi(p), yp = transformed_y(p);
    return normal_form(fp * yp - Scalar::q(1) * Scalar::j(1) * (yp * fp), st);
}

Element dual_cube_residual(const Presentation& p, Strategy st = Strategy::Leftmost) {
    Element fp = transformed_phi(p);
    return normal_form(fp * fp * fp, st);
}

}  // namespace

std::vector<CheckResult> check_transformed_plane() {
    Checks c("gl");
    const Presentation& p = gl_plane();

    c.vanishes("gl:plane-commutation", "x' th' = q th' x' for the transformed coordinates",
               [&] { return plane_residual(p); });
    c.vanishes("gl:plane-cube", "th'^3 = 0", [&] { return plane_cube_residual(p); });
    return c.take();
}

std::vector<CheckResult> check_transformed_dual() {
    Checks c("gl");
    const Presentation& p = gl_dual();

    c.vanishes("gl:dual-commutation", "phi' y' = q j y' phi' for the transformed dual pair",
               [&] { return dual_residual(p); });
    c.vanishes("gl:dual-cube", "phi'^3 = 0", [&] { return dual_cube_residual(p); });
    return c.take();
}

std::vector<CheckResult> check_matrix_coactions() {
    Checks c("gl");
    const Presentation& m = gl();
    const Presentation& p = plane();
    const Presentation& d = dual();

    TensorHom cp(p, m, p);
    cp.set_image(gen::x, TensorElement::of(Element::gen(m, gen::a), Element::gen(p, gen::x)) +
                             TensorElement::of(Element::gen(m, gen::be),
                                               Element::gen(p, gen::th)));
    cp.set_image(gen::th, TensorElement::of(Element::gen(m, gen::ga), Element::gen(p, gen::x)) +
                              TensorElement::of(Element::gen(m, gen::dd),
                                                Element::gen(p, gen::th)));

    TensorHom cd(d, m, d);
    cd.set_image(gen::phi,
                 TensorElement::of(Element::gen(m, gen::a), Element::gen(d, gen::phi)) +
                     Scalar::j(2) * TensorElement::of(Element::gen(m, gen::be),
                                                      Element::gen(d, gen::y)));
    cd.set_image(gen::y,
                 Scalar::j(1) * TensorElement::of(Element::gen(m, gen::ga),
                                                  Element::gen(d, gen::phi)) +
                     TensorElement::of(Element::gen(m, gen::dd), Element::gen(d, gen::y)));

    c.tensor_vanishes("gl:coaction-plane-commutation",
                      "the plane coaction respects th x = q^-1 x th", [&] {
                          Element rel =
                              Element::gen(p, gen::th) * Element::gen(p, gen::x) -
                              Scalar::q(-1) *
                                  (Element::gen(p, gen::x) * Element::gen(p, gen::th));
                          return cp.apply(rel);
                      });
    c.tensor_vanishes("gl:coaction-plane-cube", "the plane coaction respects th^3 = 0", [&] {
        Element th = Element::gen(p, gen::th);
        return cp.apply(th * th * th);
    });
    c.tensor_vanishes("gl:coaction-dual-commutation",
                      "the dual coaction respects y phi = j^2 q^-1 phi y", [&] {
                          Element rel =
                              Element::gen(d, gen::y) * Element::gen(d, gen::phi) -
                              Scalar::j(2) * Scalar::q(-1) *
                                  (Element::gen(d, gen::phi) * Element::gen(d, gen::y));
                          return cd.apply(rel);
                      });
    c.tensor_vanishes("gl:coaction-dual-cube", "the dual coaction respects phi^3 = 0", [&] {
        Element phi = Element::gen(d, gen::phi);
        return cd.apply(phi * phi * phi);
    });

    c.holds("gl:coaction-collapse",
            "sending the matrix to the identity collapses the coaction to 1 ox id",
            [&](std::string& detail) {
                TensorHom id_cp(p, m, p);
                id_cp.set_image(gen::x, TensorElement::of(Element::unit(m),
                                                          Element::gen(p, gen::x)));
                id_cp.set_image(gen::th, TensorElement::of(Element::unit(m),
                                                           Element::gen(p, gen::th)));
                for (auto& w : all_words({gen::x, gen::th}, 0, 4)) {
                    Element e = Element::from_word(p, w);
                    TensorElement want = tensor_normal_form(
                        TensorElement::of(Element::unit(m), normal_form(e)));
                    if (id_cp.apply(e) != want) {
                        detail = "word " + word_string(w);
                        return false;
                    }
                }
                return true;
            });

    return c.take();
}

std::vector<CheckResult> check_gl_sensitivity() {
    Checks c("gl");
    std::vector<std::unique_ptr<Presentation>> keep;
    for (int slot = 0; slot < gl_mutation_count(); ++slot) {
        keep.push_back(std::make_unique<Presentation>(build_gl_plane_mutated(slot)));
        const Presentation& mp = *keep.back();
        keep.push_back(std::make_unique<Presentation>(build_gl_dual_mutated(slot)));
        const Presentation& md = *keep.back();
        c.nonzero("gl:sensitivity:slot-" + std::to_string(slot),
                  "mutating the " + gl_mutation_label(slot) +
                      " leaves a nonzero transformation residual",
                  [&mp, &md] {
                      for (Element r : {plane_residual(mp), plane_cube_residual(mp),
                                        dual_residual(md), dual_cube_residual(md)})
                          if (!r.is_zero()) return r;
                      return Element::zero(mp);
                  });
    }
    return c.take();
}

}  // namespace z3q
