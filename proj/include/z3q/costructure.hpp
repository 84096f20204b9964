#pragma once

/*
 * Comultiplicative structure on the plane algebra and the left coaction
 * on the differential envelope.
 *
 * A TensorHom is a multiplicative map into a graded tensor square, fixed
 * by generator images; applying it to a word multiplies the images with
 * the tensor twist.  coproduct() sends the plane into plane (x) plane,
 * delta_L() sends the envelope into plane (x) envelope.  The counit and
 * the antipode complete the Hopf data.
 */

#include <vector>

#include "z3q/report.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

class TensorHom {
public:
    TensorHom(const Presentation& dom, const Presentation& left, const Presentation& right);

    void set_image(char g, TensorElement img);
    bool has_image(char g) const;

    /* Multiplicative extension; the result is reduced leg by leg. */
    TensorElement apply(const Element& e, Strategy strategy = Strategy::Leftmost,
                        std::size_t budget = kDefaultBudget) const;

    const Presentation& domain() const { return *dom_; }
    const Presentation& left() const { return *left_; }
    const Presentation& right() const { return *right_; }

private:
    const Presentation* dom_;
    const Presentation* left_;
    const Presentation* right_;
    std::vector<TensorElement> images_;
    std::vector<bool> set_;
};

/* x and x^-1 are grouplike, theta is primitive over the x line. */
const TensorHom& coproduct();
/* Left coaction of the plane on the differential envelope. */
const TensorHom& delta_L();

/* Unit-counit contraction: x, x^-1 -> 1; theta and every differential -> 0. */
Scalar counit(const Element& e);

/* Braided antialgebra map on the plane, returned in normal form. */
Element antipode(const Element& e, Strategy strategy = Strategy::Leftmost,
                 std::size_t budget = kDefaultBudget);

/* delta_L restricted to one-forms: every word must carry exactly one
   first-order differential letter and no second-order one. */
TensorElement phi_L(const Element& one_form, Strategy strategy = Strategy::Leftmost,
                    std::size_t budget = kDefaultBudget);

/* (counit (x) id) and (id (x) counit), as elements of the other leg. */
Element counit_contract_left(const TensorElement& t);
Element counit_contract_right(const TensorElement& t);

/* m (S (x) id) resp. m (id (x) S): apply the antipode to one leg, then
   multiply both legs inside `target` (the legs must embed into it). */
Element antipode_multiply_left(const TensorElement& t, const Presentation& target,
                               Strategy strategy = Strategy::Leftmost,
                               std::size_t budget = kDefaultBudget);
Element antipode_multiply_right(const TensorElement& t, const Presentation& target,
                                Strategy strategy = Strategy::Leftmost,
                                std::size_t budget = kDefaultBudget);

/* (h (x) id) resp. (id (x) h) on a tensor square, flattened to a cube. */
Tensor3 expand_left(const TensorHom& h, const TensorElement& t,
                    Strategy strategy = Strategy::Leftmost, std::size_t budget = kDefaultBudget);
Tensor3 expand_right(const TensorHom& h, const TensorElement& t,
                     Strategy strategy = Strategy::Leftmost, std::size_t budget = kDefaultBudget);

/* Words valid in both presentations move over unchanged. */
Element transport(const Element& e, const Presentation& target);

std::vector<CheckResult> check_hopf_axioms(int max_word_len);
std::vector<CheckResult> check_coaction_axioms(int max_word_len);

}  // namespace z3q
