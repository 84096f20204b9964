#pragma once

/*
 * The exterior differential on the envelope algebra and the invariant
 * one-forms it generates.
 *
 * d is a braided derivation: d(g w) = d(g) w + j^grade(g) g d(w).  It
 * squares to something nonzero and only the third power vanishes.  The
 * invariant forms w and u rewrite the differential of a function over
 * the left module basis {dx, dth}, which left_extract recovers.
 */

#include <utility>
#include <vector>

#include "z3q/report.hpp"

namespace z3q {

/* Free result (no reduction) in the envelope presentation. */
Element differentiate(const Element& e);

/* Defining words of the invariant forms: w = dx x^-1,
   u = dth x^-1 - dx x^-1 th x^-1. */
Element cartan_w();
Element cartan_u();

/* Split a one-form as dx A + dth B by pulling the differential letter to
   the front with the inverted rewrite rules; returns (A, B). */
std::pair<Element, Element> left_extract(const Element& one_form,
                                         std::size_t budget = kDefaultBudget);

std::vector<CheckResult> check_d_well_defined();
std::vector<CheckResult> check_d_cubed(int max_degree);
std::vector<CheckResult> check_coefficient_resolution();
std::vector<CheckResult> check_cartan_maurer();

}  // namespace z3q
