#pragma once

/*
 * The bundled presentations.
 *
 *  plane          x^-1, x, th                 the quantum superplane with inverse
 *  omega          + dx, dth, d2x, d2th        its differential algebra (d^3 = 0 calculus)
 *  dual           phi, y                      the dual pair (phi odd, y even)
 *  gl             a, be, ga, dd               2x2 quantum supergroup matrix entries
 *  gl_plane       gl + x, th                  matrix entries acting on the plane
 *  gl_dual        gl + phi, y                 matrix entries acting on the dual pair
 *  mixed_partial  x, th, px, pth              coordinates with partial derivatives
 *
 * Generator order within each presentation is the normal order: normal
 * words are the non-decreasing ones.  In omega the inverse-conjugated
 * rules grow in word length, so letters carry weights (x^-1 and x weigh
 * nothing, second-order differentials of th weigh three) that keep every
 * rule decreasing.
 */

#include <string>

#include "z3q/algebra.hpp"

namespace z3q {

const Presentation& plane();
const Presentation& omega();
const Presentation& dual();
const Presentation& gl();
const Presentation& gl_plane();
const Presentation& gl_dual();
const Presentation& mixed_partial();

/* Presentation by CLI name (plane | omega | dual | gl | gl-plane | mixed-partial);
   throws Error on unknown names. */
const Presentation& presentation_by_name(const std::string& name);

/* Sensitivity hooks: rebuild the matrix-entry rules with one coefficient
   perturbed.  Slots 0..6 cover every coefficient of the entry relations;
   the ad-correction slot drops its term, the others scale by q. */
int gl_mutation_count();
std::string gl_mutation_label(int slot);
Presentation build_gl_mutated(int slot);
Presentation build_gl_plane_mutated(int slot);
Presentation build_gl_dual_mutated(int slot);

}  // namespace z3q
