#pragma once

/*
 * The quantum matrix algebra acting on the plane and on its dual.
 *
 * Transformed coordinates x' = a x + be th, th' = ga x + dd th must
 * satisfy the same plane relations; the dual pair transforms with
 * cube-root twists.  The same data is checked as a coaction in tensor
 * form, and a battery of deliberately mutated rule tables confirms the
 * relation set is tight: every mutation leaves a nonzero residual.
 */

#include <vector>

#include "z3q/report.hpp"

namespace z3q {

std::vector<CheckResult> check_transformed_plane();
std::vector<CheckResult> check_transformed_dual();
std::vector<CheckResult> check_matrix_coactions();
std::vector<CheckResult> check_gl_sensitivity();

}  // namespace z3q
