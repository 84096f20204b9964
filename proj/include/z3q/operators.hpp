#pragma once

/*
 * Difference-type operators acting on the coordinate monomial basis
 * x^m th^k (m any integer, 0 <= k <= 2).
 *
 * T and nabla are the two module generators (T counts with a cube-root
 * multiplier, nabla trades a theta for an x), N is the plain number
 * operator, and partial_x / partial_theta are the left partials whose
 * braided Leibniz rules close the calculus.  Everything here is exact
 * linear algebra over Scalar on the basis, with embed() mapping a
 * combination back into the envelope presentation.
 */

#include <compare>
#include <map>
#include <vector>

#include "z3q/report.hpp"

namespace z3q {

struct PlaneMono {
    long m = 0;  // power of x (negative means x^-1 powers)
    int k = 0;   // power of theta, 0..2
    auto operator<=>(const PlaneMono&) const = default;
};

using PlaneComb = std::map<PlaneMono, Scalar>;

PlaneComb plane_mono(long m, int k, Scalar c = Scalar::one());

PlaneComb comb_add(const PlaneComb& a, const PlaneComb& b);
PlaneComb comb_sub(const PlaneComb& a, const PlaneComb& b);
PlaneComb comb_scale(const Scalar& s, const PlaneComb& a);
/* Basis product: (m,k)(b,c) = q^{-k b} (m+b, k+c), zero once theta cubes. */
PlaneComb comb_mul(const PlaneComb& a, const PlaneComb& b);

PlaneComb act_T(const PlaneComb& f);
PlaneComb act_nabla(const PlaneComb& f);
PlaneComb act_N(const PlaneComb& f);
PlaneComb act_partial_x(const PlaneComb& f);
PlaneComb act_partial_theta(const PlaneComb& f);

/* x^m th^k as a word of the given presentation (x^-1 letters when m < 0). */
Element embed(const PlaneComb& f, const Presentation& p);

std::vector<CheckResult> check_lie_relations(int max_degree);
std::vector<CheckResult> check_operator_coproducts();
std::vector<CheckResult> check_partial_noninvariance(int max_word_len);

}  // namespace z3q
