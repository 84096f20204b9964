#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "z3q/error.hpp"
#include "z3q/io.hpp"
#include "z3q/operators.hpp"
#include "z3q/presentations.hpp"

using namespace z3q;

namespace {

Scalar J(int k) { return Scalar::j(k); }
Scalar Q(long k) { return Scalar::q(k); }

}  // namespace

TEST_CASE("basis product") {
    CHECK(comb_mul(plane_mono(1, 1), plane_mono(1, 0)) == plane_mono(2, 1, Q(-1)));
    CHECK(comb_mul(plane_mono(0, 2), plane_mono(0, 1)).empty());
    CHECK(comb_mul(plane_mono(-2, 0), plane_mono(3, 1)) == plane_mono(1, 1));
    CHECK(comb_mul(plane_mono(0, 1), plane_mono(2, 1)) == plane_mono(2, 2, Q(-2)));
}

TEST_CASE("counting operators on monomials") {
    // T multiplies by 0, 1 or -j according to the total degree mod 3
    CHECK(act_T(plane_mono(0, 0)).empty());
    CHECK(act_T(plane_mono(5, 1)).empty());
    CHECK(act_T(plane_mono(1, 0)) == plane_mono(1, 0));
    CHECK(act_T(plane_mono(1, 1)) == plane_mono(1, 1, -J(1)));
    CHECK(act_T(plane_mono(-1, 0)) == plane_mono(-1, 0, -J(1)));
    CHECK(act_N(plane_mono(3, 2)) == plane_mono(3, 2, Scalar{5}));
    CHECK(act_N(plane_mono(-2, 1)) == plane_mono(-2, 1, -Scalar::one()));
    CHECK(act_N(plane_mono(0, 0)).empty());
}

TEST_CASE("ladder operator") {
    CHECK(act_nabla(plane_mono(0, 0)).empty());
    CHECK(act_nabla(plane_mono(1, 1)) == plane_mono(2, 0, Q(1)));
    CHECK(act_nabla(plane_mono(-3, 1)) == plane_mono(-2, 0, Q(-3)));
    CHECK(act_nabla(plane_mono(0, 2)) == plane_mono(1, 1, -J(1)));
    CHECK(act_nabla(plane_mono(4, 0)).empty());
}

TEST_CASE("left partials") {
    CHECK(act_partial_x(plane_mono(1, 1)) == plane_mono(0, 1, J(2)));
    CHECK(act_partial_theta(plane_mono(1, 1)) == plane_mono(1, 0, Q(1)));
    CHECK(act_partial_x(plane_mono(0, 2)).empty());
    CHECK(act_partial_theta(plane_mono(0, 2)) == plane_mono(0, 1, -J(1)));
    CHECK(act_partial_x(plane_mono(0, 0)).empty());
    CHECK(act_partial_theta(plane_mono(3, 0)).empty());

    // the exchange relation on a sample of the basis
    for (long m : {-2L, 0L, 1L, 3L})
        for (int k : {0, 1, 2}) {
            PlaneComb f = plane_mono(m, k);
            PlaneComb lhs = act_partial_x(act_partial_theta(f));
            PlaneComb rhs = comb_scale(J(1) * Q(1),
                                       act_partial_theta(act_partial_x(f)));
            CHECK(comb_sub(lhs, rhs).empty());
        }
}

TEST_CASE("product rule for the counting operator") {
    PlaneComb f = plane_mono(1, 1);  // total degree 2
    PlaneComb g = plane_mono(2, 0);
    PlaneComb lhs = act_T(comb_mul(f, g));
    PlaneComb rhs = comb_add(comb_mul(act_T(f), g),
                             comb_scale(J(4), comb_mul(f, act_T(g))));
    CHECK(comb_sub(lhs, rhs).empty());
    CHECK(lhs == plane_mono(3, 1, Q(-2)));
}

TEST_CASE("embedding combinations into words") {
    const Presentation& p = plane();
    CHECK(embed(plane_mono(-2, 1), p) ==
          Element::from_word(p, make_word({gen::xi, gen::xi, gen::th})));
    CHECK(embed(plane_mono(2, 2, Q(3)), p) ==
          Element::from_word(p, make_word({gen::x, gen::x, gen::th, gen::th}), Q(3)));
    CHECK(embed(comb_add(plane_mono(1, 0), plane_mono(0, 1, -J(1))), p) ==
          Element::gen(p, gen::x) - J(1) * Element::gen(p, gen::th));
    CHECK(embed(PlaneComb{}, p).is_zero());
}

TEST_CASE("module relations hold") {
    auto results = check_lie_relations(4);
    CHECK(all_ok(results));
    CHECK(results.size() >= 8);
}

TEST_CASE("operator coproducts hold") {
    auto results = check_operator_coproducts();
    CHECK(all_ok(results));
    CHECK(!results.empty());
}

TEST_CASE("partial coproducts fail where expected") {
    auto results = check_partial_noninvariance(3);
    CHECK(all_ok(results));
    int expected_nonzero = 0;
    for (auto& r : results)
        if (r.status == Status::ExpectedNonzero) ++expected_nonzero;
    CHECK(expected_nonzero >= 4);
}
