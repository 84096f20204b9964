#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "z3q/algebra.hpp"
#include "z3q/error.hpp"
#include "z3q/io.hpp"
#include "z3q/presentations.hpp"
#include "z3q/tensor.hpp"

using namespace z3q;

namespace {

TensorElement random_tensor(const Presentation& l, const Presentation& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), len(0, 3);
    std::uniform_int_distribution<long> coef(1, 3);
    auto word = [&](const Presentation& p) {
        std::uniform_int_distribution<std::size_t> pick(0, p.gens().size() - 1);
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(p.gens()[pick(rng)]);
        return w;
    };
    TensorElement t = TensorElement::zero(l, r);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        t.add_term(word(l), word(r), Scalar(coef(rng)));
    return t;
}

}  // namespace

TEST_CASE("multiplication twists by the inner grades") {
    const Presentation& p = plane();
    const Presentation& o = omega();
    // (x ox dx)(th ox dx) picks up j^{grade(dx) grade(th)} = j
    TensorElement lhs = TensorElement::of(Element::gen(p, gen::x), Element::gen(o, gen::dx)) *
                        TensorElement::of(Element::gen(p, gen::th), Element::gen(o, gen::dx));
    TensorElement expected = TensorElement::zero(p, o);
    expected.add_term(make_word({gen::x, gen::th}), make_word({gen::dx, gen::dx}),
                      Scalar::j(1));
    CHECK(lhs == expected);
}

TEST_CASE("grade zero slides through untwisted") {
    const Presentation& p = plane();
    TensorElement a = TensorElement::of(Element::gen(p, gen::th), Element::gen(p, gen::x));
    TensorElement b = TensorElement::of(Element::gen(p, gen::x), Element::gen(p, gen::th));
    TensorElement prod = a * b;
    TensorElement expected = TensorElement::zero(p, p);
    expected.add_term(make_word({gen::th, gen::x}), make_word({gen::x, gen::th}),
                      Scalar::one());
    CHECK(prod == expected);
}

TEST_CASE("legs reduce independently") {
    const Presentation& p = plane();
    TensorElement t = TensorElement::zero(p, p);
    t.add_term(make_word({gen::th, gen::x}), make_word({gen::th, gen::th, gen::th}),
               Scalar::one());
    t.add_term(make_word({gen::th, gen::x}), Word{}, Scalar::one());
    TensorElement n = tensor_normal_form(t);
    TensorElement expected = TensorElement::zero(p, p);
    expected.add_term(make_word({gen::x, gen::th}), Word{}, Scalar::q(-1));
    CHECK(n == expected);
}

TEST_CASE("coordinate coproduct square") {
    const Presentation& p = plane();
    TensorElement dth = TensorElement::of(Element::gen(p, gen::th), Element::gen(p, gen::x)) +
                        TensorElement::of(Element::gen(p, gen::x), Element::gen(p, gen::th));
    TensorElement sq = tensor_normal_form(dth * dth);
    TensorElement expected = TensorElement::zero(p, p);
    expected.add_term(make_word({gen::th, gen::th}), make_word({gen::x, gen::x}), Scalar::one());
    expected.add_term(make_word({gen::x, gen::th}), make_word({gen::x, gen::th}),
                      (Scalar::one() + Scalar::j(1)) * Scalar::q(-1));
    expected.add_term(make_word({gen::x, gen::x}), make_word({gen::th, gen::th}), Scalar::one());
    CHECK(sq == expected);
    CHECK(tensor_normal_form(sq * dth).is_zero());
}

TEST_CASE("tensor product is associative") {
    const Presentation& p = plane();
    const Presentation& o = omega();
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        TensorElement a = random_tensor(p, o, rng);
        TensorElement b = random_tensor(p, o, rng);
        TensorElement c = random_tensor(p, o, rng);
        CHECK(tensor_normal_form((a * b) * c) == tensor_normal_form(a * (b * c)));
    }
}

TEST_CASE("mismatched legs are rejected") {
    TensorElement a = TensorElement::of(Element::gen(plane(), gen::x),
                                        Element::gen(plane(), gen::th));
    TensorElement b = TensorElement::of(Element::gen(plane(), gen::x),
                                        Element::gen(omega(), gen::dx));
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("three legged products twist pairwise") {
    const Presentation& p = plane();
    Tensor3 a = Tensor3::of(Element::unit(p), Element::gen(p, gen::th), Element::unit(p));
    Tensor3 b = Tensor3::of(Element::gen(p, gen::th), Element::unit(p), Element::unit(p));
    // moving the left th past the middle th costs j^{1*1}
    Tensor3 expected = Tensor3::of(Element::gen(p, gen::th), Element::gen(p, gen::th),
                                   Element::unit(p));
    CHECK(a * b == Scalar::j(1) * expected);

    Tensor3 c = Tensor3::of(Element::unit(p), Element::unit(p), Element::gen(p, gen::th));
    // here only the third-leg th crosses the incoming first-leg th: again j^{1*1}
    CHECK(c * b == Scalar::j(1) * Tensor3::of(Element::gen(p, gen::th), Element::unit(p),
                                              Element::gen(p, gen::th)));
}

TEST_CASE("tensor printing uses a leg separator") {
    const Presentation& p = plane();
    TensorElement t = TensorElement::of(Element::gen(p, gen::x), Element::gen(p, gen::th));
    CHECK(to_string(t) == "x @ th");
}
