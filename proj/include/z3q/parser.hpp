#pragma once

/*
 * Expression grammar over a chosen presentation:
 *
 *   expr   := term (("+" | "-") term)*
 *   term   := factor ("*"? factor)*          adjacency multiplies
 *   factor := atom ("^" signed-integer)?
 *   atom   := integer ("/" integer)?
 *           | name | name "(" expr ")"      only functions take parentheses
 *           | "(" expr ")"
 *
 * There is no unary minus; a leading negative is written "0 - ...",
 * which is also how the printer renders it, so printing and parsing
 * round-trip.  Negative powers exist for x (giving x^-1 letters), for
 * x^-1 itself, and for invertible scalars.  The functions are
 * d, Delta, DeltaL, S, eps and nf, each tied to the algebra it acts on.
 */

#include <string>
#include <variant>

#include "z3q/algebra.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

using Value = std::variant<Scalar, Element, TensorElement>;

/* Parse and evaluate in one pass; throws ParseError (with offset) on bad
   syntax and Error on well-formed input that is not defined (foreign
   generators, bad powers, functions outside their algebra). */
Value evaluate(const std::string& src, const Presentation& algebra);

Value value_normal_form(const Value& v, Strategy strategy = Strategy::Leftmost,
                        std::size_t budget = kDefaultBudget);

std::string to_string(const Value& v);

}  // namespace z3q
