#pragma once

/*
 * Deterministic printing.  Element output stays inside the expression
 * grammar, so parse(to_string(e)) == e for normal-formed e.  Tensor output
 * uses " @ " between legs and is for display only.
 */

#include <string>

#include "z3q/algebra.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

std::string to_string(const Element& e);
std::string to_string(const TensorElement& t);
std::string to_string(const Tensor3& t);

/* A single word in generator symbols, "1" when empty. */
std::string word_string(const Word& w);

}  // namespace z3q
