#pragma once

#include <string_view>

#include "rbax/dendriform.hpp"
#include "rbax/free_rba.hpp"

namespace rbax {

// Evaluates an expression over the algebra:
//   sum      := product (('+'|'-') product)*
//   product  := juxt ('*' juxt)*
//   juxt     := unary (unary)*
//   unary    := '-' unary | primary
//   primary  := rational | letter | '[' sum ']' | name '(' args ')' | '(' sum ')'
// Juxtaposition concatenates words termwise and must respect alternation.
// '*' is the algebra product, or scaling when one side is a scalar.
// '[...]' and R(...) apply the operator; prec/succ/dot/prec_prime/star apply
// the induced splitting operations (dot subject to the context). A bare
// scalar is not an element and is rejected as a result.
Element eval_expression(const FreeRba& ctx, std::string_view text,
                        DendContext ops_context = DendContext::trialgebra);

}  // namespace rbax
