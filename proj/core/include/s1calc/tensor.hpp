#pragma once

#include "s1calc/split.hpp"

namespace s1calc {

// C (x) D with delta^r(a (x) b) = delta^r a (x) b + (-1)^{|a|} a (x) delta^r b,
// truncated at min(N_C, N_D). Generator (a, b) has index a * |D| + b and is
// named "a⊗b".
S1Complex tensor(const S1Complex& c, const S1Complex& d);

// Product splitting: the zero part is C_0 (x) D_0, everything else is plus,
// and the unit is e_C (x) e_D.
SplitS1Complex tensor_split(const SplitS1Complex& s, const SplitS1Complex& t);

// a |-> a (x) e for a unit vector e of D in degree 0 with all delta^r e = 0.
SparseMatrix tensor_with_vector(const S1Complex& c, const S1Complex& d, const SparseVector& e);

}  // namespace s1calc
