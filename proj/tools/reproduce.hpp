#pragma once

#include "json_out.hpp"

namespace s1tool {

// Each row carries expected and computed values and a "pass" flag; the
// table's "pass" is the conjunction.
Json reproduce_theorem_a(int max_m, bool sphere_classes);
Json reproduce_one_dilation(int n_lo, int n_hi);

}  // namespace s1tool
