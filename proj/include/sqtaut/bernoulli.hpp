#pragma once

#include "sqtaut/rational.hpp"

namespace sqtaut {

/// Bernoulli number B_n for even n >= 2 (B_2 = 1/6). Odd or nonpositive n
/// throw InputError: only even indices are meaningful here.
Rational bernoulli(int n);

}  // namespace sqtaut
