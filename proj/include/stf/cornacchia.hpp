#pragma once

#include "stf/modp.hpp"

namespace stf {

// Solution of x^2 + d y^2 = m. After sign normalization x may be negative.
struct FormSolution {
    i64 x;
    u64 y;
};

// Half-gcd descent: from delta with delta^2 = -d (mod m), run the Euclidean
// remainder sequence m, delta, ... and stop at the first remainder below
// sqrt(m); that remainder is x if a primitive solution exists.
// Preconditions (checked): 1 <= d < m, 0 <= delta <= m/2, delta^2 = -d mod m.
std::optional<FormSolution> cornacchia(u64 d, u64 m, u64 delta);

// Solve x^2 + d y^2 = p with the sign convention the binomial identities
// want: x odd and x = -(2|p) mod 4. For d=1 the two-squares representation
// may come back (even, odd); swap so x is the odd leg first.
FormSolution solve_form_normalized(u64 d, const PrimeField& F,
                                   SqrtAlgo algo = SqrtAlgo::TonelliShanks, u64 seed = 0);

} // namespace stf
