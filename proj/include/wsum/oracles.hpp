#pragma once

#include "wsum/diagram.hpp"
#include "wsum/laurent.hpp"

namespace wsum {

// Alexander polynomial by exact determinant of the crossings x non-star-faces
// matrix with the classical signed corner labels (t on the two corners left of
// the under strand). Result is Delta(t) up to a unit +-t^k, in Var::T.
// Independent of the state enumeration path.
LaurentPoly alexander_det_oracle(const Diagram& d);

// Compare the state sum (internal variable s, s^2 = t) against the determinant
// oracle; true when they agree up to a Gaussian-unit monomial.
bool alexander_oracle_agree(const LaurentPoly& state_poly, const LaurentPoly& det_poly);

// Jones polynomial by recursive skein evaluation toward descending diagrams,
// memoized on canonical codes; unknot = 1, variable A. Equals jones_poly exactly.
LaurentPoly jones_skein_oracle(const Diagram& d, long budget = 200000);

struct SkeinBudgetExceeded : std::runtime_error {
    SkeinBudgetExceeded() : std::runtime_error("skein recursion budget exceeded") {}
};

}  // namespace wsum
