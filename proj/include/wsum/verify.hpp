#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wsum/diagram.hpp"
#include "wsum/invariant.hpp"
#include "wsum/laurent.hpp"
#include "wsum/moves.hpp"

namespace wsum {

enum class WhichInvariant { W, WH };

struct InvarianceReport {
    std::string diagram_id;
    int moves_requested = 0;
    int moves_applied = 0;
    std::vector<std::string> move_log;
    int violation_step = -1;  // -1 = invariant
    LaurentPoly value;
    bool invariant() const { return violation_step < 0; }
    std::string json() const;
};

InvarianceReport check_invariance(const Diagram& d, int move_count, std::uint64_t seed,
                                  WhichInvariant which, const WeightScheme& w,
                                  int max_crossings = 12, const std::string& id = "");

struct FactorizationReport {
    std::string diagram_id;
    int rank = 0;
    bool factored = false;       // rank <= 1
    LaurentPoly w_value;         // W at z=1, h forgotten
    LaurentPoly h_factor;        // homogeneous factor H(x,y)
    LaurentPoly p_factor;        // polynomial in xy
    bool alexander_checked = false;
    bool alexander_match = false;
    std::string alexander_unit;  // unit monomial used in the comparison
    std::string json() const;
};

// rank-1 test and factor extraction on a polynomial in x,y only
FactorizationReport rank1_factorization(const LaurentPoly& p);

// full conjecture pipeline: W(z=1, h forgotten), rank-1 factorization,
// H(x, i x^-1) versus the determinant-oracle Alexander polynomial at t = x^4
FactorizationReport conjecture_check(const Diagram& d, const WeightScheme& w,
                                     const std::string& id = "");

}  // namespace wsum
