#pragma once

#include <stdexcept>
#include <string>

#include "wsum/diagram.hpp"
#include "wsum/laurent.hpp"
#include "wsum/states.hpp"
#include "wsum/weights.hpp"

namespace wsum {

struct HLinearityError : std::runtime_error {
    explicit HLinearityError(const std::string& m) : std::runtime_error(m) {}
};

enum class HMode { Keep, Forget };

struct InvariantOptions {
    bool set_z1 = false;
    HMode h_mode = HMode::Keep;
    int workers = 0;  // 0 = pick automatically
};

struct InvariantResult {
    LaurentPoly value;
    std::string mode;
    long state_count_t = 0;            // |T|
    unsigned long long state_count_s = 0;  // 2^n
    int writhe = 0;
};

// <D,T,S>: product of the per-crossing monomials times d^{/S/} h^{[S]}
// (annulus mode; /S/ counts contractible circles, [S] core circles).
LaurentPoly double_bracket(const Diagram& d, const AlexanderState& t, SmoothingState s,
                           const WeightScheme& w);

// sum over all double states without the writhe normalization (annulus mode)
LaurentPoly unnormalized_double_sum(const Diagram& d, const WeightScheme& w, int workers = 0);

// W_L = (x y z^-1)^{-2 w(D)} * sum_T sum_S <D,T,S>   (annulus mode)
InvariantResult w_poly(const Diagram& d, const WeightScheme& w, const InvariantOptions& opt = {});

// W^H_L on the torus: per state d^{/S/} |class|^{s(C)} t^{v(C)}
InvariantResult wh_poly(const Diagram& d, const WeightScheme& w, const InvariantOptions& opt = {});

// Alexander state sum in the internal variable (its square is the Alexander
// variable); annulus mode with adjacent stars expected.
LaurentPoly alexander_state_poly(const Diagram& d, const WeightScheme& w);

// Kauffman-bracket route to the Jones polynomial in A, unknot = 1.
LaurentPoly jones_poly(const Diagram& d);

}  // namespace wsum
