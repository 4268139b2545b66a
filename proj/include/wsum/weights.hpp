#pragma once

#include <array>
#include <string>

#include "wsum/diagram.hpp"
#include "wsum/laurent.hpp"
#include "wsum/states.hpp"

namespace wsum {

// A cell is a single monomial with a Gaussian-unit coefficient i^unit.
struct UnitMono {
    int unit = 0;  // exponent of i, mod 4
    Monomial m;

    UnitMono mul(const UnitMono& o) const { return {(unit + o.unit) & 3, m * o.m}; }
    UnitMono inv() const { return {(4 - unit) & 3, m.inverse()}; }
    LaurentPoly poly() const { return LaurentPoly::mono(GaussianInt::unit_pow_i(unit), m); }
};

// The per-crossing weight tables: the double model (quadrant x smoothing) and the
// Alexander model (quadrant only), both for a positive crossing. For a negative
// crossing the same geometric picture is looked up on the switched crossing and
// inverted, which in role labels swaps OI<->UI and A<->B.
struct WeightScheme {
    std::array<std::array<UnitMono, 2>, 4> cell;  // [quadrant][smoothing]
    std::array<UnitMono, 4> alex;                 // Alexander model, internal variable t

    UnitMono weight(int sign, Quadrant q, Smoothing s) const;
    UnitMono alex_weight(int sign, Quadrant q) const;

    static LaurentPoly d_double();   // i x y z^-2  -  i x^-1 y^-1 z^2
    static LaurentPoly d_bracket();  // -A^2 - A^-2

    static WeightScheme load_text(const std::string& text);
    static WeightScheme load_file(const std::string& path);
    static const WeightScheme& builtin();  // compiled-in copy of the shipped fixture
    static std::string builtin_text();

    void validate() const;  // all cells present, unit coefficients
};

}  // namespace wsum
