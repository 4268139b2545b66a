#pragma once

#include <string>

#include "wsum/braid.hpp"
#include "wsum/laurent.hpp"
#include "wsum/weights.hpp"

namespace wt {

using namespace wsum;

inline LaurentPoly term(long re, long im, int x = 0, int y = 0, int z = 0, int h = 0,
                        int A = 0, int t = 0) {
    return LaurentPoly::mono(GaussianInt(re, im),
                             make_mono({{Var::X, x}, {Var::Y, y}, {Var::Z, z},
                                        {Var::H, h}, {Var::A, A}, {Var::T, t}}));
}

// Example 1 value: (x^4+x^2y^2+y^4)((xy)^-10+(xy)^-8+(xy)^-4)
inline LaurentPoly example1() {
    LaurentPoly H = term(1, 0, 4) + term(1, 0, 2, 2) + term(1, 0, 0, 4);
    LaurentPoly P = term(1, 0, -10, -10) + term(1, 0, -8, -8) + term(1, 0, -4, -4);
    return H * P;
}

inline Diagram right_trefoil() { return braid_closure({1, 1, 1}, 2, AmbientKind::Annulus); }
inline Diagram left_trefoil() { return braid_closure({-1, -1, -1}, 2, AmbientKind::Annulus); }
inline Diagram figure8() { return braid_closure({1, -2, 1, -2}, 3, AmbientKind::Annulus); }

// Fig. 6: the two torus-generator circles with one positive crossing
inline Diagram fig6() {
    Crossing c;
    c.sign = +1;
    c.slot[OIn] = 1;
    c.slot[OOut] = 1;
    c.slot[UIn] = 2;
    c.slot[UOut] = 2;
    AmbientSpec amb;
    amb.kind = AmbientKind::Torus;
    amb.edge_class[1] = {1, 0};
    amb.edge_class[2] = {0, 1};
    return Diagram({c}, amb);
}

inline std::string fixture_dir() { return std::string(WSUM_SOURCE_DIR) + "/fixtures"; }

}  // namespace wt
