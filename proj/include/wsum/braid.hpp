#pragma once

#include <vector>

#include "wsum/diagram.hpp"

namespace wsum {

// Closure of a braid word: letter +i is sigma_i (position i crosses over i+1),
// -i its inverse. Ambient sphere unless annulus requested, in which case the
// stars default to the faces flanking the first crossing (origin at (0,IN),
// infinity at (0,OI)).
Diagram braid_closure(const std::vector<int>& word, int strands,
                      AmbientKind kind = AmbientKind::Sphere);

// Alternating rational (2-bridge) diagram from a positive continued-fraction
// vector: twist regions alternate bottom-horizontal / right-vertical, numerator
// closure. Crossing count = sum of entries.
Diagram rational_diagram(const std::vector<int>& cf);

// continued fraction value [a1,...,ak] = ak + 1/(a_{k-1} + 1/(... + 1/a1))
std::pair<long, long> rational_fraction(const std::vector<int>& cf);

// Annulus version of a sphere diagram with the default classical star choice:
// origin = face left of the lowest edge of component 0, infinity = the face on
// the other side of that edge. Anchors may also be supplied explicitly.
Diagram with_classical_stars(const Diagram& sphere_diagram);
Diagram with_stars(const Diagram& sphere_diagram, FaceAnchor origin, FaceAnchor inf);

}  // namespace wsum
