#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsum/diagram.hpp"

namespace wsum {

// One dotted quadrant per crossing; restricted to non-star faces the dots form a
// bijection onto the faces.
struct AlexanderState {
    std::vector<Corner> dots;  // indexed by crossing id
};

// Smoothing choice per crossing; bit c set means B at crossing c.
using SmoothingState = std::uint64_t;

enum class Smoothing : int { A = 0, B = 1 };
inline Smoothing smoothing_of(SmoothingState s, CrossingId c) {
    return (s >> c) & 1 ? Smoothing::B : Smoothing::A;
}

// The A smoothing joins the quadrant pair swept by rotating the over strand
// counterclockwise onto the under strand: at a positive crossing its arcs pair
// (o_in,u_out) and (u_in,o_out); at a negative crossing (o_in,u_in) and
// (o_out,u_out). B is the other splitting.
std::array<std::pair<Slot, Slot>, 2> smoothing_arcs(int sign, Smoothing s);

enum class CircleKind { Contractible, AnnulusCore, TorusClass };

struct StateCircle {
    std::vector<std::pair<EdgeId, int>> edges;  // fragment + direction vs strand
    CircleKind kind = CircleKind::Contractible;
    long cls_m = 0, cls_n = 0;  // torus homology class, canonical sign
};

// Where a smoothing arc sits: each arc cups exactly one quadrant corner of its
// crossing; a dot there is a counting dot nearest to the arc's circle, on the
// arc's left or right depending on the traversal.
struct ArcSite {
    int corner_k = -1;   // cupped corner index at the crossing
    int circle = -1;     // circle owning the arc
    bool dot_left = false;  // a dot in the cupped corner lies left of the traversal
};

struct ResolvedCircles {
    std::vector<StateCircle> circles;
    std::vector<std::array<ArcSite, 2>> arcs;  // two arcs per crossing
    int count() const { return (int)circles.size(); }
};

std::vector<AlexanderState> enumerate_alexander_states(const Diagram& d,
                                                       const std::set<FaceId>& stars);

// Independent oracle: permanent of the crossing x non-star-face multiplicity matrix.
long alexander_state_count_permanent(const Diagram& d, const std::set<FaceId>& stars);

std::set<FaceId> star_faces(const Diagram& d);  // {} for torus, {origin,inf} for annulus

ResolvedCircles resolve(const Diagram& d, SmoothingState s);

// Fill circle kinds. Annulus: AnnulusCore iff the circle separates the origin
// face from the infinity face. Torus: class = signed sum of edge classes.
void classify_circles(const Diagram& d, ResolvedCircles& rc);

struct CountingDot {
    CrossingId c;
    int circle;
    bool left;
};
std::vector<CountingDot> counting_dots(const Diagram& d, const AlexanderState& t,
                                       SmoothingState s, const ResolvedCircles& rc);

// v(C) = |v+ - v-| per circle.
std::vector<int> circle_weights(const ResolvedCircles& rc,
                                const std::vector<CountingDot>& dots);

// Debug dump of one double state: dots, smoothing letters, circle census.
std::string dump_double_state(const Diagram& d, const AlexanderState& t, SmoothingState s);

}  // namespace wsum
