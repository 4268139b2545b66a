#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsum {

using EdgeId = int;
using CrossingId = int;
using FaceId = int;

// Slot roles at a crossing. An edge is directed; it leaves a crossing through an
// out slot and enters the next through an in slot.
enum Slot : int { UIn = 0, OIn = 1, UOut = 2, OOut = 3 };
inline bool is_in_slot(Slot s) { return s == UIn || s == OIn; }

// Orientation-derived quadrant labels. IN sits between the two incoming strand
// ends, OUT between the outgoing ones, OI between over-in and under-out,
// UI between under-in and over-out.
enum class Quadrant : int { IN = 0, OUT = 1, OI = 2, UI = 3 };
const char* quadrant_name(Quadrant q);
std::optional<Quadrant> quadrant_from_name(const std::string& s);
Quadrant swap_oi_ui(Quadrant q);

struct Crossing {
    int sign = +1;                 // +1 or -1
    std::array<EdgeId, 4> slot{};  // indexed by Slot
};

// Counterclockwise slot order around a crossing, starting at under-in.
inline std::array<Slot, 4> ccw_slots(int sign) {
    if (sign > 0) return {UIn, OOut, UOut, OIn};
    return {UIn, OIn, UOut, OOut};
}

// Corner k of a crossing lies between ccw slots k and k+1.
struct Corner {
    CrossingId c = -1;
    int k = -1;
    bool operator==(const Corner& o) const { return c == o.c && k == o.k; }
    bool operator<(const Corner& o) const { return c != o.c ? c < o.c : k < o.k; }
};

struct SlotRef {
    CrossingId c = -1;
    Slot s = UIn;
    bool operator==(const SlotRef& o) const { return c == o.c && s == o.s; }
};

enum class AmbientKind { Sphere, Annulus, Torus };

// A face is named externally by one of its corners (crossing, quadrant).
struct FaceAnchor {
    CrossingId c = -1;
    Quadrant q = Quadrant::IN;
};

struct AmbientSpec {
    AmbientKind kind = AmbientKind::Sphere;
    // Annulus: the two star faces
    std::optional<FaceAnchor> origin_anchor, inf_anchor;
    // Torus: homology class per edge with respect to the distinguished generators
    std::map<EdgeId, std::pair<long, long>> edge_class;
};

struct DiagramError : std::runtime_error {
    explicit DiagramError(const std::string& m) : std::runtime_error(m) {}
};

// Oriented link diagram as a combinatorial map. Immutable after construction;
// all rewrites build fresh diagrams.
class Diagram {
  public:
    Diagram(std::vector<Crossing> crossings, AmbientSpec ambient);

    const std::vector<Crossing>& crossings() const { return cr_; }
    int num_crossings() const { return (int)cr_.size(); }
    const std::vector<EdgeId>& edges() const { return edges_; }
    const AmbientSpec& ambient() const { return amb_; }

    SlotRef edge_tail(EdgeId e) const { return tail_.at(e); }
    SlotRef edge_head(EdgeId e) const { return head_.at(e); }
    EdgeId slot_edge(CrossingId c, Slot s) const { return cr_[c].slot[s]; }
    SlotRef mate(SlotRef r) const;  // the other end of the edge at this slot

    int writhe() const;
    const std::vector<std::vector<Corner>>& faces() const { return faces_; }
    FaceId corner_face(Corner c) const { return corner_face_.at(c.c * 4 + c.k); }
    Quadrant corner_label(Corner c) const;
    Corner corner_of(CrossingId c, Quadrant q) const;
    FaceId face_of(FaceAnchor a) const;

    // resolved star faces (annulus only)
    FaceId origin_face() const { return origin_face_; }
    FaceId inf_face() const { return inf_face_; }

    std::pair<long, long> edge_cls(EdgeId e) const {
        auto it = amb_.edge_class.find(e);
        return it == amb_.edge_class.end() ? std::make_pair(0L, 0L) : it->second;
    }

    // component index per edge, components numbered by smallest edge id
    const std::map<EdgeId, int>& edge_component() const { return edge_component_; }
    int num_components() const { return num_components_; }

    // the two faces along an edge (one per side)
    const std::array<FaceId, 2>& edge_faces(EdgeId e) const { return edge_faces_.at(e); }

    std::string canonical_code() const;  // canonical serialization (isomorphism key)

  private:
    void build();
    void trace_faces();
    void validate();

    std::vector<Crossing> cr_;
    AmbientSpec amb_;
    std::vector<EdgeId> edges_;
    std::map<EdgeId, SlotRef> tail_, head_;
    std::vector<std::vector<Corner>> faces_;
    std::map<int, FaceId> corner_face_;
    std::map<EdgeId, std::array<FaceId, 2>> edge_faces_;
    std::map<EdgeId, int> edge_component_;
    int num_components_ = 0;
    FaceId origin_face_ = -1, inf_face_ = -1;
};

// Place d2 inside a face of d1 next to the infinity star and join with a clasp so
// the diagram is connected but represents the split union; stars become d1's
// origin face and d2's infinity face.
Diagram connected_sum_split(const Diagram& d1, const Diagram& d2);

}  // namespace wsum
