#include "wsum/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wsum {

const char* quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::IN: return "IN";
        case Quadrant::OUT: return "OUT";
        case Quadrant::OI: return "OI";
        default: return "UI";
    }
}

std::optional<Quadrant> quadrant_from_name(const std::string& s) {
    if (s == "IN") return Quadrant::IN;
    if (s == "OUT") return Quadrant::OUT;
    if (s == "OI") return Quadrant::OI;
    if (s == "UI") return Quadrant::UI;
    return std::nullopt;
}

Quadrant swap_oi_ui(Quadrant q) {
    if (q == Quadrant::OI) return Quadrant::UI;
    if (q == Quadrant::UI) return Quadrant::OI;
    return q;
}

static Quadrant label_of_pair(Slot a, Slot b) {
    auto has = [&](Slot s) { return a == s || b == s; };
    if (has(UIn) && has(OIn)) return Quadrant::IN;
    if (has(UOut) && has(OOut)) return Quadrant::OUT;
    if (has(OIn) && has(UOut)) return Quadrant::OI;
    return Quadrant::UI;
}

Diagram::Diagram(std::vector<Crossing> crossings, AmbientSpec ambient)
    : cr_(std::move(crossings)), amb_(std::move(ambient)) {
    build();
    trace_faces();
    validate();
}

SlotRef Diagram::mate(SlotRef r) const {
    EdgeId e = cr_[r.c].slot[r.s];
    return is_in_slot(r.s) ? tail_.at(e) : head_.at(e);
}

void Diagram::build() {
    if (cr_.empty()) throw DiagramError("no crossings");
    for (CrossingId c = 0; c < (int)cr_.size(); ++c) {
        if (cr_[c].sign != 1 && cr_[c].sign != -1)
            throw DiagramError("crossing " + std::to_string(c) + ": invalid sign");
        for (int s = 0; s < 4; ++s) {
            EdgeId e = cr_[c].slot[s];
            auto& m = is_in_slot((Slot)s) ? head_ : tail_;
            if (m.count(e))
                throw DiagramError("edge " + std::to_string(e) + " used twice as " +
                                   (is_in_slot((Slot)s) ? "head" : "tail") + " at crossing " +
                                   std::to_string(c));
            m[e] = SlotRef{c, (Slot)s};
        }
    }
    for (auto& [e, r] : tail_)
        if (!head_.count(e))
            throw DiagramError("dangling edge " + std::to_string(e) + " at crossing " +
                               std::to_string(r.c));
    for (auto& [e, r] : head_)
        if (!tail_.count(e))
            throw DiagramError("dangling edge " + std::to_string(e) + " at crossing " +
                               std::to_string(r.c));
    for (auto& [e, r] : tail_) edges_.push_back(e);
    std::sort(edges_.begin(), edges_.end());

    // connectivity of the underlying 4-valent graph
    std::vector<char> seen(cr_.size(), 0);
    std::vector<CrossingId> stack{0};
    while (!stack.empty()) {
        CrossingId c = stack.back();
        stack.pop_back();
        if (seen[c]) continue;
        seen[c] = 1;
        for (int s = 0; s < 4; ++s) {
            EdgeId e = cr_[c].slot[s];
            stack.push_back(tail_.at(e).c);
            stack.push_back(head_.at(e).c);
        }
    }
    for (CrossingId c = 0; c < (int)cr_.size(); ++c)
        if (!seen[c]) throw DiagramError("diagram disconnected at crossing " + std::to_string(c));

    // link components: follow strands through crossings
    int comp = 0;
    for (EdgeId e0 : edges_) {
        if (edge_component_.count(e0)) continue;
        EdgeId e = e0;
        do {
            edge_component_[e] = comp;
            SlotRef h = head_.at(e);
            Slot out = h.s == UIn ? UOut : OOut;
            e = cr_[h.c].slot[out];
        } while (e != e0);
        ++comp;
    }
    num_components_ = comp;
}

void Diagram::trace_faces() {
    // Corner k spans ccw slots k,k+1. The face walk (face kept on the right of
    // travel) exits through the half-edge at slot k+1 and continues at the
    // corner starting at the arrival slot.
    int n = (int)cr_.size();
    std::vector<Corner> nxt(4 * n);
    for (CrossingId c = 0; c < n; ++c) {
        auto order = ccw_slots(cr_[c].sign);
        for (int k = 0; k < 4; ++k) {
            SlotRef m = mate({c, order[(k + 1) % 4]});
            auto morder = ccw_slots(cr_[m.c].sign);
            int kk = 0;
            while (morder[kk] != m.s) ++kk;
            nxt[4 * c + k] = Corner{m.c, kk};
        }
    }
    std::vector<char> seen(4 * n, 0);
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[start]) continue;
        std::vector<Corner> face;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            face.push_back({cur / 4, cur % 4});
            Corner nx = nxt[cur];
            cur = nx.c * 4 + nx.k;
        }
        for (auto& co : face) corner_face_[co.c * 4 + co.k] = (FaceId)faces_.size();
        faces_.push_back(std::move(face));
    }
    // each edge is walked once per side
    for (FaceId fi = 0; fi < (int)faces_.size(); ++fi)
        for (auto& co : faces_[fi]) {
            auto order = ccw_slots(cr_[co.c].sign);
            EdgeId e = cr_[co.c].slot[order[(co.k + 1) % 4]];
            auto it = edge_faces_.find(e);
            if (it == edge_faces_.end()) edge_faces_[e] = {fi, -1};
            else it->second[1] = fi;
        }
}

Quadrant Diagram::corner_label(Corner co) const {
    auto order = ccw_slots(cr_[co.c].sign);
    return label_of_pair(order[co.k], order[(co.k + 1) % 4]);
}

Corner Diagram::corner_of(CrossingId c, Quadrant q) const {
    for (int k = 0; k < 4; ++k)
        if (corner_label({c, k}) == q) return {c, k};
    throw DiagramError("corner_of: bad quadrant");
}

FaceId Diagram::face_of(FaceAnchor a) const {
    if (a.c < 0 || a.c >= (int)cr_.size())
        throw DiagramError("face anchor names unknown crossing " + std::to_string(a.c));
    return corner_face(corner_of(a.c, a.q));
}

int Diagram::writhe() const {
    int w = 0;
    for (auto& c : cr_) w += c.sign;
    return w;
}

void Diagram::validate() {
    int n = (int)cr_.size();
    int f = (int)faces_.size();
    switch (amb_.kind) {
        case AmbientKind::Sphere:
        case AmbientKind::Annulus:
            if (f != n + 2)
                throw DiagramError("face count " + std::to_string(f) + " != crossings+2 (" +
                                   std::to_string(n + 2) + "): not a planar diagram");
            break;
        case AmbientKind::Torus:
            if (f != n)
                throw DiagramError("face count " + std::to_string(f) +
                                   " != crossings: not a torus diagram");
            break;
    }
    if (amb_.kind == AmbientKind::Annulus) {
        if (!amb_.origin_anchor || !amb_.inf_anchor)
            throw DiagramError("annulus ambient needs origin and inf faces");
        origin_face_ = face_of(*amb_.origin_anchor);
        inf_face_ = face_of(*amb_.inf_anchor);
        if (origin_face_ == inf_face_) throw DiagramError("star faces coincide");
    }
    if (amb_.kind == AmbientKind::Torus) {
        for (auto& [e, c] : amb_.edge_class)
            if (!tail_.count(e))
                throw DiagramError("edge class for unknown edge " + std::to_string(e));
        // every face boundary is null-homologous
        for (FaceId fi = 0; fi < f; ++fi) {
            long m = 0, nn = 0;
            for (auto& co : faces_[fi]) {
                auto order = ccw_slots(cr_[co.c].sign);
                Slot exit = order[(co.k + 1) % 4];
                EdgeId e = cr_[co.c].slot[exit];
                auto [p, q] = edge_cls(e);
                // walked with the strand when leaving through an in slot's partner:
                // exiting via slot `exit` traverses e away from this crossing, i.e.
                // along its direction iff `exit` is an out slot.
                int dir = is_in_slot(exit) ? -1 : +1;
                m += dir * p;
                nn += dir * q;
            }
            if (m != 0 || nn != 0)
                throw DiagramError("face " + std::to_string(fi) +
                                   " boundary class not null-homologous");
        }
    }
}

std::string Diagram::canonical_code() const {
    // canonical numbering by BFS over strands from every (crossing, slot) start
    int n = (int)cr_.size();
    std::string best;
    for (CrossingId c0 = 0; c0 < n; ++c0) {
        for (int s0 = 0; s0 < 4; ++s0) {
            // map edges in traversal order
            std::map<EdgeId, int> emap;
            std::vector<CrossingId> order;
            std::map<CrossingId, int> cmap;
            // deterministic expansion: walk strand from starting edge, then next unseen
            EdgeId start = cr_[c0].slot[s0];
            std::vector<EdgeId> queue{start};
            while ((int)emap.size() < (int)edges_.size()) {
                EdgeId e = -1;
                for (EdgeId cand : queue)
                    if (!emap.count(cand)) { e = cand; break; }
                if (e < 0) {
                    for (EdgeId cand : edges_)
                        if (!emap.count(cand)) { e = cand; break; }
                }
                // walk the component of e
                EdgeId cur = e;
                do {
                    emap[cur] = (int)emap.size();
                    SlotRef h = head_.at(cur);
                    if (!cmap.count(h.c)) {
                        cmap[h.c] = (int)cmap.size();
                        for (int s = 0; s < 4; ++s) queue.push_back(cr_[h.c].slot[s]);
                    }
                    cur = cr_[h.c].slot[h.s == UIn ? UOut : OOut];
                } while (cur != e);
            }
            std::ostringstream os;
            std::vector<std::pair<int, CrossingId>> cs;
            for (auto& [c, i] : cmap) cs.push_back({i, c});
            std::sort(cs.begin(), cs.end());
            for (auto& [i, c] : cs) {
                os << (cr_[c].sign > 0 ? "+" : "-");
                for (int s = 0; s < 4; ++s) os << emap[cr_[c].slot[s]] << ",";
                os << ";";
            }
            std::string code = os.str();
            if (best.empty() || code < best) best = code;
        }
    }
    return best;
}

Diagram connected_sum_split(const Diagram& d1, const Diagram& d2) {
    if (d1.ambient().kind != AmbientKind::Annulus || d2.ambient().kind != AmbientKind::Annulus)
        throw DiagramError("connected_sum_split needs annulus diagrams");
    // renumber d2 edges above d1's
    EdgeId off = 0;
    for (EdgeId e : d1.edges()) off = std::max(off, e);
    std::vector<Crossing> cr = d1.crossings();
    int c2base = (int)cr.size();
    for (auto c : d2.crossings()) {
        for (int s = 0; s < 4; ++s) c.slot[s] += off;
        cr.push_back(c);
    }

    // pick edge a on d1's inf face and edge b on d2's origin face
    auto boundary_edge = [](const Diagram& d, FaceId f) -> EdgeId {
        auto& face = d.faces()[f];
        auto& co = face[0];
        auto order = ccw_slots(d.crossings()[co.c].sign);
        return d.crossings()[co.c].slot[order[(co.k + 1) % 4]];
    };
    EdgeId a = boundary_edge(d1, d1.inf_face());
    EdgeId b = boundary_edge(d2, d2.origin_face()) + off;

    // clasp: bulge a across the merged face over b (same wiring as an
    // antiparallel R2 insertion; the b occurrence direction does not matter for
    // the split property, only that the diagram stays planar). We use the
    // walk-direction of b on d2's origin face to pick the valid wiring.
    EdgeId tip = off + 1000000 + 1, a2 = tip + 1, bmid = tip + 2, b2 = tip + 3;
    // relocate heads
    auto ha = d1.edge_head(a);
    auto hb = d2.edge_head(b - off);
    cr[ha.c].slot[ha.s] = a2;
    cr[c2base + hb.c].slot[hb.s] = b2;

    // determine d2-origin-face walk direction over b: +1 if walked with the strand
    int db = 0;
    {
        auto& face = d2.faces()[d2.origin_face()];
        for (auto& co : face) {
            auto order = ccw_slots(d2.crossings()[co.c].sign);
            Slot exits = order[(co.k + 1) % 4];
            if (d2.crossings()[co.c].slot[exits] == b - off)
                db = is_in_slot(exits) ? -1 : +1;
        }
    }
    // a over b; the two wirings tried in order, validation picks the survivor
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Crossing> cc = cr;
        bool first_b_first = (attempt == 0) == (db > 0);
        Crossing cfirst, csecond;
        cfirst.sign = +1;
        csecond.sign = -1;
        cfirst.slot[OIn] = a;
        cfirst.slot[OOut] = tip;
        csecond.slot[OIn] = tip;
        csecond.slot[OOut] = a2;
        if (first_b_first) {
            cfirst.slot[UIn] = b;
            cfirst.slot[UOut] = bmid;
            csecond.slot[UIn] = bmid;
            csecond.slot[UOut] = b2;
            cfirst.sign = -1;
            csecond.sign = +1;
        } else {
            cfirst.slot[UIn] = bmid;
            cfirst.slot[UOut] = b2;
            csecond.slot[UIn] = b;
            csecond.slot[UOut] = bmid;
        }
        cc.push_back(cfirst);
        cc.push_back(csecond);
        AmbientSpec amb;
        amb.kind = AmbientKind::Annulus;
        amb.origin_anchor = d1.ambient().origin_anchor;
        auto ia = d2.ambient().inf_anchor;
        ia->c += c2base;
        amb.inf_anchor = ia;
        try {
            return Diagram(std::move(cc), std::move(amb));
        } catch (const DiagramError&) {
            if (attempt == 1) throw;
        }
    }
    throw DiagramError("connected_sum_split: no valid wiring");
}

}  // namespace wsum
