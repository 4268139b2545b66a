#include "wsum/moves.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wsum {

namespace {

EdgeId max_edge(const std::vector<Crossing>& cs) {
    EdgeId m = 0;
    for (auto& c : cs)
        for (int s = 0; s < 4; ++s) m = std::max(m, c.slot[s]);
    return m;
}

// move an edge's head (in-slot occurrence) to a new edge id
void relocate_head(std::vector<Crossing>& cs, const Diagram& d, EdgeId e, EdgeId enew) {
    SlotRef h = d.edge_head(e);
    cs[h.c].slot[h.s] = enew;
}

// re-anchor a star face to a corner away from the given crossings
std::optional<FaceAnchor> reanchor(const Diagram& d, FaceId f,
                                   const std::vector<CrossingId>& avoid) {
    for (auto& co : d.faces()[f]) {
        bool bad = false;
        for (CrossingId c : avoid) bad |= co.c == c;
        if (!bad) return FaceAnchor{co.c, d.corner_label(co)};
    }
    return std::nullopt;
}

AmbientSpec transported_ambient(const Diagram& d, const std::vector<CrossingId>& avoid) {
    AmbientSpec amb = d.ambient();
    if (amb.kind == AmbientKind::Annulus) {
        auto o = reanchor(d, d.origin_face(), avoid);
        auto i = reanchor(d, d.inf_face(), avoid);
        if (!o || !i) throw MoveError("star face has no corner away from the move site");
        amb.origin_anchor = o;
        amb.inf_anchor = i;
    }
    return amb;
}

void set_class(AmbientSpec& amb, EdgeId e, std::pair<long, long> c) {
    if (amb.kind != AmbientKind::Torus) return;
    if (c.first == 0 && c.second == 0) amb.edge_class.erase(e);
    else amb.edge_class[e] = c;
}

std::pair<long, long> cls_sum(std::initializer_list<std::pair<long, long>> xs) {
    long m = 0, n = 0;
    for (auto& [a, b] : xs) { m += a; n += b; }
    return {m, n};
}

Diagram apply_r1_insert(const Diagram& d, const Move& mv) {
    if (mv.disc != Quadrant::OI && mv.disc != Quadrant::UI)
        throw MoveError("R1 disc quadrant must be OI or UI");
    if (std::find(d.edges().begin(), d.edges().end(), mv.edge) == d.edges().end())
        throw MoveError("R1 insert: unknown edge");
    std::vector<Crossing> cs = d.crossings();
    EdgeId e2 = max_edge(cs) + 1, lp = e2 + 1;
    relocate_head(cs, d, mv.edge, e2);
    Crossing c;
    c.sign = mv.sign;
    if (mv.disc == Quadrant::UI) {
        // strand passes over first; loop runs o_out -> u_in
        c.slot[OIn] = mv.edge;
        c.slot[OOut] = lp;
        c.slot[UIn] = lp;
        c.slot[UOut] = e2;
    } else {
        c.slot[UIn] = mv.edge;
        c.slot[UOut] = lp;
        c.slot[OIn] = lp;
        c.slot[OOut] = e2;
    }
    cs.push_back(c);
    AmbientSpec amb = d.ambient();  // corners persist, anchors stay valid
    set_class(amb, lp, {0, 0});
    set_class(amb, e2, {0, 0});
    return Diagram(std::move(cs), std::move(amb));
}

Diagram apply_r1_remove(const Diagram& d, const Move& mv) {
    CrossingId c = mv.crossing;
    if (c < 0 || c >= d.num_crossings()) throw MoveError("R1 remove: bad crossing");
    auto& cr = d.crossings()[c];
    EdgeId lp, ein, eout;
    Quadrant disc_q;
    if (cr.slot[OOut] == cr.slot[UIn]) {
        lp = cr.slot[OOut];
        ein = cr.slot[OIn];
        eout = cr.slot[UOut];
        disc_q = Quadrant::UI;
    } else if (cr.slot[UOut] == cr.slot[OIn]) {
        lp = cr.slot[UOut];
        ein = cr.slot[UIn];
        eout = cr.slot[OOut];
        disc_q = Quadrant::OI;
    } else {
        throw MoveError("R1 remove: crossing is not a kink");
    }
    if (ein == eout) throw MoveError("R1 remove would leave a crossingless diagram");
    if (d.ambient().kind == AmbientKind::Annulus) {
        FaceId disc = d.corner_face(d.corner_of(c, disc_q));
        if (disc == d.origin_face() || disc == d.inf_face())
            throw MoveError("R1 remove: star inside the kink disc");
    }
    AmbientSpec amb = transported_ambient(d, {c});
    std::vector<Crossing> cs = d.crossings();
    // splice: ein takes over eout's head
    SlotRef h = d.edge_head(eout);
    cs[h.c].slot[h.s] = ein;
    set_class(amb, ein, cls_sum({d.edge_cls(ein), d.edge_cls(lp), d.edge_cls(eout)}));
    if (amb.kind == AmbientKind::Torus) {
        amb.edge_class.erase(lp);
        amb.edge_class.erase(eout);
    }
    cs.erase(cs.begin() + c);
    // crossing ids above c shift down; fix anchors
    if (amb.kind == AmbientKind::Annulus) {
        if (amb.origin_anchor->c > c) --amb.origin_anchor->c;
        if (amb.inf_anchor->c > c) --amb.inf_anchor->c;
    }
    return Diagram(std::move(cs), std::move(amb));
}

struct WalkStep {
    EdgeId edge;
    int dir;  // +1 when the face walk agrees with the strand direction
};

WalkStep walk_step(const Diagram& d, FaceId f, int occ) {
    auto& face = d.faces()[f];
    if (occ < 0 || occ >= (int)face.size()) throw MoveError("R2 insert: bad walk position");
    Corner co = face[occ];
    auto order = ccw_slots(d.crossings()[co.c].sign);
    Slot exit = order[(co.k + 1) % 4];
    return {d.slot_edge(co.c, exit), is_in_slot(exit) ? -1 : +1};
}

Diagram apply_r2_insert(const Diagram& d, const Move& mv) {
    if (mv.face < 0 || mv.face >= (int)d.faces().size()) throw MoveError("R2 insert: bad face");
    WalkStep wa = walk_step(d, mv.face, mv.occ_a);
    WalkStep wb = walk_step(d, mv.face, mv.occ_b);
    if (wa.edge == wb.edge) throw MoveError("R2 insert: occurrences on the same edge");
    bool parallel = wa.dir != wb.dir;
    std::vector<Crossing> cs = d.crossings();
    EdgeId base = max_edge(cs);
    EdgeId a = wa.edge, b = wb.edge;
    EdgeId tip = base + 1, a2 = base + 2, bmid = base + 3, b2 = base + 4;
    relocate_head(cs, d, a, a2);
    relocate_head(cs, d, b, b2);
    int sign_first = (wb.dir > 0 ? -1 : +1) * (mv.over ? +1 : -1);
    Crossing cfirst, csecond;
    cfirst.sign = sign_first;
    csecond.sign = -sign_first;
    Slot sin = mv.over ? OIn : UIn, sout = mv.over ? OOut : UOut;
    Slot tin = mv.over ? UIn : OIn, tout = mv.over ? UOut : OOut;
    cfirst.slot[sin] = a;
    cfirst.slot[sout] = tip;
    csecond.slot[sin] = tip;
    csecond.slot[sout] = a2;
    if (parallel) {
        cfirst.slot[tin] = b;
        cfirst.slot[tout] = bmid;
        csecond.slot[tin] = bmid;
        csecond.slot[tout] = b2;
    } else {
        cfirst.slot[tin] = bmid;
        cfirst.slot[tout] = b2;
        csecond.slot[tin] = b;
        csecond.slot[tout] = bmid;
    }
    cs.push_back(cfirst);
    cs.push_back(csecond);
    AmbientSpec amb = d.ambient();
    for (EdgeId e : {tip, a2, bmid, b2}) set_class(amb, e, {0, 0});
    return Diagram(std::move(cs), std::move(amb));
}

Diagram apply_r2_remove(const Diagram& d, const Move& mv) {
    if (mv.face < 0 || mv.face >= (int)d.faces().size()) throw MoveError("R2 remove: bad face");
    auto& face = d.faces()[mv.face];
    if (face.size() != 2) throw MoveError("R2 remove: face is not a bigon");
    CrossingId c1 = face[0].c, c2 = face[1].c;
    if (c1 == c2) throw MoveError("R2 remove: degenerate bigon");
    if (d.crossings()[c1].sign == d.crossings()[c2].sign)
        throw MoveError("R2 remove: crossings have equal signs");
    if (d.ambient().kind == AmbientKind::Annulus &&
        (mv.face == d.origin_face() || mv.face == d.inf_face()))
        throw MoveError("R2 remove: bigon is a star face");
    // the two bigon edges; the over strand must be over at both crossings
    EdgeId p = walk_step(d, mv.face, 0).edge;
    EdgeId q = walk_step(d, mv.face, 1).edge;
    auto role = [&](EdgeId e) {
        bool over_tail = d.edge_tail(e).s == OOut;
        bool over_head = d.edge_head(e).s == OIn;
        if (over_tail != over_head) throw MoveError("R2 remove: clasp, not a bigon");
        return over_tail;
    };
    bool p_over = role(p), q_over = role(q);
    if (p_over == q_over) throw MoveError("R2 remove: not an R2 pattern");
    EdgeId over_mid = p_over ? p : q, under_mid = p_over ? q : p;
    // exterior edges of the two strands
    CrossingId oc1 = d.edge_tail(over_mid).c, oc2 = d.edge_head(over_mid).c;
    EdgeId a1 = d.slot_edge(oc1, OIn), a2 = d.slot_edge(oc2, OOut);
    CrossingId uc1 = d.edge_tail(under_mid).c, uc2 = d.edge_head(under_mid).c;
    EdgeId b1 = d.slot_edge(uc1, UIn), b2 = d.slot_edge(uc2, UOut);
    if (a1 == a2 || b1 == b2 || (a2 == b1 && b2 == a1))
        throw MoveError("R2 remove would create a crossingless component");
    AmbientSpec amb = transported_ambient(d, {c1, c2});
    std::vector<Crossing> cs = d.crossings();
    // merge the strand pieces: a2 is absorbed into a1, then b2 into the (possibly
    // renamed) b1; a strand may leave the bigon and re-enter it, so the renames
    // are applied globally
    auto rename = [&](EdgeId from, EdgeId to) {
        for (auto& cc : cs)
            for (int s = 0; s < 4; ++s)
                if (cc.slot[s] == from) cc.slot[s] = to;
    };
    auto acls = cls_sum({d.edge_cls(a1), d.edge_cls(over_mid), d.edge_cls(a2)});
    auto bcls = cls_sum({d.edge_cls(b1), d.edge_cls(under_mid), d.edge_cls(b2)});
    rename(a2, a1);
    if (amb.kind == AmbientKind::Torus)
        for (EdgeId e : {over_mid, under_mid, a1, a2, b1, b2}) amb.edge_class.erase(e);
    if (a2 == b1) {
        // over exit feeds the under entrance: everything becomes edge a1
        rename(b2, a1);
        auto shared = d.edge_cls(a2);
        set_class(amb, a1,
                  {acls.first + bcls.first - shared.first,
                   acls.second + bcls.second - shared.second});
    } else if (b2 == a1) {
        // under exit feeds the over entrance: everything becomes edge b1
        rename(a1, b1);
        auto shared = d.edge_cls(a1);
        set_class(amb, b1,
                  {acls.first + bcls.first - shared.first,
                   acls.second + bcls.second - shared.second});
    } else {
        rename(b2, b1);
        set_class(amb, a1, acls);
        set_class(amb, b1, bcls);
    }
    CrossingId lo = std::min(c1, c2), hi = std::max(c1, c2);
    cs.erase(cs.begin() + hi);
    cs.erase(cs.begin() + lo);
    if (amb.kind == AmbientKind::Annulus) {
        for (auto* a : {&*amb.origin_anchor, &*amb.inf_anchor}) {
            if (a->c > hi) a->c -= 2;
            else if (a->c > lo) a->c -= 1;
        }
    }
    return Diagram(std::move(cs), std::move(amb));
}

Diagram apply_r3(const Diagram& d, const Move& mv) {
    if (mv.face < 0 || mv.face >= (int)d.faces().size()) throw MoveError("R3: bad face");
    auto& face = d.faces()[mv.face];
    if (face.size() != 3) throw MoveError("R3: face is not a triangle");
    CrossingId c1 = face[0].c, c2 = face[1].c, c3 = face[2].c;
    if (c1 == c2 || c1 == c3 || c2 == c3) throw MoveError("R3: degenerate triangle");
    for (CrossingId c : {c1, c2, c3})
        if (d.crossings()[c].sign != +1)
            throw MoveError("R3: only the positive move is supported");
    if (d.ambient().kind == AmbientKind::Annulus &&
        (mv.face == d.origin_face() || mv.face == d.inf_face()))
        throw MoveError("R3: triangle is a star face");
    // the three triangle edges
    EdgeId s1 = walk_step(d, mv.face, 0).edge;
    EdgeId s2 = walk_step(d, mv.face, 1).edge;
    EdgeId s3 = walk_step(d, mv.face, 2).edge;
    // coherence: among the segments one is over at both ends, one under at both,
    // one mixed
    int n_oo = 0, n_uu = 0;
    for (EdgeId e : {s1, s2, s3}) {
        bool ot = d.edge_tail(e).s == OOut, oh = d.edge_head(e).s == OIn;
        if (ot && oh) ++n_oo;
        if (!ot && !oh) ++n_uu;
    }
    if (n_oo != 1 || n_uu != 1) throw MoveError("R3: cyclic over pattern, move not applicable");

    AmbientSpec amb = transported_ambient(d, {c1, c2, c3});
    std::vector<Crossing> cs = d.crossings();
    // per strand: reverse the order of its two crossings
    for (EdgeId sx : {s1, s2, s3}) {
        SlotRef t = d.edge_tail(sx), h = d.edge_head(sx);
        bool over_at_t = t.s == OOut, over_at_h = h.s == OIn;
        Slot in_t = over_at_t ? OIn : UIn, out_t = over_at_t ? OOut : UOut;
        Slot in_h = over_at_h ? OIn : UIn, out_h = over_at_h ? OOut : UOut;
        EdgeId ein = d.slot_edge(t.c, in_t);
        EdgeId eout = d.slot_edge(h.c, out_h);
        cs[t.c].slot[in_t] = sx;
        cs[t.c].slot[out_t] = eout;
        cs[h.c].slot[in_h] = ein;
        cs[h.c].slot[out_h] = sx;
    }
    return Diagram(std::move(cs), std::move(amb));
}

}  // namespace

std::string Move::str() const {
    std::ostringstream os;
    switch (kind) {
        case MoveKind::R1Insert:
            os << "R1+ edge=" << edge << " disc=" << quadrant_name(disc)
               << " sign=" << (sign > 0 ? "+1" : "-1");
            break;
        case MoveKind::R1Remove:
            os << "R1- crossing=" << crossing;
            break;
        case MoveKind::R2Insert:
            os << "R2+ face=" << face << " a=" << occ_a << " b=" << occ_b
               << (over ? " over" : " under");
            break;
        case MoveKind::R2Remove:
            os << "R2- face=" << face;
            break;
        case MoveKind::R3:
            os << "R3 face=" << face;
            break;
    }
    return os.str();
}

Diagram apply_move(const Diagram& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::R1Insert: return apply_r1_insert(d, m);
        case MoveKind::R1Remove: return apply_r1_remove(d, m);
        case MoveKind::R2Insert: return apply_r2_insert(d, m);
        case MoveKind::R2Remove: return apply_r2_remove(d, m);
        case MoveKind::R3: return apply_r3(d, m);
    }
    throw MoveError("unknown move kind");
}

std::vector<Move> candidate_moves(const Diagram& d, int max_crossings) {
    std::vector<Move> out;
    int n = d.num_crossings();
    if (n + 1 <= max_crossings) {
        for (EdgeId e : d.edges())
            for (Quadrant q : {Quadrant::OI, Quadrant::UI})
                for (int sgn : {+1, -1}) {
                    Move m;
                    m.kind = MoveKind::R1Insert;
                    m.edge = e;
                    m.disc = q;
                    m.sign = sgn;
                    out.push_back(m);
                }
    }
    for (CrossingId c = 0; c < n; ++c) {
        auto& cr = d.crossings()[c];
        if (cr.slot[OOut] == cr.slot[UIn] || cr.slot[UOut] == cr.slot[OIn]) {
            Move m;
            m.kind = MoveKind::R1Remove;
            m.crossing = c;
            out.push_back(m);
        }
    }
    for (FaceId f = 0; f < (int)d.faces().size(); ++f) {
        size_t sz = d.faces()[f].size();
        if (n + 2 <= max_crossings) {
            for (int i = 0; i < (int)sz; ++i)
                for (int j = 0; j < (int)sz; ++j) {
                    if (i == j) continue;
                    for (bool over : {true, false}) {
                        Move m;
                        m.kind = MoveKind::R2Insert;
                        m.face = f;
                        m.occ_a = i;
                        m.occ_b = j;
                        m.over = over;
                        out.push_back(m);
                    }
                }
        }
        if (sz == 2) {
            Move m;
            m.kind = MoveKind::R2Remove;
            m.face = f;
            out.push_back(m);
        }
        if (sz == 3) {
            Move m;
            m.kind = MoveKind::R3;
            m.face = f;
            out.push_back(m);
        }
    }
    return out;
}

MoveSequence random_move_sequence(const Diagram& d, int count, std::uint64_t seed,
                                  int max_crossings) {
    MoveSequence seq;
    std::mt19937_64 rng(seed);
    Diagram cur = d;
    for (int step = 0; step < count; ++step) {
        auto cands = candidate_moves(cur, max_crossings);
        bool applied = false;
        // a bounded number of probes keeps the draw sequence reproducible
        for (int probe = 0; probe < 64 && !cands.empty() && !applied; ++probe) {
            size_t pick = (size_t)(rng() % cands.size());
            try {
                Diagram next = apply_move(cur, cands[pick]);
                seq.moves.push_back(cands[pick]);
                seq.steps.push_back(next);
                cur = std::move(next);
                applied = true;
            } catch (const DiagramError&) {
                cands.erase(cands.begin() + pick);
            }
        }
        if (!applied) break;  // no applicable move found
    }
    return seq;
}

}  // namespace wsum
