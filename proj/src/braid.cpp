#include "wsum/braid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wsum {

Diagram braid_closure(const std::vector<int>& word, int strands, AmbientKind kind) {
    if (word.empty()) throw DiagramError("empty braid word");
    std::vector<EdgeId> cur(strands);
    for (int i = 0; i < strands; ++i) cur[i] = i + 1;
    EdgeId next = strands + 1;
    std::vector<Crossing> cs;
    for (int g : word) {
        int i = std::abs(g);
        if (i < 1 || i >= strands) throw DiagramError("braid letter out of range");
        EdgeId a = cur[i - 1], b = cur[i];
        EdgeId e1 = next++, e2 = next++;
        Crossing c;
        if (g > 0) {
            c.sign = +1;
            c.slot[OIn] = a;
            c.slot[UIn] = b;
            c.slot[UOut] = e1;
            c.slot[OOut] = e2;
        } else {
            c.sign = -1;
            c.slot[UIn] = a;
            c.slot[OIn] = b;
            c.slot[OOut] = e1;
            c.slot[UOut] = e2;
        }
        cs.push_back(c);
        cur[i - 1] = e1;
        cur[i] = e2;
    }
    // trace closure: top edge at position k becomes the bottom edge k+1
    std::map<EdgeId, EdgeId> ren;
    for (int k = 0; k < strands; ++k) ren[cur[k]] = k + 1;
    for (auto& c : cs)
        for (int s = 0; s < 4; ++s) {
            auto it = ren.find(c.slot[s]);
            if (it != ren.end()) c.slot[s] = it->second;
        }
    AmbientSpec amb;
    amb.kind = kind;
    if (kind == AmbientKind::Annulus) {
        amb.origin_anchor = FaceAnchor{0, Quadrant::IN};
        amb.inf_anchor = FaceAnchor{0, Quadrant::OI};
    }
    return Diagram(std::move(cs), std::move(amb));
}

namespace {

// unoriented crossing: edge stubs in ccw order; over_diag 0 means the strand
// through ends (0,2) passes over
struct UCross {
    std::array<int, 4> end;
    int over_diag;
};

Diagram orient_and_build(std::vector<UCross> ucs, AmbientSpec amb) {
    // collect the two darts of every edge stub
    std::map<int, std::vector<std::pair<int, int>>> darts;  // edge -> [(crossing, pos)]
    for (int c = 0; c < (int)ucs.size(); ++c)
        for (int j = 0; j < 4; ++j) darts[ucs[c].end[j]].push_back({c, j});
    for (auto& [e, ds] : darts)
        if (ds.size() != 2) throw DiagramError("stub edge " + std::to_string(e) + " not closed");

    // orient components: head dart per edge
    std::map<int, std::pair<int, int>> head;  // edge -> dart where it ends
    for (auto& [e0, ds] : darts) {
        if (head.count(e0)) continue;
        int e = e0;
        std::pair<int, int> into = ds[0];
        while (!head.count(e)) {
            head[e] = into;
            auto [c, j] = into;
            int out = (j + 2) % 4;
            int enext = ucs[c].end[out];
            auto& dd = darts[enext];
            into = dd[0] == std::make_pair(c, out) ? dd[1] : dd[0];
            e = enext;
        }
    }

    std::vector<Crossing> cs(ucs.size());
    for (int c = 0; c < (int)ucs.size(); ++c) {
        auto& u = ucs[c];
        // under strand ends
        int ua = u.over_diag == 0 ? 1 : 0;  // positions of the under strand
        int in_pos = -1;
        for (int p : {ua, ua + 2})
            if (head[u.end[p]] == std::make_pair(c, p)) in_pos = p;
        if (in_pos < 0) throw DiagramError("orientation trace failed");
        int u_out = (in_pos + 2) % 4;
        int nextp = (in_pos + 1) % 4;
        // over strand: incoming at whichever over end is a head here
        int oa = u.over_diag == 0 ? 0 : 1;
        int o_in = head[u.end[oa]] == std::make_pair(c, oa) ? oa : (oa + 2) % 4;
        int o_out = (o_in + 2) % 4;
        Crossing cr;
        cr.sign = (nextp == o_in) ? -1 : +1;  // ccw from u_in: o_in next means negative
        cr.slot[UIn] = u.end[in_pos];
        cr.slot[UOut] = u.end[u_out];
        cr.slot[OIn] = u.end[o_in];
        cr.slot[OOut] = u.end[o_out];
        cs[c] = cr;
    }
    return Diagram(std::move(cs), std::move(amb));
}

}  // namespace

std::pair<long, long> rational_fraction(const std::vector<int>& cf) {
    long p = cf.back(), q = 1;
    for (int i = (int)cf.size() - 2; i >= 0; --i) {
        long np = cf[i] * p + q;
        q = p;
        p = np;
    }
    return {p, q};
}

Diagram rational_diagram(const std::vector<int>& cf) {
    if (cf.empty()) throw DiagramError("empty continued fraction");
    for (int a : cf)
        if (a <= 0) throw DiagramError("continued fraction entries must be positive");
    // tangle with four pending stubs nw, ne, sw, se; start from the 0-tangle
    int next = 1;
    int nw = next++, ne = next++, sw = next++, se = next++;
    std::vector<UCross> ucs;
    // 0-tangle: nw--ne and sw--se are single strands; realize them lazily by
    // fusing stub ids at the end
    std::vector<std::pair<int, int>> fuse{{nw, ne}, {sw, se}};
    bool horizontal = true;  // twist region parity: bottom twists first
    for (int a : cf) {
        for (int t = 0; t < a; ++t) {
            if (horizontal) {
                // twist the two bottom stubs: crossing ends ccw (NW, SW, SE, NE)
                int nsw = next++, nse = next++;
                UCross u;
                u.end = {sw, nsw, nse, se};  // ccw: NW(old sw), SW(new), SE(new), NE(old se)
                u.over_diag = 0;             // (NW,SE) strand over
                ucs.push_back(u);
                sw = nsw;
                se = nse;
            } else {
                // twist the two right stubs: crossing ends ccw (NW(old ne), SW(old se), SE, NE)
                int nne = next++, nse = next++;
                UCross u;
                u.end = {ne, se, nse, nne};
                u.over_diag = 0;
                ucs.push_back(u);
                ne = nne;
                se = nse;
            }
        }
        horizontal = !horizontal;
    }
    // numerator closure: nw--ne, sw--se
    fuse.push_back({nw, ne});
    fuse.push_back({sw, se});
    // resolve fusions with union-find on stub ids
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    };
    for (auto& [a, b] : fuse) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    for (auto& u : ucs)
        for (int j = 0; j < 4; ++j) u.end[j] = find(u.end[j]);
    AmbientSpec amb;
    amb.kind = AmbientKind::Sphere;
    return orient_and_build(std::move(ucs), std::move(amb));
}

Diagram with_stars(const Diagram& d, FaceAnchor origin, FaceAnchor inf) {
    AmbientSpec amb = d.ambient();
    amb.kind = AmbientKind::Annulus;
    amb.origin_anchor = origin;
    amb.inf_anchor = inf;
    return Diagram(d.crossings(), std::move(amb));
}

Diagram with_classical_stars(const Diagram& d) {
    // default: the two faces flanking the lowest edge of component 0
    EdgeId e = -1;
    for (EdgeId cand : d.edges())
        if (d.edge_component().at(cand) == 0) { e = cand; break; }
    SlotRef h = d.edge_head(e);
    auto order = ccw_slots(d.crossings()[h.c].sign);
    int ki = 0;
    while (order[ki] != h.s) ++ki;
    // the two corners flanking the head slot lie on the two sides of the edge
    Corner left{h.c, ki};
    Corner right{h.c, (ki + 3) % 4};
    FaceAnchor origin{h.c, d.corner_label(left)};
    FaceAnchor inf{h.c, d.corner_label(right)};
    return with_stars(d, origin, inf);
}

}  // namespace wsum
