#include "wsum/states.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace wsum {

std::array<std::pair<Slot, Slot>, 2> smoothing_arcs(int sign, Smoothing s) {
    bool oriented = (s == Smoothing::A) == (sign > 0);
    if (oriented) return {{{OIn, UOut}, {UIn, OOut}}};
    return {{{OIn, UIn}, {OOut, UOut}}};
}

std::set<FaceId> star_faces(const Diagram& d) {
    if (d.ambient().kind == AmbientKind::Annulus)
        return {d.origin_face(), d.inf_face()};
    if (d.ambient().kind == AmbientKind::Torus) return {};
    throw DiagramError("state enumeration needs annulus star faces or torus mode");
}

std::vector<AlexanderState> enumerate_alexander_states(const Diagram& d,
                                                       const std::set<FaceId>& stars) {
    int n = d.num_crossings();
    std::vector<AlexanderState> out;
    int nf = (int)d.faces().size();
    if (nf - (int)stars.size() != n) return out;
    std::vector<char> used(nf, 0);
    std::vector<Corner> dots(n);

    // backtracking over the crossing <-> face incidence
    auto bt = [&](auto&& self, int c) -> void {
        if (c == n) {
            out.push_back({dots});
            return;
        }
        for (int k = 0; k < 4; ++k) {
            FaceId f = d.corner_face({c, k});
            if (stars.count(f) || used[f]) continue;
            used[f] = 1;
            dots[c] = {c, k};
            self(self, c + 1);
            used[f] = 0;
        }
    };
    bt(bt, 0);
    return out;
}

long alexander_state_count_permanent(const Diagram& d, const std::set<FaceId>& stars) {
    int n = d.num_crossings();
    std::vector<FaceId> nonstar;
    for (FaceId f = 0; f < (int)d.faces().size(); ++f)
        if (!stars.count(f)) nonstar.push_back(f);
    if ((int)nonstar.size() != n) return 0;
    std::map<FaceId, int> col;
    for (int i = 0; i < n; ++i) col[nonstar[i]] = i;
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (CrossingId c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            FaceId f = d.corner_face({c, k});
            if (col.count(f)) m[c][col[f]] += 1;
        }
    // straightforward expansion by the first row with column mask
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int row) -> long {
        if (row == n) return 1;
        long acc = 0;
        for (int j = 0; j < n; ++j)
            if (!used[j] && m[row][j]) {
                used[j] = 1;
                acc += m[row][j] * self(self, row + 1);
                used[j] = 0;
            }
        return acc;
    };
    return rec(rec, 0);
}

ResolvedCircles resolve(const Diagram& d, SmoothingState s) {
    int n = d.num_crossings();
    ResolvedCircles rc;
    rc.arcs.assign(n, {});
    // arc partner per slot
    std::vector<std::array<Slot, 4>> partner(n);
    for (CrossingId c = 0; c < n; ++c) {
        auto arcs = smoothing_arcs(d.crossings()[c].sign, smoothing_of(s, c));
        for (auto& [a, b] : arcs) {
            partner[c][a] = b;
            partner[c][b] = a;
        }
    }
    std::set<EdgeId> visited;
    for (EdgeId e0 : d.edges()) {
        if (visited.count(e0)) continue;
        StateCircle circ;
        int idx = (int)rc.circles.size();
        EdgeId e = e0;
        int dir = +1;
        do {
            visited.insert(e);
            circ.edges.emplace_back(e, dir);
            SlotRef arrive = dir > 0 ? d.edge_head(e) : d.edge_tail(e);
            Slot exit = partner[arrive.c][arrive.s];
            // record the arc site: the cupped corner is the one spanned by
            // (entry, exit); the dot there is left of travel iff exit is the
            // ccw successor of the entry slot
            auto order = ccw_slots(d.crossings()[arrive.c].sign);
            int ki = 0;
            while (order[ki] != arrive.s) ++ki;
            ArcSite site;
            site.circle = idx;
            if (order[(ki + 1) % 4] == exit) {
                site.corner_k = ki;
                site.dot_left = true;
            } else {
                site.corner_k = (ki + 3) % 4;
                site.dot_left = false;
            }
            auto& pair_sites = rc.arcs[arrive.c];
            if (pair_sites[0].corner_k < 0) pair_sites[0] = site;
            else pair_sites[1] = site;
            e = d.slot_edge(arrive.c, exit);
            dir = is_in_slot(exit) ? -1 : +1;
        } while (!(e == e0 && dir == +1));
        rc.circles.push_back(std::move(circ));
    }
    return rc;
}

void classify_circles(const Diagram& d, ResolvedCircles& rc) {
    if (d.ambient().kind == AmbientKind::Torus) {
        for (auto& c : rc.circles) {
            long m = 0, n = 0;
            for (auto& [e, dir] : c.edges) {
                auto [p, q] = d.edge_cls(e);
                m += dir * p;
                n += dir * q;
            }
            if (m == 0 && n == 0) {
                c.kind = CircleKind::Contractible;
            } else {
                if (m < 0 || (m == 0 && n < 0)) { m = -m; n = -n; }
                c.kind = CircleKind::TorusClass;
                c.cls_m = m;
                c.cls_n = n;
            }
        }
        return;
    }
    if (d.ambient().kind != AmbientKind::Annulus)
        throw DiagramError("classify_circles: ambient is neither annulus nor torus");
    // circle id per edge
    std::map<EdgeId, int> ec;
    for (int i = 0; i < rc.count(); ++i)
        for (auto& [e, dir] : rc.circles[i].edges) ec[e] = i;
    // dual BFS from the origin face; crossing an edge toggles that edge's circle
    int nf = (int)d.faces().size();
    std::vector<std::vector<std::pair<FaceId, int>>> adj(nf);  // (other face, circle)
    for (EdgeId e : d.edges()) {
        auto& f = d.edge_faces(e);
        adj[f[0]].push_back({f[1], ec[e]});
        adj[f[1]].push_back({f[0], ec[e]});
    }
    std::vector<uint64_t> label(nf, 0);
    std::vector<char> seen(nf, 0);
    std::deque<FaceId> dq{d.origin_face()};
    seen[d.origin_face()] = 1;
    while (!dq.empty()) {
        FaceId f = dq.front();
        dq.pop_front();
        for (auto& [g, circ] : adj[f]) {
            if (seen[g]) continue;
            seen[g] = 1;
            label[g] = label[f] ^ (1ULL << circ);
            dq.push_back(g);
        }
    }
    uint64_t core = label[d.inf_face()];
    for (int i = 0; i < rc.count(); ++i)
        rc.circles[i].kind = (core >> i) & 1 ? CircleKind::AnnulusCore : CircleKind::Contractible;
}

std::vector<CountingDot> counting_dots(const Diagram& d, const AlexanderState& t,
                                       SmoothingState s, const ResolvedCircles& rc) {
    (void)s;
    std::vector<CountingDot> out;
    for (CrossingId c = 0; c < d.num_crossings(); ++c) {
        int k = t.dots[c].k;
        for (auto& site : rc.arcs[c])
            if (site.corner_k == k) out.push_back({c, site.circle, site.dot_left});
    }
    return out;
}

std::vector<int> circle_weights(const ResolvedCircles& rc,
                                const std::vector<CountingDot>& dots) {
    std::vector<int> bal(rc.count(), 0);
    for (auto& d : dots) bal[d.circle] += d.left ? 1 : -1;
    std::vector<int> v(rc.count());
    for (int i = 0; i < rc.count(); ++i) v[i] = std::abs(bal[i]);
    return v;
}

std::string dump_double_state(const Diagram& d, const AlexanderState& t, SmoothingState s) {
    std::ostringstream os;
    os << "dots:";
    for (CrossingId c = 0; c < d.num_crossings(); ++c) {
        Corner co = t.dots[c];
        os << " X" << c << ":" << quadrant_name(d.corner_label(co)) << "/f"
           << d.corner_face(co);
    }
    os << "\nsmoothing: ";
    for (CrossingId c = 0; c < d.num_crossings(); ++c)
        os << (smoothing_of(s, c) == Smoothing::A ? 'A' : 'B');
    ResolvedCircles rc = resolve(d, s);
    classify_circles(d, rc);
    auto dots = counting_dots(d, t, s, rc);
    auto ws = circle_weights(rc, dots);
    os << "\ncircles:";
    for (int i = 0; i < rc.count(); ++i) {
        os << " #" << i << "[";
        switch (rc.circles[i].kind) {
            case CircleKind::Contractible: os << "contractible"; break;
            case CircleKind::AnnulusCore: os << "core"; break;
            case CircleKind::TorusClass:
                os << "|" << rc.circles[i].cls_m << "a+" << rc.circles[i].cls_n << "b|";
                break;
        }
        os << " v=" << ws[i] << "]";
    }
    os << "\n";
    return os.str();
}

}  // namespace wsum
