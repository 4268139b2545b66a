#include "wsum/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wsum/states.hpp"
#include "wsum/weights.hpp"

namespace wsum {

namespace {

// classical Alexander matrix corner labels; positive crossing rows carry t on
// the corners left of the under strand (IN and OI), negative rows are the
// OI/UI-swapped negation
LaurentPoly det_label(int sign, Quadrant q) {
    auto t1 = [](long re, int te) {
        return LaurentPoly::mono(GaussianInt(re), make_mono({{Var::T, te}}));
    };
    if (sign > 0) {
        switch (q) {
            case Quadrant::IN: return t1(1, 1);
            case Quadrant::OI: return t1(1, 1);
            case Quadrant::OUT: return t1(1, 0);
            default: return t1(-1, 0);  // UI
        }
    }
    switch (q) {
        case Quadrant::IN: return t1(-1, 1);
        case Quadrant::UI: return t1(-1, 1);
        case Quadrant::OUT: return t1(-1, 0);
        default: return t1(1, 0);  // OI
    }
}

}  // namespace

LaurentPoly alexander_det_oracle(const Diagram& d) {
    std::set<FaceId> stars = star_faces(d);
    int n = d.num_crossings();
    std::vector<FaceId> nonstar;
    for (FaceId f = 0; f < (int)d.faces().size(); ++f)
        if (!stars.count(f)) nonstar.push_back(f);
    if ((int)nonstar.size() != n) throw DiagramError("det oracle: face count mismatch");
    std::map<FaceId, int> col;
    for (int i = 0; i < n; ++i) col[nonstar[i]] = i;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (CrossingId c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            FaceId f = d.corner_face({c, k});
            auto it = col.find(f);
            if (it == col.end()) continue;
            m[c][it->second] =
                m[c][it->second] + det_label(d.crossings()[c].sign, d.corner_label({c, k}));
        }
    // division-free determinant: expansion over column subsets
    if (n > 20) throw DiagramError("det oracle: too many crossings");
    std::map<uint32_t, LaurentPoly> memo;  // used-column mask after some rows
    memo[0] = LaurentPoly::one();
    for (int row = 0; row < n; ++row) {
        std::map<uint32_t, LaurentPoly> next;
        for (auto& [mask, val] : memo) {
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                if (m[row][j].is_zero()) continue;
                // sign: parity of used columns above j
                int swaps = 0;
                for (int k2 = j + 1; k2 < n; ++k2)
                    if (mask & (1u << k2)) ++swaps;
                LaurentPoly term = val * m[row][j];
                if (swaps % 2) term = -term;
                uint32_t nm = mask | (1u << j);
                auto it = next.find(nm);
                if (it == next.end()) next.emplace(nm, term);
                else it->second = it->second + term;
            }
        }
        memo = std::move(next);
    }
    uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    auto it = memo.find(full);
    return it == memo.end() ? LaurentPoly::zero() : it->second;
}

bool alexander_oracle_agree(const LaurentPoly& state_poly, const LaurentPoly& det_poly) {
    LaurentPoly det2 = det_poly.substitute(Var::T, LaurentPoly::mono(GaussianInt(1),
                                                                     make_mono({{Var::T, 2}})));
    auto r = unit_monomial_ratio(state_poly, det2);
    if (r) return true;
    return (bool)unit_monomial_ratio(state_poly, -det2);
}

namespace {

// lightweight abstract PD for the skein recursion (no embedding data needed)
struct SkeinPD {
    std::vector<Crossing> cr;
    int free_circles = 0;
};

std::string skein_code(const SkeinPD& p) {
    // canonicalize by traversal renumbering from every start, keep the least
    if (p.cr.empty()) return "free:" + std::to_string(p.free_circles);
    std::map<EdgeId, SlotRef> head;
    for (int c = 0; c < (int)p.cr.size(); ++c)
        for (int s = 0; s < 4; ++s)
            if (is_in_slot((Slot)s)) head[p.cr[c].slot[s]] = {c, (Slot)s};
    std::string best;
    for (int c0 = 0; c0 < (int)p.cr.size(); ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            std::map<EdgeId, int> emap;
            std::map<int, int> cmap;
            std::vector<EdgeId> pending{p.cr[c0].slot[s0]};
            size_t qi = 0;
            while (emap.size() < head.size()) {
                EdgeId e = -1;
                for (; qi < pending.size(); ++qi)
                    if (!emap.count(pending[qi])) { e = pending[qi]; break; }
                if (e < 0) {
                    for (auto& [ee, hh] : head)
                        if (!emap.count(ee)) { e = ee; break; }
                }
                EdgeId cur = e;
                do {
                    emap[cur] = (int)emap.size();
                    SlotRef h = head.at(cur);
                    if (!cmap.count(h.c)) {
                        cmap[h.c] = (int)cmap.size();
                        for (int s = 0; s < 4; ++s) pending.push_back(p.cr[h.c].slot[s]);
                    }
                    cur = p.cr[h.c].slot[h.s == UIn ? UOut : OOut];
                } while (cur != e);
            }
            std::ostringstream os;
            std::vector<std::pair<int, int>> cs;
            for (auto& [c, i] : cmap) cs.push_back({i, c});
            std::sort(cs.begin(), cs.end());
            for (auto& [i, c] : cs) {
                os << (p.cr[c].sign > 0 ? '+' : '-');
                for (int s = 0; s < 4; ++s) os << emap[p.cr[c].slot[s]] << ',';
                os << ';';
            }
            std::string code = os.str();
            if (best.empty() || code < best) best = code;
        }
    return best + "|" + std::to_string(p.free_circles);
}

SkeinPD switch_crossing(SkeinPD p, int c) {
    std::swap(p.cr[c].slot[UIn], p.cr[c].slot[OIn]);
    std::swap(p.cr[c].slot[UOut], p.cr[c].slot[OOut]);
    p.cr[c].sign = -p.cr[c].sign;
    return p;
}

SkeinPD smooth_oriented(SkeinPD p, int c) {
    auto rename = [&](EdgeId from, EdgeId to) {
        for (auto& cc : p.cr)
            for (int s = 0; s < 4; ++s)
                if (cc.slot[s] == from) cc.slot[s] = to;
    };
    Crossing cr = p.cr[c];
    p.cr.erase(p.cr.begin() + c);
    // oriented smoothing joins o_in -> u_out and u_in -> o_out
    for (auto [in, out] : {std::pair<Slot, Slot>{OIn, UOut}, {UIn, OOut}}) {
        EdgeId ein = cr.slot[in], eout = cr.slot[out];
        if (ein == eout) {
            ++p.free_circles;
        } else {
            rename(eout, ein);
            // the loop pair may reference the renamed edge
            for (int s = 0; s < 4; ++s)
                if (cr.slot[s] == eout) cr.slot[s] = ein;
        }
    }
    return p;
}

// first crossing met as an under pass when traversing components from their
// lowest edges; -1 when descending
int first_bad_crossing(const SkeinPD& p) {
    if (p.cr.empty()) return -1;
    std::map<EdgeId, SlotRef> head;
    for (int c = 0; c < (int)p.cr.size(); ++c)
        for (int s = 0; s < 4; ++s)
            if (is_in_slot((Slot)s)) head[p.cr[c].slot[s]] = {c, (Slot)s};
    std::set<EdgeId> seen;
    std::set<int> visited;
    for (auto& [e0, h0] : head) {
        if (seen.count(e0)) continue;
        EdgeId e = e0;
        do {
            seen.insert(e);
            SlotRef h = head.at(e);
            if (!visited.count(h.c)) {
                visited.insert(h.c);
                if (h.s == UIn) return h.c;  // first met going under
            }
            e = p.cr[h.c].slot[h.s == UIn ? UOut : OOut];
        } while (e != e0);
    }
    return -1;
}

int count_components(const SkeinPD& p) {
    std::map<EdgeId, SlotRef> head;
    for (int c = 0; c < (int)p.cr.size(); ++c)
        for (int s = 0; s < 4; ++s)
            if (is_in_slot((Slot)s)) head[p.cr[c].slot[s]] = {c, (Slot)s};
    std::set<EdgeId> seen;
    int comps = 0;
    for (auto& [e0, h0] : head) {
        if (seen.count(e0)) continue;
        ++comps;
        EdgeId e = e0;
        do {
            seen.insert(e);
            SlotRef h = head.at(e);
            e = p.cr[h.c].slot[h.s == UIn ? UOut : OOut];
        } while (e != e0);
    }
    return comps;
}

struct SkeinCtx {
    std::map<std::string, LaurentPoly> memo;
    long budget;
    LaurentPoly dbr = WeightScheme::d_bracket();

    LaurentPoly eval(const SkeinPD& p) {
        if (--budget < 0) throw SkeinBudgetExceeded();
        std::string key = skein_code(p);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        LaurentPoly val;
        int bad = first_bad_crossing(p);
        if (bad < 0) {
            int circles = count_components(p) + p.free_circles;
            val = dbr.pow(circles - 1);
        } else {
            int sign = p.cr[bad].sign;
            LaurentPoly vsw = eval(switch_crossing(p, bad));
            LaurentPoly vsm = eval(smooth_oriented(p, bad));
            auto amono = [](int k, long re) {
                return LaurentPoly::mono(GaussianInt(re), make_mono({{Var::A, k}}));
            };
            if (sign > 0) {
                // A^4 V(L+) - A^-4 V(L-) = (A^-2 - A^2) V(L0)
                val = vsw * amono(-8, 1) + vsm * (amono(-6, 1) - amono(-2, 1));
            } else {
                val = vsw * amono(8, 1) + vsm * (amono(6, 1) - amono(2, 1));
            }
        }
        memo.emplace(std::move(key), val);
        return val;
    }
};

}  // namespace

LaurentPoly jones_skein_oracle(const Diagram& d, long budget) {
    SkeinPD p;
    p.cr = d.crossings();
    SkeinCtx ctx;
    ctx.budget = budget;
    return ctx.eval(p);
}

}  // namespace wsum
