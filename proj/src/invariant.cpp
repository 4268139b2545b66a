#include "wsum/invariant.hpp"

#include <algorithm>
#include <thread>

namespace wsum {

namespace {

Monomial writhe_norm(int w) {
    return make_mono({{Var::X, -2 * w}, {Var::Y, -2 * w}, {Var::Z, 2 * w}});
}

int pick_workers(int req, unsigned long long jobs) {
    if (req > 0) return req;
    unsigned hc = std::thread::hardware_concurrency();
    int w = hc ? (int)hc : 1;
    if (jobs < 1024) return 1;
    return std::min(w, 8);
}

struct StateTables {
    std::vector<AlexanderState> states;
    // per state, per crossing: quadrant label of the dot
    std::vector<std::vector<Quadrant>> labels;
    // weight lookup [crossing][quadrant][smoothing]
    std::vector<std::array<std::array<UnitMono, 2>, 4>> wt;
};

StateTables build_tables(const Diagram& d, const WeightScheme& w) {
    StateTables st;
    st.states = enumerate_alexander_states(d, star_faces(d));
    for (auto& t : st.states) {
        std::vector<Quadrant> ls;
        for (auto& co : t.dots) ls.push_back(d.corner_label(co));
        st.labels.push_back(std::move(ls));
    }
    st.wt.resize(d.num_crossings());
    for (CrossingId c = 0; c < d.num_crossings(); ++c)
        for (int q = 0; q < 4; ++q)
            for (int s = 0; s < 2; ++s)
                st.wt[c][q][s] = w.weight(d.crossings()[c].sign, (Quadrant)q, (Smoothing)s);
    return st;
}

// accumulation buckets: coefficient map per power of d
using Buckets = std::vector<std::map<Monomial, GaussianInt>>;

void bucket_add(Buckets& b, int dpow, const Monomial& m, int unit) {
    if ((int)b.size() <= dpow) b.resize(dpow + 1);
    auto& slot = b[dpow];
    auto it = slot.find(m);
    if (it == slot.end()) {
        slot.emplace(m, GaussianInt::unit_pow_i(unit));
    } else {
        it->second = it->second + GaussianInt::unit_pow_i(unit);
        if (it->second.is_zero()) slot.erase(it);
    }
}

void bucket_merge(Buckets& into, Buckets&& from) {
    if (into.size() < from.size()) into.resize(from.size());
    for (size_t k = 0; k < from.size(); ++k)
        for (auto& [m, c] : from[k]) {
            auto it = into[k].find(m);
            if (it == into[k].end()) into[k].emplace(m, c);
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) into[k].erase(it);
            }
        }
}

LaurentPoly bucket_total(const Buckets& b, const LaurentPoly& d) {
    LaurentPoly total;
    LaurentPoly dk = LaurentPoly::one();
    for (size_t k = 0; k < b.size(); ++k) {
        LaurentPoly part;
        part.terms.insert(b[k].begin(), b[k].end());
        total = total + part * dk;
        dk = dk * d;
    }
    return total;
}

// shared double-sum driver; `emit` maps one smoothing's resolution to the
// state-independent monomial extras and d-power
template <class PerSmoothing>
Buckets double_sum(const Diagram& d, const StateTables& st, int workers,
                   PerSmoothing per_smoothing) {
    int n = d.num_crossings();
    if (n > 62) throw DiagramError("too many crossings for smoothing enumeration");
    unsigned long long total = 1ULL << n;
    int nw = pick_workers(workers, total * std::max<size_t>(1, st.states.size()));
    std::vector<Buckets> parts(nw);
    auto run = [&](int wi) {
        Buckets& b = parts[wi];
        for (SmoothingState s = wi; s < total; s += nw) {
            ResolvedCircles rc = resolve(d, s);
            classify_circles(d, rc);
            auto [extra, dpow, ok] = per_smoothing(s, rc);
            if (!ok) continue;
            for (size_t ti = 0; ti < st.states.size(); ++ti) {
                int unit = extra.second;
                Monomial m = extra.first;
                const auto& ls = st.labels[ti];
                for (CrossingId c = 0; c < n; ++c) {
                    const UnitMono& um = st.wt[c][(int)ls[c]][(int)smoothing_of(s, c)];
                    unit += um.unit;
                    for (int i = 0; i < kNumVars; ++i) m.e[i] += um.m.e[i];
                }
                bucket_add(b, dpow, m, unit);
            }
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> ths;
        for (int wi = 0; wi < nw; ++wi) ths.emplace_back(run, wi);
        for (auto& t : ths) t.join();
    }
    Buckets out;
    for (auto& p : parts) bucket_merge(out, std::move(p));
    return out;
}

}  // namespace

LaurentPoly double_bracket(const Diagram& d, const AlexanderState& t, SmoothingState s,
                           const WeightScheme& w) {
    if (d.ambient().kind != AmbientKind::Annulus)
        throw DiagramError("double_bracket: annulus mode required");
    ResolvedCircles rc = resolve(d, s);
    classify_circles(d, rc);
    int ncore = 0;
    for (auto& c : rc.circles)
        if (c.kind == CircleKind::AnnulusCore) ++ncore;
    int ncontr = rc.count() - ncore;
    UnitMono prod;
    for (CrossingId c = 0; c < d.num_crossings(); ++c)
        prod = prod.mul(w.weight(d.crossings()[c].sign, d.corner_label(t.dots[c]),
                                 smoothing_of(s, c)));
    LaurentPoly r = prod.poly() * WeightScheme::d_double().pow(ncontr);
    return r * LaurentPoly::mono(GaussianInt(1), make_mono({{Var::H, ncore}}));
}

LaurentPoly unnormalized_double_sum(const Diagram& d, const WeightScheme& w, int workers) {
    if (d.ambient().kind != AmbientKind::Annulus)
        throw DiagramError("double sum: annulus mode required");
    StateTables st = build_tables(d, w);
    auto per = [&](SmoothingState, const ResolvedCircles& rc)
        -> std::tuple<std::pair<Monomial, int>, int, bool> {
        int ncore = 0;
        for (auto& c : rc.circles)
            if (c.kind == CircleKind::AnnulusCore) ++ncore;
        return {{make_mono({{Var::H, ncore}}), 0}, rc.count() - ncore, true};
    };
    Buckets b = double_sum(d, st, workers, per);
    return bucket_total(b, WeightScheme::d_double());
}

InvariantResult w_poly(const Diagram& d, const WeightScheme& w, const InvariantOptions& opt) {
    InvariantResult res;
    res.mode = opt.h_mode == HMode::Forget ? "classical" : "annulus";
    res.writhe = d.writhe();
    res.state_count_s = 1ULL << d.num_crossings();
    StateTables st = build_tables(d, w);
    res.state_count_t = (long)st.states.size();
    auto per = [&](SmoothingState, const ResolvedCircles& rc)
        -> std::tuple<std::pair<Monomial, int>, int, bool> {
        int ncore = 0;
        for (auto& c : rc.circles)
            if (c.kind == CircleKind::AnnulusCore) ++ncore;
        return {{make_mono({{Var::H, ncore}}), 0}, rc.count() - ncore, true};
    };
    Buckets b = double_sum(d, st, opt.workers, per);
    LaurentPoly total = bucket_total(b, WeightScheme::d_double());
    total = total * LaurentPoly::mono(GaussianInt(1), writhe_norm(res.writhe));
    if (opt.h_mode == HMode::Forget) {
        for (auto& [m, c] : total.terms)
            if (m.exp(Var::H) != 1)
                throw HLinearityError(
                    "W is not linear in h (diagram not in meridian position); term " +
                    LaurentPoly::mono(c, m).str());
        total = total.substitute(Var::H, LaurentPoly::one());
    }
    if (opt.set_z1) total = total.substitute(Var::Z, LaurentPoly::one());
    res.value = total;
    return res;
}

InvariantResult wh_poly(const Diagram& d, const WeightScheme& w, const InvariantOptions& opt) {
    if (d.ambient().kind != AmbientKind::Torus)
        throw DiagramError("wh_poly: torus mode required");
    InvariantResult res;
    res.mode = "torus";
    res.writhe = d.writhe();
    res.state_count_s = 1ULL << d.num_crossings();
    StateTables st = build_tables(d, w);
    res.state_count_t = (long)st.states.size();
    if (st.states.empty()) {
        res.value = LaurentPoly::zero();
        return res;
    }
    int n = d.num_crossings();
    if (n > 62) throw DiagramError("too many crossings for smoothing enumeration");
    unsigned long long total = 1ULL << n;
    int nw = pick_workers(opt.workers, total * st.states.size());
    std::vector<Buckets> parts(nw);
    auto run = [&](int wi) {
        Buckets& b = parts[wi];
        for (SmoothingState s = wi; s < total; s += nw) {
            ResolvedCircles rc = resolve(d, s);
            classify_circles(d, rc);
            int ncontr = 0;
            long cm = 0, cn = 0;
            int snc = 0;  // number of (parallel) non-contractible circles
            for (auto& c : rc.circles) {
                if (c.kind == CircleKind::Contractible) {
                    ++ncontr;
                } else {
                    if (snc && (cm != c.cls_m || cn != c.cls_n))
                        throw DiagramError("non-contractible circles not parallel");
                    cm = c.cls_m;
                    cn = c.cls_n;
                    ++snc;
                }
            }
            for (size_t ti = 0; ti < st.states.size(); ++ti) {
                int unit = 0;
                Monomial m;
                const auto& ls = st.labels[ti];
                for (CrossingId c = 0; c < n; ++c) {
                    const UnitMono& um = st.wt[c][(int)ls[c]][(int)smoothing_of(s, c)];
                    unit += um.unit;
                    for (int i = 0; i < kNumVars; ++i) m.e[i] += um.m.e[i];
                }
                if (snc) {
                    // common weight of the non-contractible circles
                    std::vector<int> bal(rc.count(), 0);
                    for (CrossingId c = 0; c < n; ++c) {
                        int k = st.states[ti].dots[c].k;
                        for (auto& site : rc.arcs[c])
                            if (site.corner_k == k) bal[site.circle] += site.dot_left ? 1 : -1;
                    }
                    int v = -1;
                    for (int i = 0; i < rc.count(); ++i) {
                        if (rc.circles[i].kind == CircleKind::Contractible) continue;
                        int vi = std::abs(bal[i]);
                        if (v >= 0 && vi != v)
                            throw DiagramError("non-contractible circle weights differ");
                        v = vi;
                    }
                    m.set(Var::T, m.exp(Var::T) + v);
                    m = m * class_mono(cm, cn, snc);
                }
                bucket_add(b, ncontr, m, unit);
            }
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> ths;
        for (int wi = 0; wi < nw; ++wi) ths.emplace_back(run, wi);
        for (auto& t : ths) t.join();
    }
    Buckets b;
    for (auto& p : parts) bucket_merge(b, std::move(p));
    LaurentPoly tot = bucket_total(b, WeightScheme::d_double());
    tot = tot * LaurentPoly::mono(GaussianInt(1), writhe_norm(res.writhe));
    if (opt.set_z1) tot = tot.substitute(Var::Z, LaurentPoly::one());
    res.value = tot;
    return res;
}

LaurentPoly alexander_state_poly(const Diagram& d, const WeightScheme& w) {
    LaurentPoly total;
    for (auto& t : enumerate_alexander_states(d, star_faces(d))) {
        UnitMono prod;
        for (CrossingId c = 0; c < d.num_crossings(); ++c)
            prod = prod.mul(w.alex_weight(d.crossings()[c].sign, d.corner_label(t.dots[c])));
        total = total + prod.poly();
    }
    return total;
}

LaurentPoly jones_poly(const Diagram& d) {
    int n = d.num_crossings();
    if (n > 62) throw DiagramError("too many crossings for smoothing enumeration");
    Buckets b;
    for (SmoothingState s = 0; s < (1ULL << n); ++s) {
        ResolvedCircles rc = resolve(d, s);
        int nb = (int)
#ifdef _MSC_VER
            __popcnt64(s);
#else
            __builtin_popcountll(s);
#endif
        bucket_add(b, rc.count() - 1, make_mono({{Var::A, n - 2 * nb}}), 0);
    }
    LaurentPoly total = bucket_total(b, WeightScheme::d_bracket());
    int w = d.writhe();
    GaussianInt sign = (w % 2 == 0) ? GaussianInt(1) : GaussianInt(-1);
    return total * LaurentPoly::mono(sign, make_mono({{Var::A, -3 * w}}));
}

}  // namespace wsum
