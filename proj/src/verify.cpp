#include "wsum/verify.hpp"

#include <sstream>

#include "json.hpp"
#include "wsum/oracles.hpp"

namespace wsum {

std::string InvarianceReport::json() const {
    nlohmann::json j;
    j["diagram"] = diagram_id;
    j["moves_requested"] = moves_requested;
    j["moves_applied"] = moves_applied;
    j["verdict"] = invariant() ? "invariant" : "violation";
    if (!invariant()) j["violation_step"] = violation_step;
    j["moves"] = move_log;
    return j.dump();
}

InvarianceReport check_invariance(const Diagram& d, int move_count, std::uint64_t seed,
                                  WhichInvariant which, const WeightScheme& w,
                                  int max_crossings, const std::string& id) {
    InvarianceReport rep;
    rep.diagram_id = id;
    rep.moves_requested = move_count;
    auto value_of = [&](const Diagram& dd) {
        InvariantOptions opt;
        return which == WhichInvariant::W ? w_poly(dd, w, opt).value : wh_poly(dd, w, opt).value;
    };
    LaurentPoly base = value_of(d);
    rep.value = base;
    MoveSequence seq = random_move_sequence(d, move_count, seed, max_crossings);
    rep.moves_applied = (int)seq.moves.size();
    for (size_t i = 0; i < seq.moves.size(); ++i) {
        rep.move_log.push_back(seq.moves[i].str());
        LaurentPoly v = value_of(seq.steps[i]);
        if (v != base) {
            rep.violation_step = (int)i;
            return rep;
        }
    }
    return rep;
}

std::string FactorizationReport::json() const {
    nlohmann::json j;
    j["diagram"] = diagram_id;
    j["rank"] = rank;
    j["factored"] = factored;
    if (factored) {
        j["H"] = h_factor.str();
        j["P"] = p_factor.str();
    }
    if (alexander_checked) {
        j["alexander_match"] = alexander_match;
        j["alexander_unit"] = alexander_unit;
    }
    return j.dump();
}

FactorizationReport rank1_factorization(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("rank1_factorization: zero polynomial");
    FactorizationReport rep;
    rep.w_value = p;
    ExponentMatrix m = ExponentMatrix::from_poly(p);
    rep.rank = m.rank();
    rep.factored = rep.rank == 1;
    if (!rep.factored) return rep;

    // pivot at the first nonzero entry
    int r0 = m.rows.begin()->first;
    int s0 = m.rows.begin()->second.begin()->first;
    // H from the pivot column, divided by its Gaussian content
    std::map<int, GaussianInt> column;
    for (auto& [r, row] : m.rows) {
        auto it = row.find(s0);
        if (it != row.end()) column[r] = it->second;
    }
    GaussianInt g;
    for (auto& [r, c] : column) g = g.is_zero() ? c : ggcd(g, c);
    // canonicalize the content so the lowest H coefficient points into the
    // first quadrant of Z[i]
    GaussianInt lead = gdiv_exact(column.begin()->second, g);
    for (int k = 0; k < 4; ++k) {
        GaussianInt cand = lead * GaussianInt::unit_pow_i(k);
        if (cand.re > 0 || (cand.re == 0 && cand.im > 0)) {
            g = g * GaussianInt::unit_pow_i((4 - k) & 3);
            break;
        }
    }
    LaurentPoly H;
    for (auto& [r, c] : column)
        H.add_term(make_mono({{Var::X, (s0 + r) / 2}, {Var::Y, (s0 - r) / 2}}),
                   gdiv_exact(c, g));
    GaussianInt h0 = gdiv_exact(column.at(r0), g);
    LaurentPoly P;
    for (auto& [s, c] : m.rows.at(r0)) {
        if ((s - s0) % 2 != 0)
            throw std::domain_error("rank1_factorization: parity mismatch in factors");
        P.add_term(make_mono({{Var::X, (s - s0) / 2}, {Var::Y, (s - s0) / 2}}),
                   gdiv_exact(c, h0));
    }
    if (H * P != p) throw std::domain_error("rank1_factorization: reconstruction failed");
    rep.h_factor = H;
    rep.p_factor = P;
    return rep;
}

FactorizationReport conjecture_check(const Diagram& d, const WeightScheme& w,
                                     const std::string& id) {
    InvariantOptions opt;
    opt.set_z1 = true;
    opt.h_mode = HMode::Forget;
    LaurentPoly W = w_poly(d, w, opt).value;
    FactorizationReport rep;
    if (W.is_zero()) {
        rep.diagram_id = id;
        rep.rank = 0;
        rep.factored = false;
        return rep;
    }
    rep = rank1_factorization(W);
    rep.diagram_id = id;
    if (!rep.factored) return rep;
    rep.alexander_checked = true;
    // H(x, i x^-1) versus Delta(x^4)
    LaurentPoly hsub = rep.h_factor.substitute(
        Var::Y, LaurentPoly::mono(GaussianInt(0, 1), make_mono({{Var::X, -1}})));
    LaurentPoly det = alexander_det_oracle(d);
    LaurentPoly dx4 =
        det.substitute(Var::T, LaurentPoly::mono(GaussianInt(1), make_mono({{Var::X, 4}})));
    auto r = unit_monomial_ratio(hsub, dx4);
    rep.alexander_match = (bool)r;
    if (r) {
        std::ostringstream os;
        os << "i^" << r->first << " * "
           << LaurentPoly::mono(GaussianInt(1), r->second).str();
        rep.alexander_unit = os.str();
    }
    return rep;
}

}  // namespace wsum
