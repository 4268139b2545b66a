#include "wsum/weights.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace wsum {

UnitMono WeightScheme::weight(int sign, Quadrant q, Smoothing s) const {
    if (sign > 0) return cell[(int)q][(int)s];
    Smoothing sw = s == Smoothing::A ? Smoothing::B : Smoothing::A;
    return cell[(int)swap_oi_ui(q)][(int)sw].inv();
}

UnitMono WeightScheme::alex_weight(int sign, Quadrant q) const {
    if (sign > 0) return alex[(int)q];
    return alex[(int)swap_oi_ui(q)].inv();
}

LaurentPoly WeightScheme::d_double() {
    LaurentPoly d;
    d.add_term(make_mono({{Var::X, 1}, {Var::Y, 1}, {Var::Z, -2}}), GaussianInt(0, 1));
    d.add_term(make_mono({{Var::X, -1}, {Var::Y, -1}, {Var::Z, 2}}), GaussianInt(0, -1));
    return d;
}

LaurentPoly WeightScheme::d_bracket() {
    LaurentPoly d;
    d.add_term(make_mono({{Var::A, 2}}), GaussianInt(-1));
    d.add_term(make_mono({{Var::A, -2}}), GaussianInt(-1));
    return d;
}

std::string WeightScheme::builtin_text() {
    return
        "# weight scheme fixture, version 1\n"
        "# double model cells, positive crossing: cell <quadrant> <smoothing> = unit * monomial\n"
        "cell IN A = 1 * x^2\n"
        "cell IN B = i * x^1 * y^-1 * z^2\n"
        "cell OUT A = 1 * y^2\n"
        "cell OUT B = i * x^-1 * y^1 * z^2\n"
        "cell OI A = -i * x^1 * y^1\n"
        "cell OI B = 1 * z^2\n"
        "cell UI A = -i * x^1 * y^1\n"
        "cell UI B = 1 * z^2\n"
        "# Alexander model cells, positive crossing (internal variable, squares to the\n"
        "# Alexander variable)\n"
        "alex IN = 1 * t^1\n"
        "alex OUT = -1 * t^-1\n"
        "alex OI = 1\n"
        "alex UI = 1\n";
}

const WeightScheme& WeightScheme::builtin() {
    static WeightScheme w = load_text(builtin_text());
    return w;
}

namespace {

UnitMono parse_unit_mono(const std::string& rhs, int lineno) {
    std::istringstream is(rhs);
    std::string tok;
    UnitMono um;
    bool have_unit = false;
    while (is >> tok) {
        if (tok == "*") continue;
        if (!have_unit) {
            if (tok == "1") um.unit = 0;
            else if (tok == "i") um.unit = 1;
            else if (tok == "-1") um.unit = 2;
            else if (tok == "-i") um.unit = 3;
            else
                throw std::runtime_error("weights line " + std::to_string(lineno) +
                                         ": coefficient must be a unit (1, -1, i, -i)");
            have_unit = true;
            continue;
        }
        auto caret = tok.find('^');
        std::string vn = caret == std::string::npos ? tok : tok.substr(0, caret);
        int ex = 1;
        if (caret != std::string::npos) ex = std::stoi(tok.substr(caret + 1));
        int vi = -1;
        for (int i = 0; i < kNumVars; ++i)
            if (vn == kVarNames[i]) vi = i;
        if (vi < 0)
            throw std::runtime_error("weights line " + std::to_string(lineno) +
                                     ": unknown variable '" + vn + "'");
        um.m.e[vi] += ex;
    }
    if (!have_unit)
        throw std::runtime_error("weights line " + std::to_string(lineno) + ": empty cell");
    return um;
}

}  // namespace

WeightScheme WeightScheme::load_text(const std::string& text) {
    WeightScheme w;
    std::array<std::array<bool, 2>, 4> got_cell{};
    std::array<bool, 4> got_alex{};
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "cell") {
            std::string qn, sn, eq;
            ls >> qn >> sn >> eq;
            auto q = quadrant_from_name(qn);
            if (!q || (sn != "A" && sn != "B") || eq != "=")
                throw std::runtime_error("weights line " + std::to_string(lineno) +
                                         ": expected cell <quadrant> <A|B> = ...");
            std::string rhs;
            std::getline(ls, rhs);
            int si = sn == "A" ? 0 : 1;
            w.cell[(int)*q][si] = parse_unit_mono(rhs, lineno);
            got_cell[(int)*q][si] = true;
        } else if (kind == "alex") {
            std::string qn, eq;
            ls >> qn >> eq;
            auto q = quadrant_from_name(qn);
            if (!q || eq != "=")
                throw std::runtime_error("weights line " + std::to_string(lineno) +
                                         ": expected alex <quadrant> = ...");
            std::string rhs;
            std::getline(ls, rhs);
            w.alex[(int)*q] = parse_unit_mono(rhs, lineno);
            got_alex[(int)*q] = true;
        } else {
            throw std::runtime_error("weights line " + std::to_string(lineno) +
                                     ": unknown directive '" + kind + "'");
        }
    }
    for (int q = 0; q < 4; ++q) {
        for (int s = 0; s < 2; ++s)
            if (!got_cell[q][s])
                throw std::runtime_error(std::string("weights: missing cell ") +
                                         quadrant_name((Quadrant)q) + " " + (s ? "B" : "A"));
        if (!got_alex[q])
            throw std::runtime_error(std::string("weights: missing alex cell ") +
                                     quadrant_name((Quadrant)q));
    }
    w.validate();
    return w;
}

WeightScheme WeightScheme::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open weights fixture " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_text(ss.str());
}

void WeightScheme::validate() const {
    for (int q = 0; q < 4; ++q)
        for (int s = 0; s < 2; ++s)
            if (!cell[q][s].m.cls.empty())
                throw std::runtime_error("weights: cell carries a homology class");
}

}  // namespace wsum
