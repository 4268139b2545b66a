#include "wsum/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace wsum {

std::string HomClass::str() const {
    std::ostringstream os;
    os << "|";
    if (m == 1) os << "a";
    else if (m == -1) os << "-a";
    else if (m != 0) os << m << "a";
    if (n != 0) {
        if (m != 0) os << (n > 0 ? "+" : "-");
        else if (n < 0) os << "-";
        long an = n < 0 ? -n : n;
        if (an != 1) os << an;
        os << "b";
    }
    os << "|";
    return os.str();
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    std::map<HomClass, int> c;
    for (auto& [h, k] : cls) c[h] += k;
    for (auto& [h, k] : o.cls) c[h] += k;
    for (auto& [h, k] : c)
        if (k != 0) r.cls.emplace_back(h, k);
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
    for (auto& [h, k] : cls) r.cls.emplace_back(h, -k);
    return r;
}

Monomial make_mono(std::initializer_list<std::pair<Var, int>> exps) {
    Monomial m;
    for (auto& [v, k] : exps) m.e[static_cast<int>(v)] += k;
    return m;
}

Monomial class_mono(long m, long n, int exp) {
    Monomial r;
    auto c = HomClass::canonical(m, n);
    if (c && exp != 0) r.cls.emplace_back(*c, exp);
    return r;
}

LaurentPoly LaurentPoly::constant(const GaussianInt& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms.emplace(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::mono(const GaussianInt& c, const Monomial& m) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms.emplace(m, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const GaussianInt& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianInt& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (auto& [m, cc] : terms) r.terms.emplace(m, cc * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) {
        if (terms.size() != 1) throw std::domain_error("pow: negative power of a non-monomial");
        auto& [m, c] = *terms.begin();
        int k = c.unit_log_i();
        if (k < 0) throw std::domain_error("pow: negative power needs a unit coefficient");
        LaurentPoly inv = mono(GaussianInt::unit_pow_i(-k), m.inverse());
        return inv.pow(-n);
    }
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& target) const {
    bool invertible_mono = target.terms.size() == 1 &&
                           target.terms.begin()->second.unit_log_i() >= 0;
    LaurentPoly r;
    int vi = static_cast<int>(v);
    for (auto& [m, c] : terms) {
        int k = m.e[vi];
        if (k < 0 && !invertible_mono)
            throw std::domain_error("substitute: non-invertible target with negative exponent");
        Monomial base = m;
        base.e[vi] = 0;
        LaurentPoly t = mono(c, base) * target.pow(k);
        r = r + t;
    }
    return r;
}

LaurentPoly LaurentPoly::invert_xy() const {
    LaurentPoly r;
    for (auto& [m, c] : terms) {
        Monomial mm = m;
        mm.e[0] = -mm.e[0];
        mm.e[1] = -mm.e[1];
        r.terms.emplace(mm, c);
    }
    return r;
}

std::optional<int> LaurentPoly::homogeneous_degree(const std::set<Var>& vars) const {
    std::optional<int> deg;
    for (auto& [m, c] : terms) {
        int d = 0;
        for (Var v : vars) d += m.exp(v);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

LaurentPoly LaurentPoly::div_unit_mono(const GaussianInt& unit, const Monomial& m) const {
    int k = unit.unit_log_i();
    if (k < 0) throw std::domain_error("div_unit_mono: not a unit");
    LaurentPoly inv = mono(GaussianInt::unit_pow_i(-k), m.inverse());
    return *this * inv;
}

std::string LaurentPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] != 0) os << "*" << kVarNames[i] << "^" << m.e[i];
        for (auto& [h, k] : m.cls) {
            os << "*" << h.str();
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string LaurentPoly::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : terms) {
        nlohmann::json t;
        t["re"] = c.re.get_str();
        t["im"] = c.im.get_str();
        nlohmann::json ex = nlohmann::json::object();
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] != 0) ex[kVarNames[i]] = m.e[i];
        t["exps"] = ex;
        if (m.cls.size() == 1 && m.cls[0].second == 1) {
            t["class"] = {m.cls[0].first.m, m.cls[0].first.n};
        } else if (!m.cls.empty()) {
            nlohmann::json cs = nlohmann::json::array();
            for (auto& [h, k] : m.cls) cs.push_back({h.m, h.n, k});
            t["classes"] = cs;
        }
        arr.push_back(t);
    }
    return arr.dump();
}

ExponentMatrix ExponentMatrix::from_poly(const LaurentPoly& p) {
    ExponentMatrix m;
    for (auto& [mo, c] : p.terms) {
        for (int i = 2; i < kNumVars; ++i)
            if (mo.e[i] != 0) throw std::domain_error("exponent_matrix: variable other than x,y");
        if (!mo.cls.empty()) throw std::domain_error("exponent_matrix: homology class present");
        int a = mo.e[0], b = mo.e[1];
        m.rows[a - b][a + b] = c;
    }
    return m;
}

LaurentPoly ExponentMatrix::to_poly() const {
    LaurentPoly p;
    for (auto& [r, row] : rows)
        for (auto& [s, c] : row) {
            // a = (s+r)/2, b = (s-r)/2; parity mismatch cannot arise from from_poly
            if ((s + r) % 2 != 0) throw std::domain_error("exponent_matrix: parity mismatch");
            p.add_term(make_mono({{Var::X, (s + r) / 2}, {Var::Y, (s - r) / 2}}), c);
        }
    return p;
}

int ExponentMatrix::rank() const {
    // fraction-free elimination on a dense copy
    std::vector<int> colset;
    std::map<int, int> colidx;
    for (auto& [r, row] : rows)
        for (auto& [s, c] : row)
            if (!colidx.count(s)) { colidx[s] = (int)colset.size(); colset.push_back(s); }
    size_t nc = colset.size();
    std::vector<std::vector<GaussianInt>> a;
    for (auto& [r, row] : rows) {
        std::vector<GaussianInt> v(nc);
        for (auto& [s, c] : row) v[colidx[s]] = c;
        a.push_back(std::move(v));
    }
    size_t nr = a.size(), rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t piv = rank;
        while (piv < nr && a[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < nr; ++i) {
            if (a[i][col].is_zero()) continue;
            GaussianInt f1 = a[rank][col], f2 = a[i][col];
            for (size_t j = col; j < nc; ++j) a[i][j] = a[i][j] * f1 - a[rank][j] * f2;
        }
        ++rank;
    }
    return (int)rank;
}

std::optional<std::pair<int, Monomial>> unit_monomial_ratio(const LaurentPoly& p,
                                                            const LaurentPoly& q) {
    if (p.is_zero() && q.is_zero()) return std::make_pair(0, Monomial{});
    if (p.is_zero() || q.is_zero() || p.terms.size() != q.terms.size()) return std::nullopt;
    auto& [mp, cp] = *p.terms.begin();
    auto& [mq, cq] = *q.terms.begin();
    Monomial shift = mp * mq.inverse();
    int kp = -1;
    // determine unit from the leading coefficients: cp = i^k * cq
    for (int k = 0; k < 4; ++k)
        if (cp == GaussianInt::unit_pow_i(k) * cq) { kp = k; break; }
    if (kp < 0) return std::nullopt;
    GaussianInt u = GaussianInt::unit_pow_i(kp);
    for (auto& [m, c] : q.terms) {
        auto it = p.terms.find(m * shift);
        if (it == p.terms.end() || it->second != u * c) return std::nullopt;
    }
    return std::make_pair(kp, shift);
}

}  // namespace wsum
