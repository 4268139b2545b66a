#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wsum/gaussian.hpp"

namespace wsum {

enum class Var : int { X = 0, Y = 1, Z = 2, H = 3, A = 4, T = 5 };
constexpr int kNumVars = 6;
constexpr const char* kVarNames[kNumVars] = {"x", "y", "z", "h", "A", "t"};

// Homology class symbol |m*a + n*b|, canonical sign: first nonzero coordinate > 0.
struct HomClass {
    long m = 0, n = 0;

    static std::optional<HomClass> canonical(long m, long n) {
        if (m == 0 && n == 0) return std::nullopt;
        if (m < 0 || (m == 0 && n < 0)) { m = -m; n = -n; }
        return HomClass{m, n};
    }
    bool operator==(const HomClass& o) const { return m == o.m && n == o.n; }
    bool operator<(const HomClass& o) const { return m != o.m ? m < o.m : n < o.n; }
    std::string str() const;
};

// Canonical monomial: variable exponents plus formal homology-class factors.
struct Monomial {
    std::array<int, kNumVars> e{};                      // exponents, absent = 0
    std::vector<std::pair<HomClass, int>> cls;          // sorted, nonzero exponents

    int exp(Var v) const { return e[static_cast<int>(v)]; }
    void set(Var v, int k) { e[static_cast<int>(v)] = k; }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;

    bool operator==(const Monomial& o) const { return e == o.e && cls == o.cls; }
    bool operator<(const Monomial& o) const {
        if (e != o.e) return e < o.e;
        return cls < o.cls;
    }
};

Monomial make_mono(std::initializer_list<std::pair<Var, int>> exps);
Monomial class_mono(long m, long n, int exp);

// Laurent polynomial over Z[i] in x,y,z,h,A,t and homology-class symbols.
// Invariant: no stored coefficient is zero; map order is the canonical term order.
class LaurentPoly {
  public:
    std::map<Monomial, GaussianInt> terms;

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return constant(GaussianInt(1)); }
    static LaurentPoly constant(const GaussianInt& c);
    static LaurentPoly mono(const GaussianInt& c, const Monomial& m);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const GaussianInt& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const GaussianInt& c) const;
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int n) const;  // n >= 0, or any n for single invertible monomials

    // Substitute var -> target, a single monomial with unit coefficient (or 1).
    // For general targets, negative exponents of var are an error.
    LaurentPoly substitute(Var v, const LaurentPoly& target) const;
    LaurentPoly invert_xy() const;

    std::optional<int> homogeneous_degree(const std::set<Var>& vars) const;

    // Divide by unit * monomial (exact).
    LaurentPoly div_unit_mono(const GaussianInt& unit, const Monomial& m) const;

    std::string str() const;
    std::string json() const;  // term-list form
};

// unit monomial comparison: p == (i^k * m) * q for some k, monomial m?
// On success returns {k, m}.
std::optional<std::pair<int, Monomial>> unit_monomial_ratio(const LaurentPoly& p,
                                                            const LaurentPoly& q);

// Sparse re-encoding of a polynomial in x,y only: entry (a-b, a+b) = coeff of x^a y^b.
struct ExponentMatrix {
    std::map<int, std::map<int, GaussianInt>> rows;  // row = a-b, col = a+b

    static ExponentMatrix from_poly(const LaurentPoly& p);  // throws if vars other than x,y
    LaurentPoly to_poly() const;
    int rank() const;  // exact rank over the fraction field of Z[i]
};

}  // namespace wsum
