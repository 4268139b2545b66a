#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wsum {

// Exact Gaussian integer a + b*i with arbitrary-precision parts.
struct GaussianInt {
    mpz_class re, im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    mpz_class norm() const { return re * re + im * im; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt conj() const { return {re, -im}; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }
    bool operator<(const GaussianInt& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    // i^k for k mod 4
    static GaussianInt unit_pow_i(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    // exponent k with *this == i^k, or -1 if not a unit
    int unit_log_i() const {
        if (re == 1 && im == 0) return 0;
        if (re == 0 && im == 1) return 1;
        if (re == -1 && im == 0) return 2;
        if (re == 0 && im == -1) return 3;
        return -1;
    }

    std::string str() const {
        return "(" + re.get_str() + "," + im.get_str() + ")";
    }
};

// Rounded quotient for the Euclidean step: nearest integer to n/d, d > 0.
inline mpz_class round_div(const mpz_class& n, const mpz_class& d) {
    mpz_class q;
    mpz_class two_n = 2 * n + d;
    mpz_fdiv_q(q.get_mpz_t(), two_n.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
    return q;
}

// Exact quotient; throws if b does not divide a in Z[i].
inline GaussianInt gdiv_exact(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("GaussianInt division by zero");
    mpz_class n = b.norm();
    GaussianInt num = a * b.conj();
    if (num.re % n != 0 || num.im % n != 0)
        throw std::domain_error("GaussianInt non-exact division");
    return {num.re / n, num.im / n};
}

inline GaussianInt ggcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        mpz_class n = b.norm();
        GaussianInt num = a * b.conj();
        GaussianInt q(round_div(num.re, n), round_div(num.im, n));
        GaussianInt r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace wsum
