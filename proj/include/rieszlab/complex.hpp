#pragma once

#include "rieszlab/real.hpp"

namespace rieszlab {

// Complex value on top of Real. Only the operations the evaluators need.
struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Real& r) : re(r), im(Real(r.prec())) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    std::string str() const { return re.str() + (im.sign() < 0 ? " - " : " + ") + abs(im).str() + "i"; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
inline Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
inline Complex operator+(const Real& a, const Complex& b) { return {a + b.re, b.im}; }
inline Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Real& a, const Complex& b) { return b * a; }
inline Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }

inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex exp(const Complex& a) {
    Real e = exp(a.re);
    Real s(a.im.prec()), c(a.im.prec());
    sin_cos(s, c, a.im);
    return {e * c, e * s};
}

// Principal branch: log|z| + i arg z, arg in (-pi, pi].
inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

inline Complex pow(const Complex& a, const Complex& b) { return exp(b * log(a)); }

// exp(w * log(x)) for real x > 0: x^w without branch ambiguity.
inline Complex pow_real_base(const Real& x, const Complex& w) {
    Real lx = log(x);
    return exp(Complex{w.re * lx, w.im * lx});
}

inline Complex sin(const Complex& a) {
    Real s(a.prec()), c(a.prec());
    sin_cos(s, c, a.re);
    return {s * cosh(a.im), c * sinh(a.im)};
}

inline Complex cosh(const Complex& a) {
    Real s(a.prec()), c(a.prec());
    sin_cos(s, c, a.im);
    return {cosh(a.re) * c, sinh(a.re) * s};
}

} // namespace rieszlab
