#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace rieszlab {

// Arbitrary-precision real backed by MPFR. Every value carries its own
// binary precision; binary operations round to the wider of the two operand
// precisions. There is no ambient default precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_ui(v_, x, MPFR_RNDN); }
    Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
    Real(const mpz_class& x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t prec);

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Decimal string with the given number of significant digits.
    std::string str(int digits) const;
    // Enough digits to round-trip at this precision.
    std::string str() const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Base-2 exponent of the leading bit (0 for zero).
    long exponent2() const { return mpfr_zero_p(v_) ? 0 : static_cast<long>(mpfr_get_exp(v_)); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
    Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
    Real& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
    Real& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }

    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real ln2(mpfr_prec_t prec) { Real r(prec); mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
    static Real nan(mpfr_prec_t prec) { Real r(prec); mpfr_set_nan(r.v_); return r; }
    // 2^e at minimal storage cost.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r;
    }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    mpfr_t v_;
};

inline mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

#define RIESZLAB_REAL_BINOP(op, fn)                                              \
    inline Real operator op(const Real& a, const Real& b) {                     \
        Real r(join_prec(a, b)); fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; \
    }
RIESZLAB_REAL_BINOP(+, mpfr_add)
RIESZLAB_REAL_BINOP(-, mpfr_sub)
RIESZLAB_REAL_BINOP(*, mpfr_mul)
RIESZLAB_REAL_BINOP(/, mpfr_div)
#undef RIESZLAB_REAL_BINOP

inline Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define RIESZLAB_REAL_FN(name, fn)                                             \
    inline Real name(const Real& a) {                                          \
        Real r(a.prec()); fn(r.raw(), a.raw(), MPFR_RNDN); return r;           \
    }
RIESZLAB_REAL_FN(abs, mpfr_abs)
RIESZLAB_REAL_FN(sqrt, mpfr_sqrt)
RIESZLAB_REAL_FN(exp, mpfr_exp)
RIESZLAB_REAL_FN(expm1, mpfr_expm1)
RIESZLAB_REAL_FN(log, mpfr_log)
RIESZLAB_REAL_FN(log1p, mpfr_log1p)
RIESZLAB_REAL_FN(sin, mpfr_sin)
RIESZLAB_REAL_FN(cos, mpfr_cos)
RIESZLAB_REAL_FN(tan, mpfr_tan)
RIESZLAB_REAL_FN(sinh, mpfr_sinh)
RIESZLAB_REAL_FN(cosh, mpfr_cosh)
RIESZLAB_REAL_FN(atan, mpfr_atan)
RIESZLAB_REAL_FN(gamma_real, mpfr_gamma)
RIESZLAB_REAL_FN(lngamma_real, mpfr_lngamma)
// Real-argument zeta straight from MPFR; the library's reference method for
// complex arguments lives in zeta.hpp.
RIESZLAB_REAL_FN(zeta_mpfr, mpfr_zeta)
#undef RIESZLAB_REAL_FN

inline Real floor(const Real& a) { Real r(a.prec()); mpfr_floor(r.raw(), a.raw()); return r; }
inline Real ceil(const Real& a) { Real r(a.prec()); mpfr_ceil(r.raw(), a.raw()); return r; }
inline Real atan2(const Real& y, const Real& x) {
    Real r(join_prec(y, x)); mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(join_prec(y, x)); mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(join_prec(a, b)); mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, long b) {
    Real r(a.prec()); mpfr_pow_si(r.raw(), a.raw(), b, MPFR_RNDN); return r;
}
inline void sin_cos(Real& s, Real& c, const Real& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

inline Real zeta_ui(unsigned long n, mpfr_prec_t prec) {
    Real r(prec); mpfr_zeta_ui(r.raw(), n, MPFR_RNDN); return r;
}
inline Real factorial_real(unsigned long n, mpfr_prec_t prec) {
    Real r(prec); mpfr_fac_ui(r.raw(), n, MPFR_RNDN); return r;
}

} // namespace rieszlab
