#include "rieszlab/zeta.hpp"

#include "rieszlab/errors.hpp"

#include <algorithm>
#include <vector>

namespace rieszlab::zeta {

namespace {

bool is_real_at(const Complex& s) { return s.im.is_zero(); }

bool is_one(const Complex& s) { return s.im.is_zero() && s.re == 1; }

} // namespace

const mpq_class& bernoulli(unsigned m) {
    static std::vector<mpq_class> cache{mpq_class(1), mpq_class(-1, 2)};
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
    while (cache.size() <= m) {
        unsigned n = static_cast<unsigned>(cache.size());
        if (n % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        mpq_class acc(0);
        mpz_class binom;
        for (unsigned j = 0; j < n; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
            acc += mpq_class(binom) * cache[j];
        }
        mpq_class b = -acc / mpq_class(n + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[m];
}

namespace {

// Euler-Maclaurin zeta for Re s >= 0.25 at precision wp, target error 2^-pbits:
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{1-s-2k}
// With derivative = true the d/ds of every piece is accumulated instead.
Complex em_zeta(const Complex& s, mpfr_prec_t wp, long pbits, bool derivative) {
    Complex acc(wp);
    double abs_s = std::max(1.0, abs(s).to_double());
    double tcut = pow(Real(2.0, 64), -pbits).to_double(); // may underflow to 0; fine
    long N = std::max<long>(16, static_cast<long>((abs_s + 0.7 * static_cast<double>(pbits)) / 6.0) + 2);
    const long kMaxN = 1 << 22;

    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        if (N > kMaxN) break;
        Complex sum(wp);
        Complex dsum(wp);
        for (long n = 1; n < N; ++n) {
            Real ln(wp);
            mpfr_log_ui(ln.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
            Complex t = exp(Complex{-(s.re * ln), -(s.im * ln)}); // n^-s
            sum = sum + t;
            if (derivative) dsum = dsum - t * ln;
        }
        Real lnN(wp);
        mpfr_log_ui(lnN.raw(), static_cast<unsigned long>(N), MPFR_RNDN);
        Complex Npow = exp(Complex{-(s.re * lnN), -(s.im * lnN)}); // N^-s
        Complex sm1 = s - Real(1l, wp);
        Complex NPow1 = Npow * Real(static_cast<long>(N), wp); // N^{1-s}

        if (!derivative) {
            sum = sum + NPow1 / sm1 + Npow * Real(0.5, wp);
        } else {
            // d/ds [N^{1-s}/(s-1)] = -N^{1-s} (lnN/(s-1) + 1/(s-1)^2)
            Complex inv = Real(1l, wp) / sm1;
            dsum = dsum - NPow1 * (inv * lnN + inv * inv);
            dsum = dsum - Npow * (lnN * Real(0.5, wp));
        }

        // Bernoulli tail. poch = (s)_{2k-1}; pochd is its s-derivative,
        // carried by the product rule so zeros of the factors are harmless.
        Complex poch = s;                 // k = 1: (s)_1 = s
        Complex pochd = Complex(Real(1l, wp)); // d/ds (s)_1
        Complex Nfac = Npow / Real(static_cast<long>(N), wp); // N^{-s-1}
        Real invN2 = Real(1l, wp) / Real(static_cast<long>(N * N), wp);
        bool converged = false;
        Real prev_mag(wp);
        bool have_prev = false;
        long kmax = pbits; // far more than ever used; loop exits on smallness
        for (long k = 1; k <= kmax; ++k) {
            const mpq_class& b2k = bernoulli(static_cast<unsigned>(2 * k));
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
            Real coef = Real(b2k.get_num(), wp) / Real(mpq_class(b2k.get_den() * fact), wp);
            Complex contrib = derivative ? (pochd - poch * lnN) * Nfac * coef
                                         : poch * Nfac * coef;
            Real mag = abs(contrib);
            if (derivative) dsum = dsum + contrib; else sum = sum + contrib;
            // Stop once the term is negligible against the target.
            Real scale = max(abs(derivative ? dsum : sum), Real(1.0, wp));
            if (mag.to_double() < tcut || mag < scale * Real(2.0, wp) * Real::pow2(-pbits, wp)) {
                converged = true;
                break;
            }
            if (have_prev && mag > prev_mag) break; // diverging: N too small
            prev_mag = mag;
            have_prev = true;
            // advance (s)_{2k-1} -> (s)_{2k+1}, N^{-s-2k+1} -> N^{-s-2k-1}
            Complex f1 = s + Real(2 * k - 1, wp);
            Complex f2 = s + Real(2 * k, wp);
            pochd = pochd * (f1 * f2) + poch * (f1 + f2);
            poch = poch * f1 * f2;
            Nfac = Nfac * invN2;
        }
        if (converged) return derivative ? dsum : sum;
    }
    throw ConvergenceError("euler-maclaurin zeta did not converge");
}

// chi(s) such that zeta(s) = chi(s) zeta(1-s):
//   chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s)
Complex reflection_chi(const Complex& s, mpfr_prec_t wp, const PrecisionConfig& cfg) {
    Real pi = Real::pi(wp);
    Complex two_s = exp(s * log(Real(2l, wp)));
    Complex pi_sm1 = exp((s - Real(1l, wp)) * log(pi));
    Complex sinf = sin(s * (pi / 2));
    PrecisionConfig gcfg = cfg;
    gcfg.bits = wp;
    Complex gam = exp(log_gamma(Real(1l, wp) - s, gcfg));
    return two_s * pi_sm1 * sinf * gam;
}

Complex zeta_impl(const Complex& s, const PrecisionConfig& cfg, long extra_bits) {
    mpfr_prec_t wp = cfg.work_bits(96 + extra_bits);
    long pbits = cfg.bits + 64 + extra_bits;
    // raise operand precision so intermediates don't truncate
    Complex sw{Real(0.0, wp) + s.re, Real(0.0, wp) + s.im};

    if (sw.re.to_double() >= 0.25) return em_zeta(sw, wp, pbits, false);

    // Reflect: zeta(s) = chi(s) zeta(1-s). Cancellation near trivial zeros is
    // carried by sin(pi s/2); MPFR's unbounded exponent range keeps the
    // intermediate magnitudes exact.
    Complex z1 = Real(1l, wp) - sw;
    Complex zeta1 = em_zeta(z1, wp, pbits, false);
    return reflection_chi(sw, wp, cfg) * zeta1;
}

} // namespace

Complex zeta(const Complex& s, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!s.is_finite()) throw UsageError("zeta: non-finite argument");
    if (is_one(s)) throw PoleError("zeta: pole at s = 1");
    return zeta_impl(s, cfg, 0);
}

Real zeta_real(const Real& s, const PrecisionConfig& cfg) {
    cfg.validate();
    if (s == 1) throw PoleError("zeta: pole at s = 1");
    Real sw = Real(0.0, cfg.work_bits(32)) + s;
    return zeta_mpfr(sw);
}

Complex zeta_prime(const Complex& s, const PrecisionConfig& cfg) {
    cfg.validate();
    if (is_one(s)) throw PoleError("zeta_prime: pole at s = 1");

    // Method 1: differentiated Euler-Maclaurin series. Valid on the whole
    // range used here (the Bernoulli tail supplies the continuation).
    long extra = 0;
    double re = s.re.to_double();
    if (re < 1.0) {
        // cancellation budget for the partial sums at negative Re s
        extra = static_cast<long>((1.0 - re) * 8.0) + 32;
    }
    mpfr_prec_t wp = cfg.work_bits(96 + extra);
    long pbits = cfg.bits + 64;
    Complex sw{Real(0.0, wp) + s.re, Real(0.0, wp) + s.im};
    Complex series = em_zeta(sw, wp, pbits + 32, true);

    // Method 2: central finite difference of zeta with h = 2^-(bits/3).
    // zeta() itself reflects for Re s < 0.25, so the two routes differ.
    long hbits = cfg.bits / 3;
    Real h = Real::pow2(-hbits, wp);
    PrecisionConfig fcfg = cfg;
    fcfg.bits = cfg.bits + hbits + 64 + extra;
    Complex zp = zeta_impl(Complex{sw.re + h, sw.im}, fcfg, 0);
    Complex zm = zeta_impl(Complex{sw.re - h, sw.im}, fcfg, 0);
    Complex fd = (zp - zm) / (h * 2);

    Real dist = abs(series - fd);
    Real budget = Real(10.0, wp) * cfg.abs_tol_real(wp);
    // allow the h^2 truncation term of the difference quotient
    budget += (abs(series) + Real(1l, wp)) * Real::pow2(-2 * hbits + 8, wp) + Real::pow2(-cfg.bits, wp);
    if (dist > budget)
        throw ConsistencyError("zeta_prime: series and finite-difference methods disagree by " +
                               dist.str(6));
    return series;
}

Real inv_zeta_prime_trivial(unsigned n, const PrecisionConfig& cfg) {
    cfg.validate();
    if (n < 1) throw UsageError("inv_zeta_prime_trivial: n must be >= 1");
    mpfr_prec_t wp = cfg.work_bits(64);
    Real pi2n = pow(Real::pi(wp), static_cast<long>(2 * n));
    Real num = pi2n * Real::pow2(static_cast<long>(2 * n + 1), wp);
    Real den = zeta_ui(2 * n + 1, wp) * factorial_real(2 * n, wp);
    Real r = num / den;
    return (n % 2 == 0) ? r : -r;
}

Complex log_gamma(const Complex& s, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!s.is_finite()) throw UsageError("log_gamma: non-finite argument");
    if (s.im.is_zero() && s.re.is_integer() && s.re <= 0)
        throw PoleError("log_gamma: pole at nonpositive integer " + s.re.str(6));

    long pbits = cfg.bits + 48;
    mpfr_prec_t wp = cfg.work_bits(96);
    Complex z{Real(0.0, wp) + s.re, Real(0.0, wp) + s.im};

    // Shift right until Stirling converges: need |z| >~ pbits * ln2 / (2 pi).
    double r0 = std::max(12.0, 0.12 * static_cast<double>(pbits));
    Complex shift_log(wp);
    while (z.re.to_double() < r0 && abs(z).to_double() < r0 * 1.25) {
        shift_log = shift_log + log(z);
        z = z + Real(1l, wp);
    }

    // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k(2k-1) z^{2k-1})
    Complex lz = log(z);
    Complex acc = (z - Real(0.5, wp)) * lz - z + (log(Real::pi(wp) * 2)) * Real(0.5, wp);
    Complex zinv = Real(1l, wp) / z;
    Complex zinv2 = zinv * zinv;
    Complex zpow = zinv;
    Real prev_mag(wp);
    bool have_prev = false, converged = false;
    for (long k = 1; k <= pbits; ++k) {
        const mpq_class& b = bernoulli(static_cast<unsigned>(2 * k));
        mpq_class coef = b / mpq_class(2 * k * (2 * k - 1));
        Complex term = zpow * Real(coef, wp);
        Real mag = abs(term);
        if (have_prev && mag > prev_mag) break;
        acc = acc + term;
        Real scale = max(abs(acc), Real(1.0, wp));
        if (mag < scale * Real::pow2(-pbits, wp)) {
            converged = true;
            break;
        }
        prev_mag = mag;
        have_prev = true;
        zpow = zpow * zinv2;
    }
    if (!converged) throw ConvergenceError("log_gamma: Stirling series stalled");
    return acc - shift_log;
}

} // namespace rieszlab::zeta
