#include "rieszlab/riesz.hpp"

#include "rieszlab/errors.hpp"
#include "rieszlab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rieszlab::riesz {

const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::maclaurin: return "maclaurin";
        case Method::hermite: return "hermite";
        case Method::explicit_formula: return "explicit";
    }
    return "?";
}

namespace {

// zeta(m) for integer m >= 2 at a given precision, memoized.
const Real& zeta_int_cached(unsigned long m, mpfr_prec_t prec) {
    static std::map<std::pair<mpfr_prec_t, unsigned long>, Real> cache;
    auto key = std::make_pair(prec, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, zeta_ui(m, prec)).first;
    return it->second;
}

const Real& inv_zeta_prime_cached(unsigned n, mpfr_prec_t prec) {
    static std::map<std::pair<mpfr_prec_t, unsigned>, Real> cache;
    auto key = std::make_pair(prec, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PrecisionConfig c;
        c.bits = prec;
        it = cache.emplace(key, zeta::inv_zeta_prime_trivial(n, c)).first;
    }
    return it->second;
}

const arith::HermiteNumbers& hermite_cache(std::size_t min_limit) {
    static arith::HermiteNumbers cache;
    if (cache.limit < min_limit || cache.values.empty()) {
        std::size_t grow = std::max<std::size_t>(min_limit, 64);
        cache = arith::hermite_numbers(grow + grow / 2);
    }
    return cache;
}

} // namespace

EvalResult riesz_direct(const Real& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(x > 0l)) throw UsageError("riesz_direct: x must be positive");
    mpfr_prec_t wp = cfg.work_bits(64);
    Real xw = Real(0.0, wp) + x;

    // tail of the value: x * sum_{n>N} x/n^4 <= x^2/(3N^3); guard factor 2
    double xd = xw.to_double();
    double need = std::cbrt(2.0 * xd * xd / (3.0 * cfg.abs_tol));
    std::uint64_t N = static_cast<std::uint64_t>(need) + 2;
    if (N < 8) N = 8;
    if (N > cfg.max_terms)
        throw ResourceError("riesz_direct: needs " + std::to_string(N) +
                            " terms, above max_terms " + std::to_string(cfg.max_terms));
    const arith::MobiusTable& mob = arith::mobius_cache(N);

    Real sum = Real(1l, wp) / zeta_int_cached(2, wp);
    for (std::uint64_t n = 1; n <= N; ++n) {
        int mu = mob.mu(n);
        if (mu == 0) continue;
        Real n2(static_cast<long>(n), wp);
        n2 *= static_cast<long>(n);
        Real t = expm1(-(xw / n2)) / n2;
        if (mu < 0) sum -= t; else sum += t;
    }

    EvalResult r(wp);
    r.value = xw * sum;
    Real Nr(static_cast<long>(N), wp);
    r.abs_error_bound = xw * xw / (Nr * Nr * Nr * 3) + abs(r.value) * Real::pow2(-cfg.bits, wp);
    r.method = Method::direct;
    r.terms_used = static_cast<long>(N);
    return r;
}

EvalResult riesz_maclaurin(const Real& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(x > 0l) && !x.is_zero()) throw UsageError("riesz_maclaurin: x must be >= 0");
    double xd = x.to_double();
    if (static_cast<double>(cfg.bits) < 1.5 * xd + 64.0)
        throw PrecisionError("riesz_maclaurin: needs bits >= 1.5 x + 64 = " +
                             std::to_string(1.5 * xd + 64.0) + ", have " + std::to_string(cfg.bits));

    mpfr_prec_t wp = cfg.work_bits(64);
    Real xw = Real(0.0, wp) + x;
    Real tol = cfg.abs_tol_real(wp) * Real::pow2(-8, wp);

    Real sum(wp), term(wp), peak(wp);
    Real pw(1.0, wp); // (-x)^k / k!
    long k = 0;
    for (;; ++k) {
        if (static_cast<std::size_t>(k) > cfg.max_terms)
            throw ConvergenceError("riesz_maclaurin: term budget exhausted");
        term = pw / zeta_int_cached(static_cast<unsigned long>(2 * k + 2), wp);
        sum += term;
        Real mag = abs(term);
        if (mag > peak) peak = mag;
        if (mag < tol && static_cast<double>(k) > xd) break;
        pw *= -xw;
        pw /= (k + 1);
    }

    EvalResult r(wp);
    r.value = xw * sum;
    // first omitted term + accumulated rounding at the cancellation peak
    Real rounding = peak * xw * Real(static_cast<long>(k + 2), wp) * Real::pow2(-cfg.bits, wp);
    r.abs_error_bound = abs(term) * xw + rounding;
    r.method = Method::maclaurin;
    r.terms_used = k + 1;
    return r;
}

EvalResult riesz_hermite(const Real& x, const PrecisionConfig& cfg) {
    cfg.validate();
    double x2 = x.to_double() * x.to_double();
    if (static_cast<double>(cfg.bits) < 1.5 * x2 + 64.0)
        throw PrecisionError("riesz_hermite: needs bits >= 1.5 x^2 + 64 for |x| = " +
                             std::to_string(x.to_double()));

    mpfr_prec_t wp = cfg.work_bits(64);
    Real xw = Real(0.0, wp) + x;
    Real ax = abs(xw);
    Real tol = cfg.abs_tol_real(wp) * Real::pow2(-8, wp);

    Real sum(wp), peak(wp), last(wp);
    Real xpow(1.0, wp);
    long n = 0;
    long terms = 0;
    for (;; ++n) {
        if (static_cast<std::size_t>(n) > cfg.max_terms)
            throw ConvergenceError("riesz_hermite: term budget exhausted");
        const auto& H = hermite_cache(static_cast<std::size_t>(n) + 2);
        const mpz_class& hn = H.h(static_cast<std::size_t>(n));
        if (hn != 0) {
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
            mpq_class q(hn, fact);
            q.canonicalize();
            Real term = Real(q, wp) * xpow / zeta_int_cached(static_cast<unsigned long>(n + 2), wp);
            sum += term;
            ++terms;
            last = abs(term);
            if (last > peak) peak = last;
            if (last < tol && static_cast<double>(n) > x2) break;
        }
        xpow *= xw;
    }

    EvalResult r(wp);
    r.value = sum;
    r.abs_error_bound = last + peak * Real(static_cast<long>(terms + 2), wp) * Real::pow2(-cfg.bits, wp);
    r.method = Method::hermite;
    r.terms_used = terms;
    return r;
}

EvalResult zero_sum(const Real& x, const zeros::ZeroTable& table, std::size_t K,
                    const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(x > 0l)) throw UsageError("zero_sum: x must be positive");
    if (K > table.size())
        throw UsageError("zero_sum: table has " + std::to_string(table.size()) +
                         " entries, need " + std::to_string(K));
    mpfr_prec_t wp = cfg.work_bits(64);
    EvalResult r(wp);
    r.method = Method::explicit_formula;
    if (K == 0) return r;

    Real lx = log(Real(0.0, wp) + x);
    Real last_mag(wp);
    for (std::size_t k = 0; k < K; ++k) {
        const auto& e = table.entries[k];
        if (!e.zeta_prime) throw UsageError("zero_sum: table is not enriched");
        Complex rho{Real(0.5, wp), Real(0.0, wp) + e.gamma};
        Complex half_rho = rho * Real(0.5, wp);
        Complex lg = zeta::log_gamma(Real(1l, wp) - half_rho, cfg);
        Complex term = exp(Complex{half_rho.re * lx, half_rho.im * lx} + lg) / *e.zeta_prime;
        r.value += term.re * 2;
        last_mag = abs(term) * 2;
    }
    r.terms_used = static_cast<long>(K);
    r.abs_error_bound = last_mag * 10; // tail heuristic, see module docs
    return r;
}

EvalResult trivial_sum(const Real& x, std::size_t N, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(x > 0l)) throw UsageError("trivial_sum: x must be positive");
    // Alternating terms peak near exp(pi^2/x); pad the working precision so
    // small x stays accurate.
    double xd = x.to_double();
    long pad = 64;
    if (xd < 20.0) pad += static_cast<long>(1.4427 * 9.8696 / xd) + 8;
    mpfr_prec_t wp = cfg.work_bits(pad);
    Real xw = Real(0.0, wp) + x;
    Real tol = cfg.abs_tol_real(wp);

    EvalResult r(wp);
    r.method = Method::explicit_formula;
    Real xpow(1.0, wp);
    mpz_class fact(1);
    std::size_t nmax = (N == 0) ? cfg.max_terms : N;
    Real term(wp);
    std::size_t n = 1;
    for (; n <= nmax; ++n) {
        fact *= static_cast<unsigned long>(n);
        xpow /= xw;
        term = Real(fact, wp) * xpow * inv_zeta_prime_cached(static_cast<unsigned>(n), wp);
        r.value += term;
        if (N == 0 && abs(term) < tol && n >= 4) break;
    }
    r.terms_used = static_cast<long>(std::min(n, nmax));
    r.abs_error_bound = abs(term) + abs(r.value) * Real::pow2(-cfg.bits, wp);
    return r;
}

Real series_2_2_rhs(const Real& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(x > 0l)) throw UsageError("series_2_2_rhs: x must be positive");
    double xd = x.to_double();
    long pad = 64;
    if (xd < 20.0) pad += static_cast<long>(1.4427 * 9.8696 / xd) + 8;
    mpfr_prec_t wp = cfg.work_bits(pad);
    Real xw = Real(0.0, wp) + x;
    Real tol = cfg.abs_tol_real(wp);

    // (2 pi / sqrt x)^2 = 4 pi^2 / x
    Real q = Real::pi(wp);
    q = q * q * 4 / xw;
    Real sum(wp);
    Real qpow(1.0, wp);
    mpz_class nfact(1), n2fact(1);
    for (std::size_t n = 1; n <= cfg.max_terms; ++n) {
        nfact *= static_cast<unsigned long>(n);
        n2fact *= static_cast<unsigned long>(2 * n - 1);
        n2fact *= static_cast<unsigned long>(2 * n);
        qpow *= q;
        mpq_class ratio(nfact, n2fact);
        ratio.canonicalize();
        Real term = Real(ratio, wp) * qpow / zeta_int_cached(static_cast<unsigned long>(2 * n + 1), wp);
        if (n % 2 == 1) sum -= term; else sum += term;
        if (abs(term) < tol && n >= 4) break;
    }
    return sum * Real(0.5, wp);
}

EvalResult explicit_formula(const Real& x, const Real& a, const Real& b,
                            const zeros::ZeroTable& table, const PrecisionConfig& cfg) {
    EvalResult z = zero_sum(x, table, table.size(), cfg);
    EvalResult t = trivial_sum(x, 0, cfg);
    EvalResult r(z.value.prec());
    r.value = a * z.value + b * t.value;
    r.abs_error_bound = abs(a) * z.abs_error_bound + abs(b) * t.abs_error_bound;
    r.method = Method::explicit_formula;
    r.terms_used = z.terms_used + t.terms_used;
    return r;
}

CalibrationResult calibrate_explicit(const std::vector<Real>& x_grid,
                                     const zeros::ZeroTable& table,
                                     const PrecisionConfig& cfg) {
    cfg.validate();
    if (x_grid.size() < 8) throw UsageError("calibrate_explicit: need >= 8 grid points");
    for (const auto& x : x_grid)
        if (x < 1l || x > 100l)
            throw UsageError("calibrate_explicit: grid point " + x.str(6) + " outside [1, 100]");
    if (table.size() < 30) throw UsageError("calibrate_explicit: need >= 30 zero pairs");
    if (!table.enriched()) throw UsageError("calibrate_explicit: table not enriched");

    mpfr_prec_t wp = cfg.work_bits(64);
    // normal equations for min || a Z + b T - R ||_2
    Real zz(wp), zt(wp), tt(wp), zr(wp), tr(wp);
    std::vector<Real> Z, T, R;
    for (const auto& x : x_grid) {
        Real z = zero_sum(x, table, table.size(), cfg).value;
        Real t = trivial_sum(x, 0, cfg).value;
        Real r = riesz_direct(x, cfg).value;
        zz += z * z; zt += z * t; tt += t * t; zr += z * r; tr += t * r;
        Z.push_back(z); T.push_back(t); R.push_back(r);
    }
    Real det = zz * tt - zt * zt;
    if (det.is_zero() || abs(det) < (zz * tt + zt * zt) * Real::pow2(-cfg.bits, wp))
        throw UsageError("calibrate_explicit: singular normal equations (degenerate grid)");

    CalibrationResult out(wp);
    out.a = (zr * tt - tr * zt) / det;
    out.b = (tr * zz - zr * zt) / det;
    out.grid = x_grid;
    for (std::size_t i = 0; i < Z.size(); ++i) {
        Real resid = abs(out.a * Z[i] + out.b * T[i] - R[i]) / (Real(1l, wp) + abs(R[i]));
        if (resid > out.max_rel_residual) out.max_rel_residual = resid;
    }

    struct Cand { double a, b; const char* name; };
    const Cand cands[] = {{1, -1, "(1,-1)"}, {1, 1, "(1,1)"}, {0.5, 0.5, "(1/2,1/2)"},
                          {0.5, -0.5, "(1/2,-1/2)"}};
    bool first = true;
    for (const auto& c : cands) {
        Real d = hypot(out.a - Real(c.a, wp), out.b - Real(c.b, wp));
        if (first || d < out.nearest_distance) {
            out.nearest_distance = d;
            out.nearest_candidate = c.name;
            first = false;
        }
    }
    return out;
}

OrderEstimate order_estimate(long N, const PrecisionConfig& cfg) {
    cfg.validate();
    if (N < 8) throw UsageError("order_estimate: N must be >= 8");
    if (N % 2 != 0) throw UsageError("order_estimate: N must be even");

    const mpfr_prec_t wp = 128;
    OrderEstimate out;
    Real lnfact(wp); // ln k!
    for (long k = 1; 2 * k <= N; ++k) {
        lnfact += log(Real(k, wp));
        long m = 2 * k + 2;
        Real lnzeta(wp);
        if (m <= 96) {
            lnzeta = log(zeta_ui(static_cast<unsigned long>(m), wp));
        } else {
            // zeta(m) - 1 = 2^-m (1 + (2/3)^m + ...): three terms are exact
            // at this precision
            Real d(wp);
            for (long j = 2; j <= 4; ++j) d += exp(Real(static_cast<double>(-m), wp) * log(Real(j, wp)));
            lnzeta = log1p(d);
        }
        long n = 2 * k;
        Real lam = Real(n, wp) * log(Real(n, wp)) / (lnfact + lnzeta);
        out.lambda.emplace_back(n, lam.to_double());
    }

    // fit window: the top decade-ish [max(16, N/10), N]
    out.fit_lo = std::max<long>(16, N / 10);
    out.fit_hi = N;
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, y0 = 0, y1 = 0, y2 = 0;
    for (const auto& [n, lam] : out.lambda) {
        if (n < out.fit_lo) continue;
        double u = 1.0 / std::log(static_cast<double>(n));
        s0 += 1; s1 += u; s2 += u * u; s3 += u * u * u; s4 += u * u * u * u;
        y0 += lam; y1 += lam * u; y2 += lam * u * u;
    }
    // 2-parameter: lambda = c0 + c1 u
    double det2 = s0 * s2 - s1 * s1;
    out.extrapolated_loglinear = (y0 * s2 - y1 * s1) / det2;
    // 3-parameter: lambda = c0 + c1 u + c2 u^2 (Gaussian elimination)
    {
        double A[3][4] = {{s0, s1, s2, y0}, {s1, s2, s3, y1}, {s2, s3, s4, y2}};
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 < 3; ++r2)
                if (std::fabs(A[r2][col]) > std::fabs(A[piv][col])) piv = r2;
            std::swap(A[piv], A[col]);
            for (int r2 = col + 1; r2 < 3; ++r2) {
                double f = A[r2][col] / A[col][col];
                for (int c2 = col; c2 < 4; ++c2) A[r2][c2] -= f * A[col][c2];
            }
        }
        double c[3];
        for (int r2 = 2; r2 >= 0; --r2) {
            double acc = A[r2][3];
            for (int c2 = r2 + 1; c2 < 3; ++c2) acc -= A[r2][c2] * c[c2];
            c[r2] = acc / A[r2][r2];
        }
        out.extrapolated = c[0];
    }
    return out;
}

} // namespace rieszlab::riesz
