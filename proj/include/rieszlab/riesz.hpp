#pragma once

#include "rieszlab/arith.hpp"
#include "rieszlab/precision.hpp"
#include "rieszlab/zeros.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rieszlab::riesz {

enum class Method { direct, maclaurin, hermite, explicit_formula };

const char* method_name(Method m);

struct EvalResult {
    Real value;
    Real abs_error_bound;
    Method method = Method::direct;
    long terms_used = 0;

    explicit EvalResult(mpfr_prec_t prec) : value(prec), abs_error_bound(prec) {}
};

// R(x) = x [ 1/zeta(2) + sum_{n<=N} mu(n) n^-2 (e^{-x/n^2} - 1) ],
// truncated so the value-level tail bound 2 x^2/(3 N^3) meets abs_tol.
EvalResult riesz_direct(const Real& x, const PrecisionConfig& cfg);

// R(x) = x sum_k (-x)^k / (k! zeta(2k+2)). Needs bits >= 1.5 x + 64 to pay
// for the e^x-scale cancellation; refuses (PrecisionError) otherwise.
EvalResult riesz_maclaurin(const Real& x, const PrecisionConfig& cfg);

// sum_n H_n x^n / (n! zeta(n+2)) = R(x^2)/x^2, summed over the exact Hermite
// numbers (odd terms vanish identically).
EvalResult riesz_hermite(const Real& x, const PrecisionConfig& cfg);

// sum over the first K zero pairs of 2 Re[ x^{rho/2} Gamma(1 - rho/2) / zeta'(rho) ].
// Error bound: 10x the magnitude of the K-th pair's term (empirical tail
// heuristic; the terms decay like exp(-pi gamma_k / 4)).
EvalResult zero_sum(const Real& x, const zeros::ZeroTable& table, std::size_t K,
                    const PrecisionConfig& cfg);

// sum_{n>=1} n! x^-n / zeta'(-2n); N = 0 lets the term-size rule truncate.
EvalResult trivial_sum(const Real& x, std::size_t N, const PrecisionConfig& cfg);

// (1/2) sum_{n>=1} (-1)^n n! (2 pi/sqrt(x))^{2n} / (zeta(2n+1) (2n)!).
Real series_2_2_rhs(const Real& x, const PrecisionConfig& cfg);

// a * zero_sum + b * trivial_sum with propagated error bounds.
EvalResult explicit_formula(const Real& x, const Real& a, const Real& b,
                            const zeros::ZeroTable& table, const PrecisionConfig& cfg);

struct CalibrationResult {
    Real a;
    Real b;
    Real max_rel_residual;
    std::vector<Real> grid;
    std::string nearest_candidate;   // one of (1,-1) (1,1) (1/2,1/2) (1/2,-1/2)
    Real nearest_distance;

    explicit CalibrationResult(mpfr_prec_t prec)
        : a(prec), b(prec), max_rel_residual(prec), nearest_distance(prec) {}
};

// Least-squares (a, b) of riesz_direct(x) ~ a zero_sum(x) + b trivial_sum(x)
// over the grid; residuals are relative to 1 + |R(x)|.
CalibrationResult calibrate_explicit(const std::vector<Real>& x_grid,
                                     const zeros::ZeroTable& table,
                                     const PrecisionConfig& cfg);

struct OrderEstimate {
    std::vector<std::pair<long, double>> lambda; // (even n, lambda_n)
    // Quadratic-in-1/log n extrapolant over [fit_lo, fit_hi]; the headline
    // limit estimate (the log-linear model has an O(1/log^2 n) bias that has
    // not decayed at desk scale, see extrapolated_loglinear).
    double extrapolated = 0;
    double extrapolated_loglinear = 0;
    long fit_lo = 0;
    long fit_hi = 0;
};

// lambda_n = n log n / log(n! zeta(n+2) / |H_n|) for even n <= N, plus limit
// extrapolations (the true limit is the order of the entire function).
OrderEstimate order_estimate(long N, const PrecisionConfig& cfg);

} // namespace rieszlab::riesz
