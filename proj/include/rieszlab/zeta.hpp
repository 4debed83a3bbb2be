#pragma once

#include "rieszlab/complex.hpp"
#include "rieszlab/precision.hpp"

#include <gmpxx.h>

namespace rieszlab::zeta {

// Exact Bernoulli number B_m (B_1 = -1/2); cached, grows on demand.
const mpq_class& bernoulli(unsigned m);

// Riemann zeta for complex s by Euler-Maclaurin summation; the functional
// equation is applied for Re s < 0.25. s = 1 is a pole error.
Complex zeta(const Complex& s, const PrecisionConfig& cfg);

// Real-argument fast path (MPFR); contracts with zeta() on the real line.
Real zeta_real(const Real& s, const PrecisionConfig& cfg);

// zeta'(s) by the term-wise differentiated Euler-Maclaurin series,
// cross-checked against a central finite difference with step 2^-(bits/3);
// disagreement beyond 10*abs_tol raises ConsistencyError.
Complex zeta_prime(const Complex& s, const PrecisionConfig& cfg);

// Closed form 1/zeta'(-2n) = (-1)^n 2^{2n+1} pi^{2n} / ((2n)! zeta(2n+1)).
Real inv_zeta_prime_trivial(unsigned n, const PrecisionConfig& cfg);

// log Gamma, analytic on the cut plane via Stirling plus argument shifting;
// exp(log_gamma(s)) = Gamma(s). Nonpositive integers are pole errors.
Complex log_gamma(const Complex& s, const PrecisionConfig& cfg);

} // namespace rieszlab::zeta
