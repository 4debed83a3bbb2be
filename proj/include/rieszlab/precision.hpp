#pragma once

#include "rieszlab/errors.hpp"
#include "rieszlab/real.hpp"

#include <cstddef>

namespace rieszlab {

// Working precision and tolerances shared by every numeric module.
// bits is the binary mantissa width of the values a caller receives;
// evaluators are free to carry guard bits internally.
struct PrecisionConfig {
    long bits = 256;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::size_t max_terms = 1000000;

    void validate() const {
        if (bits < 53) throw UsageError("PrecisionConfig: bits must be >= 53");
        if (!(abs_tol > 0) && !(rel_tol > 0))
            throw UsageError("PrecisionConfig: abs_tol or rel_tol must be positive");
        if (abs_tol < 0 || rel_tol < 0)
            throw UsageError("PrecisionConfig: tolerances must be >= 0");
        if (max_terms < 16) throw UsageError("PrecisionConfig: max_terms must be >= 16");
    }

    mpfr_prec_t work_bits(long guard = 32) const { return static_cast<mpfr_prec_t>(bits + guard); }

    Real abs_tol_real(mpfr_prec_t prec) const { return Real(abs_tol, prec); }
    Real rel_tol_real(mpfr_prec_t prec) const { return Real(rel_tol, prec); }

    int digits10() const { return static_cast<int>(static_cast<double>(bits) * 0.30103) + 3; }

    PrecisionConfig with_bits(long b) const {
        PrecisionConfig c = *this;
        c.bits = b;
        return c;
    }
    PrecisionConfig with_abs_tol(double t) const {
        PrecisionConfig c = *this;
        c.abs_tol = t;
        return c;
    }
};

} // namespace rieszlab
