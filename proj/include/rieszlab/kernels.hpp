#pragma once

#include "rieszlab/complex.hpp"
#include "rieszlab/precision.hpp"

#include <string>
#include <vector>

namespace rieszlab::kernels {

// s(t) = sum_n n mu(n) e^{-(nt)^2}; Gaussian-driven truncation
// N(t) = ceil(sqrt(ln(1/abs_tol))/t) + 8. Defined for t >= kSKernelTmin.
inline constexpr double kSKernelTmin = 1e-3;
Real s_kernel(const Real& t, const PrecisionConfig& cfg);

// kbar(t) = sum_n mu(n) n^-2 e^{-(nt)^2} cos(2nt); even, evaluated at |t|;
// kbar(0) = 1/zeta(2) exactly via the compensated form.
Real kbar(const Real& t, const PrecisionConfig& cfg);

// Exact N-term partial sum of kbar.
Real partial_kbar(const Real& t, std::size_t N, const PrecisionConfig& cfg);

// A(z) = -2 sum_n mu(n)/n cos((2 pi/n) e^{-z}), summed in the mean-zero
// compensated form -2 sum mu(n)/n [cos((2pi/n)e^{-z}) - 1].
Real bartz_A(const Real& z, const PrecisionConfig& cfg);

// B(t) = sum_n mu(n)/n cos(sqrt(t)/n), compensated; B(0) = 0.
Real b_func(const Real& t, const PrecisionConfig& cfg);

// P_z(y) = sum_n mu(n)/n e^{-y/n^2} cosh(sqrt(y) z/n), compensated. Real for
// real z and for purely imaginary z (cosh(i w) = cos w).
Complex p_z(const Real& y, const Complex& z, const PrecisionConfig& cfg);

struct KernelId {
    enum class Kind { s_kernel, kbar, b_func, bartz_a, p_z };
    Kind kind = Kind::s_kernel;
    // parameter of the p_z family; must be real or purely imaginary
    Complex z{53};

    static KernelId S() { return {Kind::s_kernel, Complex{53}}; }
    static KernelId Kbar() { return {Kind::kbar, Complex{53}}; }
    static KernelId B() { return {Kind::b_func, Complex{53}}; }
    static KernelId BartzA() { return {Kind::bartz_a, Complex{53}}; }
    static KernelId Pz(const Complex& z) { return {Kind::p_z, z}; }

    std::string name() const;
};

// Kernel trace evaluated pointwise for admissibility scans. For p_z this is
// the cosine-transform kernel that generates the series at y = t^2:
//   k_z(y) = sum_n mu(n) e^{-n^2 y^2/4} cos(n z y / 2)   (cosh for z = i w)
Real kernel_eval(const KernelId& id, const Real& t, const PrecisionConfig& cfg);

struct ConditionReport {
    enum class Status { pass, pass_structural, fail, indeterminate };
    Status status = Status::indeterminate;
    double witness_t = 0;      // strongest violation when status == fail
    double witness_value = 0;
    std::vector<std::pair<double, double>> violations; // capped sample of (t, value)
    std::size_t violation_count = 0;
    std::string note;

    bool failed() const { return status == Status::fail; }
    // true when some recorded violation lies in (lo, hi)
    bool has_violation_in(double lo, double hi) const;
};

const char* status_name(ConditionReport::Status s);

struct AdmissibilityReport {
    std::string kernel;
    ConditionReport smoothness;    // (i)  structural
    ConditionReport positivity;    // (ii) grid scan
    ConditionReport evenness;      // (iii) structural
    ConditionReport monotonicity;  // (iv) central-difference sign, t > 0
    ConditionReport decay;         // (v)  reported as a fitted exponent
    double decay_exponent = 0;     // p in k(t) ~ exp(-c t^p)
    std::string grid_note;
};

// Grid must be >= 1000 ascending positive points.
AdmissibilityReport admissibility_report(const KernelId& id, const std::vector<double>& grid,
                                         const PrecisionConfig& cfg);

std::vector<double> geometric_grid(double lo, double hi, std::size_t points);

} // namespace rieszlab::kernels
