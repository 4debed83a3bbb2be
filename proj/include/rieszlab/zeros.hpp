#pragma once

#include "rieszlab/complex.hpp"
#include "rieszlab/precision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rieszlab::zeros {

struct ZeroEntry {
    int index = 0;
    Real gamma;
    std::optional<Complex> zeta_prime; // zeta'(1/2 + i gamma) once enriched
    bool refined = false;

    explicit ZeroEntry(mpfr_prec_t prec) : gamma(prec) {}
};

struct ZeroTable {
    std::vector<ZeroEntry> entries;
    long precision_bits = 53;

    std::size_t size() const { return entries.size(); }
    bool enriched() const;
    // Throws UsageError on a structural violation (order, indices, first
    // ordinate outside (14.0, 14.2)).
    void validate() const;
};

// Plain text, one ordinate per line, '#' comments, strictly ascending.
ZeroTable load_ordinates(const std::string& path);

// Value of the rotated zeta Z(t) = exp(i theta(t)) zeta(1/2 + it), real up to
// rounding; its sign changes locate the ordinates.
Real hardy_z(const Real& t, const PrecisionConfig& cfg);

// Bracketed root polish: requires an actual zero within +-0.5 of the seed,
// returns gamma with |zeta(1/2 + i gamma)| < 10^-(bits/4).
Real refine_zero(const Real& gamma_seed, const PrecisionConfig& cfg);

// Sign-change scan over [t_lo, t_hi] with the given step; each bracket is
// refined. The generation oracle behind the shipped ordinate file.
std::vector<Real> scan_ordinates(double t_lo, double t_hi, double step,
                                 const PrecisionConfig& cfg);

ZeroTable refine_table(const ZeroTable& in, const PrecisionConfig& cfg);

// Attaches zeta'(rho) to every (already refined) entry.
ZeroTable enrich(const ZeroTable& in, const PrecisionConfig& cfg);

// CSV persistence: header index,gamma,zeta_prime_re,zeta_prime_im,precision_bits
void save_enriched(const ZeroTable& table, const std::string& path);

struct LoadEnrichedResult {
    ZeroTable table;
    // set when the file's precision is below the requested bits
    std::optional<std::string> warning;
};

LoadEnrichedResult load_enriched(const std::string& path, long requested_bits = 0);

} // namespace rieszlab::zeros
