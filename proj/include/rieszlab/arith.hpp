#pragma once

#include "rieszlab/precision.hpp"
#include "rieszlab/real.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace rieszlab::arith {

// Hard cap on sieve size; a larger request is a resource error, not a hang.
inline constexpr std::uint64_t kMobiusCap = 100000000;

// mu(1..limit), immutable after construction.
struct MobiusTable {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> values; // values[n-1] = mu(n)

    int mu(std::uint64_t n) const { return values[n - 1]; }
    // Mertens partial sum M(n) = sum_{k<=n} mu(k).
    long mertens(std::uint64_t n) const;
};

MobiusTable build_mobius(std::uint64_t limit);

// Shared cache for evaluators that choose their own truncation length.
// Grows on demand (amortized doubling), never shrinks; single-threaded use.
const MobiusTable& mobius_cache(std::uint64_t min_limit);

// H_0..H_limit as exact integers: H_n = H_n(0), generated by the recurrence
// H_n = -2 (n-1) H_{n-2}, H_0 = 1, H_1 = 0.
struct HermiteNumbers {
    std::size_t limit = 0;
    std::vector<mpz_class> values;

    const mpz_class& h(std::size_t n) const { return values[n]; }
};

HermiteNumbers hermite_numbers(std::size_t limit);

// Exact closed form H_{2k} = (-1)^k (2k)!/k! (test oracle and evaluator input).
mpz_class hermite_closed_form(std::size_t n);

// log(n!) as a straight summation of logs at the configured precision.
Real log_factorial(unsigned long n, const PrecisionConfig& cfg);

} // namespace rieszlab::arith
