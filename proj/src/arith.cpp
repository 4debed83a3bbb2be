#include "rieszlab/arith.hpp"

#include "rieszlab/errors.hpp"

#include <string>

namespace rieszlab::arith {

long MobiusTable::mertens(std::uint64_t n) const {
    long m = 0;
    for (std::uint64_t k = 1; k <= n; ++k) m += mu(k);
    return m;
}

MobiusTable build_mobius(std::uint64_t limit) {
    if (limit < 1) throw UsageError("build_mobius: limit must be >= 1");
    if (limit > kMobiusCap)
        throw ResourceError("build_mobius: limit " + std::to_string(limit) +
                            " exceeds cap " + std::to_string(kMobiusCap));

    MobiusTable t;
    t.limit = limit;
    t.values.assign(limit, 1);
    if (limit == 1) return t;

    // Sieve: flip the sign once per prime factor, zero out multiples of p^2.
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p; m <= limit; m += p) {
            if (m > p) composite[m] = true;
            t.values[m - 1] = static_cast<std::int8_t>(-t.values[m - 1]);
        }
        std::uint64_t p2 = p * p;
        if (p2 > limit) continue;
        for (std::uint64_t m = p2; m <= limit; m += p2) t.values[m - 1] = 0;
    }
    return t;
}

const MobiusTable& mobius_cache(std::uint64_t min_limit) {
    static MobiusTable cache;
    if (min_limit > kMobiusCap)
        throw ResourceError("mobius_cache: request " + std::to_string(min_limit) +
                            " exceeds cap " + std::to_string(kMobiusCap));
    if (cache.limit < min_limit) {
        std::uint64_t grow = cache.limit == 0 ? 1024 : cache.limit;
        while (grow < min_limit) grow *= 2;
        if (grow > kMobiusCap) grow = kMobiusCap;
        cache = build_mobius(grow);
    }
    return cache;
}

HermiteNumbers hermite_numbers(std::size_t limit) {
    HermiteNumbers h;
    h.limit = limit;
    h.values.resize(limit + 1);
    h.values[0] = 1;
    if (limit >= 1) h.values[1] = 0;
    for (std::size_t n = 2; n <= limit; ++n)
        h.values[n] = -2 * static_cast<long>(n - 1) * h.values[n - 2];
    return h;
}

mpz_class hermite_closed_form(std::size_t n) {
    if (n % 2 == 1) return 0;
    std::size_t k = n / 2;
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class r = num / den;
    return (k % 2 == 0) ? r : mpz_class(-r);
}

Real log_factorial(unsigned long n, const PrecisionConfig& cfg) {
    cfg.validate();
    mpfr_prec_t wp = cfg.work_bits();
    Real acc(wp);
    for (unsigned long k = 2; k <= n; ++k) acc += log(Real(static_cast<long>(k), wp));
    return acc;
}

} // namespace rieszlab::arith
