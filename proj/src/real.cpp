#include "rieszlab/real.hpp"

#include "rieszlab/errors.hpp"

#include <cstdio>
#include <vector>

namespace rieszlab {

Real::Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw FormatError("not a decimal number: '" + s + "'");
    }
}

std::string Real::str(int digits) const {
    if (digits < 2) digits = 2;
    // %Rg would drop trailing zeros; use %Re for stable schema output.
    int need = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

std::string Real::str() const {
    // ceil(prec * log10(2)) + 2 digits round-trips binary -> decimal -> binary.
    int digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 3;
    return str(digits);
}

} // namespace rieszlab
