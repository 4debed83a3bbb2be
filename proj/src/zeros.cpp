#include "rieszlab/zeros.hpp"

#include "rieszlab/errors.hpp"
#include "rieszlab/zeta.hpp"

#include <fstream>
#include <sstream>

namespace rieszlab::zeros {

bool ZeroTable::enriched() const {
    for (const auto& e : entries)
        if (!e.zeta_prime) return false;
    return !entries.empty();
}

void ZeroTable::validate() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].index != static_cast<int>(i) + 1)
            throw UsageError("ZeroTable: indices must be consecutive from 1");
        if (!(entries[i].gamma > 0l)) throw UsageError("ZeroTable: ordinates must be positive");
        if (i > 0 && !(entries[i - 1].gamma < entries[i].gamma))
            throw UsageError("ZeroTable: ordinates must be strictly ascending");
    }
    if (!entries.empty()) {
        double g1 = entries.front().gamma.to_double();
        if (g1 <= 14.0 || g1 >= 14.2)
            throw UsageError("ZeroTable: first ordinate must lie in (14.0, 14.2)");
    }
}

ZeroTable load_ordinates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ordinate file: " + path);

    ZeroTable t;
    t.precision_bits = 64;
    std::string line;
    int lineno = 0;
    mpfr_prec_t prec = 64;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        // trim
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = s.find_last_not_of(" \t\r");
        s = s.substr(b, e - b + 1);

        Real g(prec);
        try {
            g = Real(s, prec);
        } catch (const FormatError&) {
            throw FormatError(path + ":" + std::to_string(lineno) + ": malformed ordinate '" + s + "'");
        }
        if (!g.is_finite() || !(g > 0l))
            throw FormatError(path + ":" + std::to_string(lineno) + ": ordinate must be positive");
        if (!t.entries.empty() && !(t.entries.back().gamma < g))
            throw FormatError(path + ":" + std::to_string(lineno) +
                              ": ordinates must be strictly ascending (offending value " + s + ")");
        ZeroEntry z(prec);
        z.index = static_cast<int>(t.entries.size()) + 1;
        z.gamma = g;
        z.refined = false;
        t.entries.push_back(std::move(z));
    }
    if (t.entries.empty()) throw FormatError(path + ": no ordinates found");
    return t;
}

Real hardy_z(const Real& t, const PrecisionConfig& cfg) {
    mpfr_prec_t wp = cfg.work_bits(64);
    Real tw = Real(0.0, wp) + t;
    // theta(t) = Im lgamma(1/4 + it/2) - (t/2) log pi
    Complex lg = zeta::log_gamma(Complex{Real(0.25, wp), tw / 2}, cfg);
    Real theta = lg.im - (tw / 2) * log(Real::pi(wp));
    Complex z = zeta::zeta(Complex{Real(0.5, wp), tw}, cfg);
    Real s(wp), c(wp);
    sin_cos(s, c, theta);
    return c * z.re - s * z.im;
}

namespace {

Real zeta_abs_on_line(const Real& t, const PrecisionConfig& cfg) {
    mpfr_prec_t wp = cfg.work_bits(64);
    return abs(zeta::zeta(Complex{Real(0.5, wp), Real(0.0, wp) + t}, cfg));
}

// Bracket-preserving secant with bisection fallback; converges to a bracket
// of width 2^-target_bits around the sign change of hardy_z.
Real brent_root(Real a, Real b, Real fa, Real fb, const PrecisionConfig& cfg, long target_bits) {
    mpfr_prec_t wp = cfg.work_bits(64);
    Real half(0.5, wp);
    int sticky = 0; // consecutive updates of the same endpoint
    int last_side = 0;
    for (int it = 0; it < 2 * static_cast<int>(target_bits) + 64; ++it) {
        Real width = abs(b - a);
        if (width.is_zero() || width.exponent2() < -target_bits) break;
        Real x = (a + b) * half;
        Real denom = fb - fa;
        if (sticky < 3 && !denom.is_zero()) {
            Real sec = b - fb * (b - a) / denom;
            // keep strictly inside the bracket
            if (sec > min(a, b) && sec < max(a, b)) x = sec;
        } else {
            sticky = 0;
        }
        Real fx = hardy_z(x, cfg);
        if (fx.is_zero()) return x;
        if ((fa.sign() < 0) != (fx.sign() < 0)) {
            b = x; fb = fx;
            sticky = (last_side == 2) ? sticky + 1 : 1;
            last_side = 2;
        } else {
            a = x; fa = fx;
            sticky = (last_side == 1) ? sticky + 1 : 1;
            last_side = 1;
        }
    }
    return (a + b) * half;
}

} // namespace

Real refine_zero(const Real& gamma_seed, const PrecisionConfig& cfg) {
    cfg.validate();
    mpfr_prec_t wp = cfg.work_bits(64);
    Real seed = Real(0.0, wp) + gamma_seed;

    // Find a sign change of Z within +-0.5 of the seed, closest first.
    const int kSteps = 20; // half-width 0.5 in steps of 0.05
    Real h(0.05, wp);
    Real f0 = hardy_z(seed, cfg);
    Real a(wp), b(wp), fa(wp), fb(wp);
    bool found = false;
    for (int k = 1; k <= kSteps && !found; ++k) {
        for (int sgn : {+1, -1}) {
            Real x0 = seed + h * (sgn * (k - 1));
            Real x1 = seed + h * (sgn * k);
            Real g0 = (k == 1) ? f0 : hardy_z(x0, cfg);
            Real g1 = hardy_z(x1, cfg);
            if ((g0.sign() < 0) != (g1.sign() < 0)) {
                a = min(x0, x1); b = max(x0, x1);
                fa = hardy_z(a, cfg); fb = hardy_z(b, cfg);
                found = true;
                break;
            }
        }
    }
    if (!found)
        throw BracketError("refine_zero: no sign change of Z within +-0.5 of " + seed.str(8));

    // |zeta| ~ |zeta'| * |dgamma|, so push the bracket past bits/4 decimal
    // digits with margin.
    long target_bits = static_cast<long>(0.84 * static_cast<double>(cfg.bits)) + 32;
    Real gamma = brent_root(a, b, fa, fb, cfg, target_bits);

    // contract: |zeta(1/2 + i gamma)| < 10^-(bits/4)
    Real bound = pow(Real(10.0, wp), -static_cast<long>(cfg.bits / 4));
    Real resid = zeta_abs_on_line(gamma, cfg);
    if (!(resid < bound))
        throw ConvergenceError("refine_zero: residual |zeta| = " + resid.str(6) +
                               " above 10^-(bits/4) near " + seed.str(8));
    return gamma;
}

std::vector<Real> scan_ordinates(double t_lo, double t_hi, double step, const PrecisionConfig& cfg) {
    if (!(t_lo > 0) || !(t_hi > t_lo) || !(step > 0))
        throw UsageError("scan_ordinates: need 0 < t_lo < t_hi and step > 0");
    mpfr_prec_t wp = cfg.work_bits(64);
    std::vector<Real> found;
    Real prev_t(t_lo, wp);
    Real prev_f = hardy_z(prev_t, cfg);
    for (double t = t_lo + step; t <= t_hi + step * 0.5; t += step) {
        Real ct(t, wp);
        Real cf = hardy_z(ct, cfg);
        if ((prev_f.sign() < 0) != (cf.sign() < 0)) {
            Real mid = (prev_t + ct) / 2;
            found.push_back(refine_zero(mid, cfg));
        }
        prev_t = ct;
        prev_f = cf;
    }
    return found;
}

ZeroTable refine_table(const ZeroTable& in, const PrecisionConfig& cfg) {
    ZeroTable out;
    out.precision_bits = cfg.bits;
    out.entries.reserve(in.entries.size());
    for (const auto& e : in.entries) {
        ZeroEntry z(cfg.work_bits(64));
        z.index = e.index;
        z.gamma = refine_zero(e.gamma, cfg);
        z.refined = true;
        out.entries.push_back(std::move(z));
    }
    out.validate();
    return out;
}

ZeroTable enrich(const ZeroTable& in, const PrecisionConfig& cfg) {
    cfg.validate();
    ZeroTable out = in;
    out.precision_bits = cfg.bits;
    mpfr_prec_t wp = cfg.work_bits(64);
    for (auto& e : out.entries) {
        if (!e.refined)
            throw UsageError("enrich: entry " + std::to_string(e.index) + " is not refined");
        if (e.zeta_prime) continue; // idempotent
        Complex zp = zeta::zeta_prime(Complex{Real(0.5, wp), Real(0.0, wp) + e.gamma}, cfg);
        if (abs(zp).is_zero())
            throw ConsistencyError("enrich: vanishing zeta'(rho) at index " + std::to_string(e.index));
        e.zeta_prime = zp;
    }
    return out;
}

void save_enriched(const ZeroTable& table, const std::string& path) {
    if (!table.enriched()) throw UsageError("save_enriched: table is not enriched");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "index,gamma,zeta_prime_re,zeta_prime_im,precision_bits\n";
    int digits = static_cast<int>(static_cast<double>(table.precision_bits) * 0.30103) + 3;
    for (const auto& e : table.entries) {
        out << e.index << ',' << e.gamma.str(digits) << ',' << e.zeta_prime->re.str(digits) << ','
            << e.zeta_prime->im.str(digits) << ',' << table.precision_bits << '\n';
    }
    if (!out) throw IoError("short write to " + path);
}

LoadEnrichedResult load_enriched(const std::string& path, long requested_bits) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw FormatError(path + ": empty file");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != "index,gamma,zeta_prime_re,zeta_prime_im,precision_bits")
        throw FormatError(path + ": unexpected header '" + header + "'");

    LoadEnrichedResult res;
    std::string line;
    int lineno = 1;
    long bits = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[5];
        for (int i = 0; i < 5; ++i) {
            if (!std::getline(ss, f[i], ','))
                throw FormatError(path + ":" + std::to_string(lineno) + ": expected 5 fields");
        }
        long row_bits = std::stol(f[4]);
        if (bits == 0) bits = row_bits;
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(row_bits + 16);
        ZeroEntry e(prec);
        e.index = std::stoi(f[0]);
        e.gamma = Real(f[1], prec);
        e.zeta_prime = Complex{Real(f[2], prec), Real(f[3], prec)};
        e.refined = true;
        res.table.entries.push_back(std::move(e));
    }
    res.table.precision_bits = bits;
    res.table.validate();
    if (requested_bits > 0 && bits < requested_bits)
        res.warning = path + ": stores " + std::to_string(bits) + " bits, below requested " +
                      std::to_string(requested_bits);
    return res;
}

} // namespace rieszlab::zeros
