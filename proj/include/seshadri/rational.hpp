#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace seshadri {

/// Exact rational scalar. All lattice and interpolation arithmetic runs on
/// this type; doubles appear only in the kahler module.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical "p/q" form; integers print without the "/1".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// binomial(n, k) as a machine integer; callers use it for dimensions that
/// stay tiny (jets, monomial counts).
inline long binomial_l(long n, long k) {
    Int b = binomial(n, k);
    if (!b.fits_slong_p()) throw std::overflow_error("binomial overflow");
    return b.get_si();
}

inline Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Rat r = 1;
    Rat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace seshadri
