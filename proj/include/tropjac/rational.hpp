#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tropjac {

using Int = std::int64_t;
using Rational = mpq_class;

inline Rational rat(Int num, Int den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Parse "p", "-p" or "p/q" with q > 0 after canonicalization.
/// Returns nullopt for anything else (decimals, empty, junk).
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t digits = 0;
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            ++digits;
        } else if (c == '/') {
            ++slashes;
            if (slashes > 1 || i == 0 || i + 1 == s.size()) return std::nullopt;
        } else if (c == '-' || c == '+') {
            if (i != 0 && s[i - 1] != '/') return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0) return std::nullopt;
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rational& r) {
    return r.get_str();
}

inline Int rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rat_floor: out of range");
    return static_cast<Int>(q.get_si());
}

inline Int rat_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rat_ceil: out of range");
    return static_cast<Int>(q.get_si());
}

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace tropjac
