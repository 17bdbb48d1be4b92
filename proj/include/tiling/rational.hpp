// Exact rational arithmetic helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiling {

// GMP canonicalizes after every arithmetic operation, so values stay in
// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or "-p/q" with arbitrary-size integers.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return Integer(t, 10);
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw std::invalid_argument("bad rational: '" + s + "'");
        return Rational(to_int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("bad rational: '" + s + "'");
    Integer d = to_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return make_rational(to_int(num), d);
}

/// Always "num/den", the form used by every text format in this library.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "num" for integers, "num/den" otherwise.
inline std::string to_display_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_fraction_string(r);
}

inline Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw MathError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return make_rational(num, den);
}

inline std::size_t hash_value(const Rational& r) {
    std::size_t h = std::hash<std::string>{}(to_fraction_string(r));
    return h;
}

}  // namespace tiling
