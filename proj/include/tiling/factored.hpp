// Prime-factored presentation of exact results.
#pragma once

#include "tiling/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

using Prime = unsigned long;

/// unit * prod p^e over a caller-declared list of primes. The declared
/// order is kept and drives the printed form.
class FactoredValue {
public:
    FactoredValue() = default;
    FactoredValue(Rational unit, std::vector<std::pair<Prime, long>> factors)
        : unit_(std::move(unit)), factors_(std::move(factors)) {}

    const Rational& unit() const { return unit_; }
    const std::vector<std::pair<Prime, long>>& factors() const { return factors_; }

    long exponent(Prime p) const {
        for (const auto& [q, e] : factors_)
            if (q == p) return e;
        return 0;
    }

    /// Primes that actually occur (nonzero exponent).
    std::vector<Prime> support() const {
        std::vector<Prime> out;
        for (const auto& [p, e] : factors_)
            if (e != 0) out.push_back(p);
        return out;
    }

    Rational value() const {
        Rational v = unit_;
        for (const auto& [p, e] : factors_) v *= pow(Rational(p), e);
        return v;
    }

    /// "2 * 3^5", "2^1 * 5^2", "3^2 * 2^4"; "1" when empty.
    std::string factored_string() const {
        std::vector<std::string> parts;
        if (unit_ != 1) parts.push_back(to_display_string(unit_));
        for (const auto& [p, e] : factors_)
            if (e != 0) parts.push_back(std::to_string(p) + "^" + std::to_string(e));
        if (parts.empty()) return "1";
        std::string out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
        return out;
    }

    /// Factored form followed by the plain value: "2^1 * 5^2 = 50".
    std::string to_string() const {
        return factored_string() + " = " + to_display_string(value());
    }

    // Two factored values are equal when they denote the same number.
    friend bool operator==(const FactoredValue& a, const FactoredValue& b) {
        return a.value() == b.value();
    }

private:
    Rational unit_{1};
    std::vector<std::pair<Prime, long>> factors_;
};

inline std::ostream& operator<<(std::ostream& os, const FactoredValue& f) {
    return os << f.to_string();
}

namespace detail {
inline long strip_prime(Integer& n, Prime p) {
    long e = 0;
    Integer q, r;
    while (n != 0) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p);
        if (r != 0) break;
        n = q;
        ++e;
    }
    return e;
}
}  // namespace detail

/// Extracts every listed prime from numerator and denominator with maximal
/// exponent. The remainder becomes the unit.
inline FactoredValue factorize(const Rational& v, const std::vector<Prime>& primes) {
    if (v == 0) throw MathError("cannot factor zero");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] < 2) throw std::invalid_argument("factor base must contain primes >= 2");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw std::invalid_argument("duplicate prime in factor base");
    }
    Integer num = v.get_num(), den = v.get_den();
    std::vector<std::pair<Prime, long>> factors;
    factors.reserve(primes.size());
    for (Prime p : primes) {
        long up = detail::strip_prime(num, p);
        long down = detail::strip_prime(den, p);
        factors.emplace_back(p, up - down);
    }
    return FactoredValue(make_rational(num, den), std::move(factors));
}

inline FactoredValue factorize(const Rational& v, std::initializer_list<Prime> primes) {
    return factorize(v, std::vector<Prime>(primes));
}

/// The prime set every closed form in this library factors over.
inline const std::vector<Prime>& standard_primes() {
    static const std::vector<Prime> primes{2, 3, 5, 7, 29, 31, 37};
    return primes;
}

}  // namespace tiling
