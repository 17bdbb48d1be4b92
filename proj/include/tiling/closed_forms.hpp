// Closed-form counts, recurrences and prefactors. Every count that has a
// pattern-plus-prefactor route computes both and throws CrossCheckError if
// they disagree.
#pragma once

#include "tiling/aztec.hpp"
#include "tiling/composition.hpp"
#include "tiling/factored.hpp"
#include "tiling/patterns.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

class CrossCheckError : public MathError {
public:
    using MathError::MathError;
};

namespace detail {

inline FactoredValue fv(long unit, std::vector<std::pair<Prime, long>> factors) {
    return FactoredValue(Rational(unit), std::move(factors));
}

inline void cross_check(const std::string& what, const Rational& closed, const Rational& route) {
    if (closed != route)
        throw CrossCheckError(what + ": closed form " + to_display_string(closed) +
                              " disagrees with reduction route " + to_display_string(route));
}

inline void require_nonnegative(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

inline void require_same_length(std::size_t n, std::initializer_list<const RationalVector*> vs) {
    for (const auto* v : vs)
        if (v->size() != n) throw std::invalid_argument("parameter vectors must have equal length");
}

}  // namespace detail

// ---------------------------------------------------------------- fortresses

/// Yang's count for the fortress of order n >= 1, factored over {5}.
inline FactoredValue yang_fortress(long n) {
    if (n < 1) throw std::invalid_argument("fortress order must be positive");
    if (n % 2 == 0) {
        long k = n / 2;
        return detail::fv(1, {{5, k * k}});
    }
    if (n % 4 == 1) {
        long k = (n - 1) / 4;
        return detail::fv(1, {{5, 2 * k * (2 * k + 1)}});
    }
    long k = (n + 1) / 4;
    return detail::fv(2, {{5, 2 * k * (2 * k - 1)}});
}

/// Tilings of F(d) or F-bar(d), factored over {2, 5}.
inline FactoredValue fortress_count(const Composition& d, FortressVariant v) {
    const long n = d.total(), S = d.S();
    if (n % 2 == 0) {
        long k = n / 2;
        return detail::fv(1, {{2, 2 * k * k - 2 * S}, {5, S}});
    }
    const long k = (n - 1) / 2;
    const long alpha = k * (2 * k + 2) - 2 * S + (d.in_odd_part(k + 1) ? 0 : 1);
    if (v == FortressVariant::plain) return detail::fv(1, {{2, alpha}, {5, S}});
    return detail::fv(1, {{2, (2 * k + 1) * (2 * k + 1) - 4 * S - alpha}, {5, S}});
}

/// Number of cells carrying the extended-city weight: n^2/2 for even n,
/// n(n-1)/2 plus the odd-index (plain) or even-index (bar) part sum for odd n.
inline long fortress_city_cells(const Composition& d, FortressVariant v) {
    const long n = d.total();
    if (n % 2 == 0) return n * n / 2;
    return n * (n - 1) / 2 + (v == FortressVariant::plain ? d.theta() : d.even_sum());
}

/// T(F) / M(AD_n(D_{1/2,1})), or the bar analogue with D_{1,1/2}.
inline FactoredValue fortress_prefactor(const Composition& d, FortressVariant v) {
    return detail::fv(1, {{2, fortress_city_cells(d, v)}});
}

/// Product formula for the row pattern rows_pattern(a, b, c, d); n = a.size().
inline Rational weighted_rows_formula(const RationalVector& a, const RationalVector& b,
                                      const RationalVector& c, const RationalVector& d) {
    const long n = static_cast<long>(a.size());
    detail::require_same_length(a.size(), {&b, &c, &d});
    // 1-based accessors
    auto A = [&](long i) -> const Rational& { return a[i - 1]; };
    auto B = [&](long i) -> const Rational& { return b[i - 1]; };
    auto C = [&](long i) -> const Rational& { return c[i - 1]; };
    auto D = [&](long i) -> const Rational& { return d[i - 1]; };
    const long k = n / 2;
    Rational v = 1;
    if (n % 2 == 0) {
        v *= pow(Rational(2), k * (k + 1));
        for (long i = 1; i <= k; ++i) v *= pow(A(i) * B(n - i + 1) * C(i) * D(n - i + 1), k - i + 1);
    } else {
        v *= pow(Rational(2), (k + 1) * (k + 1));
        for (long i = 1; i <= k + 1; ++i)
            v *= pow(A(i) * B(n - i + 1), k - i + 2) * pow(C(i) * D(n - i + 1), k - i + 1);
    }
    for (long j = 1; j <= k; ++j)
        for (long i = j; i <= n - j; ++i) v *= D(i) * A(i + 1) + B(i) * C(i + 1);
    return v;
}

/// M(AD_n(D_{a,b}(d))) in closed form.
inline Rational fortress_pattern_formula(const Rational& a, const Rational& b, const Composition& d) {
    const long n = d.total(), S = d.S();
    const Rational sq = a * a + b * b;
    if (n % 2 == 0) {
        long k = n / 2;
        return pow(2 * a * b, k * (2 * k + 1) - S) * pow(sq, S);
    }
    const long k = (n - 1) / 2, theta = d.theta();
    const Rational beta = d.in_odd_part(k + 1) ? a : b;
    return beta * pow(Rational(2), (2 * k + 1) * (k + 1) - S) * pow(a, 2 * k * (k + 1) + theta - S) *
           pow(b, 2 * k * (k + 1) + (2 * k + 1) - theta - S) * pow(sq, S);
}

/// Tiling generating function of F(d) with tile weights 1, 1/(2a), b.
inline Rational fortress_gen_fn(const Composition& d, const Rational& a, const Rational& b) {
    return pow(1 / (2 * a * a), fortress_city_cells(d, FortressVariant::plain)) *
           fortress_pattern_formula(a, b, d);
}

// ------------------------------------------------------------------ zigzags

/// gamma_n (plain) or gamma-bar_n: T = 2^gamma M(AD_n(A or A-bar)).
inline long zigzag_gamma(long n, bool bar) {
    detail::require_nonnegative(n, "zigzag order");
    const long k = n / 4, r = n % 4;
    static const long plain[4][2] = {{0, 0}, {4, 1}, {8, 3}, {12, 5}};
    static const long barred[4][2] = {{0, 0}, {4, 0}, {8, 1}, {12, 4}};
    const auto& row = bar ? barred[r] : plain[r];
    return 8 * k * k + row[0] * k + row[1];
}

/// The closed forms for T(Z_n) and T(Z-bar_n), factored over {3}.
inline FactoredValue zigzag_closed_form(long n, bool bar) {
    detail::require_nonnegative(n, "zigzag order");
    static const long offset[12] = {0, 0, 1, 3, 5, 8, 12, 16, 21, 27, 33, 40};
    const long m = n / 12, r = n % 12;
    const long e = 48 * m * m + 8 * r * m + offset[r];
    long twos = (r == 4 || r == 5 || r == 10 || r == 11) ? 1 : 0;
    if (bar) {
        switch (n % 6) {
            case 1:
            case 2: ++twos; break;
            case 4:
            case 5: --twos; break;
            default: break;
        }
    }
    return detail::fv(twos == 1 ? 2 : 1, {{3, e}});
}

/// T(Z_n) or T(Z-bar_n); the closed form is checked against
/// 2^gamma_n * evaluate(A or A-bar, n).
inline FactoredValue zigzag_count(long n, bool bar) {
    FactoredValue closed = zigzag_closed_form(n, bar);
    Rational route = pow(Rational(2), zigzag_gamma(n, bar)) *
                     evaluate(zigzag_pattern(bar), static_cast<std::size_t>(n));
    detail::cross_check(std::string(bar ? "T(Zbar_" : "T(Z_") + std::to_string(n) + ")", closed.value(),
                        route);
    return closed;
}

struct ZigExponents {
    long x;
    long y;
    long z;
};

/// Exponents (x_n, y_n, z_n) of the three-step recurrence, n >= 3; the bar
/// version swaps x and y.
inline ZigExponents zig_exponents(long n, bool bar) {
    if (n < 3) throw std::invalid_argument("zig recurrence needs n >= 3");
    const long k = n / 4, r = n % 4;
    static const long xs[4] = {-1, 2, 4, 5};
    static const long ys[4] = {-2, -1, 1, 4};
    ZigExponents e{8 * k + xs[r], 8 * k + ys[r], 2 * n - 3};
    if (bar) std::swap(e.x, e.y);
    return e;
}

/// M(AD_n(B)) (bar = false) or M(AD_n(B-bar)) via the three-step
/// recurrence; orders 0, 1, 2 come from evaluate().
inline Rational zig_recurrence(const Rational& a, const Rational& b, long n, bool bar) {
    detail::require_nonnegative(n, "zig order");
    if (n < 3) return evaluate(zig_pattern(a, b, bar), static_cast<std::size_t>(n));
    ZigExponents e = zig_exponents(n, bar);
    return pow(Rational(2), n) * pow(a, e.x) * pow(b, e.y) * pow(a + b, e.z) *
           zig_recurrence(a, b, n - 3, !bar);
}

struct Discrepancy {
    std::string what;
    long index;
    Rational printed;
    Rational computed;
};

/// Orders 3..n_max at which the recurrence disagrees with evaluate().
inline std::vector<Discrepancy> zig_recurrence_discrepancies(const Rational& a, const Rational& b,
                                                             long n_max) {
    std::vector<Discrepancy> out;
    for (bool bar : {false, true})
        for (long n = 3; n <= n_max; ++n) {
            Rational rec = zig_recurrence(a, b, n, bar);
            Rational ev = evaluate(zig_pattern(a, b, bar), static_cast<std::size_t>(n));
            if (rec != ev) out.push_back({bar ? "zig recurrence (bar)" : "zig recurrence", n, rec, ev});
        }
    return out;
}

// -------------------------------------------------------------------- Blum

/// How M(B_n) is reduced to a zigzag count.
struct BlumRoute {
    long n;
    long representative;  // index after the plateau identity
    long zig_order;
    bool bar;
    std::string identity;
    bool extended;        // uses the plateau identity outside k >= 1
};

/// Route from B_n to a zigzag region, or nullopt for indices not reached by
/// the identities. n = 1 is reached only by reading the plateau identity at
/// k = 0 together with T(Z_0) = M(B_{-2}); that route is marked extended.
inline std::optional<BlumRoute> blum_coverage(long n) {
    if (n < 1) return std::nullopt;
    auto direct = [](long m) -> std::optional<BlumRoute> {
        const long r = ((m % 10) + 10) % 10;
        if (r == 7) return BlumRoute{m, m, 4 * ((m - 7) / 10) + 3, false, "T(Z_{4k+3}) = M(B_{10k+7})", false};
        if (r == 8) return BlumRoute{m, m, 4 * ((m + 2) / 10), false, "T(Z_{4k}) = M(B_{10k-2})", false};
        if (r == 2) return BlumRoute{m, m, 4 * ((m - 2) / 10) + 1, true, "T(Zbar_{4k+1}) = M(B_{10k+2})", false};
        if (r == 3) return BlumRoute{m, m, 4 * ((m - 3) / 10) + 2, true, "T(Zbar_{4k+2}) = M(B_{10k+3})", false};
        return std::nullopt;
    };
    if (n % 5 == 2) return direct(n);
    const long k = (n + 2) / 5;
    auto route = direct(5 * k - 2);
    if (!route) return std::nullopt;
    route->n = n;
    route->identity = "M(B_{5k-2}) = ... = M(B_{5k+1}); " + route->identity;
    route->extended = k < 1;
    return route;
}

/// M(B_n) via the plateau and bridge identities, factored over {3}.
inline FactoredValue blum_value(long n) {
    auto route = blum_coverage(n);
    if (!route) throw MathError("uncovered index " + std::to_string(n));
    return zigzag_count(route->zig_order, route->bar);
}

/// x_n of the 30-step recurrence, n >= 31.
inline long blum_x(long n) {
    if (n < 31) throw std::invalid_argument("blum recurrence needs n >= 31");
    const long k = (n - 1) / 5, r = (n - 1) % 5 + 1;
    if (r == 1) return 4 * k - 12;
    if (r == 2) return 4 * k - 10;
    return 4 * k - 8;
}

inline bool blum_recurrence_check(long n) {
    return blum_value(n).value() == pow(Rational(3), 4 * blum_x(n)) * blum_value(n - 30).value();
}

// ----------------------------------------------------- four-parameter family

/// M(AD_n(abcd_pattern(a, b, c, d))).
inline Rational abcd_formula(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                             long n) {
    detail::require_nonnegative(n, "order");
    const Rational P = a * b * pow(c * c + d * d, 2) + c * d * pow(a * a + b * b, 2);
    const Rational q = a * b + c * d;
    const long k = n / 4;
    switch (n % 4) {
        case 0: return pow(P, k * (2 * k + 1)) * pow(q, k * (2 * k - 1));
        case 1: return (a * a + b * b) * pow(P, k * (2 * k + 2)) * pow(q, 2 * k * k);
        case 2: return pow(P, k * (2 * k + 3) + 1) * pow(q, k * (2 * k + 1));
        default: return pow(P, k * (2 * k + 4) + 2) * pow(q, k * (2 * k + 2));
    }
}

/// The S-region closed forms.
inline FactoredValue s_region_closed_form(int family, long n) {
    detail::require_nonnegative(n, "order");
    const long q = n / 4, r = n % 4;
    switch (family) {
        case 1:
            switch (r) {
                case 0: return detail::fv(1, {{7, q * (2 * q - 1)}, {37, q * (2 * q + 1)}});
                case 1: return detail::fv(5, {{7, 2 * q * q}, {37, 2 * q * (q + 1)}});
                case 2: return detail::fv(1, {{7, q * (2 * q + 1)}, {37, (q + 1) * (2 * q + 1)}});
                default: return detail::fv(2, {{7, 2 * q * (q + 1)}, {37, 2 * q * (q + 2) + 2}});
            }
        case 2:
            switch (r) {
                case 0: return detail::fv(1, {{7, q * (2 * q + 1)}, {2, 12 * q * q - 2 * q}});
                case 1: return detail::fv(5, {{7, q * (2 * q + 2)}, {2, 12 * q * q + 4 * q}});
                case 2: return detail::fv(1, {{7, q * (2 * q + 3) + 1}, {2, 12 * q * q + 10 * q + 2}});
                default: return detail::fv(1, {{7, q * (2 * q + 4) + 2}, {2, 12 * q * q + 16 * q + 5}});
            }
        case 3:
            switch (r) {
                case 0: return detail::fv(1, {{7, q * (2 * q - 1)}, {2, q * (12 * q + 2)}});
                case 1: return detail::fv(1, {{7, 2 * q * q}, {2, q * (12 * q + 8) + 1}});
                case 2: return detail::fv(1, {{7, q * (2 * q + 1)}, {2, q * (12 * q + 14) + 4}});
                default: return detail::fv(5, {{7, 2 * q * (q + 1)}, {2, q * (12 * q + 20) + 8}});
            }
        case 4:
            switch (r) {
                case 0: {
                    long e = q * (2 * q - 1);
                    return detail::fv(1, {{2, e}, {5, e}, {31, q * (2 * q + 1)}});
                }
                case 1: return detail::fv(1, {{2, 2 * q * q}, {5, 2 * q * q}, {31, 2 * q * (q + 1)}});
                case 2: {
                    long e = q * (2 * q + 1);
                    return detail::fv(1, {{2, e}, {5, e}, {31, (q + 1) * (2 * q + 1)}});
                }
                default: {
                    long e = 2 * q * (q + 1);
                    return detail::fv(1, {{2, e}, {5, e}, {31, 2 * (q + 1) * (q + 1)}});
                }
            }
        default: throw std::invalid_argument("S-region family must be 1..4");
    }
}

/// T(S^(family)_n) / M(AD_n(B_family)).
inline Rational s_region_prefactor(int family, long n) {
    detail::require_nonnegative(n, "order");
    const long k = n / 2;
    const bool odd = n % 2 == 1;
    const long spiders = odd ? (k + 1) * (k + 1) + k * k : 2 * k * k;
    switch (family) {
        case 1: return pow(Rational(2), spiders);
        case 2: return pow(Rational(2), n * n);
        case 3: return pow(Rational(5), spiders);
        case 4: return pow(Rational(2), odd ? (k + 1) * (3 * k + 1) : 3 * k * k);
        default: throw std::invalid_argument("S-region family must be 1..4");
    }
}

inline FactoredValue s_region_count(int family, long n) {
    FactoredValue closed = s_region_closed_form(family, n);
    Rational route = s_region_prefactor(family, n) *
                     evaluate(s_family_pattern(family), static_cast<std::size_t>(n));
    detail::cross_check("T(S^(" + std::to_string(family) + ")_" + std::to_string(n) + ")", closed.value(),
                        route);
    return closed;
}

// --------------------------------------------------------------- Q regions

inline FactoredValue q_closed_form(long n) {
    detail::require_nonnegative(n, "order");
    if (n % 4 == 0) {
        long q = n / 4;
        return detail::fv(1, {{3, 4 * q * q}, {29, 4 * q * q}});
    }
    if (n % 8 == 2) {
        long q = n / 8;
        return detail::fv(1, {{3, 2 * q * (8 * q + 4)}, {29, (4 * q + 1) * (4 * q + 1)}});
    }
    if (n % 8 == 6) {
        long q = n / 8;
        return detail::fv(1, {{3, 8 * (q + 1) * (2 * q + 1) + 2}, {29, (4 * q + 3) * (4 * q + 3)}});
    }
    const long q = n / 4;
    if (n % 4 == 1) return detail::fv(2, {{3, 2 * q * (2 * q + 1)}, {29, 2 * q * (2 * q + 1)}});
    return detail::fv(5, {{3, (2 * q + 1) * (2 * q + 2)}, {29, (2 * q + 1) * (2 * q + 2)}});
}

/// T(Q_n) / M(AD_n(C_0)).
inline Rational q_prefactor(long n) {
    detail::require_nonnegative(n, "order");
    const long k = n / 2;
    if (n % 2 == 0) return pow(Rational(10), 2 * k * k);
    return pow(Rational(5), (k + 1) * (k + 1) + k * k) * pow(Rational(2), 2 * k * (k + 1));
}

inline FactoredValue q_count(long n) {
    FactoredValue closed = q_closed_form(n);
    Rational route = q_prefactor(n) * evaluate(q_pattern(), static_cast<std::size_t>(n));
    detail::cross_check("T(Q_" + std::to_string(n) + ")", closed.value(), route);
    return closed;
}

/// M(AD_n(block_c_pattern(a, b, c, d))), n = a.size(). For odd n the
/// product of Delta_i^{-k} runs over i = 1..2k+1.
inline Rational blockC_formula(const RationalVector& a, const RationalVector& b, const RationalVector& c,
                               const RationalVector& d) {
    const long n = static_cast<long>(a.size());
    detail::require_same_length(a.size(), {&b, &c, &d});
    auto A = [&](long i) -> const Rational& { return a[i - 1]; };
    auto B = [&](long i) -> const Rational& { return b[i - 1]; };
    auto C = [&](long i) -> const Rational& { return c[i - 1]; };
    auto D = [&](long i) -> const Rational& { return d[i - 1]; };
    std::vector<Rational> delta(n + 1);
    for (long i = 1; i <= n; ++i) delta[i] = A(i) * C(i) + B(i) * D(i);
    const long k = n / 2;
    Rational v = 1;
    if (n % 2 == 0) {
        for (long i = 1; i <= k; ++i)
            v *= pow(A(i), k - i + 1) * pow(B(2 * k + 1 - i), k + 1 - i) * pow(C(2 * k + 1 - i), k - i) *
                 pow(D(i), k - i);
        for (long i = 1; i <= 2 * k; ++i) v *= pow(delta[i], -k);
        for (long i = 1; i <= k - 1; ++i) v *= pow(delta[i] + delta[i + 1], i);
        for (long i = 1; i <= k; ++i) v *= pow(delta[2 * k - i] + delta[2 * k - i + 1], i);
        return v;
    }
    for (long i = 1; i <= k + 1; ++i)
        v *= pow(A(i), k - i + 1) * pow(B(2 * k + 2 - i), k + 1 - i) * pow(C(2 * k + 2 - i), k + 1 - i) *
             pow(D(i), k + 1 - i);
    v *= delta[k + 1];
    for (long i = 1; i <= 2 * k + 1; ++i) v *= pow(delta[i], -k);
    for (long i = 1; i <= k; ++i) v *= pow(delta[i] + delta[i + 1], i);
    for (long i = 1; i <= k; ++i) v *= pow(delta[2 * k + 1 - i] + delta[2 * k + 2 - i], i);
    return v;
}

// -------------------------------------------------------------- N pattern

struct NParams {
    Rational a, b, c, d, x, y, z, t;
};

namespace detail {

struct NInvariants {
    Rational d0, d1, d2, c1, c2, c3, c4;
};

inline NInvariants n_invariants(const NParams& p) {
    NInvariants v;
    v.d1 = p.a * p.c + p.b * p.d;
    v.d2 = p.x * p.z + p.y * p.t;
    v.d0 = v.d1 + v.d2;
    v.c1 = p.x * p.t * v.d1 * v.d1 + p.a * p.d * v.d2 * v.d2;
    v.c2 = p.y * p.z * v.d1 * v.d1 + p.b * p.c * v.d2 * v.d2;
    v.c3 = p.a * p.c * v.d2 * v.d2 + p.y * p.t * v.d1 * v.d1;
    v.c4 = p.b * p.d * v.d2 * v.d2 + p.x * p.z * v.d1 * v.d1;
    return v;
}

}  // namespace detail

/// The eight initial values M(AD_0..7(N)) as printed, including the two
/// that disagree with the reduction engine (orders 6 and 7).
inline Rational n_pattern_printed_initial(const NParams& p, long m) {
    const auto v = detail::n_invariants(p);
    const Rational abcd = p.a * p.b * p.c * p.d;
    switch (m) {
        case 0: return 1;
        case 1: return v.d1;
        case 2: return v.c3;
        case 3: return p.a * p.d * v.d0 * v.d2 * v.c1;
        case 4: return p.a * p.d * p.x * p.t * pow(v.d0, 2) * pow(v.c1, 2);
        case 5: return abcd * p.x * p.t * pow(v.d0, 3) * pow(v.c1, 2) * v.c2;
        case 6: return abcd * p.x * p.y * p.z * p.t * pow(v.d0, 4) * v.d2 * pow(v.c1, 2) * pow(v.c2, 2);
        case 7:
            return pow(p.a, 2) * p.b * p.c * pow(p.d, 2) * pow(p.x, 2) * p.y * p.z * pow(p.t, 2) * pow(v.d0, 6) *
                   v.d1 * pow(v.c1, 3) * pow(v.c2, 2);
        default: throw std::out_of_range("printed initial values cover orders 0..7");
    }
}

/// M(AD_m(N)) from the initial values and the four mod-4 recurrences. The
/// order-6 value carries (bd+xz) and the order-7 value (ad+xt).
inline Rational n_pattern_value(const NParams& p, long m) {
    detail::require_nonnegative(m, "order");
    const auto v = detail::n_invariants(p);
    const Rational adxt = p.a * p.d * p.x * p.t, bcyz = p.b * p.c * p.y * p.z;
    if (m <= 5) return n_pattern_printed_initial(p, m);
    if (m == 6) return adxt * bcyz * pow(v.d0, 4) * (p.b * p.d + p.x * p.z) * pow(v.c1, 2) * pow(v.c2, 2);
    if (m == 7)
        return pow(adxt, 2) * bcyz * pow(v.d0, 6) * (p.a * p.d + p.x * p.t) * pow(v.c1, 3) * pow(v.c2, 2);
    const long n = m / 4;
    const Rational s1 = p.a * p.d + p.x * p.t, s2 = p.b * p.c + p.y * p.z;
    Rational f;
    switch (m % 4) {
        case 0:
            f = pow(v.d0, 8 * n - 8) * pow(s1, 2 * n - 2) * pow(s2, 2 * n - 4) * pow(v.c1, 2 * n) *
                pow(v.c2, 2 * n - 2) * pow(adxt, 2 * n - 1) * pow(bcyz, 2 * n - 3);
            break;
        case 1:
            f = pow(v.d0, 8 * n - 6) * pow(s1, 2 * n - 2) * pow(s2, 2 * n - 3) * pow(v.c1, 2 * n) *
                pow(v.c2, 2 * n - 1) * pow(adxt, 2 * n - 1) * pow(bcyz, 2 * n - 2);
            break;
        case 2:
            f = pow(v.d0, 8 * n - 4) * pow(s1, 2 * n - 2) * pow(s2, 2 * n - 2) * pow(v.c1, 2 * n) *
                pow(v.c2, 2 * n) * pow(adxt * bcyz, 2 * n - 1);
            break;
        default:
            f = pow(v.d0, 8 * n - 2) * pow(s1, 2 * n - 1) * pow(s2, 2 * n - 2) * pow(v.c1, 2 * n + 1) *
                pow(v.c2, 2 * n) * pow(adxt, 2 * n) * pow(bcyz, 2 * n - 1);
            break;
    }
    return f * n_pattern_value(p, m - 8);
}

inline WeightPattern n_pattern(const NParams& p) {
    return n_pattern(p.a, p.b, p.c, p.d, p.x, p.y, p.z, p.t);
}

/// Printed initial values that disagree with evaluate(N, m), m = 0..7.
inline std::vector<Discrepancy> n_pattern_discrepancies(const NParams& p) {
    std::vector<Discrepancy> out;
    for (long m = 0; m <= 7; ++m) {
        Rational printed = n_pattern_printed_initial(p, m);
        Rational ev = evaluate(n_pattern(p), static_cast<std::size_t>(m));
        if (printed != ev) out.push_back({"N-pattern initial value", m, printed, ev});
    }
    return out;
}

// ------------------------------------------------------ triangular lattice

inline FactoredValue tri_closed_form(long n) {
    if (n < 1) throw std::invalid_argument("triangular region order must be positive");
    return detail::fv(1, {{3, n * (n + 1)}, {2, (n + 1) * (n + 1)}});
}

/// T(R_n); checked against 2^{3n^2+4n+1} evaluate(A, 2n) and against
/// M(AD_2n(A)) = 3^{n(n+1)} 2^{-2n(n+1)}.
inline FactoredValue tri_count(long n) {
    FactoredValue closed = tri_closed_form(n);
    const Rational m = evaluate(tri_pattern(), static_cast<std::size_t>(2 * n));
    detail::cross_check("M(AD_" + std::to_string(2 * n) + "(A))",
                        pow(Rational(3), n * (n + 1)) * pow(Rational(2), -2 * n * (n + 1)), m);
    detail::cross_check("T(R_" + std::to_string(n) + ")", closed.value(),
                        pow(Rational(2), 3 * n * n + 4 * n + 1) * m);
    return closed;
}

}  // namespace tiling
