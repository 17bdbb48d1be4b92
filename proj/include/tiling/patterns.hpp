// The periodic weight patterns behind the closed forms.
#pragma once

#include "tiling/aztec.hpp"
#include "tiling/composition.hpp"

#include <stdexcept>
#include <vector>

namespace tiling {

using RationalVector = std::vector<Rational>;

inline WeightPattern all_ones_pattern() {
    return WeightPattern(RationalMatrix(2, 2, Rational(1)));
}

/// [x_1 y_1 ... x_n y_n; t_1 w_1 ... t_n w_n]
inline WeightPattern stanley_pattern(const RationalVector& x, const RationalVector& y,
                                     const RationalVector& t, const RationalVector& w) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n || t.size() != n || w.size() != n)
        throw std::invalid_argument("stanley pattern needs four nonempty vectors of equal length");
    RationalMatrix m(2, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(0, 2 * i) = x[i];
        m(0, 2 * i + 1) = y[i];
        m(1, 2 * i) = t[i];
        m(1, 2 * i + 1) = w[i];
    }
    return WeightPattern(std::move(m));
}

/// Rows (a b), (a b), (c d), (c d) repeated over i = 1..n.
inline WeightPattern rows_pattern(const RationalVector& a, const RationalVector& b,
                                  const RationalVector& c, const RationalVector& d) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n || c.size() != n || d.size() != n)
        throw std::invalid_argument("row pattern needs four nonempty vectors of equal length");
    RationalMatrix m(4, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < 2; ++r) {
            m(r, 2 * i) = a[i];
            m(r, 2 * i + 1) = b[i];
            m(r + 2, 2 * i) = c[i];
            m(r + 2, 2 * i + 1) = d[i];
        }
    }
    return WeightPattern(std::move(m));
}

/// D_{a,b}(d_1..d_m): 4 x 2n, block i is a-over-b for odd i and b-over-a
/// for even i.
inline WeightPattern fortress_pattern(const Rational& a, const Rational& b, const Composition& d) {
    RationalVector top, bottom;
    for (std::size_t i = 1; i <= d.size(); ++i) {
        const bool odd = i % 2 == 1;
        for (long c = 0; c < d.part(i); ++c) {
            top.push_back(odd ? a : b);
            bottom.push_back(odd ? b : a);
        }
    }
    return rows_pattern(top, top, bottom, bottom);
}

inline WeightPattern fortress_pattern(FortressVariant v, const Composition& d) {
    return v == FortressVariant::plain ? fortress_pattern(make_rational(1, 2), 1, d)
                                       : fortress_pattern(1, make_rational(1, 2), d);
}

/// The 8 x 8 zigzag patterns B (bar = false) and B-bar in the weights a, b.
inline WeightPattern zig_pattern(const Rational& a, const Rational& b, bool bar) {
    const Rational* rows[4][8] = {
        {&a, &a, &b, &b, &b, &b, &a, &a},
        {&a, &a, &a, &a, &b, &b, &b, &b},
        {&b, &b, &a, &a, &a, &a, &b, &b},
        {&b, &b, &b, &b, &a, &a, &a, &a},
    };
    RationalMatrix m(8, 8);
    for (std::size_t r = 0; r < 8; ++r) {
        std::size_t src = ((r / 2) + (bar ? 2 : 0)) % 4;
        for (std::size_t c = 0; c < 8; ++c) m(r, c) = *rows[src][c];
    }
    return WeightPattern(std::move(m));
}

/// A (bar = false) or A-bar: the zigzag patterns at a = 1/2, b = 1.
inline WeightPattern zigzag_pattern(bool bar) { return zig_pattern(make_rational(1, 2), 1, bar); }

/// [a b c d; b a d c; d c b a; c d a b]
inline WeightPattern abcd_pattern(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) {
    return WeightPattern(RationalMatrix{{a, b, c, d}, {b, a, d, c}, {d, c, b, a}, {c, d, a, b}});
}

/// B_1..B_4 for the four S-region families.
inline WeightPattern s_family_pattern(int family) {
    const Rational h = make_rational(1, 2), th = make_rational(3, 2);
    switch (family) {
        case 1: return abcd_pattern(th, h, 1, 1);
        case 2: return abcd_pattern(h, th, h, h);
        case 3: return abcd_pattern(make_rational(1, 5), make_rational(3, 5), 1, 1);
        case 4:
            return WeightPattern(
                RationalMatrix{{h, h, h, th}, {h, h, th, h}, {th, h, 1, 1}, {h, th, 1, 1}});
        default: throw std::invalid_argument("S-region family must be 1..4");
    }
}

/// Block pattern C built from columns A_i = [a_i b_i; d_i c_i; d_i/D_i c_i/D_i;
/// a_i/D_i b_i/D_i] with D_i = a_i c_i + b_i d_i.
inline WeightPattern block_c_pattern(const RationalVector& a, const RationalVector& b,
                                     const RationalVector& c, const RationalVector& d) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n || c.size() != n || d.size() != n)
        throw std::invalid_argument("block pattern needs four nonempty vectors of equal length");
    RationalMatrix m(4, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational delta = a[i] * c[i] + b[i] * d[i];
        if (delta == 0) throw MathError("block pattern column " + std::to_string(i + 1) + " has a*c+b*d = 0");
        m(0, 2 * i) = a[i];
        m(0, 2 * i + 1) = b[i];
        m(1, 2 * i) = d[i];
        m(1, 2 * i + 1) = c[i];
        m(2, 2 * i) = d[i] / delta;
        m(2, 2 * i + 1) = c[i] / delta;
        m(3, 2 * i) = a[i] / delta;
        m(3, 2 * i + 1) = b[i] / delta;
    }
    return WeightPattern(std::move(m));
}

struct BlockVectors {
    RationalVector a, b, c, d;
};

/// The period-4 column data whose block pattern is the Q-region pattern C_0.
inline BlockVectors q_block_vectors(std::size_t n) {
    const Rational quads[4][2] = {{make_rational(1, 5), make_rational(3, 5)},
                                  {make_rational(3, 2), make_rational(1, 2)},
                                  {make_rational(3, 5), make_rational(1, 5)},
                                  {make_rational(1, 2), make_rational(3, 2)}};
    BlockVectors v;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& q = quads[i % 4];
        v.a.push_back(q[0]);
        v.c.push_back(q[0]);
        v.b.push_back(q[1]);
        v.d.push_back(q[1]);
    }
    return v;
}

inline WeightPattern q_pattern() {
    BlockVectors v = q_block_vectors(4);
    return block_c_pattern(v.a, v.b, v.c, v.d);
}

/// The eight-parameter pattern N. Every block has cell-factor ac+bd or
/// xz+yt; a = c = 1/5, b = d = 3/5, x = z = 3/2, y = t = 1/2 gives C_0.
inline WeightPattern n_pattern(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d, const Rational& x, const Rational& y,
                               const Rational& z, const Rational& t) {
    return WeightPattern(RationalMatrix{{a, b, x, y, b, a, y, x},
                                        {d, c, t, z, c, d, z, t},
                                        {x, y, a, b, y, x, b, a},
                                        {t, z, d, c, z, t, c, d}});
}

/// The triangular-lattice pattern; contains zeros.
inline WeightPattern tri_pattern() {
    const Rational h = make_rational(1, 2), th = make_rational(3, 2);
    return WeightPattern(RationalMatrix{{h, h, h, h}, {h, 1, 0, h}, {th, 0, 1, h}, {th, th, h, h}});
}

}  // namespace tiling
