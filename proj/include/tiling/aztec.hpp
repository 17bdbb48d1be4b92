// Weighted Aztec diamonds as 2n x 2n weight matrices and the reduction
// (generalized domino shuffling) that evaluates them exactly.
//
// Layout: the cells of AD_n are the 2x2 blocks at rows {2i, 2i+1} and
// columns {2j, 2j+1}. A block [x w; y z] lists the cell's edges so that
// x, y, z, w go around the cell in cyclic order; its cell-factor is xz + yw.
#pragma once

#include "tiling/matrix.hpp"
#include "tiling/rational.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiling {

class ZeroCellFactor : public MathError {
public:
    ZeroCellFactor(std::size_t order, std::size_t cell_row, std::size_t cell_col)
        : MathError("zero cell-factor at cell (" + std::to_string(cell_row) + ", " +
                    std::to_string(cell_col) + ") of order " + std::to_string(order)),
          order_(order), cell_row_(cell_row), cell_col_(cell_col) {}

    std::size_t order() const { return order_; }
    std::size_t cell_row() const { return cell_row_; }
    std::size_t cell_col() const { return cell_col_; }

private:
    std::size_t order_;
    std::size_t cell_row_;
    std::size_t cell_col_;
};

/// A k x l periodic seed, k and l even. Entries may be zero as long as the
/// cell-factors met during reduction are not.
class WeightPattern {
public:
    WeightPattern() = default;
    explicit WeightPattern(RationalMatrix entries) : entries_(std::move(entries)) {
        if (entries_.rows() == 0 || entries_.cols() == 0)
            throw std::invalid_argument("weight pattern must be nonempty");
        if (entries_.rows() % 2 || entries_.cols() % 2)
            throw std::invalid_argument("weight pattern needs even dimensions, got " +
                                        std::to_string(entries_.rows()) + "x" +
                                        std::to_string(entries_.cols()));
    }

    std::size_t rows() const { return entries_.rows(); }
    std::size_t cols() const { return entries_.cols(); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
    const RationalMatrix& entries() const { return entries_; }

    WeightPattern scaled(const Rational& s) const { return WeightPattern(entries_.scaled(s)); }

    friend bool operator==(const WeightPattern&, const WeightPattern&) = default;

private:
    RationalMatrix entries_;
};

/// The full 2n x 2n edge-weight array of AD_n.
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
        if (entries_.rows() != entries_.cols() || entries_.rows() % 2)
            throw std::invalid_argument("weight matrix must be square with even side");
    }

    std::size_t order() const { return entries_.rows() / 2; }
    std::size_t side() const { return entries_.rows(); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
    const RationalMatrix& entries() const { return entries_; }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    RationalMatrix entries_;
};

/// entry(i, j) = p(i mod k, j mod l).
inline WeightMatrix tile_pattern(const WeightPattern& p, std::size_t n) {
    RationalMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = p(i % p.rows(), j % p.cols());
    return WeightMatrix(std::move(m));
}

inline Rational cell_factor(const RationalMatrix& m, std::size_t cell_row, std::size_t cell_col) {
    const std::size_t r = 2 * cell_row, c = 2 * cell_col;
    return m(r, c) * m(r + 1, c + 1) + m(r + 1, c) * m(r, c + 1);
}

namespace detail {

// Every block [x w; y z] becomes [z y; w x] / (xz + yw). `factor` collects
// the product of the cell-factors.
inline RationalMatrix block_transform(const RationalMatrix& m, Rational& factor) {
    RationalMatrix out(m.rows(), m.cols());
    factor = 1;
    const std::size_t order = m.rows() / 2;
    for (std::size_t bi = 0; bi < m.rows() / 2; ++bi) {
        for (std::size_t bj = 0; bj < m.cols() / 2; ++bj) {
            const std::size_t r = 2 * bi, c = 2 * bj;
            const Rational delta = cell_factor(m, bi, bj);
            if (delta == 0) throw ZeroCellFactor(order, bi, bj);
            factor *= delta;
            out(r, c) = m(r + 1, c + 1) / delta;
            out(r, c + 1) = m(r + 1, c) / delta;
            out(r + 1, c) = m(r, c + 1) / delta;
            out(r + 1, c + 1) = m(r, c) / delta;
        }
    }
    return out;
}

}  // namespace detail

/// Block inversion followed by a cyclic shift one step up and one step left.
inline WeightPattern delta_pattern(const WeightPattern& p) {
    Rational ignored;
    RationalMatrix b = detail::block_transform(p.entries(), ignored);
    RationalMatrix out(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            out(i, j) = b((i + 1) % p.rows(), (j + 1) % p.cols());
    return WeightPattern(std::move(out));
}

inline WeightPattern delta_pattern(const WeightPattern& p, unsigned times) {
    WeightPattern q = p;
    for (unsigned i = 0; i < times; ++i) q = delta_pattern(q);
    return q;
}

struct ReductionStep {
    WeightMatrix next;
    Rational factor;
};

/// One application of the reduction: M(AD_n(m)) = factor * M(AD_{n-1}(next)).
/// `next` is the interior window of the block-transformed matrix, i.e.
/// next(i, j) = B(i + 1, j + 1).
inline ReductionStep reduce_step(const WeightMatrix& m) {
    if (m.order() == 0) throw std::invalid_argument("cannot reduce an order-0 Aztec diamond");
    Rational factor;
    RationalMatrix b = detail::block_transform(m.entries(), factor);
    const std::size_t side = m.side() - 2;
    RationalMatrix next(side, side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) next(i, j) = b(i + 1, j + 1);
    return {WeightMatrix(std::move(next)), std::move(factor)};
}

/// M(AD_n) for an explicit weight matrix; order 0 evaluates to 1.
inline Rational evaluate(const WeightMatrix& m) {
    Rational value = 1;
    WeightMatrix current = m;
    while (current.order() > 0) {
        ReductionStep step = reduce_step(current);
        value *= step.factor;
        current = std::move(step.next);
    }
    return value;
}

inline Rational evaluate(const WeightPattern& p, std::size_t n) {
    return evaluate(tile_pattern(p, n));
}

/// Short FNV-1a fingerprint of a matrix, for trace output.
inline std::string snapshot_hash(const RationalMatrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        h ^= ';';
        h *= 0x100000001b3ULL;
    };
    mix(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mix(to_fraction_string(m(i, j)));
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

struct TraceStep {
    std::size_t order;        // order of the diamond being reduced
    Rational factor;          // product of its cell-factors
    std::string snapshot;     // fingerprint of its weight matrix
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    Rational value;
};

/// Like evaluate(), keeping each step. A ZeroCellFactor propagates with the
/// order at which it occurred.
inline ReductionTrace trace_reduction(const WeightMatrix& m) {
    ReductionTrace trace;
    trace.value = 1;
    WeightMatrix current = m;
    while (current.order() > 0) {
        std::string snap = snapshot_hash(current.entries());
        ReductionStep step = reduce_step(current);
        trace.steps.push_back({current.order(), step.factor, std::move(snap)});
        trace.value *= step.factor;
        current = std::move(step.next);
    }
    return trace;
}

/// Product formula for the 2 x 2n pattern
///   [x_1 y_1 ... x_n y_n]
///   [t_1 w_1 ... t_n w_n]
/// namely prod_{i <= j} (x_i w_j + y_j t_i).
inline Rational stanley_eval(const WeightPattern& s, std::size_t n) {
    if (s.rows() != 2 || s.cols() != 2 * n)
        throw std::invalid_argument("stanley pattern must be 2 x " + std::to_string(2 * n) + ", got " +
                                    std::to_string(s.rows()) + " x " + std::to_string(s.cols()));
    Rational value = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            value *= s(0, 2 * i) * s(1, 2 * j + 1) + s(0, 2 * j + 1) * s(1, 2 * i);
    return value;
}

enum class Axis { rows, columns };

namespace detail {

inline void require_positive(const Rational& t) {
    if (t <= 0) throw std::invalid_argument("scale factor must be positive, got " + to_display_string(t));
}

inline RationalMatrix scale_lines(const WeightMatrix& m, Axis axis,
                                  const std::vector<std::size_t>& lines, const Rational& t) {
    RationalMatrix out = m.entries();
    for (std::size_t line : lines)
        for (std::size_t k = 0; k < m.side(); ++k) {
            if (axis == Axis::rows) out(line, k) *= t;
            else out(k, line) *= t;
        }
    return out;
}

}  // namespace detail

/// Scales one of the n + 1 separator parts: part 0 is the first line,
/// part n the last, part k (0 < k < n) the lines 2k - 1 and 2k (0-based).
/// Contract: M(old) = t^{-n} M(new).
inline WeightMatrix scale_separator_part(const WeightMatrix& m, Axis axis, std::size_t part,
                                         const Rational& t) {
    detail::require_positive(t);
    const std::size_t n = m.order();
    if (n == 0 || part > n)
        throw std::out_of_range("separator part " + std::to_string(part) + " out of range for order " +
                                std::to_string(n));
    std::vector<std::size_t> lines;
    if (part == 0) lines = {0};
    else if (part == n) lines = {2 * n - 1};
    else lines = {2 * part - 1, 2 * part};
    return WeightMatrix(detail::scale_lines(m, axis, lines, t));
}

/// Scales one of the n pair parts: lines 2p and 2p + 1 (0-based).
/// Contract: M(old) = t^{-n-1} M(new).
inline WeightMatrix scale_pair_part(const WeightMatrix& m, Axis axis, std::size_t part,
                                    const Rational& t) {
    detail::require_positive(t);
    const std::size_t n = m.order();
    if (part >= n)
        throw std::out_of_range("pair part " + std::to_string(part) + " out of range for order " +
                                std::to_string(n));
    return WeightMatrix(detail::scale_lines(m, axis, {2 * part, 2 * part + 1}, t));
}

/// Scales block (i, j), 0 <= i <= n, 0 <= j < n, of the star partition:
/// block row 0 is matrix row 0, block row n is row 2n - 1, block row i in
/// between covers rows 2i - 1 and 2i; block column j covers columns 2j and
/// 2j + 1. Each block is the set of edges at one vertex of AD_n.
/// Contract: M(new) = t M(old).
inline WeightMatrix scale_cell_block(const WeightMatrix& m, std::size_t i, std::size_t j,
                                     const Rational& t) {
    detail::require_positive(t);
    const std::size_t n = m.order();
    if (i > n || j >= n)
        throw std::out_of_range("block (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for order " + std::to_string(n));
    std::vector<std::size_t> rows;
    if (i == 0) rows = {0};
    else if (i == n) rows = {2 * n - 1};
    else rows = {2 * i - 1, 2 * i};
    RationalMatrix out = m.entries();
    for (std::size_t r : rows) {
        out(r, 2 * j) *= t;
        out(r, 2 * j + 1) *= t;
    }
    return WeightMatrix(std::move(out));
}

/// Pattern text: first line "k l", then k rows of l rationals.
inline WeightPattern parse_pattern(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long k = 0, l = 0;
    if (!(in >> k >> l) || k <= 0 || l <= 0)
        throw std::invalid_argument("pattern header must be 'k l' with positive sizes");
    RationalMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < l; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("pattern ends early at row " + std::to_string(i + 1));
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_rational(tok);
        }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing data after pattern: '" + extra + "'");
    return WeightPattern(std::move(m));
}

inline std::string to_text(const WeightPattern& p) {
    std::ostringstream os;
    os << p.rows() << ' ' << p.cols() << '\n';
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) os << (j ? " " : "") << to_fraction_string(p(i, j));
        os << '\n';
    }
    return os.str();
}

}  // namespace tiling
