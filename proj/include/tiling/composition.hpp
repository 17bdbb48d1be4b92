// Compositions (d_1, ..., d_m) parameterizing generalized fortresses.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiling {

enum class FortressVariant { plain, bar };

class Composition {
public:
    explicit Composition(std::vector<long> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
        for (long d : parts_)
            if (d < 1) throw std::invalid_argument("composition parts must be positive");
    }

    static Composition ones(std::size_t m) { return Composition(std::vector<long>(m, 1)); }

    /// Every composition of n, in lexicographic order of parts.
    static std::vector<Composition> all_of(long n) {
        std::vector<Composition> out;
        std::vector<long> cur;
        auto rec = [&](auto&& self, long left) -> void {
            if (left == 0) {
                out.emplace_back(cur);
                return;
            }
            for (long d = 1; d <= left; ++d) {
                cur.push_back(d);
                self(self, left - d);
                cur.pop_back();
            }
        };
        if (n >= 1) rec(rec, n);
        return out;
    }

    const std::vector<long>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    /// d_i with 1-based index.
    long part(std::size_t i) const { return parts_.at(i - 1); }

    /// s_j = d_1 + ... + d_j, s_0 = 0.
    long partial_sum(std::size_t j) const {
        long s = 0;
        for (std::size_t i = 0; i < j; ++i) s += parts_.at(i);
        return s;
    }

    long total() const { return partial_sum(parts_.size()); }

    /// S = sum_j min(s_j, n - s_j).
    long S() const {
        long n = total(), s = 0, out = 0;
        for (long d : parts_) {
            s += d;
            out += std::min(s, n - s);
        }
        return out;
    }

    /// Sum of the parts with odd (1-based) index.
    long theta() const {
        long out = 0;
        for (std::size_t i = 0; i < parts_.size(); i += 2) out += parts_[i];
        return out;
    }

    /// Sum of the parts with even (1-based) index.
    long even_sum() const { return total() - theta(); }

    /// True when s_{2j} < c <= s_{2j+1} for some j, i.e. position c lies in
    /// an odd-indexed part.
    bool in_odd_part(long c) const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            long next = s + parts_[i];
            if (i % 2 == 0 && s < c && c <= next) return true;
            s = next;
        }
        return false;
    }

    /// 1-based index of the part containing position c (1 <= c <= n).
    std::size_t part_of(long c) const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            s += parts_[i];
            if (c <= s) return i + 1;
        }
        throw std::out_of_range("position beyond composition total");
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
        return out + ")";
    }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<long> parts_;
};

}  // namespace tiling
