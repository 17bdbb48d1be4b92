// Batch cross-validation: every case computes one quantity by two routes
// and records whether they agree exactly.
#pragma once

#include "tiling/closed_forms.hpp"
#include "tiling/matching.hpp"
#include "tiling/regions.hpp"
#include "tiling/rewrite.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiling {

struct VerificationReport {
    std::string suite;
    std::string case_id;
    Rational route_a;
    Rational route_b;
    bool equal = false;
    double runtime_ms = 0;
};

struct VerifyOptions {
    std::optional<long> n;      // size cap, suite-specific default
    std::optional<long> cases;  // random cases, suite-specific default
    std::uint64_t seed = 0;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle-vs-reduce", "stanley", "fortress", "zigzag", "blum",
                                                "powers",           "npattern", "tri",     "lemmas", "all"};
    return names;
}

using Rng = std::mt19937_64;
using Routes = std::pair<Rational, Rational>;

/// Positive rational num/den with 1 <= num <= max_num, 1 <= den <= max_den.
inline Rational random_rational(Rng& rng, long max_num = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline RationalVector random_vector(Rng& rng, std::size_t n) {
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng));
    return v;
}

inline WeightPattern random_pattern(Rng& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return WeightPattern(std::move(m));
}

// ------------------------------------------------------------ lemma cases

enum class Lemma { forced_edge, vertex_split, edge_replace, star, spider_full, spider_corner, spider_side, city };

inline const std::vector<std::pair<Lemma, std::string>>& lemma_names() {
    static const std::vector<std::pair<Lemma, std::string>> names{
        {Lemma::forced_edge, "forced-edge"},     {Lemma::vertex_split, "vertex-splitting"},
        {Lemma::edge_replace, "edge-replacing"}, {Lemma::star, "star"},
        {Lemma::spider_full, "spider-full"},     {Lemma::spider_corner, "spider-three-legs"},
        {Lemma::spider_side, "spider-two-legs"}, {Lemma::city, "city"}};
    return names;
}

/// A graph and its rewrite: M(before) = factor * M(after).
struct LemmaInstance {
    WeightedGraph before;
    WeightedGraph after;
    Rational factor;
};

namespace detail {

// Adds `extra` fresh vertices and random weighted edges among them and the
// attachment vertices; pads to an even vertex count.
inline void random_host(Rng& rng, WeightedGraph& g, std::vector<VertexId> attach, std::size_t extra) {
    for (std::size_t i = 0; i < extra; ++i) attach.push_back(g.add_vertex());
    if (g.vertex_count() % 2) attach.push_back(g.add_vertex());
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < attach.size(); ++i)
        for (std::size_t j = i + 1; j < attach.size(); ++j)
            if (coin(rng)) g.add_edge(attach[i], attach[j], random_rational(rng));
}

inline WeightedGraph random_graph(Rng& rng, std::size_t vertices, double p, bool parallel) {
    WeightedGraph g;
    for (std::size_t i = 0; i < vertices; ++i) g.add_vertex();
    std::bernoulli_distribution coin(p), twice(parallel ? 0.4 : 0.0);
    for (VertexId u = 0; u < vertices; ++u)
        for (VertexId v = u + 1; v < vertices; ++v)
            if (coin(rng)) {
                g.add_edge(u, v, random_rational(rng));
                if (twice(rng)) g.add_edge(u, v, random_rational(rng));
            }
    return g;
}

inline LemmaInstance lemma_attempt(Lemma lemma, Rng& rng) {
    std::uniform_int_distribution<std::size_t> extra(0, 3);
    switch (lemma) {
        case Lemma::forced_edge: {
            WeightedGraph g = random_graph(rng, 6, 0.5, false);
            VertexId u = std::uniform_int_distribution<VertexId>(0, 5)(rng);
            VertexId p = g.add_vertex(), q = g.add_vertex();
            g.add_edge(p, u, random_rational(rng));
            g.add_edge(q, (u + 1) % 6, random_rational(rng));
            auto fe = eliminate_forced(g);
            return {g, fe.residual, fe.factor};
        }
        case Lemma::vertex_split: {
            WeightedGraph g = random_graph(rng, 6, 0.6, false);
            VertexId v = std::uniform_int_distribution<VertexId>(0, 5)(rng);
            std::set<VertexId> keep, move;
            std::bernoulli_distribution coin(0.5);
            for (VertexId h : g.neighbors(v)) (coin(rng) ? keep : move).insert(h);
            return {g, vertex_split(g, v, keep, move), Rational(1)};
        }
        case Lemma::edge_replace: {
            WeightedGraph g = random_graph(rng, 6, 0.6, true);
            return {g, merge_parallel(g), Rational(1)};
        }
        case Lemma::star: {
            WeightedGraph g = random_graph(rng, 6, 0.6, false);
            VertexId v = std::uniform_int_distribution<VertexId>(0, 5)(rng);
            auto r = star_scale(g, v, random_rational(rng));
            return {g, std::move(r.graph), r.receipt.factor};
        }
        case Lemma::spider_full:
        case Lemma::spider_corner:
        case Lemma::spider_side: {
            const std::size_t legs = lemma == Lemma::spider_full ? 4 : lemma == Lemma::spider_corner ? 3 : 2;
            const SpiderVariant variant = legs == 4   ? SpiderVariant::full
                                          : legs == 3 ? SpiderVariant::missing_corner
                                                      : SpiderVariant::missing_side;
            WeightedGraph g;
            SpiderCell cell;
            for (std::size_t k = 0; k < legs; ++k) cell.inner.push_back(g.add_vertex());
            for (std::size_t k = 0; k < legs; ++k) {
                cell.outer.push_back(g.add_vertex());
                g.add_edge(cell.outer[k], cell.inner[k], 1);
            }
            const std::size_t sides = legs == 4 ? 4 : legs - 1;
            for (std::size_t k = 0; k < sides; ++k)
                g.add_edge(cell.inner[k], cell.inner[(k + 1) % legs], legs == 4 ? random_rational(rng) : Rational(1));
            random_host(rng, g, cell.outer, extra(rng));
            auto r = urban_renewal(g, cell, variant);
            return {g, std::move(r.graph), r.receipt.factor};
        }
        case Lemma::city: {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            CityGraph c = build_city({k, CityKind::extended}, random_rational(rng));
            std::vector<VertexId> ends{c.roles.west, c.roles.east};
            ends.insert(ends.end(), c.roles.ups.begin(), c.roles.ups.end());
            ends.insert(ends.end(), c.roles.downs.begin(), c.roles.downs.end());
            random_host(rng, c.graph, ends, extra(rng));
            auto r = city_replace(c.graph, c.roles);
            return {c.graph, std::move(r.graph), r.receipt.factor};
        }
    }
    throw std::logic_error("unhandled lemma");
}

}  // namespace detail

/// A random small embedding of the lemma's gadget. Retries a bounded
/// number of times to avoid hosts without perfect matchings.
inline LemmaInstance random_lemma_instance(Lemma lemma, Rng& rng) {
    LemmaInstance inst = detail::lemma_attempt(lemma, rng);
    for (int attempt = 0; attempt < 50 && matching_gen_fn(inst.before) == 0; ++attempt)
        inst = detail::lemma_attempt(lemma, rng);
    return inst;
}

// ------------------------------------------------------------------ suites

namespace detail {

class SuiteRun {
public:
    explicit SuiteRun(std::string suite) : suite_(std::move(suite)) {}

    template <class F>
    void check(const std::string& case_id, F&& routes) {
        auto start = std::chrono::steady_clock::now();
        std::pair<Rational, Rational> r = routes();
        std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        out_.push_back({suite_, case_id, r.first, r.second, r.first == r.second, elapsed.count()});
    }

    std::vector<VerificationReport> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<VerificationReport> out_;
};

inline std::string pad2(long i) {
    std::ostringstream s;
    s << std::setw(2) << std::setfill('0') << i;
    return s.str();
}

inline std::vector<VerificationReport> suite_oracle(const VerifyOptions& o) {
    SuiteRun run("oracle-vs-reduce");
    Rng rng(o.seed);
    const long cap = o.n.value_or(4), cases = o.cases.value_or(50);
    for (long c = 0; c < cases; ++c) {
        WeightPattern p = random_pattern(rng, 4, 4);
        for (long n = 1; n <= cap; ++n) {
            WeightMatrix m = tile_pattern(p, static_cast<std::size_t>(n));
            run.check("pattern " + pad2(c) + " n=" + std::to_string(n), [&] {
                return Routes{matching_gen_fn(build_aztec_graph(m)), evaluate(m)};
            });
        }
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_stanley(const VerifyOptions& o) {
    SuiteRun run("stanley");
    Rng rng(o.seed);
    const long cap = o.n.value_or(6), cases = o.cases.value_or(20);
    for (long c = 0; c < cases; ++c) {
        const long n = 1 + c % cap;
        WeightPattern s = random_pattern(rng, 2, static_cast<std::size_t>(2 * n));
        run.check("pattern " + pad2(c) + " n=" + std::to_string(n), [&] {
            return Routes{stanley_eval(s, static_cast<std::size_t>(n)), evaluate(s, static_cast<std::size_t>(n))};
        });
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_fortress(const VerifyOptions& o) {
    SuiteRun run("fortress");
    Rng rng(o.seed);
    const long cap = o.n.value_or(6), cases = o.cases.value_or(20);
    for (long m = 1; m <= 40; ++m)
        run.check("yang m=" + std::to_string(m), [&] {
            return Routes{fortress_count(Composition::ones(static_cast<std::size_t>(m)), FortressVariant::plain).value(),
                             yang_fortress(m).value()};
        });
    for (long n = 1; n <= cap; ++n)
        for (const auto& d : Composition::all_of(n))
            for (auto v : {FortressVariant::plain, FortressVariant::bar}) {
                const std::string tag = (v == FortressVariant::bar ? "bar " : "") + d.to_string();
                run.check("prefactor " + tag, [&] {
                    return Routes{fortress_count(d, v).value(),
                                     fortress_prefactor(d, v).value() *
                                         evaluate(fortress_pattern(v, d), static_cast<std::size_t>(n))};
                });
                if (n <= 3)
                    run.check("graph " + tag, [&] {
                        return Routes{matching_gen_fn(build_fortress_graph(d, v)), fortress_count(d, v).value()};
                    });
            }
    for (long c = 0; c < cases; ++c) {
        const long n = 1 + c % 7;
        auto parts = Composition::all_of(n);
        const Composition& d = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
        Rational a = random_rational(rng), b = random_rational(rng);
        run.check("weighted D " + d.to_string() + " case " + pad2(c), [&] {
            return Routes{fortress_pattern_formula(a, b, d),
                             evaluate(fortress_pattern(a, b, d), static_cast<std::size_t>(n))};
        });
    }
    for (long c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(1 + c % 7);
        RationalVector a = random_vector(rng, n), b = random_vector(rng, n), cc = random_vector(rng, n),
                       d = random_vector(rng, n);
        run.check("row pattern " + pad2(c) + " n=" + std::to_string(n), [&] {
            return Routes{weighted_rows_formula(a, b, cc, d), evaluate(rows_pattern(a, b, cc, d), n)};
        });
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_zigzag(const VerifyOptions& o) {
    SuiteRun run("zigzag");
    const long cap = o.n.value_or(12);
    for (bool bar : {false, true})
        for (long n = 0; n <= cap; ++n)
            run.check(std::string(bar ? "Zbar_" : "Z_") + std::to_string(n), [&] {
                return Routes{zigzag_closed_form(n, bar).value(),
                                 pow(Rational(2), zigzag_gamma(n, bar)) *
                                     evaluate(zigzag_pattern(bar), static_cast<std::size_t>(n))};
            });
    for (long n = 0; 3 * n <= cap; ++n)
        run.check("Zbar_" + std::to_string(3 * n) + " = Z_" + std::to_string(3 * n), [&] {
            return Routes{zigzag_closed_form(3 * n, true).value(), zigzag_closed_form(3 * n, false).value()};
        });
    const std::pair<Rational, Rational> points[] = {{make_rational(1, 2), Rational(1)}, {Rational(2), Rational(3)}};
    for (const auto& [a, b] : points)
        for (bool bar : {false, true})
            for (long n = 3; n <= 7; ++n)
                run.check("recurrence " + std::string(bar ? "bar " : "") + "(" + to_display_string(a) + "," +
                              to_display_string(b) + ") n=" + std::to_string(n),
                          [&] {
                              return Routes{zig_recurrence(a, b, n, bar),
                                               evaluate(zig_pattern(a, b, bar), static_cast<std::size_t>(n))};
                          });
    return run.take();
}

inline std::vector<VerificationReport> suite_blum(const VerifyOptions& o) {
    SuiteRun run("blum");
    const long cap = o.n.value_or(6);
    auto mb = [](long n) { return matching_gen_fn(build_brick_graph(static_cast<std::size_t>(n), BrickKind::B)); };
    auto mc = [](long n) { return matching_gen_fn(build_brick_graph(static_cast<std::size_t>(n), BrickKind::C)); };
    for (long n = 1; n <= cap; ++n)
        run.check("oracle B_" + std::to_string(n), [&] { return Routes{mb(n), blum_value(n).value()}; });
    for (long n = 4; n <= 6; ++n)
        run.check("plateau B_" + std::to_string(n) + " = B_3", [&] { return Routes{mb(n), mb(3)}; });
    for (long k = 0; k <= 1; ++k)
        run.check("bridge B_" + std::to_string(5 * k + 2) + " = C_" + std::to_string(3 * k + 1),
                  [&] { return Routes{mb(5 * k + 2), mc(3 * k + 1)}; });
    run.check("bridge B_3 = C_2", [&] { return Routes{mb(3), mc(2)}; });
    for (long n = 1; n <= 200; ++n)
        run.check("coverage n=" + std::to_string(n), [&] {
            return Routes{Rational(blum_coverage(n).has_value() ? 1 : 0), Rational(1)};
        });
    for (long n = 31; n <= 61; ++n)
        run.check("recurrence n=" + std::to_string(n), [&] {
            return Routes{blum_value(n).value(), pow(Rational(3), 4 * blum_x(n)) * blum_value(n - 30).value()};
        });
    return run.take();
}

inline std::vector<VerificationReport> suite_powers(const VerifyOptions& o) {
    SuiteRun run("powers");
    Rng rng(o.seed);
    const long cap = o.n.value_or(8), cases = o.cases.value_or(10);
    for (int f = 1; f <= 4; ++f)
        for (long n = 0; n <= cap; ++n)
            run.check("S" + std::to_string(f) + "_" + std::to_string(n), [&] {
                return Routes{s_region_closed_form(f, n).value(),
                                 s_region_prefactor(f, n) * evaluate(s_family_pattern(f), static_cast<std::size_t>(n))};
            });
    for (long n = 0; n <= cap; ++n)
        run.check("Q_" + std::to_string(n), [&] {
            return Routes{q_closed_form(n).value(), q_prefactor(n) * evaluate(q_pattern(), static_cast<std::size_t>(n))};
        });
    for (long c = 0; c < cases; ++c) {
        const long n = c % 8;
        Rational a = random_rational(rng), b = random_rational(rng), cc = random_rational(rng), d = random_rational(rng);
        run.check("abcd " + pad2(c) + " n=" + std::to_string(n), [&] {
            return Routes{abcd_formula(a, b, cc, d, n),
                             evaluate(abcd_pattern(a, b, cc, d), static_cast<std::size_t>(n))};
        });
    }
    for (long c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(1 + c % 6);
        RationalVector a = random_vector(rng, n), b = random_vector(rng, n), cc = random_vector(rng, n),
                       d = random_vector(rng, n);
        run.check("block " + pad2(c) + " n=" + std::to_string(n), [&] {
            return Routes{blockC_formula(a, b, cc, d), evaluate(block_c_pattern(a, b, cc, d), n)};
        });
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_npattern(const VerifyOptions& o) {
    SuiteRun run("npattern");
    Rng rng(o.seed);
    const long cap = o.n.value_or(9), cases = o.cases.value_or(10);
    for (long c = 0; c < cases; ++c) {
        NParams p{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng),
                  random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
        for (long m = 0; m <= cap; ++m)
            run.check("params " + pad2(c) + " m=" + std::to_string(m), [&] {
                return Routes{n_pattern_value(p, m), evaluate(n_pattern(p), static_cast<std::size_t>(m))};
            });
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_tri(const VerifyOptions& o) {
    SuiteRun run("tri");
    const long cap = o.n.value_or(5);
    for (long n = 1; n <= cap; ++n) {
        const Rational m = evaluate(tri_pattern(), static_cast<std::size_t>(2 * n));
        run.check("R_" + std::to_string(n), [&] {
            return Routes{tri_closed_form(n).value(), pow(Rational(2), 3 * n * n + 4 * n + 1) * m};
        });
        run.check("AD_" + std::to_string(2 * n) + "(A)", [&] {
            return Routes{m, pow(Rational(3), n * (n + 1)) * pow(Rational(2), -2 * n * (n + 1))};
        });
    }
    return run.take();
}

inline std::vector<VerificationReport> suite_lemmas(const VerifyOptions& o) {
    SuiteRun run("lemmas");
    Rng rng(o.seed);
    const long cases = o.cases.value_or(25), cap = o.n.value_or(4);
    for (const auto& [lemma, name] : lemma_names())
        for (long c = 0; c < cases; ++c) {
            LemmaInstance inst = random_lemma_instance(lemma, rng);
            run.check(name + " " + pad2(c), [&] {
                return Routes{matching_gen_fn(inst.before), inst.factor * matching_gen_fn(inst.after)};
            });
        }
    const Rational ts[] = {make_rational(1, 3), Rational(2), make_rational(7, 5)};
    WeightPattern p = random_pattern(rng, 4, 4);
    for (long n = 1; n <= cap; ++n) {
        const std::size_t un = static_cast<std::size_t>(n);
        WeightMatrix m = tile_pattern(p, un);
        const Rational base = evaluate(m);
        for (const auto& t : ts) {
            const std::string ts_str = " t=" + to_display_string(t) + " n=" + std::to_string(n);
            for (auto axis : {Axis::rows, Axis::columns}) {
                const std::string ax = axis == Axis::rows ? "rows" : "columns";
                for (std::size_t part = 0; part <= un; ++part)
                    run.check("separator " + ax + " part " + std::to_string(part) + ts_str, [&] {
                        return Routes{evaluate(scale_separator_part(m, axis, part, t)), pow(t, n) * base};
                    });
                for (std::size_t part = 0; part < un; ++part)
                    run.check("pair " + ax + " part " + std::to_string(part) + ts_str, [&] {
                        return Routes{evaluate(scale_pair_part(m, axis, part, t)), pow(t, n + 1) * base};
                    });
            }
            for (std::size_t i = 0; i <= un; ++i)
                for (std::size_t j = 0; j < un; ++j)
                    run.check("block (" + std::to_string(i) + "," + std::to_string(j) + ")" + ts_str, [&] {
                        return Routes{evaluate(scale_cell_block(m, i, j, t)), t * base};
                    });
        }
    }
    return run.take();
}

}  // namespace detail

/// Runs one suite (or "all") sequentially, cases in a fixed order.
inline std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& o = {}) {
    if (name == "oracle-vs-reduce") return detail::suite_oracle(o);
    if (name == "stanley") return detail::suite_stanley(o);
    if (name == "fortress") return detail::suite_fortress(o);
    if (name == "zigzag") return detail::suite_zigzag(o);
    if (name == "blum") return detail::suite_blum(o);
    if (name == "powers") return detail::suite_powers(o);
    if (name == "npattern") return detail::suite_npattern(o);
    if (name == "tri") return detail::suite_tri(o);
    if (name == "lemmas") return detail::suite_lemmas(o);
    if (name == "all") {
        std::vector<VerificationReport> out;
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            auto part = run_suite(s, VerifyOptions{std::nullopt, std::nullopt, o.seed});
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw UnknownSuite("unknown suite '" + name + "'");
}

inline bool all_equal(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.equal) return false;
    return true;
}

/// suite<TAB>case<TAB>num/den<TAB>num/den<TAB>equal|unequal
inline std::string to_record(const VerificationReport& r) {
    return r.suite + '\t' + r.case_id + '\t' + to_fraction_string(r.route_a) + '\t' +
           to_fraction_string(r.route_b) + '\t' + (r.equal ? "equal" : "unequal");
}

inline VerificationReport parse_record(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    if (fields.size() != 5) throw std::invalid_argument("record needs 5 tab-separated fields");
    if (fields[4] != "equal" && fields[4] != "unequal")
        throw std::invalid_argument("bad equality flag '" + fields[4] + "'");
    VerificationReport r;
    r.suite = fields[0];
    r.case_id = fields[1];
    r.route_a = parse_rational(fields[2]);
    r.route_b = parse_rational(fields[3]);
    r.equal = fields[4] == "equal";
    return r;
}

inline std::string format_records(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += to_record(r) + '\n';
    return out;
}

inline std::string format_text(const std::vector<VerificationReport>& reports) {
    std::size_t wsuite = 5, wcase = 4;
    for (const auto& r : reports) {
        wsuite = std::max(wsuite, r.suite.size());
        wcase = std::max(wcase, r.case_id.size());
    }
    auto shorten = [](std::string s) { return s.size() > 32 ? s.substr(0, 14) + "..." + s.substr(s.size() - 14) : s; };
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(wsuite)) << "suite" << "  " << std::setw(static_cast<int>(wcase))
        << "case" << "  " << std::setw(32) << "route A" << "  " << std::setw(32) << "route B" << "  "
        << std::setw(7) << "equal" << "  ms\n";
    std::size_t bad = 0;
    for (const auto& r : reports) {
        if (!r.equal) ++bad;
        out << std::setw(static_cast<int>(wsuite)) << r.suite << "  " << std::setw(static_cast<int>(wcase))
            << r.case_id << "  " << std::setw(32) << shorten(to_display_string(r.route_a)) << "  " << std::setw(32)
            << shorten(to_display_string(r.route_b)) << "  " << std::setw(7) << (r.equal ? "yes" : "NO") << "  "
            << std::fixed << std::setprecision(2) << r.runtime_ms << '\n';
    }
    out << reports.size() << " cases, " << bad << " unequal\n";
    return out.str();
}

}  // namespace tiling
