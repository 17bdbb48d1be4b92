// tiling: count, verify, trace and graph commands.
#include "tiling/tiling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_math = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

tiling::WeightPattern read_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open pattern file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return tiling::parse_pattern(buf.str());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::size_t checked_order(long n) {
    if (n < 0) throw UsageError("order must be nonnegative");
    return static_cast<std::size_t>(n);
}

tiling::Composition composition(const std::vector<long>& parts) {
    try {
        return tiling::Composition(parts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tiling;
    CLI::App app{"Exact tiling and perfect matching counts"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Print a count in factored form and in full");
    count->require_subcommand(1);
    bool fortress_bar = false, zigzag_bar = false;
    std::vector<long> fortress_parts;
    long n_arg = 0;
    std::string pattern_file;

    auto* c_fortress = count->add_subcommand("fortress", "Generalized fortress F(d_1, ..., d_m)");
    c_fortress->add_flag("--bar", fortress_bar, "Use the bar variant");
    c_fortress->add_option("parts", fortress_parts, "Composition d_1 ... d_m")->required();
    auto* c_zigzag = count->add_subcommand("zigzag", "Zigzag region Z_n");
    c_zigzag->add_flag("--bar", zigzag_bar, "Use the bar variant");
    c_zigzag->add_option("n", n_arg, "Order")->required();
    auto* c_yang = count->add_subcommand("yang", "Fortress of order n");
    c_yang->add_option("n", n_arg, "Order")->required();
    std::vector<CLI::App*> c_s;
    for (int f = 1; f <= 4; ++f) {
        auto* s = count->add_subcommand("s" + std::to_string(f), "S-region family " + std::to_string(f));
        s->add_option("n", n_arg, "Order")->required();
        c_s.push_back(s);
    }
    auto* c_q = count->add_subcommand("q", "Q region");
    c_q->add_option("n", n_arg, "Order")->required();
    auto* c_tri = count->add_subcommand("tri", "Triangular-lattice region R_n");
    c_tri->add_option("n", n_arg, "Order")->required();
    auto* c_blum = count->add_subcommand("blum", "Brick graph B_n");
    c_blum->add_option("n", n_arg, "Order")->required();
    auto* c_aztec = count->add_subcommand("aztec", "Weighted Aztec diamond from a pattern file");
    c_aztec->add_option("file", pattern_file, "Pattern file")->required();
    c_aztec->add_option("n", n_arg, "Order")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a cross-validation suite");
    std::string suite, format = "text";
    std::optional<long> v_n, v_cases;
    std::uint64_t seed = 0;
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--n", v_n, "Size cap");
    verify->add_option("--cases", v_cases, "Number of random cases");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

    // trace
    auto* trace = app.add_subcommand("trace", "Show every reduction step");
    trace->add_option("file", pattern_file, "Pattern file")->required();
    trace->add_option("n", n_arg, "Order")->required();

    // graph
    auto* graph = app.add_subcommand("graph", "Print a constructed graph");
    graph->require_subcommand(1);
    bool svg = false, graph_bar = false;
    std::string brick_kind;
    graph->add_flag("--svg", svg, "Emit SVG instead of the text form");
    auto* g_aztec = graph->add_subcommand("aztec", "Aztec diamond graph of a pattern");
    g_aztec->add_option("file", pattern_file, "Pattern file")->required();
    g_aztec->add_option("n", n_arg, "Order")->required();
    auto* g_fortress = graph->add_subcommand("fortress", "Fortress city graph");
    g_fortress->add_flag("--bar", graph_bar, "Use the bar variant");
    g_fortress->add_option("parts", fortress_parts, "Composition d_1 ... d_m")->required();
    auto* g_brick = graph->add_subcommand("brick", "Brick graph B_n or C_n");
    g_brick->add_option("kind", brick_kind, "B or C")->required()->check(CLI::IsMember({"B", "C"}));
    g_brick->add_option("n", n_arg, "Order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count->parsed()) {
            FactoredValue result;
            if (c_fortress->parsed())
                result = fortress_count(composition(fortress_parts), fortress_bar ? FortressVariant::bar : FortressVariant::plain);
            else if (c_zigzag->parsed()) result = zigzag_count(static_cast<long>(checked_order(n_arg)), zigzag_bar);
            else if (c_yang->parsed()) {
                if (n_arg < 1) throw UsageError("fortress order must be positive");
                result = yang_fortress(n_arg);
            } else if (c_q->parsed()) result = q_count(static_cast<long>(checked_order(n_arg)));
            else if (c_tri->parsed()) {
                if (n_arg < 1) throw UsageError("triangular region order must be positive");
                result = tri_count(n_arg);
            } else if (c_blum->parsed()) {
                if (n_arg < 1) throw UsageError("brick graph order must be positive");
                result = blum_value(n_arg);
            } else if (c_aztec->parsed()) {
                WeightPattern p = read_pattern(pattern_file);
                result = factorize(evaluate(p, checked_order(n_arg)), standard_primes());
            } else {
                for (int f = 1; f <= 4; ++f)
                    if (c_s[f - 1]->parsed()) result = s_region_count(f, static_cast<long>(checked_order(n_arg)));
            }
            std::cout << result << '\n';
            return exit_ok;
        }
        if (verify->parsed()) {
            auto reports = run_suite(suite, VerifyOptions{v_n, v_cases, seed});
            std::cout << (format == "records" ? format_records(reports) : format_text(reports));
            return all_equal(reports) ? exit_ok : exit_math;
        }
        if (trace->parsed()) {
            WeightPattern p = read_pattern(pattern_file);
            const std::size_t n = checked_order(n_arg);
            WeightMatrix m = tile_pattern(p, n);
            try {
                ReductionTrace t = trace_reduction(m);
                std::size_t k = 1;
                for (const auto& s : t.steps)
                    std::cout << "step " << k++ << "  order " << s.order << "  factor " << to_display_string(s.factor)
                              << "  snapshot " << s.snapshot << '\n';
                std::cout << "value " << factorize(t.value, standard_primes()) << '\n';
            } catch (const ZeroCellFactor& e) {
                std::cerr << "error: step " << (n - e.order() + 1) << ": " << e.what() << '\n';
                return exit_math;
            }
            return exit_ok;
        }
        if (graph->parsed()) {
            WeightedGraph g;
            if (g_aztec->parsed()) g = build_aztec_graph(tile_pattern(read_pattern(pattern_file), checked_order(n_arg)));
            else if (g_fortress->parsed())
                g = build_fortress_graph(composition(fortress_parts), graph_bar ? FortressVariant::bar : FortressVariant::plain);
            else {
                if (n_arg < 1) throw UsageError("brick graph order must be positive");
                g = build_brick_graph(static_cast<std::size_t>(n_arg), brick_kind == "B" ? BrickKind::B : BrickKind::C);
            }
            std::cout << (svg ? to_svg(g) : to_text(g));
            return exit_ok;
        }
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n" << verify->help();
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_math;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
