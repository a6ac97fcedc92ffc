#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blocksing/blocks.hpp"
#include "blocksing/generate.hpp"
#include "blocksing/graph.hpp"
#include "blocksing/oracle.hpp"
#include "blocksing/reduction.hpp"
#include "blocksing/trace_json.hpp"

namespace blocksing::cli {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GraphFile load(const std::string& path) {
    try {
        return read_graph_file(path);
    } catch (const ParseError& e) {
        throw InvalidInput(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InvalidInput(e.what());
    }
}

struct Checked {
    GraphFile file;
    std::size_t num_blocks = 0;
    Verdict verdict;
    std::int64_t elapsed_ns = 0;
};

Checked check_file(const std::string& path, const Environment& env, bool record_trace) {
    Checked c{load(path), 0, {}, 0};
    const auto start = Clock::now();
    try {
        const auto structure = build_block_cut_structure(c.file.graph);
        c.num_blocks = structure.block_count();
        c.verdict = is_singular(structure, c.file.loops, {env.seed, record_trace});
    } catch (const NotBlockGraph& e) {
        throw InvalidInput(path + ": not a block graph: " + e.what());
    }
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
    c.elapsed_ns = std::max<std::int64_t>(ns, 1);
    return c;
}

int verdict_exit(const Verdict& v) { return v.singular ? kSingular : kNonsingular; }

int cmd_check(const std::string& path, bool with_trace, const Environment& env, std::ostream& out) {
    const Checked c = check_file(path, env, with_trace);
    json report;
    report["verdict"] = c.verdict.singular ? "singular" : "nonsingular";
    if (c.verdict.singular) {
        report["reason"] = std::string(to_string(c.verdict.witness->reason));
        report["witness_block"] = c.verdict.witness->block;
    }
    report["n"] = c.file.graph.vertex_count();
    report["m"] = c.file.graph.edge_count();
    report["num_blocks"] = c.num_blocks;
    report["elapsed_ns"] = c.elapsed_ns;
    report["max_rational_bits"] = c.verdict.max_rational_bits;
    if (with_trace) {
        json steps = json::array();
        for (const auto& step : c.verdict.trace) {
            steps.push_back(to_json(step));
        }
        report["trace"] = std::move(steps);
    }
    out << report.dump() << '\n';
    return verdict_exit(c.verdict);
}

int cmd_trace(const std::string& path, const Environment& env, std::ostream& out) {
    const Checked c = check_file(path, env, true);
    for (const auto& step : c.verdict.trace) {
        out << to_json_line(step) << '\n';
    }
    return verdict_exit(c.verdict);
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    const GraphFile file = load(path);
    const RankReport r = exact_rank_nullity(adjacency_matrix(file.graph, file.loops));
    json report;
    report["det"] = r.det.to_string();
    report["rank"] = r.rank;
    report["nullity"] = r.nullity;
    out << report.dump() << '\n';
    return 0;
}

int cmd_decompose(const std::string& path, std::ostream& out) {
    const GraphFile file = load(path);
    try {
        out << to_json(build_block_cut_structure(file.graph)).dump() << '\n';
    } catch (const NotBlockGraph& e) {
        throw InvalidInput(path + ": not a block graph: " + e.what());
    }
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, std::ostream& out) {
    try {
        out << serialize_graph(generate(parse_gen_spec(family, args)));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t value = 0;
        // Accept plain integers and scientific shorthand like 1e5.
        const auto e = item.find_first_of("eE");
        if (e != std::string::npos) {
            std::size_t mantissa = 0;
            std::size_t exponent = 0;
            const auto [p1, ec1] = std::from_chars(item.data(), item.data() + e, mantissa);
            const auto [p2, ec2] = std::from_chars(item.data() + e + 1, item.data() + item.size(), exponent);
            if (ec1 != std::errc{} || ec2 != std::errc{} || p1 != item.data() + e ||
                p2 != item.data() + item.size()) {
                throw InvalidInput("invalid size '" + item + "'");
            }
            value = mantissa;
            for (std::size_t k = 0; k < exponent; ++k) {
                value *= 10;
            }
        } else {
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size()) {
                throw InvalidInput("invalid size '" + item + "'");
            }
        }
        sizes.push_back(value);
    }
    if (sizes.empty()) {
        throw InvalidInput("no sizes given");
    }
    return sizes;
}

std::int64_t median(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int cmd_bench(const std::string& family, const std::string& sizes_text, std::size_t repeats, bool with_oracle,
              const Environment& env, std::ostream& out) {
    constexpr std::size_t kOracleLimit = 200;
    const auto sizes = parse_sizes(sizes_text);
    repeats = std::max<std::size_t>(repeats, 1);
    out << "size,median_ns,max_rational_bits" << (with_oracle ? ",oracle_median_ns" : "") << '\n';
    for (const std::size_t size : sizes) {
        Graph graph;
        try {
            graph = generate(sized_spec(family, size));
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
        std::vector<std::int64_t> samples;
        std::size_t bits = 0;
        for (std::size_t r = 0; r < repeats; ++r) {
            const auto start = Clock::now();
            const Verdict v = is_singular(graph, {}, {env.seed, false});
            samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
            bits = std::max(bits, v.max_rational_bits);
        }
        out << graph.vertex_count() << ',' << median(samples) << ',' << bits;
        if (with_oracle) {
            out << ',';
            if (graph.vertex_count() <= kOracleLimit) {
                std::vector<std::int64_t> oracle;
                for (std::size_t r = 0; r < repeats; ++r) {
                    const auto start = Clock::now();
                    const Rational det = exact_determinant(adjacency_matrix(graph));
                    oracle.push_back(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
                    (void)det;
                }
                out << median(oracle);
            }
        }
        out << '\n';
    }
    return 0;
}

}  // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* raw = std::getenv("GSING_SEED"); raw != nullptr && *raw != '\0') {
        std::uint64_t seed = 0;
        const std::string_view text(raw);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
        if (ec == std::errc{} && ptr == text.data() + text.size()) {
            env.seed = seed;
        }
    }
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Linear-time singularity test for block graphs", "blocksing"};
    app.require_subcommand(1);

    std::string file;
    bool with_trace = false;
    auto* check = app.add_subcommand("check", "Decide singularity; JSON report, exit 0/1/2");
    check->add_flag("--trace", with_trace, "Include the elimination trace");
    check->add_option("FILE", file, "Graph file")->required();

    auto* trace = app.add_subcommand("trace", "Print one JSON line per elimination step");
    trace->add_option("FILE", file, "Graph file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact determinant, rank and nullity");
    oracle->add_option("FILE", file, "Graph file")->required();

    auto* decompose = app.add_subcommand("decompose", "Print BV, CV and f");
    decompose->add_option("FILE", file, "Graph file")->required();

    std::string family;
    std::vector<std::string> family_args;
    auto* gen = app.add_subcommand("gen", "Write a generated graph to standard output");
    gen->add_option("FAMILY", family,
                    "fig1 | fig2 | fig3 | complete K | path N | star N | star_k3 N | random_tree N SEED | "
                    "random_block B MIN MAX SEED")
        ->required();
    gen->add_option("ARGS", family_args, "Family parameters");

    std::string sizes;
    std::size_t repeats = 5;
    bool with_oracle = false;
    auto* bench = app.add_subcommand("bench", "Time the reduction across sizes; CSV output");
    bench->add_option("--family", family, "Graph family (path, star, star_k3, complete, random_tree, random_block)")
        ->required();
    bench->add_option("--sizes", sizes, "Comma-separated vertex counts")->required();
    bench->add_option("--repeats", repeats, "Repetitions per size (median reported)");
    bench->add_flag("--oracle", with_oracle, "Also time the exact determinant for sizes <= 200");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInvalidInput;
    }

    try {
        if (check->parsed()) {
            return cmd_check(file, with_trace, env, out);
        }
        if (trace->parsed()) {
            return cmd_trace(file, env, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(file, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(file, out);
        }
        if (gen->parsed()) {
            return cmd_gen(family, family_args, out);
        }
        if (bench->parsed()) {
            return cmd_bench(family, sizes, repeats, with_oracle, env, out);
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace blocksing::cli
