// Command-line front end: generate instances, run a colorer, validate
// colorings, and run the Monte Carlo bench harness.

#include <CLI11.hpp>

#include <hgcolor/bench.hpp>
#include <hgcolor/certified.hpp>
#include <hgcolor/core.hpp>
#include <hgcolor/generators.hpp>
#include <hgcolor/local_lemma.hpp>
#include <hgcolor/recolor.hpp>
#include <hgcolor/sparse_vertex.hpp>
#include <hgcolor/stream_io.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace hgcolor;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;    // malformed input, IO trouble
constexpr int kExitUsage = 2;    // bad flags or parameter domain
constexpr int kExitFailure = 3;  // a colorer declared failure

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;

    explicit OutputTarget(const std::string& path) {
        if (path == "-") {
            stream = &std::cout;
        } else {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            stream = &file;
        }
    }
};

std::string color_token(ColorId c, std::uint32_t k) {
    if (k <= 2) return c == kRed ? "Red" : "Blue";
    return std::to_string(static_cast<unsigned>(c));
}

void write_coloring(std::ostream& out, const Coloring& chi, std::uint32_t k) {
    std::vector<VertexId> verts;
    verts.reserve(chi.size());
    for (const auto& [u, c] : chi.entries()) {
        (void)c;
        verts.push_back(u);
    }
    std::sort(verts.begin(), verts.end());
    for (VertexId u : verts) out << u << ' ' << color_token(chi.at(u), k) << '\n';
}

Coloring read_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    Coloring chi;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string u_tok, c_tok;
        if (!(ls >> u_tok)) continue;  // blank
        if (!(ls >> c_tok)) {
            throw std::runtime_error("coloring line " + std::to_string(lineno) +
                                     ": expected '<vertex> <color>'");
        }
        VertexId u = 0;
        auto [p1, e1] = std::from_chars(u_tok.data(), u_tok.data() + u_tok.size(), u);
        if (e1 != std::errc() || p1 != u_tok.data() + u_tok.size()) {
            throw std::runtime_error("coloring line " + std::to_string(lineno) +
                                     ": bad vertex id");
        }
        if (c_tok == "Red" || c_tok == "red") {
            chi.assign(u, kRed);
        } else if (c_tok == "Blue" || c_tok == "blue") {
            chi.assign(u, kBlue);
        } else {
            unsigned c = 0;
            auto [p2, e2] = std::from_chars(c_tok.data(), c_tok.data() + c_tok.size(), c);
            if (e2 != std::errc() || p2 != c_tok.data() + c_tok.size() || c > 255) {
                throw std::runtime_error("coloring line " + std::to_string(lineno) +
                                         ": bad color token '" + c_tok + "'");
            }
            chi.assign(u, static_cast<ColorId>(c));
        }
    }
    return chi;
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
    std::string kind;
    std::uint32_t n = 0;
    std::uint64_t v = 0;
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    std::uint64_t seed = 0;
    std::string out = "-";
    bool has_v = false, has_q = false, has_t = false;
};

int run_gen(const GenOptions& opt) {
    OutputTarget target(opt.out);
    if (opt.kind == "uniform") {
        if (!opt.has_v || !opt.has_q) {
            std::cerr << "gen --kind uniform requires --v and --q\n";
            return kExitUsage;
        }
        EdgeStreamHeader header{opt.n, opt.v, opt.q};
        *target.stream << format_header(header) << '\n';
        for (std::uint64_t i = 0; i < opt.q; ++i) {
            *target.stream << format_edge(uniform_random_edge(opt.v, opt.n, opt.seed, i))
                           << '\n';
        }
    } else {  // erdos
        if (!opt.has_t) {
            std::cerr << "gen --kind erdos requires --t\n";
            return kExitUsage;
        }
        ErdosInstance inst = gen_erdos(opt.n, opt.t, opt.seed);
        EdgeStreamHeader header{opt.n, inst.params.universe, inst.params.edge_count};
        write_stream(*target.stream, header, inst.edges);
    }
    return kExitOk;
}

// ---- color --------------------------------------------------------------

struct ColorOptions {
    std::string algorithm;
    std::string in;
    std::string out = "-";
    std::uint64_t seed = 0;
    double p = -1.0;  // <0 means default
    std::uint64_t cap = 0;
    std::uint32_t k = 0;
    std::uint64_t v = 0;
    std::uint64_t max_passes = 0;
    bool has_cap = false, has_k = false, has_v = false, has_passes = false;
};

int report_failure(const Failure& f) {
    std::cerr << "failure: " << failure_reason_name(f.reason);
    if (f.witness) std::cerr << " (edge " << format_edge(*f.witness) << ")";
    std::cerr << '\n';
    return kExitFailure;
}

int run_color(const ColorOptions& opt) {
    FileEdgeSource source(opt.in);
    const EdgeStreamHeader header = source.header();
    const std::uint32_t n = header.uniformity;

    std::uint64_t universe = 0;
    if (opt.has_v) {
        universe = opt.v;
    } else if (header.universe) {
        universe = *header.universe;
    }

    OutputTarget target(opt.out);
    const double p = opt.p >= 0.0 ? opt.p : p_default(n);

    if (opt.algorithm == "delayed") {
        RandomTape tape(opt.seed, p);
        auto [chi, stats] = stream_color(source, tape);
        write_coloring(*target.stream, chi, 2);
        std::cerr << "delayed: " << stats.vertices_discovered << " vertices, " << stats.flips
                  << " flips, " << stats.initially_mono_edges << " initially-mono edges\n";
        return kExitOk;
    }
    if (opt.algorithm == "certified") {
        RandomTape tape(opt.seed, p);
        std::optional<std::uint64_t> cap;
        if (opt.has_cap) cap = opt.cap;
        CertifiedResult r = certified_stream_color(source, tape, cap);
        if (!r.ok()) return report_failure(r.failure());
        write_coloring(*target.stream, r.coloring(), 2);
        return kExitOk;
    }
    if (opt.algorithm == "balanced" || opt.algorithm == "kbalanced") {
        if (universe == 0) {
            std::cerr << "balanced colorers need the universe: pass --v or declare v in the "
                         "stream header\n";
            return kExitUsage;
        }
        const std::uint32_t k = opt.algorithm == "balanced" ? 2u : opt.k;
        if (opt.algorithm == "kbalanced" && !opt.has_k) {
            std::cerr << "kbalanced requires --k\n";
            return kExitUsage;
        }
        SplitColorResult r = k_balanced_stream_color(source, universe, n, k, opt.seed);
        if (!r.ok()) return report_failure(r.failure());
        write_coloring(*target.stream, r.coloring(), k);
        return kExitOk;
    }
    if (opt.algorithm == "local") {
        std::uint64_t passes = opt.max_passes;
        if (!opt.has_passes) {
            if (universe == 0) {
                std::cerr << "local needs --max-passes, or --v / a declared header v for the "
                             "default budget\n";
                return kExitUsage;
            }
            passes = default_max_passes(universe);
        }
        LocalResult r = local_stream_color(source, n, opt.seed, passes);
        if (!r.ok()) return report_failure(r.failure());
        write_coloring(*target.stream, r.coloring(), 2);
        std::cerr << "local: " << r.stats.passes << " passes, " << r.stats.resamples
                  << " resamples\n";
        return kExitOk;
    }
    std::cerr << "unknown algorithm: " << opt.algorithm << '\n';
    return kExitUsage;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& in, const std::string& coloring_path) {
    FileEdgeSource source(in);
    const Coloring chi = read_coloring(coloring_path);
    std::uint64_t violations = 0;
    std::uint64_t edges = 0;
    while (auto edge = source.next()) {
        ++edges;
        if (is_monochromatic(*edge, chi)) ++violations;
    }
    if (violations == 0) {
        std::cout << "valid (" << edges << " edges)\n";
        return kExitOk;
    }
    std::cout << "invalid (" << violations << " of " << edges << " edges monochromatic)\n";
    return kExitFailure;
}

// ---- bench ----------------------------------------------------------------

struct BenchOptions {
    std::string algorithm;
    std::string gen = "uniform";
    std::uint32_t n = 0;
    std::uint64_t v = 0;
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    double p = -1.0;
    std::uint32_t k = 0;
    std::uint64_t cap = 0;
    std::uint64_t max_passes = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool timing = false;
    bool has_v = false, has_q = false, has_t = false, has_k = false;
    bool has_cap = false, has_passes = false;
};

int run_bench_cmd(const BenchOptions& opt) {
    TrialSpec spec;
    const auto algo = algorithm_from_name(opt.algorithm);
    if (!algo) {
        std::cerr << "unknown algorithm: " << opt.algorithm << '\n';
        return kExitUsage;
    }
    spec.algorithm = *algo;
    spec.n = opt.n;
    spec.trials = opt.trials;
    spec.seed = opt.seed;
    spec.jobs = opt.jobs;
    if (opt.p >= 0.0) spec.p = opt.p;
    if (opt.has_cap) spec.cap = opt.cap;
    if (opt.has_passes) spec.max_passes = opt.max_passes;
    if (opt.has_k) spec.k = opt.k;

    if (opt.gen == "erdos") {
        if (!opt.has_t) {
            std::cerr << "bench --gen erdos requires --t\n";
            return kExitUsage;
        }
        spec.instance = InstanceKind::Erdos;
        spec.t = opt.t;
    } else if (opt.gen == "uniform") {
        if (!opt.has_v || !opt.has_q) {
            std::cerr << "bench --gen uniform requires --v and --q\n";
            return kExitUsage;
        }
        spec.instance = InstanceKind::Uniform;
        spec.v = opt.v;
        spec.q = opt.q;
    } else {
        std::cerr << "unknown generator kind: " << opt.gen << '\n';
        return kExitUsage;
    }
    if (spec.algorithm == Algorithm::KBalanced && !opt.has_k) {
        std::cerr << "bench --algorithm kbalanced requires --k\n";
        return kExitUsage;
    }

    const BenchResult result = run_bench(spec);
    write_csv(std::cout, spec, result, opt.timing);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hgcolor: streaming two-coloring of n-uniform hypergraphs"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an HGS1 edge stream");
    gen_cmd->add_option("--kind", gen.kind, "uniform | erdos")
        ->required()
        ->check(CLI::IsMember({"uniform", "erdos"}));
    gen_cmd->add_option("--n", gen.n, "uniformity (>= 3)")->required();
    gen_cmd->add_option("--v", gen.v, "universe size (uniform)")->needs("--n");
    gen_cmd->add_option("--q", gen.q, "edge count (uniform)");
    gen_cmd->add_option("--t", gen.t, "density parameter (erdos)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
    gen_cmd->add_option("--out", gen.out, "output file, - for stdout");

    ColorOptions color;
    CLI::App* color_cmd = app.add_subcommand("color", "run a streaming colorer");
    color_cmd
        ->add_option("--algorithm", color.algorithm,
                     "delayed | certified | balanced | kbalanced | local")
        ->required()
        ->check(CLI::IsMember({"delayed", "certified", "balanced", "kbalanced", "local"}));
    color_cmd->add_option("--in", color.in, "HGS1 input file")->required();
    color_cmd->add_option("--seed", color.seed, "algorithm seed")->required();
    color_cmd->add_option("--p", color.p, "recoloring probability (default (ln n - ln ln n)/2n)");
    color_cmd->add_option("--out", color.out, "coloring output file, - for stdout");

    std::string verify_in, verify_coloring;
    CLI::App* verify_cmd = app.add_subcommand("verify", "validate a coloring against a stream");
    verify_cmd->add_option("--in", verify_in, "HGS1 input file")->required();
    verify_cmd->add_option("--coloring", verify_coloring, "coloring file")->required();

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Monte Carlo harness, CSV on stdout");
    bench_cmd
        ->add_option("--algorithm", bench.algorithm,
                     "delayed | certified | balanced | kbalanced | local")
        ->required();
    bench_cmd->add_option("--gen", bench.gen, "instance kind: uniform | erdos");
    bench_cmd->add_option("--n", bench.n, "uniformity")->required();
    bench_cmd->add_option("--trials", bench.trials, "trial count")->required();
    bench_cmd->add_option("--seed", bench.seed, "root seed")->required();
    bench_cmd->add_option("--jobs", bench.jobs, "worker threads");
    bench_cmd->add_flag("--timing", bench.timing, "append the wall_ms column");

    // Options shared by color/bench that carry a has_ flag.
    auto* cv = color_cmd->add_option("--v", color.v, "universe override");
    auto* ck = color_cmd->add_option("--k", color.k, "classes for kbalanced");
    auto* ccap = color_cmd->add_option("--cap", color.cap, "certified residual cap");
    auto* cmp = color_cmd->add_option("--max-passes", color.max_passes, "local pass budget");
    auto* bv = bench_cmd->add_option("--v", bench.v, "universe size");
    auto* bq = bench_cmd->add_option("--q", bench.q, "edge count");
    auto* bt = bench_cmd->add_option("--t", bench.t, "erdos parameter");
    auto* bk = bench_cmd->add_option("--k", bench.k, "classes for kbalanced");
    auto* bcap = bench_cmd->add_option("--cap", bench.cap, "certified residual cap");
    auto* bmp = bench_cmd->add_option("--max-passes", bench.max_passes, "local pass budget");
    auto* bp = bench_cmd->add_option("--p", bench.p, "recoloring probability");
    (void)bp;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    gen.has_v = gen_cmd->count("--v") > 0;
    gen.has_q = gen_cmd->count("--q") > 0;
    gen.has_t = gen_cmd->count("--t") > 0;
    color.has_v = cv->count() > 0;
    color.has_k = ck->count() > 0;
    color.has_cap = ccap->count() > 0;
    color.has_passes = cmp->count() > 0;
    bench.has_v = bv->count() > 0;
    bench.has_q = bq->count() > 0;
    bench.has_t = bt->count() > 0;
    bench.has_k = bk->count() > 0;
    bench.has_cap = bcap->count() > 0;
    bench.has_passes = bmp->count() > 0;

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (color_cmd->parsed()) return run_color(color);
        if (verify_cmd->parsed()) return run_verify(verify_in, verify_coloring);
        if (bench_cmd->parsed()) return run_bench_cmd(bench);
    } catch (const ParameterDomainError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}
