#include <hgcolor/bench.hpp>
#include <hgcolor/certified.hpp>
#include <hgcolor/core.hpp>
#include <hgcolor/generators.hpp>
#include <hgcolor/local_lemma.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/recolor.hpp>
#include <hgcolor/sparse_vertex.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <ostream>
#include <sstream>

namespace hgcolor {

namespace {
constexpr std::uint64_t kInstanceStream = 0x62656e63682d696eull;  // "bench-in"
constexpr std::uint64_t kAlgorithmStream = 0x62656e63682d616cull;  // "bench-al"

std::uint32_t bits_per_vertex(std::uint64_t v) {
    if (v < 2) return 1;
    std::uint32_t bits = 0;
    std::uint64_t x = v - 1;
    while (x) {
        ++bits;
        x >>= 1;
    }
    return bits;
}
}  // namespace

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Delayed: return "delayed";
        case Algorithm::Certified: return "certified";
        case Algorithm::Balanced: return "balanced";
        case Algorithm::KBalanced: return "kbalanced";
        case Algorithm::Local: return "local";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (Algorithm a : {Algorithm::Delayed, Algorithm::Certified, Algorithm::Balanced,
                        Algorithm::KBalanced, Algorithm::Local}) {
        if (algorithm_name(a) == name) return a;
    }
    return std::nullopt;
}

namespace {

TrialRecord run_one_trial(const TrialSpec& spec, std::uint64_t index) {
    TrialRecord rec;
    rec.trial = index;
    rec.derived_seed = prf(spec.seed, kAlgorithmStream, index);
    const std::uint64_t instance_seed = prf(spec.seed, kInstanceStream, index);

    std::vector<Hyperedge> edges;
    std::uint64_t universe = spec.v;
    if (spec.instance == InstanceKind::Erdos) {
        ErdosInstance inst = gen_erdos(spec.n, spec.t, instance_seed);
        edges = std::move(inst.edges);
        universe = inst.params.universe;
    } else {
        edges = gen_uniform_random(spec.v, spec.n, spec.q, instance_seed);
    }
    rec.bits_per_vertex = bits_per_vertex(universe);

    VectorEdgeSource source(edges);
    const auto start = std::chrono::steady_clock::now();

    std::optional<Coloring> coloring;
    switch (spec.algorithm) {
        case Algorithm::Delayed: {
            RandomTape tape(rec.derived_seed, spec.p.value_or(p_default(spec.n)));
            auto [chi, stats] = stream_color(source, tape);
            coloring = std::move(chi);
            rec.flips = stats.flips;
            rec.peak_state = stats.peak_state_entries;
            rec.outcome = "valid";  // provisional; re-validation decides
            break;
        }
        case Algorithm::Certified: {
            RandomTape tape(rec.derived_seed, spec.p.value_or(p_default(spec.n)));
            CertifiedResult r = certified_stream_color(source, tape, spec.cap);
            rec.flips = r.stats.flips;
            rec.peak_state = r.stats.peak_state_entries + r.residuals.peak_total_size;
            rec.residual_blue = r.residuals.blue_size;
            rec.residual_red = r.residuals.red_size;
            if (r.ok()) {
                coloring = r.coloring();
                rec.outcome = "valid";
            } else {
                rec.outcome = failure_reason_name(r.failure().reason);
            }
            break;
        }
        case Algorithm::Balanced:
        case Algorithm::KBalanced: {
            const std::uint32_t k = spec.algorithm == Algorithm::Balanced ? 2 : spec.k;
            SplitColorResult r =
                k_balanced_stream_color(source, universe, spec.n, k, rec.derived_seed);
            rec.peak_state = universe;
            if (r.ok()) {
                coloring = r.coloring();
                rec.outcome = "valid";
            } else {
                rec.outcome = failure_reason_name(r.failure().reason);
            }
            break;
        }
        case Algorithm::Local: {
            const std::uint64_t passes =
                spec.max_passes.value_or(default_max_passes(universe));
            LocalResult r = local_stream_color(source, spec.n, rec.derived_seed, passes);
            rec.passes = r.stats.passes;
            rec.peak_state = r.stats.vertices_discovered;
            if (r.ok()) {
                coloring = r.coloring();
                rec.outcome = "valid";
            } else {
                rec.outcome = failure_reason_name(r.failure().reason);
            }
            break;
        }
    }

    const auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    // Ground truth: replay the stored instance through the validator.
    if (coloring) {
        rec.produced_coloring = true;
        const Hypergraph h = Hypergraph::from_edges(spec.n, std::move(edges));
        bool valid = true;
        for (const auto& e : h.edges()) {
            if (is_monochromatic(e, *coloring)) {
                valid = false;
                break;
            }
        }
        rec.valid = valid;
        if (!valid) {
            rec.outcome = "invalid";
            if (spec.algorithm != Algorithm::Delayed) {
                throw std::logic_error(std::string(algorithm_name(spec.algorithm)) +
                                       " emitted an invalid coloring (trial " +
                                       std::to_string(index) + ")");
            }
        }
    }
    return rec;
}

}  // namespace

BenchResult run_bench(const TrialSpec& spec) {
    if (spec.trials < 1) throw ParameterDomainError("need at least one trial");

    BenchResult result;
    result.records.resize(spec.trials);

    const unsigned jobs = std::max(1u, spec.jobs);
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < spec.trials; ++i) {
            result.records[i] = run_one_trial(spec, i);
        }
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<std::uint64_t> next{0};
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    const std::uint64_t i = next.fetch_add(1);
                    if (i >= spec.trials) return;
                    result.records[i] = run_one_trial(spec, i);
                }
            }));
        }
        for (auto& w : workers) w.get();  // rethrows the soundness assertion
    }

    BenchSummary& s = result.summary;
    s.trials = spec.trials;
    for (const auto& rec : result.records) {
        if (rec.produced_coloring && rec.valid) ++s.successes;
        s.mean_residual_blue += static_cast<double>(rec.residual_blue);
        s.mean_residual_red += static_cast<double>(rec.residual_red);
        s.mean_passes += static_cast<double>(rec.passes);
        s.mean_flips += static_cast<double>(rec.flips);
    }
    const double trials = static_cast<double>(spec.trials);
    s.success_rate = static_cast<double>(s.successes) / trials;
    s.mean_residual_blue /= trials;
    s.mean_residual_red /= trials;
    s.mean_passes /= trials;
    s.mean_flips /= trials;
    return result;
}

namespace {

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

void write_csv(std::ostream& out, const TrialSpec& spec, const BenchResult& result,
               bool include_timing) {
    out << "# hgcolor-bench-csv v1 columns: trial,algorithm,n,v,q,p,t,k,seed,outcome,flips,"
           "residual_blue,residual_red,passes,peak_state,bits_per_vertex"
        << (include_timing ? ",wall_ms" : "") << '\n';

    const std::string algo(algorithm_name(spec.algorithm));
    const bool uses_p =
        spec.algorithm == Algorithm::Delayed || spec.algorithm == Algorithm::Certified;
    const std::string p_field =
        uses_p ? format_double(spec.p.value_or(p_default(spec.n))) : "";
    const std::string t_field =
        spec.instance == InstanceKind::Erdos ? std::to_string(spec.t) : "";
    const std::string k_field =
        spec.algorithm == Algorithm::KBalanced ? std::to_string(spec.k) : "";
    const std::string q_field = spec.instance == InstanceKind::Uniform
                                    ? std::to_string(spec.q)
                                    : std::to_string(erdos_params(spec.n, spec.t).edge_count);
    const std::string v_field = spec.instance == InstanceKind::Uniform
                                    ? std::to_string(spec.v)
                                    : std::to_string(erdos_params(spec.n, spec.t).universe);

    for (const auto& rec : result.records) {
        out << rec.trial << ',' << algo << ',' << spec.n << ',' << v_field << ',' << q_field
            << ',' << p_field << ',' << t_field << ',' << k_field << ',' << rec.derived_seed
            << ',' << rec.outcome << ',' << rec.flips << ',' << rec.residual_blue << ','
            << rec.residual_red << ',' << rec.passes << ',' << rec.peak_state << ','
            << rec.bits_per_vertex;
        if (include_timing) out << ',' << format_double(rec.wall_ms);
        out << '\n';
    }

    const BenchSummary& s = result.summary;
    out << "summary," << algo << ',' << spec.n << ',' << v_field << ',' << q_field << ','
        << p_field << ',' << t_field << ',' << k_field << ',' << spec.seed << ','
        << "success_rate=" << format_double(s.success_rate) << ','
        << "mean_flips=" << format_double(s.mean_flips) << ','
        << "mean_residual_blue=" << format_double(s.mean_residual_blue) << ','
        << "mean_residual_red=" << format_double(s.mean_residual_red) << ','
        << "mean_passes=" << format_double(s.mean_passes) << ','
        << "trials=" << s.trials << ',';
    if (include_timing) out << ',';
    out << '\n';
}

}  // namespace hgcolor
